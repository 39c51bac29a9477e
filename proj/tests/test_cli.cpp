#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ebelyi/cli.hpp"

using namespace eb;

namespace {

ResultRecord record(const std::string& a, const std::string& b, const std::string& c, int d, bool invert = false) {
  RecordOptions o;
  o.invert = invert;
  return make_record(PermutationTriple::parse(a, b, c, d), o);
}

ResultRecord::Element rat(const std::string& q) { return {q, "0"}; }

std::vector<std::pair<PermutationTriple, Case>> jobs_up_to(int d, Case c) {
  std::vector<std::pair<PermutationTriple, Case>> out;
  for (int k = 1; k <= d; ++k)
    for (const auto& t : enumerate_triples(k, c)) out.push_back({t, c});
  return out;
}

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

}  // namespace

TEST(Record, FirstExampleCoefficients) {
  auto r = record("(2,4,3)", "(1,3,4)", "(1,2,3)", 4);
  ASSERT_EQ(r.status, "ok");
  EXPECT_EQ(r.genus, 0);
  EXPECT_EQ(r.base, "Q(zeta6)");
  EXPECT_TRUE(r.minpoly.empty());
  ResultRecord::Coeffs num{rat("1/128"), rat("1/2"), rat("9"), rat("0"), rat("-864")};
  ResultRecord::Coeffs den{rat("1"), rat("0"), rat("0"), rat("0")};
  EXPECT_EQ(r.phi_num, num);
  EXPECT_EQ(r.phi_den, den);
  EXPECT_TRUE(r.verified);
}

TEST(Record, JsonRoundTrip) {
  for (auto r : {record("(2,4,3)", "(1,3,4)", "(1,2,3)", 4),
                 record("(1,2,3)(4,6,8)(5,7,9)", "(1,2,4)(3,5,7)(6,8,9)", "(1,8,4)(2,3,5)(6,7,9)", 9),
                 record("(1,2)", "(1,3)", "(1,2,3)", 3)}) {
    std::string js = to_json(r);
    ResultRecord back = from_json(js);
    r.millis = 0;
    EXPECT_EQ(back, r);
    EXPECT_EQ(to_json(back), js);
    ResultRecord timed = from_json(to_json(r, true));
    EXPECT_EQ(timed, r);
  }
}

TEST(Record, DeterministicJson) {
  auto a = record("(1,9)(2,8)(3,7)(4,6)", "(1,6)(2,9,10,3)(4,5,8,7)", "(1,2,5,4)(3,8)(6,7,10,9)", 10, true);
  auto b = record("(1,9)(2,8)(3,7)(4,6)", "(1,6)(2,9,10,3)(4,5,8,7)", "(1,2,5,4)(3,8)(6,7,10,9)", 10, true);
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(Record, DecodesExtensionFieldMap) {
  // genus 1 over K(t), t^3 = 4
  auto r = record("(1,2,3)(4,6,8)(5,7,9)", "(1,2,4)(3,5,7)(6,8,9)", "(1,8,4)(2,3,5)(6,7,9)", 9);
  ASSERT_EQ(r.status, "ok");
  EXPECT_EQ(r.minpoly, "t^3 - 4");
  RecordMap m = decode_map(from_json(to_json(r)));
  ASSERT_TRUE(m.curve.has_value());
  EXPECT_EQ(m.field->degree(), 3);
  // same fibers when counted again from the decoded map
  auto f = curve_fibers(m.phi_curve, r.degree);
  EXPECT_EQ(f, r.fibers);
}

TEST(Record, ErrorsAreCaptured) {
  auto r = record("(1,2)", "(1,3)", "(1,2,3)", 3);
  EXPECT_EQ(r.status, "error");
  EXPECT_EQ(r.error_kind, "RelationViolated");
  EXPECT_EQ(exit_code({r}), 2);
  ResultRecord bad = r;
  bad.status = "verification_failed";
  bad.error_kind = "ProfileMismatch";
  EXPECT_EQ(exit_code({bad}), 1);
  bad.error_kind = "NotInvariant";
  EXPECT_EQ(exit_code({bad, r}), 3);
  EXPECT_EQ(exit_code({}), 0);
}

TEST(Record, MalformedJsonIsParseError) {
  try {
    from_json("{\"triple\": 3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

TEST(Render, FirstExampleFactors) {
  auto r = record("(2,4,3)", "(1,3,4)", "(1,2,3)", 4);
  std::string text = render(r, Format::text);
  EXPECT_NE(text.find("(x-8)(x+24)^3"), std::string::npos) << text;
  EXPECT_NE(text.find("(x+8)(x-24)^3"), std::string::npos) << text;
  EXPECT_NE(text.find("x^3"), std::string::npos);
  std::string tex = render(r, Format::latex);
  EXPECT_NE(tex.find("\\varphi(x) = \\frac{"), std::string::npos);
  EXPECT_NE(tex.find("\\tfrac{1}{128}"), std::string::npos);
  EXPECT_EQ(render(r, Format::json), to_json(r));
}

TEST(Render, SecondExampleFactors) {
  auto r = record("(1,4)(2,5)(3,6)", "(1,3,5)", "(1,4,5,2,3,6)", 6, true);
  std::string text = strip_spaces(render(r, Format::text));
  EXPECT_NE(text.find("(x^3+81*x^2+243*x+2187)^2"), std::string::npos) << text;
  EXPECT_NE(text.find("(x-9)^6"), std::string::npos);
  EXPECT_NE(text.find("(x+9)^3(x^2+27)"), std::string::npos);
}

TEST(Render, GenusOneShowsCurveAndMap) {
  auto r = record("(1,2,3)", "(1,2,3)", "(1,2,3)", 3);
  std::string text = render(r, Format::text);
  EXPECT_NE(text.find("curve      y^2 = x^3 + 1"), std::string::npos) << text;
  EXPECT_NE(text.find("phi(x,y)"), std::string::npos);
  EXPECT_NE(render(r, Format::latex).find("E\\colon"), std::string::npos);
}

TEST(Render, SplitsRationalLinearFactorsOnly) {
  // (x^2 + 27)(x - 1): the quadratic has no rational root
  Poly p = Poly(std::vector<Num>{Num(27), Num(0), Num(1)}) * (Poly::x() - Poly(Num(1)));
  Factored f = factor_for_display(p * Num(5));
  EXPECT_TRUE(f.lead == Num(5));
  EXPECT_EQ(factored_string(f), "(x-1)(x^2+27)");
}

TEST(Batch, ParallelMatchesSerial) {
  RecordOptions o;
  auto jobs = jobs_up_to(6, Case::k333);
  auto par = run_batch(jobs, o);
  auto ser = run_batch_serial(jobs, o);
  ASSERT_EQ(par.size(), ser.size());
  for (size_t k = 0; k < par.size(); ++k) EXPECT_EQ(to_json(par[k]), to_json(ser[k]));
}

TEST(Batch, SmallDegreesIncludeFirstExample) {
  RecordOptions o;
  auto recs = run_batch(jobs_up_to(4, Case::k333), o);
  bool found = false;
  for (const auto& r : recs) {
    EXPECT_EQ(r.status, "ok") << r.triple << " " << r.error_message;
    if (r.degree == 4 && r.genus == 0) {
      found = true;
      EXPECT_EQ(r.phi_num.front(), rat("1/128"));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Batch, BucketsAreAppendOnly) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ebelyi_buckets_test";
  fs::remove_all(dir);
  RecordOptions o;
  auto recs = run_batch(jobs_up_to(4, Case::k244), o);
  auto files = write_buckets(recs, dir.string());
  write_buckets(recs, dir.string());
  size_t lines = 0;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::string line;
    while (std::getline(in, line)) {
      ++lines;
      EXPECT_NO_THROW(from_json(line));
    }
  }
  EXPECT_EQ(lines, recs.size());
  EXPECT_TRUE(fs::exists(dir / "244_d004.jsonl"));
  fs::remove_all(dir);
}
