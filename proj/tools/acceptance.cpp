// Acceptance run: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "ebelyi/belyi.hpp"
#include "ebelyi/cli.hpp"
#include "ebelyi/error.hpp"
#include "ebelyi/recognize.hpp"

using namespace eb;

namespace {

using Clock = std::chrono::steady_clock;

Poly xp(std::initializer_list<long> asc) {
  std::vector<Num> c;
  for (long v : asc) c.emplace_back(v);
  return Poly(c);
}

// Sorted "factor^m" strings of the monic squarefree-and-linear factorization.
std::vector<std::string> factor_keys(const Poly& p) {
  std::vector<std::string> out;
  for (const auto& [g, m] : factor_for_display(p).factors) out.push_back(g.to_string() + "^" + std::to_string(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> keys(std::initializer_list<std::pair<Poly, int>> fs) {
  std::vector<std::string> out;
  for (const auto& [g, m] : fs) out.push_back(g.to_string() + "^" + std::to_string(m));
  std::sort(out.begin(), out.end());
  return out;
}

// Factorizations over 0, infinity, 1.
std::array<std::vector<std::string>, 3> fiber_keys(const RatFunc& phi) {
  return {factor_keys(phi.num), factor_keys(phi.den), factor_keys(phi.num - phi.den)};
}

template <class T>
std::array<T, 3> sorted3(std::array<T, 3> a) {
  std::sort(a.begin(), a.end());
  return a;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int report(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  bool in_time = limit_s <= 0 || s < limit_s;
  bool ok = o.pass && in_time;
  std::ostringstream line;
  line << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  [" << std::fixed
       << std::setprecision(2) << s << " s";
  if (limit_s > 0) line << " < " << limit_s << " s";
  line << "]";
  if (!in_time) line << " over time budget;";
  if (!o.detail.empty()) line << "  " << o.detail;
  std::cout << line.str() << std::endl;
  return ok ? 0 : 1;
}

Outcome first_example() {
  auto t = PermutationTriple::parse("(2,4,3)", "(1,3,4)", "(1,2,3)", 4);
  BelyiResult r = run_pipeline(t);
  std::vector<std::string> bad;
  if (!(r.iso.kernel.p == xp({1, 0, 0, 1}))) bad.push_back("kernel polynomial");
  if (!(r.gamma_curve.A.is_zero() && r.gamma_curve.B == Num(64))) bad.push_back("E(Gamma)");
  RatFunc psi(Poly(std::vector<Num>{Num(0), Num(-32), Num(0), Num(0), Num(mpq_class(1, 16))}), xp({64, 0, 0, 1}));
  if (!(r.iso.dual.X == psi)) bad.push_back("psi");
  auto got = fiber_keys(r.phi);
  std::array<std::vector<std::string>, 3> want{keys({{xp({-8, 1}), 1}, {xp({24, 1}), 3}}), keys({{xp({0, 1}), 3}}),
                                               keys({{xp({8, 1}), 1}, {xp({-24, 1}), 3}})};
  if (got != want) bad.push_back("fiber factorizations");
  if (!r.report.ok) bad.push_back("verification");
  if (bad.empty()) return {true, "kernel x^3+1, y^2=x^3+64, psi and (x-8)(x+24)^3 / x^3 / (x+8)(x-24)^3 exact"};
  std::string d = "mismatch:";
  for (const auto& b : bad) d += " " + b;
  return {false, d};
}

Outcome second_example() {
  auto t = PermutationTriple::parse("(1,4)(2,5)(3,6)", "(1,3,5)", "(1,4,5,2,3,6)", 6).inverted();
  BelyiResult r = run_pipeline(t);
  auto got = fiber_keys(r.phi);
  std::array<std::vector<std::string>, 3> want{keys({{xp({2187, 243, 81, 1}), 2}}), keys({{xp({-9, 1}), 6}}),
                                               keys({{xp({27, 0, 1}), 1}, {xp({9, 1}), 3}})};
  // labels: the fiber over value k must carry the cycle type of the recorded role
  bool labels_ok = true;
  for (int k = 0; k < 3; ++k)
    if (r.report.fibers[k] != r.passport.cycle_types[static_cast<int>(r.labels.over[k])]) labels_ok = false;
  bool ok = sorted3(got) == sorted3(want) && labels_ok && r.report.ok;
  std::string over = std::string("sigma_") + role_char(r.labels.over[0]) + ",sigma_" + role_char(r.labels.over[1]) +
                     ",sigma_" + role_char(r.labels.over[2]) + " over 0,1,inf";
  return {ok, ok ? "factorizations match exactly; " + over : "factorizations differ"};
}

Outcome third_example() {
  auto t = PermutationTriple::parse("(1,9)(2,8)(3,7)(4,6)", "(1,6)(2,9,10,3)(4,5,8,7)", "(1,2,5,4)(3,8)(6,7,10,9)", 10)
               .inverted();
  BelyiResult r = run_pipeline(t);
  bool field_ok = r.field->base_kind() == Base::Qi && r.field->is_base();
  std::array<Profile, 3> want{Profile{4, 4, 2}, Profile{4, 4, 2}, Profile{2, 2, 2, 2, 1, 1}};
  bool prof_ok = sorted3(rational_fibers(r.phi)) == sorted3(want);
  bool ok = field_ok && prof_ok && r.report.ok;
  return {ok, std::string("field ") + (field_ok ? "Q(i)" : "not Q(i)") + ", profiles " +
                  (prof_ok ? "{2,4,4},{4,4,2},{1,1,2,2,2,2}" : "differ")};
}

Outcome property_suite() {
  long total = 0, genus1 = 0;
  std::vector<std::string> failures;
  for (Case c : {Case::k333, Case::k236, Case::k244}) {
    const Curve Ed = delta_curve(context(c));
    for (int d = 1; d <= 8; ++d) {
      for (const auto& t : enumerate_triples(d, c)) {
        ++total;
        std::string id = case_name(c) + " " + t.to_string();
        try {
          PipelineOptions o;
          o.kase = c;
          BelyiResult r = run_pipeline(t, o);
          const auto& rep = r.report;
          std::vector<std::string> bad;
          // (i) degree
          if (r.genus == 0) {
            if (std::max(r.phi.num.degree(), r.phi.den.degree()) != d) bad.push_back("i");
          } else {
            long poles = 0;
            for (int e : rep.fibers[2]) poles += e;
            if (poles != d || !rep.degree_ok) bad.push_back("i");
          }
          // (ii) profiles against the passport
          std::array<Profile, 3> pp{r.passport.cycle_types[0], r.passport.cycle_types[1], r.passport.cycle_types[2]};
          if (sorted3(rep.fibers) != sorted3(pp)) bad.push_back("ii");
          // (iii) Riemann-Hurwitz: 2d - 2 + 2g
          if (rep.ramification_excess != 2L * d - 2 + 2L * r.genus) bad.push_back("iii");
          // (iv) master diagram
          if (!rep.commutes) bad.push_back("iv");
          // (v) psi o psi-hat = [N] on x
          if (!(r.iso.dual.after(r.iso.forward).X == multiplication_x_map(Ed, r.iso.N))) bad.push_back("v");
          // (vi)
          if ((r.genus == 1) != (r.descent.r == 1)) bad.push_back("vi");
          if (r.genus == 1) ++genus1;
          if (!bad.empty()) {
            std::string b;
            for (const auto& s : bad) b += s + " ";
            failures.push_back(id + " fails " + b);
          }
        } catch (const Error& e) {
          failures.push_back(id + " " + e.what());
        }
      }
    }
  }
  std::ostringstream d;
  d << total << " triples (" << genus1 << " of genus 1), " << failures.size() << " failures";
  if (genus1) d << "; genus-1 triples checked against 2d (= 2d-2+2g)";
  for (size_t k = 0; k < failures.size() && k < 5; ++k) d << "\n    " << failures[k];
  return {failures.empty(), d.str()};
}

Outcome unit_oracles() {
  std::vector<std::string> bad;
  // Velu on y^2 = x^3 - x with kernel x
  VeluResult v = velu(Curve::square(), Poly::x());
  if (!(v.target.A == Num(4) && v.target.B.is_zero())) bad.push_back("velu");
  // division polynomial degrees, x-only with the 2-torsion cubic for even N
  for (const Curve& E : {Curve::square(), Curve::hex()})
    for (int N = 2; N <= 10; ++N) {
      int want = N % 2 ? (N * N - 1) / 2 : (N * N - 4) / 2 + 3;
      if (division_polynomial(E, N).degree() != want) bad.push_back("division N=" + std::to_string(N));
    }
  // p-function differential equation at 128 bits
  const mpfr_prec_t P = 128;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  BigFloat worst(0L, P);
  for (bool square : {true, false}) {
    BigComplex w2 = square ? BigComplex(BigFloat(0L, P), BigFloat(1L, P)) : Num::from_k(Field::base(Base::Qz6), 0, 1).embed(P);
    auto L = scale_to_model(BigComplex(1L, P), w2, square, P);
    BigComplex A = square ? BigComplex(-1L, P) : BigComplex(P);
    BigComplex B = square ? BigComplex(P) : BigComplex(1L, P);
    for (int it = 0; it < 50; ++it) {
      BigComplex z(BigFloat(u(rng), P), BigFloat(u(rng), P));
      WpPoint w = wp(z, L);
      BigComplex res = w.y * w.y - w.x * w.x * w.x - A * w.x - B;
      BigFloat rel = abs(res) / (BigFloat(1L, P) + abs(w.x * w.x * w.x));
      if (worst < rel) worst = rel;
    }
  }
  if (!(worst < pow2(-64, P))) bad.push_back("p residual");
  // recognize o embed
  std::uniform_int_distribution<int> nu(-60, 60), de(1, 40);
  int recognized = 0;
  for (int it = 0; it < 100; ++it) {
    Base b = it % 2 ? Base::Qi : Base::Qz6;
    mpq_class a(nu(rng), de(rng)), c(nu(rng), de(rng));
    a.canonicalize();
    c.canonicalize();
    Num x = Num::from_k(Field::base(b), a, c);
    auto e = recognize_k(x.embed(P), b, P);
    if (e && e->a == a && e->b == c) ++recognized;
  }
  if (recognized != 100) bad.push_back("recognize " + std::to_string(recognized) + "/100");
  std::ostringstream d;
  d << "velu, division degrees N<=10, p residual max " << std::scientific << std::setprecision(2)
    << worst.to_double() << " (< 2^-64), recognize " << recognized << "/100";
  if (!bad.empty()) {
    d << "; failed:";
    for (const auto& s : bad) d << " " << s;
  }
  return {bad.empty(), d.str()};
}

Outcome scaling() {
  auto t = PermutationTriple::parse("(2,3,5)(4,7,6)(9,10,11)", "(1,2,4)(3,6,9)(5,8,11)(7,10,12)",
                                    "(1,6,2)(3,11,8)(4,5,10)(7,12,9)", 12);
  BelyiResult r = run_pipeline(t);
  std::ostringstream d;
  d << "degree 12 " << case_name(r.passport.euclidean_case) << " triple, N = " << r.iso.N << ", verified "
    << (r.report.ok ? "yes" : "no");
  return {r.report.ok && r.degree == 12, d.str()};
}

Outcome negatives() {
  auto kind_of = [](const PermutationTriple& t) -> std::string {
    try {
      run_pipeline(t);
      return "accepted";
    } catch (const Error& e) {
      return error_kind_name(e.kind());
    }
  };
  std::string ne = kind_of(PermutationTriple::parse("(1,2)", "(1,2,3,4,5)", "(1,5,4,3)", 5));
  std::string rv = kind_of(PermutationTriple::parse("(1,2)", "(1,3)", "(1,2,3)", 3));
  std::string nt = kind_of(PermutationTriple::parse("(1,2,3)", "(1,3,2)", "()", 4));
  bool ok = ne == "NotEuclidean" && rv == "RelationViolated" && nt == "NotTransitive";
  return {ok, "(2,5,4) orders -> " + ne + ", bad relation -> " + rv + ", intransitive -> " + nt};
}

}  // namespace

int main() {
  int failed = 0;
  failed += report(1, "first worked example, degree 4 (3,3,3)", 5, first_example);
  failed += report(2, "second worked example, degree 6 (2,3,6)", 10, second_example);
  failed += report(3, "third worked example, degree 10 (2,4,4)", 60, third_example);
  failed += report(4, "property suite, all triples of degree <= 8", 1800, property_suite);
  failed += report(5, "unit oracles", 0, unit_oracles);
  failed += report(6, "degree-12 scaling smoke test", 60, scaling);
  failed += report(7, "negative inputs", 0, negatives);
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " criteria" : "all criteria PASS") << std::endl;
  return failed ? 1 : 0;
}
