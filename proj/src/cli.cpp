#include "ebelyi/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ebelyi/error.hpp"
#include "ebelyi/recognize.hpp"

namespace eb {

using nlohmann::json;

namespace {

const char* base_text(Base b) { return b == Base::Qi ? "Q(i)" : "Q(zeta6)"; }

Base base_from_text(const std::string& s) {
  if (s == "Q(i)") return Base::Qi;
  if (s == "Q(zeta6)") return Base::Qz6;
  throw Error(ErrorKind::ParseError, "unknown base field " + s);
}

ResultRecord::Element encode(const Num& v, const FieldPtr& f) {
  Num w = v.promoted(f);
  ResultRecord::Element out;
  for (const auto& q : w.coords()) out.push_back(q.get_str());
  return out;
}

ResultRecord::Coeffs encode_desc(const Poly& p, const FieldPtr& f) {
  ResultRecord::Coeffs out;
  for (int k = std::max(p.degree(), 0); k >= 0; --k) out.push_back(encode(p.coeff(k), f));
  return out;
}

Num decode(const ResultRecord::Element& e, const FieldPtr& f) {
  std::vector<mpq_class> c;
  for (const auto& s : e) {
    mpq_class q(s);
    q.canonicalize();
    c.push_back(q);
  }
  return Num::from_coords(f, c);
}

Poly decode_desc(const ResultRecord::Coeffs& c, const FieldPtr& f) {
  std::vector<Num> asc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) asc.push_back(decode(*it, f));
  return Poly(asc);
}

std::string profile_text(const std::vector<int>& p) {
  std::string s = "[";
  for (size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s + "]";
}

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string latex_of(std::string s) {
  s = std::regex_replace(s, std::regex("zeta6"), "\\zeta_6");
  s = std::regex_replace(s, std::regex("(\\d+)/(\\d+)"), "\\tfrac{$1}{$2}");
  s = std::regex_replace(s, std::regex("\\^(\\d+)"), "^{$1}");
  s = std::regex_replace(s, std::regex("\\*"), " ");
  return s;
}

// Field generated by the coefficients of p (null when all are rational).
FieldPtr field_of(const Poly& p) {
  FieldPtr f;
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) f = join_fields(f, c.field());
  return f;
}

std::optional<Num> exact_root(const BigComplex& z, const FieldPtr& f, const Poly& g) {
  std::optional<Num> r;
  if (!f) {
    BigFloat tol = pow2(-100, 256);
    if (!(abs(z.im) < tol)) return std::nullopt;
    auto q = rational_approx(z.re, tol, mpz_class(1) << 60);
    if (q) r = Num(*q);
  } else {
    r = recognize_in_field(z, f, f->base_kind(), 200);
  }
  if (r && g.eval(*r).is_zero()) return r;
  return std::nullopt;
}

std::string factor_text(const Poly& g, const std::string& var) { return strip_spaces(g.to_string(var)); }

}  // namespace

Factored factor_for_display(const Poly& p) {
  Factored out;
  out.lead = p.is_zero() ? Num(0) : p.lc();
  if (p.degree() < 1) return out;
  const FieldPtr f = field_of(p);
  for (auto [g, m] : squarefree(p)) {
    if (g.degree() > 1) {
      for (const auto& z : poly_roots(g, 256)) {
        auto r = exact_root(z, f, g);
        if (!r) continue;
        Poly lin = Poly::x() - Poly(*r);
        if (!divides(lin, g)) continue;
        g = exact_div(g, lin);
        out.factors.push_back({lin, m});
      }
    }
    if (g.degree() > 0) out.factors.push_back({g, m});
  }
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    if (a.second != b.second) return a.second < b.second;
    return a.first.to_string() < b.first.to_string();
  });
  return out;
}

std::string factored_string(const Factored& f, const std::string& var) {
  std::string s;
  for (const auto& [g, m] : f.factors) {
    std::string t = factor_text(g, var);
    bool bare = g.degree() == 1 && g.coeff(0).is_zero();
    s += bare && m > 1 ? t : "(" + t + ")";
    if (bare && m == 1) s = s.substr(0, s.size() - t.size() - 2) + t;
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

ResultRecord record_from_result(const BelyiResult& r) {
  ResultRecord rec;
  rec.triple = r.input.to_string();
  auto canon = canonical_form(r.input);
  rec.canonical = canon ? canon->to_string() : rec.triple;
  rec.degree = r.degree;
  rec.orders = case_name(r.passport.euclidean_case);
  for (int k = 0; k < 3; ++k) rec.passport[k] = r.passport.cycle_types[k];
  rec.genus = r.genus;
  const FieldPtr f = r.field;
  rec.base = base_text(f->base_kind());
  rec.minpoly = f->minpoly_string();
  for (const auto& c : f->minpoly()) rec.minpoly_coeffs.push_back({c.a.get_str(), c.b.get_str()});
  if (!f->is_base()) {
    BigComplex t = f->t_value(160);
    rec.embedding_re = t.re.to_string(40);
    rec.embedding_im = t.im.to_string(40);
  }
  if (r.genus == 0) {
    rec.phi_num = encode_desc(r.phi.num, f);
    rec.phi_den = encode_desc(r.phi.den, f);
  } else {
    rec.curve = std::array<ResultRecord::Element, 2>{encode(r.gamma_curve.A, f), encode(r.gamma_curve.B, f)};
    rec.phi_n0 = encode_desc(r.phi_on_curve.n0, f);
    rec.phi_n1 = encode_desc(r.phi_on_curve.n1, f);
    rec.phi_den = encode_desc(r.phi_on_curve.den, f);
  }
  for (int k = 0; k < 3; ++k) rec.over[k] = role_char(r.labels.over[k]);
  rec.relabel = r.labels.relabel;
  rec.mirrored = r.labels.mirrored;
  rec.verified = r.report.checked && r.report.ok;
  rec.exact = r.report.exact;
  rec.fibers = r.report.fibers;
  rec.ramification_excess = r.report.ramification_excess;
  rec.commutes = r.report.commutes;
  rec.note = r.report.note;
  return rec;
}

ResultRecord make_record(const PermutationTriple& input, const RecordOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  PermutationTriple t = opt.invert ? input.inverted() : input;
  ResultRecord rec;
  try {
    PipelineOptions po;
    po.prec = opt.prec;
    po.verify = opt.verify;
    po.kase = opt.kase;
    rec = record_from_result(run_pipeline(t, po));
  } catch (const Error& e) {
    rec = ResultRecord{};
    rec.triple = t.to_string();
    rec.canonical = rec.triple;
    rec.degree = t.degree();
    try {
      Passport p = passport(t, opt.kase);
      rec.orders = case_name(p.euclidean_case);
      for (int k = 0; k < 3; ++k) rec.passport[k] = p.cycle_types[k];
      rec.genus = p.genus;
      if (auto c = canonical_form(t)) rec.canonical = c->to_string();
    } catch (const Error&) {
    }
    rec.status = e.kind() == ErrorKind::ProfileMismatch ? "verification_failed" : "error";
    rec.error_kind = error_kind_name(e.kind());
    rec.error_stage = e.stage();
    rec.error_message = e.message();
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string to_json(const ResultRecord& r, bool with_timing) {
  json j;
  j["triple"] = r.triple;
  j["canonical"] = r.canonical;
  j["degree"] = r.degree;
  j["orders"] = r.orders;
  j["passport"] = r.passport;
  j["genus"] = r.genus;
  j["status"] = r.status;
  if (r.status != "ok") j["error"] = {{"kind", r.error_kind}, {"stage", r.error_stage}, {"message", r.error_message}};
  if (!r.base.empty()) {
    json f;
    f["base"] = r.base;
    f["minpoly"] = r.minpoly;
    f["minpoly_coeffs"] = r.minpoly_coeffs;
    f["embedding"] = {r.embedding_re, r.embedding_im};
    j["field"] = f;
    if (r.curve) j["curve"] = {{"A", (*r.curve)[0]}, {"B", (*r.curve)[1]}};
    json phi;
    if (r.genus == 0) {
      phi["num"] = r.phi_num;
    } else {
      phi["n0"] = r.phi_n0;
      phi["n1"] = r.phi_n1;
    }
    phi["den"] = r.phi_den;
    j["phi"] = phi;
    j["labels"] = {{"over", {std::string(1, r.over[0]), std::string(1, r.over[1]), std::string(1, r.over[2])}},
                   {"relabel", r.relabel},
                   {"mirrored", r.mirrored}};
    j["verification"] = {{"verified", r.verified},     {"exact", r.exact},
                         {"fibers", r.fibers},         {"ramification_excess", r.ramification_excess},
                         {"commutes", r.commutes},     {"note", r.note}};
  }
  if (with_timing) j["millis"] = r.millis;
  return j.dump();
}

ResultRecord from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad JSON record: ") + e.what());
  }
  ResultRecord r;
  try {
    r.triple = j.at("triple").get<std::string>();
    r.canonical = j.at("canonical").get<std::string>();
    r.degree = j.at("degree").get<int>();
    r.orders = j.at("orders").get<std::string>();
    r.passport = j.at("passport").get<std::array<std::vector<int>, 3>>();
    r.genus = j.at("genus").get<int>();
    r.status = j.at("status").get<std::string>();
    if (j.contains("error")) {
      r.error_kind = j["error"].at("kind").get<std::string>();
      r.error_stage = j["error"].at("stage").get<std::string>();
      r.error_message = j["error"].at("message").get<std::string>();
    }
    if (j.contains("field")) {
      const json& f = j["field"];
      r.base = f.at("base").get<std::string>();
      r.minpoly = f.at("minpoly").get<std::string>();
      r.minpoly_coeffs = f.at("minpoly_coeffs").get<std::vector<std::array<std::string, 2>>>();
      auto e = f.at("embedding").get<std::array<std::string, 2>>();
      r.embedding_re = e[0];
      r.embedding_im = e[1];
      if (j.contains("curve"))
        r.curve = std::array<ResultRecord::Element, 2>{j["curve"].at("A").get<ResultRecord::Element>(),
                                                       j["curve"].at("B").get<ResultRecord::Element>()};
      const json& phi = j.at("phi");
      if (r.genus == 0) {
        r.phi_num = phi.at("num").get<ResultRecord::Coeffs>();
      } else {
        r.phi_n0 = phi.at("n0").get<ResultRecord::Coeffs>();
        r.phi_n1 = phi.at("n1").get<ResultRecord::Coeffs>();
      }
      r.phi_den = phi.at("den").get<ResultRecord::Coeffs>();
      const json& l = j.at("labels");
      auto over = l.at("over").get<std::array<std::string, 3>>();
      for (int k = 0; k < 3; ++k) r.over[k] = over[k].empty() ? '?' : over[k][0];
      r.relabel = l.at("relabel").get<std::string>();
      r.mirrored = l.at("mirrored").get<bool>();
      const json& v = j.at("verification");
      r.verified = v.at("verified").get<bool>();
      r.exact = v.at("exact").get<bool>();
      r.fibers = v.at("fibers").get<std::array<std::vector<int>, 3>>();
      r.ramification_excess = v.at("ramification_excess").get<long>();
      r.commutes = v.at("commutes").get<bool>();
      r.note = v.at("note").get<std::string>();
    }
    if (j.contains("millis")) r.millis = j["millis"].get<double>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("incomplete JSON record: ") + e.what());
  }
  return r;
}

RecordMap decode_map(const ResultRecord& r) {
  if (r.base.empty()) throw Error(ErrorKind::ParseError, "record carries no map");
  RecordMap m;
  Base b = base_from_text(r.base);
  if (r.minpoly_coeffs.size() <= 2) {
    m.field = Field::base(b);
  } else {
    std::vector<KElt> g;
    for (const auto& c : r.minpoly_coeffs) {
      KElt e{mpq_class(c[0]), mpq_class(c[1])};
      e.a.canonicalize();
      e.b.canonicalize();
      g.push_back(e);
    }
    BigComplex approx(BigFloat(r.embedding_re, 160), BigFloat(r.embedding_im, 160));
    m.field = Field::extension(b, g, approx);
  }
  if (r.genus == 0) {
    m.phi = RatFunc(decode_desc(r.phi_num, m.field), decode_desc(r.phi_den, m.field));
  } else {
    if (!r.curve) throw Error(ErrorKind::ParseError, "genus-1 record without a curve");
    Curve E{decode((*r.curve)[0], m.field), decode((*r.curve)[1], m.field), b};
    m.curve = E;
    m.phi_curve = CurveFn(E, decode_desc(r.phi_n0, m.field), decode_desc(r.phi_n1, m.field),
                          decode_desc(r.phi_den, m.field));
  }
  return m;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  throw Error(ErrorKind::ParseError, "unknown format " + s + " (text, json, latex)");
}

std::string render(const ResultRecord& r, Format fmt) {
  if (fmt == Format::json) return to_json(r);
  std::ostringstream o;
  const bool tex = fmt == Format::latex;
  if (tex) {
    o << "% " << r.triple << "  " << r.orders << "  degree " << r.degree << "\n";
  } else {
    o << "triple     " << r.triple << "\n";
    o << "orders     " << r.orders << "   degree " << r.degree << "   genus " << r.genus << "\n";
    o << "passport   " << profile_text(r.passport[0]) << " " << profile_text(r.passport[1]) << " "
      << profile_text(r.passport[2]) << "\n";
  }
  if (r.base.empty()) {
    o << (tex ? "% " : "") << r.status << ": " << r.error_kind;
    if (!r.error_stage.empty()) o << " [" << r.error_stage << "]";
    o << " " << r.error_message << "\n";
    return o.str();
  }
  RecordMap m = decode_map(r);
  std::string field = r.minpoly.empty() ? r.base : r.base + "(t), " + r.minpoly + " = 0";
  if (r.genus == 0) {
    Factored n = factor_for_display(m.phi.num), d = factor_for_display(m.phi.den),
             s = factor_for_display(m.phi.num - m.phi.den);
    if (tex) {
      o << "\\[ \\varphi(x) = \\frac{" << latex_of(m.phi.num.to_string()) << "}{" << latex_of(m.phi.den.to_string())
        << "} \\]\n";
      o << "\\begin{align*}\n";
      o << "N(x) &= " << latex_of(factored_string(n)) << "\\\\\n";
      o << "D(x) &= " << latex_of(factored_string(d)) << "\\\\\n";
      o << "N(x) - D(x) &= " << latex_of(factored_string(s)) << "\n";
      o << "\\end{align*}\n";
    } else {
      o << "field      " << field << "\n";
      o << "phi(x)     " << m.phi.to_string() << "\n";
      o << "over 0     " << factored_string(n) << "   (lc " << n.lead.to_string() << ", sigma_" << r.over[0] << ")\n";
      o << "over inf   " << factored_string(d) << "   (lc " << d.lead.to_string() << ", sigma_" << r.over[2] << ")\n";
      o << "over 1     " << factored_string(s) << "   (lc " << s.lead.to_string() << ", sigma_" << r.over[1] << ")\n";
    }
  } else {
    if (tex) {
      o << "\\[ E\\colon " << latex_of(m.curve->to_string()) << " \\]\n";
      o << "\\[ \\varphi(x,y) = " << latex_of(m.phi_curve.to_string()) << " \\]\n";
    } else {
      o << "field      " << field << "\n";
      o << "curve      " << m.curve->to_string() << "\n";
      o << "phi(x,y)   " << m.phi_curve.to_string() << "\n";
    }
  }
  if (!tex) {
    o << "fibers     0: " << profile_text(r.fibers[0]) << "  1: " << profile_text(r.fibers[1])
      << "  inf: " << profile_text(r.fibers[2]) << "\n";
    o << "labels     sigma_" << r.over[0] << ", sigma_" << r.over[1] << ", sigma_" << r.over[2]
      << " over 0, 1, inf";
    if (r.relabel != "none") o << " (" << r.relabel << (r.mirrored ? ", mirrored" : "") << ")";
    o << "\n";
    o << "verified   " << (r.verified ? "yes" : "no") << (r.exact ? " (exact)" : " (numeric fibers)");
    if (r.commutes) o << ", diagram commutes";
    if (!r.note.empty()) o << "; " << r.note;
    o << "\n";
  }
  return o.str();
}

namespace {

bool record_less(const ResultRecord& a, const ResultRecord& b) {
  if (a.orders != b.orders) return a.orders < b.orders;
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.canonical != b.canonical) return a.canonical < b.canonical;
  return a.triple < b.triple;
}

}  // namespace

std::vector<ResultRecord> run_batch(const std::vector<std::pair<PermutationTriple, Case>>& jobs,
                                    const RecordOptions& opt) {
  std::vector<ResultRecord> out(jobs.size());
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < n; ++k) {
    RecordOptions o = opt;
    o.kase = jobs[k].second;
    out[k] = make_record(jobs[k].first, o);
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

std::vector<ResultRecord> run_batch_serial(const std::vector<std::pair<PermutationTriple, Case>>& jobs,
                                           const RecordOptions& opt) {
  std::vector<ResultRecord> out;
  for (const auto& [t, c] : jobs) {
    RecordOptions o = opt;
    o.kase = c;
    out.push_back(make_record(t, o));
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

std::string bucket_name(const ResultRecord& r) {
  std::string digits;
  for (char ch : r.orders)
    if (std::isdigit(static_cast<unsigned char>(ch))) digits += ch;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_d%03d.jsonl", digits.c_str(), r.degree);
  return buf;
}

std::vector<std::string> write_buckets(const std::vector<ResultRecord>& records, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::map<std::string, std::vector<const ResultRecord*>> buckets;
  for (const auto& r : records) buckets[bucket_name(r)].push_back(&r);
  std::vector<std::string> touched;
  for (auto& [name, recs] : buckets) {
    fs::path path = fs::path(dir) / name;
    std::set<std::string> present;
    if (std::ifstream in(path); in) {
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) present.insert(from_json(line).canonical);
    }
    std::sort(recs.begin(), recs.end(), [](const auto* a, const auto* b) { return record_less(*a, *b); });
    std::ofstream out(path, std::ios::app);
    for (const auto* r : recs) {
      if (!present.insert(r->canonical).second) continue;
      out << to_json(*r) << "\n";
    }
    touched.push_back(path.string());
  }
  return touched;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::RelationViolated:
    case ErrorKind::NotTransitive:
    case ErrorKind::NotEuclidean:
      return 2;
    case ErrorKind::ProfileMismatch:
      return 1;
    default:
      return 3;
  }
}

int exit_code(const std::vector<ResultRecord>& records) {
  int code = 0;
  for (const auto& r : records) {
    if (r.status == "ok") continue;
    int c = 3;
    for (int k = 0; k <= static_cast<int>(ErrorKind::ProfileMismatch); ++k)
      if (r.error_kind == error_kind_name(static_cast<ErrorKind>(k))) c = exit_code_for(static_cast<ErrorKind>(k));
    code = std::max(code, c);
  }
  return code;
}

}  // namespace eb
