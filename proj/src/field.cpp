#include "ebelyi/field.hpp"

#include <sstream>

#include "ebelyi/error.hpp"

namespace eb {

namespace {

KElt kmul(Base b, const KElt& x, const KElt& y) {
  mpq_class ac = x.a * y.a, bd = x.b * y.b;
  mpq_class cross = x.a * y.b + x.b * y.a;
  if (b == Base::Qi) return {ac - bd, cross};
  return {ac - bd, cross + bd};  // j^2 = j - 1
}

KElt kadd(const KElt& x, const KElt& y) { return {x.a + y.a, x.b + y.b}; }
KElt ksub(const KElt& x, const KElt& y) { return {x.a - y.a, x.b - y.b}; }
bool kzero(const KElt& x) { return x.a == 0 && x.b == 0; }

KElt kinv(Base b, const KElt& x) {
  // conj(a + bj) = a - bj (Q(i)) or a + b - bj (Q(zeta6), conj zeta6 = 1 - zeta6)
  mpq_class n = b == Base::Qi ? mpq_class(x.a * x.a + x.b * x.b) : mpq_class(x.a * x.a + x.a * x.b + x.b * x.b);
  if (n == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (b == Base::Qi) return {x.a / n, -x.b / n};
  return {(x.a + x.b) / n, -x.b / n};
}

using KPoly = std::vector<KElt>;  // ascending

void ktrim(KPoly& p) {
  while (!p.empty() && kzero(p.back())) p.pop_back();
}

// Remainder and quotient of polynomials over K.
void kdivmod(Base b, KPoly a, const KPoly& d, KPoly& q, KPoly& r) {
  ktrim(a);
  int dd = static_cast<int>(d.size()) - 1;
  KElt li = kinv(b, d.back());
  q.assign(a.size() >= d.size() ? a.size() - d.size() + 1 : 0, KElt{});
  for (int k = static_cast<int>(a.size()) - 1; k >= dd; --k) {
    if (kzero(a[k])) continue;
    KElt c = kmul(b, a[k], li);
    q[k - dd] = c;
    for (int i = 0; i <= dd; ++i) a[k - dd + i] = ksub(a[k - dd + i], kmul(b, c, d[i]));
  }
  ktrim(a);
  r = std::move(a);
}

KPoly kpmul(Base b, const KPoly& x, const KPoly& y) {
  if (x.empty() || y.empty()) return {};
  KPoly r(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (kzero(x[i])) continue;
    for (size_t k = 0; k < y.size(); ++k) r[i + k] = kadd(r[i + k], kmul(b, x[i], y[k]));
  }
  ktrim(r);
  return r;
}

KPoly kpsub(const KPoly& x, const KPoly& y) {
  KPoly r(std::max(x.size(), y.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < x.size()) r[i] = kadd(r[i], x[i]);
    if (i < y.size()) r[i] = ksub(r[i], y[i]);
  }
  ktrim(r);
  return r;
}

std::string kstr_named(Base b, const KElt& e) {
  std::string jn = b == Base::Qi ? "i" : "zeta6";
  if (e.b == 0) return e.a.get_str();
  std::string s;
  if (e.a != 0) s = e.a.get_str();
  mpq_class bb = e.b;
  if (!s.empty()) {
    if (bb < 0) {
      s += " - ";
      bb = -bb;
    } else {
      s += " + ";
    }
  } else if (bb < 0) {
    s = "-";
    bb = -bb;
  }
  if (bb == 1)
    s += jn;
  else
    s += bb.get_str() + "*" + jn;
  return s;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a.get() == b.get(); }

}  // namespace

std::string base_name(Base b) { return b == Base::Qi ? "Q(i)" : "Q(zeta6)"; }
std::string k_to_string(Base b, const KElt& e) { return kstr_named(b, e); }

Field::Field(Base b, std::vector<KElt> g, BigComplex approx)
    : base_(b), m_(static_cast<int>(g.size()) - 1), g_(std::move(g)), approx_(std::move(approx)) {}

FieldPtr Field::base(Base b) {
  static const FieldPtr qi(new Field(Base::Qi, {KElt{0, 0}, KElt{1, 0}}, BigComplex(64)));
  static const FieldPtr qz(new Field(Base::Qz6, {KElt{0, 0}, KElt{1, 0}}, BigComplex(64)));
  return b == Base::Qi ? qi : qz;
}

FieldPtr Field::extension(Base b, std::vector<KElt> g, const BigComplex& approx) {
  if (g.size() < 2 || g.back().a != 1 || g.back().b != 0)
    throw Error(ErrorKind::InternalInconsistency, "extension polynomial must be monic of degree >= 1");
  if (g.size() == 2) return base(b);
  return FieldPtr(new Field(b, std::move(g), approx));
}

BigComplex Field::j_value(mpfr_prec_t prec) const {
  if (base_ == Base::Qi) return BigComplex::i(prec);
  BigFloat half(mpq_class(1, 2), prec);
  return {half, sqrt(BigFloat(3L, prec)) * half};
}

BigComplex Field::t_value(mpfr_prec_t prec) const {
  if (m_ == 1) throw Error(ErrorKind::InternalInconsistency, "base field has no extension generator");
  BigComplex jv = j_value(prec + 32);
  std::vector<BigComplex> gc;
  for (const auto& e : g_) gc.push_back(BigComplex(e.a, 0, prec + 32) + jv * BigComplex(e.b, 0, prec + 32));
  BigComplex t = approx_.with_prec(prec + 32);
  // Newton refinement; quadratic convergence from a root approximation.
  for (int it = 0; it < 200; ++it) {
    BigComplex v = gc.back(), dv(prec + 32);
    for (int k = m_ - 1; k >= 0; --k) {
      dv = dv * t + v;
      v = v * t + gc[k];
    }
    if (dv.is_zero()) break;
    BigComplex step = v / dv;
    t -= step;
    if (step.is_zero() || abs(step).exponent() < abs(t).exponent() - static_cast<long>(prec) - 8) break;
  }
  return t.with_prec(prec);
}

std::string Field::name() const {
  if (m_ == 1) return base_name(base_);
  return base_name(base_) + "[t]/(" + minpoly_string() + ")";
}

std::string Field::minpoly_string() const {
  if (m_ == 1) return "";
  std::string s;
  for (int k = m_; k >= 0; --k) {
    const KElt& c = g_[k];
    if (kzero(c)) continue;
    std::string cs = kstr_named(base_, c);
    bool compound = c.a != 0 && c.b != 0;
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    std::string term;
    if (k == 0)
      term = compound ? "(" + cs + ")" : cs;
    else if (cs == "1")
      term = mono;
    else if (cs == "-1")
      term = "-" + mono;
    else
      term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (s.empty())
      s = term;
    else if (term[0] == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s;
}

Num Field::j() const { return Num::from_k(base(base_), 0, 1); }

Num Field::t() const {
  if (m_ == 1) throw Error(ErrorKind::InternalInconsistency, "base field has no extension generator");
  std::vector<mpq_class> c(2 * static_cast<size_t>(m_), mpq_class(0));
  c[2] = 1;
  return Num::from_coords(shared_from_this(), std::move(c));
}

Num Field::element(std::vector<mpq_class> coords) const {
  return Num::from_coords(m_ == 1 ? base(base_) : shared_from_this(), std::move(coords));
}

Num Num::from_k(FieldPtr f, const mpq_class& a, const mpq_class& b) {
  Num r;
  if (b == 0) {
    r.c_[0] = a;
    return r;
  }
  r.f_ = std::move(f);
  r.c_.assign(2 * static_cast<size_t>(r.f_->degree()), mpq_class(0));
  r.c_[0] = a;
  r.c_[1] = b;
  return r;
}

Num Num::from_coords(FieldPtr f, std::vector<mpq_class> coords) {
  Num r;
  if (!f) {
    r.c_ = coords.empty() ? std::vector<mpq_class>(1) : std::move(coords);
    r.c_.resize(1);
    return r;
  }
  coords.resize(2 * static_cast<size_t>(f->degree()));
  r.f_ = std::move(f);
  r.c_ = std::move(coords);
  return r;
}

bool Num::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool Num::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Num::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Num::in_base() const {
  for (size_t i = 2; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Num::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InternalInconsistency, "not rational: " + to_string());
  return c_[0];
}

KElt Num::k_value() const {
  if (!in_base()) throw Error(ErrorKind::InternalInconsistency, "not in the base field: " + to_string());
  return {c_[0], c_.size() > 1 ? c_[1] : mpq_class(0)};
}

Num Num::promoted(const FieldPtr& f) const {
  if (same_field(f_, f)) return *this;
  if (!f) {
    if (!is_rational()) throw Error(ErrorKind::InternalInconsistency, "cannot demote " + to_string());
    return Num(c_[0]);
  }
  if (f_ && f_->degree() > 1 && !same_field(f_, f))
    throw Error(ErrorKind::InternalInconsistency, "mixing elements of different extensions");
  if (f_ && f_->base_kind() != f->base_kind())
    throw Error(ErrorKind::InternalInconsistency, "mixing Q(i) and Q(zeta6)");
  Num r;
  r.f_ = f;
  r.c_.assign(2 * static_cast<size_t>(f->degree()), mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  return r;
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (same_field(a, b)) return a;
  if (a->base_kind() != b->base_kind())
    throw Error(ErrorKind::InternalInconsistency, "mixing Q(i) and Q(zeta6)");
  if (a->degree() == 1) return b;
  if (b->degree() == 1) return a;
  throw Error(ErrorKind::InternalInconsistency, "mixing elements of different extensions");
}

Num Num::operator-() const {
  Num r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Num& Num::operator+=(const Num& o) {
  if (!same_field(f_, o.f_)) {
    FieldPtr f = join_fields(f_, o.f_);
    if (!same_field(f_, f)) *this = promoted(f);
    if (!same_field(o.f_, f)) return *this += o.promoted(f);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Num& Num::operator-=(const Num& o) {
  if (!same_field(f_, o.f_)) {
    FieldPtr f = join_fields(f_, o.f_);
    if (!same_field(f_, f)) *this = promoted(f);
    if (!same_field(o.f_, f)) return *this -= o.promoted(f);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Num& Num::operator*=(const Num& o) {
  if (!o.f_) {
    for (auto& v : c_) v *= o.c_[0];
    return *this;
  }
  if (!f_) {
    mpq_class s = c_[0];
    *this = o;
    for (auto& v : c_) v *= s;
    return *this;
  }
  FieldPtr f = join_fields(f_, o.f_);
  const Num& x = same_field(f_, f) ? *this : promoted(f);
  Num yy;
  const Num* y = &o;
  if (!same_field(o.f_, f)) {
    yy = o.promoted(f);
    y = &yy;
  }
  Base b = f->base_kind();
  int m = f->degree();
  if (m == 1) {
    KElt r = kmul(b, {x.c_[0], x.c_[1]}, {y->c_[0], y->c_[1]});
    Num out;
    out.f_ = f;
    out.c_ = {r.a, r.b};
    *this = std::move(out);
    return *this;
  }
  KPoly xp(m), yp(m);
  for (int k = 0; k < m; ++k) {
    xp[k] = {x.c_[2 * k], x.c_[2 * k + 1]};
    yp[k] = {y->c_[2 * k], y->c_[2 * k + 1]};
  }
  KPoly prod = kpmul(b, xp, yp);
  const auto& g = f->minpoly();
  for (int k = static_cast<int>(prod.size()) - 1; k >= m; --k) {
    if (kzero(prod[k])) continue;
    KElt c = prod[k];
    for (int i = 0; i < m; ++i) prod[k - m + i] = ksub(prod[k - m + i], kmul(b, c, g[i]));
    prod[k] = KElt{};
  }
  Num out;
  out.f_ = f;
  out.c_.assign(2 * static_cast<size_t>(m), mpq_class(0));
  for (int k = 0; k < m && k < static_cast<int>(prod.size()); ++k) {
    out.c_[2 * k] = prod[k].a;
    out.c_[2 * k + 1] = prod[k].b;
  }
  *this = std::move(out);
  return *this;
}

Num Num::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!f_) return Num(1 / c_[0]);
  Base b = f_->base_kind();
  int m = f_->degree();
  if (m == 1) {
    KElt r = kinv(b, {c_[0], c_[1]});
    return from_k(f_, r.a, r.b).promoted(f_);
  }
  // Extended Euclid in K[t]: find s with s*x = 1 mod g.
  KPoly r0(f_->minpoly().begin(), f_->minpoly().end()), r1(m);
  for (int k = 0; k < m; ++k) r1[k] = {c_[2 * k], c_[2 * k + 1]};
  ktrim(r1);
  KPoly s0, s1{KElt{1, 0}};
  while (!r1.empty()) {
    KPoly q, r;
    kdivmod(b, r0, r1, q, r);
    KPoly s2 = kpsub(s0, kpmul(b, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw Error(ErrorKind::DivisionByZero, "element not invertible (reducible modulus?)");
  KElt li = kinv(b, r0[0]);
  Num out;
  out.f_ = f_;
  out.c_.assign(2 * static_cast<size_t>(m), mpq_class(0));
  for (size_t k = 0; k < s0.size() && static_cast<int>(k) < m; ++k) {
    KElt c = kmul(b, s0[k], li);
    out.c_[2 * k] = c.a;
    out.c_[2 * k + 1] = c.b;
  }
  return out;
}

Num& Num::operator/=(const Num& o) {
  if (!o.f_) {
    if (o.c_[0] == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    for (auto& v : c_) v /= o.c_[0];
    return *this;
  }
  return *this *= o.inv();
}

Num Num::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  Num r(1), b = *this;
  while (n > 0) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

bool Num::operator==(const Num& o) const {
  if (same_field(f_, o.f_)) return c_ == o.c_;
  size_t n = std::max(c_.size(), o.c_.size());
  for (size_t i = 0; i < n; ++i) {
    mpq_class x = i < c_.size() ? c_[i] : mpq_class(0);
    mpq_class y = i < o.c_.size() ? o.c_[i] : mpq_class(0);
    if (x != y) return false;
  }
  return true;
}

Num Num::conj_k() const {
  if (!in_base()) throw Error(ErrorKind::InternalInconsistency, "conjugation only on base elements");
  if (!f_) return *this;
  KElt e = k_value();
  if (f_->base_kind() == Base::Qi) return from_k(f_, e.a, -e.b);
  return from_k(f_, e.a + e.b, -e.b);
}

BigComplex Num::embed(mpfr_prec_t prec) const {
  if (!f_) return BigComplex(c_[0], 0, prec);
  BigComplex jv = f_->j_value(prec + 16);
  int m = f_->degree();
  BigComplex tv = m > 1 ? f_->t_value(prec + 16) : BigComplex(1L, prec + 16);
  BigComplex acc(prec + 16);
  for (int k = m - 1; k >= 0; --k) {
    BigComplex coef = BigComplex(c_[2 * k], 0, prec + 16) + jv * BigComplex(c_[2 * k + 1], 0, prec + 16);
    acc = acc * tv + coef;
  }
  return acc.with_prec(prec);
}

std::string Num::to_string() const {
  if (!f_) return c_[0].get_str();
  Base b = f_->base_kind();
  int m = f_->degree();
  if (m == 1 || in_base()) return kstr_named(b, {c_[0], c_[1]});
  std::string s;
  for (int k = m - 1; k >= 0; --k) {
    KElt c{c_[2 * k], c_[2 * k + 1]};
    if (kzero(c)) continue;
    std::string cs = kstr_named(b, c);
    bool compound = c.a != 0 && c.b != 0;
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    std::string term;
    if (k == 0)
      term = compound ? "(" + cs + ")" : cs;
    else if (cs == "1")
      term = mono;
    else if (cs == "-1")
      term = "-" + mono;
    else
      term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (s.empty())
      s = term;
    else if (term[0] == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s.empty() ? "0" : s;
}

bool Num::less(const Num& o) const {
  size_t n = std::max(c_.size(), o.c_.size());
  for (size_t i = 0; i < n; ++i) {
    mpq_class x = i < c_.size() ? c_[i] : mpq_class(0);
    mpq_class y = i < o.c_.size() ? o.c_[i] : mpq_class(0);
    if (x != y) return x < y;
  }
  return false;
}

Num operator+(Num a, const Num& b) { return a += b; }
Num operator-(Num a, const Num& b) { return a -= b; }
Num operator*(Num a, const Num& b) { return a *= b; }
Num operator/(Num a, const Num& b) { return a /= b; }

}  // namespace eb
