#include "ebelyi/poly.hpp"

#include "ebelyi/error.hpp"

namespace eb {

Poly::Poly(const Num& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Num> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Num>{Num(0), Num(1)}); }

Poly Poly::monomial(const Num& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Num> v(static_cast<size_t>(k) + 1, Num(0));
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Num>& roots) {
  Poly r(1);
  for (const auto& z : roots) r *= Poly(std::vector<Num>{-z, Num(1)});
  return r;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Num Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Num(0);
  return c_[k];
}

Num Poly::lc() const { return c_.empty() ? Num(0) : c_.back(); }

void Poly::set_coeff(int k, const Num& v) {
  if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(k) + 1, Num(0));
  c_[k] = v;
  trim();
}

FieldPtr Poly::field() const {
  FieldPtr f;
  for (const auto& c : c_) f = join_fields(f, c.field());
  return f;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Num(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Num(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Num> r(c_.size() + o.c_.size() - 1, Num(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t k = 0; k < o.c_.size(); ++k) {
      if (o.c_[k].is_zero()) continue;
      r[i + k] += c_[i] * o.c_[k];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Num& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly& Poly::operator/=(const Num& s) {
  Num inv = s.inv();
  for (auto& c : c_) c *= inv;
  return *this;
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

Num Poly::eval(const Num& v) const {
  Num r(0);
  for (size_t k = c_.size(); k-- > 0;) r = r * v + c_[k];
  return r;
}

BigComplex Poly::eval(const BigComplex& v) const {
  BigComplex r(v.prec());
  for (size_t k = c_.size(); k-- > 0;) r = r * v + c_[k].embed(v.prec());
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Num> r(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * Num(static_cast<long>(k));
  return Poly(std::move(r));
}

Poly Poly::compose(const Poly& inner) const {
  Poly r;
  for (size_t k = c_.size(); k-- > 0;) {
    r *= inner;
    r += Poly(c_[k]);
  }
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  Poly r = *this;
  r /= lc();
  return r;
}

Poly Poly::pow(int n) const {
  Poly r(1), b = *this;
  while (n > 0) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

Poly Poly::scale_arg(const Num& s) const {
  Poly r = *this;
  Num p(1);
  for (auto& c : r.c_) {
    c *= p;
    p *= s;
  }
  r.trim();
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t k = c_.size(); k-- > 0;) {
    const Num& c = c_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
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

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(Poly a, const Num& b) { return a *= b; }
Poly operator*(const Num& a, Poly b) { return b *= a; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Num> r = a.coeffs();
  std::vector<Num> q(static_cast<size_t>(a.degree() - db) + 1, Num(0));
  Num li = b.lc().inv();
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    Num c = r[k] * li;
    q[k - db] = c;
    for (int i = 0; i < db; ++i)
      if (!bc[i].is_zero()) r[k - db + i] -= c * bc[i];
    r[k] = Num(0);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).second.is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<Poly, int>> squarefree(const Poly& a) {
  std::vector<std::pair<Poly, int>> out;
  if (a.degree() <= 0) return out;
  Poly f = a.monic();
  Poly fp = f.derivative();
  Poly c = gcd(f, fp);
  Poly w = exact_div(f, c);
  Poly y = exact_div(fp, c);
  Poly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    Poly w2 = exact_div(w, g);
    y = exact_div(z, g);
    w = std::move(w2);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

Num resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Num(0);
  if (a.degree() == 0) return a.lc().pow(b.degree());
  if (b.degree() == 0) return b.lc().pow(a.degree());
  int da = a.degree(), db = b.degree();
  Poly r = divmod(a, b).second;
  if (r.is_zero()) return Num(0);
  int dr = r.degree();
  Num s = ((da * db) % 2) ? Num(-1) : Num(1);
  return s * b.lc().pow(da - dr) * resultant(b, r);
}

std::vector<Num> power_sums(const Poly& a, int k) {
  Poly p = a.monic();
  int n = p.degree();
  std::vector<Num> s(static_cast<size_t>(k) + 1, Num(0));
  s[0] = Num(n);
  // c(i) = coefficient of x^(n-i) in the monic polynomial
  auto c = [&](int i) { return p.coeff(n - i); };
  for (int m = 1; m <= k; ++m) {
    Num acc(0);
    for (int i = 1; i < m && i <= n; ++i) acc += c(i) * s[m - i];
    if (m <= n) acc += c(m) * Num(m);
    s[m] = -acc;
  }
  return s;
}

RatFunc::RatFunc(Poly n, Poly d) {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (n.is_zero()) {
    num = Poly();
    den = Poly(1);
    return;
  }
  Poly g = gcd(n, d);
  if (g.degree() > 0) {
    n = exact_div(n, g);
    d = exact_div(d, g);
  }
  Num l = d.lc();
  n /= l;
  d /= l;
  num = std::move(n);
  den = std::move(d);
}

Num RatFunc::eval(const Num& v) const { return num.eval(v) / den.eval(v); }

BigComplex RatFunc::eval(const BigComplex& v) const { return num.eval(v) / den.eval(v); }

RatFunc RatFunc::derivative() const {
  return RatFunc(num.derivative() * den - num * den.derivative(), den * den);
}

namespace {
// sum_k c_k P^k Q^(n-k) for the coefficients of p, n = deg p.
Poly homogenize(const Poly& p, const Poly& P, const std::vector<Poly>& qpow) {
  int n = p.degree();
  if (n < 0) return {};
  Poly h(p.lc());
  for (int k = n - 1; k >= 0; --k) {
    h *= P;
    if (!p.coeff(k).is_zero()) h += qpow[n - k] * p.coeff(k);
  }
  return h;
}
}  // namespace

RatFunc RatFunc::compose(const RatFunc& inner) const {
  int nn = num.degree(), nd = den.degree();
  int top = std::max(nn, nd);
  std::vector<Poly> qpow(static_cast<size_t>(top) + 1);
  qpow[0] = Poly(1);
  for (int k = 1; k <= top; ++k) qpow[k] = qpow[k - 1] * inner.den;
  Poly hn = homogenize(num, inner.num, qpow);
  Poly hd = homogenize(den, inner.num, qpow);
  if (nn >= nd) return RatFunc(hn, hd * qpow[nn - nd]);
  return RatFunc(hn * qpow[nd - nn], hd);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den.degree() == 0) return num.to_string(var);
  return "(" + num.to_string(var) + ")/(" + den.to_string(var) + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return RatFunc(a.num + b.num, a.den);
  return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return RatFunc(a.num - b.num, a.den);
  return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.num, a.den * b.den); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  return RatFunc(a.num * b.den, a.den * b.num);
}

}  // namespace eb
