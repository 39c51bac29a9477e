#include "ebelyi/curve.hpp"

#include <map>

#include "ebelyi/error.hpp"

namespace eb {

Poly Curve::rhs() const { return Poly(std::vector<Num>{B, A, Num(0), Num(1)}); }

Num Curve::discriminant() const { return Num(4) * A * A * A + Num(27) * B * B; }

std::string Curve::to_string() const {
  Poly r = rhs();
  return "y^2 = " + r.to_string("x");
}

bool on_curve(const Curve& E, const Point& P, const Num& D) {
  if (P.inf) return true;
  return D * P.y * P.y == E.rhs().eval(P.x);
}

Point point_neg(const Point& P) {
  if (P.inf) return P;
  return Point::affine(P.x, -P.y);
}

Point point_add(const Curve& E, const Point& P, const Point& Q, const Num& D) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  Num lam;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return Point::infinity();  // covers y = 0 doubling
    lam = (Num(3) * P.x * P.x + E.A) / (Num(2) * P.y * D);
  } else {
    lam = (P.y - Q.y) / (P.x - Q.x);
  }
  Num x3 = D * lam * lam - P.x - Q.x;
  Num y3 = lam * (P.x - x3) - P.y;
  return Point::affine(std::move(x3), std::move(y3));
}

Point scalar_mul(const Curve& E, const Point& P, long n, const Num& D) {
  if (n < 0) return scalar_mul(E, point_neg(P), -n, D);
  Point r = Point::infinity(), b = P;
  while (n > 0) {
    if (n & 1) r = point_add(E, r, b, D);
    n >>= 1;
    if (n) b = point_add(E, b, b, D);
  }
  return r;
}

Point j_action(const Curve& E, const Point& P) {
  FieldPtr K = Field::base(E.base);
  if (E.base == Base::Qi && E.B.is_zero()) {
    if (P.inf) return P;
    return Point::affine(-P.x, Num::from_k(K, 0, 1) * P.y);
  }
  if (E.base == Base::Qz6 && E.A.is_zero()) {
    if (P.inf) return P;
    return Point::affine(-(Num::from_k(K, 0, 1) * P.x), -P.y);
  }
  throw Error(ErrorKind::WrongCurve, "no j-action on " + E.to_string());
}

Point cyclotomic_mul(const Curve& E, const Point& P, long a, long b, const Num& D) {
  return point_add(E, scalar_mul(E, P, a, D), scalar_mul(E, j_action(E, P), b, D), D);
}

namespace {

// psi_n = poly * y^(has_y)
struct DivPoly {
  Poly p;
  bool y = false;
};

DivPoly dmul(const DivPoly& a, const DivPoly& b, const Poly& f) {
  DivPoly r{a.p * b.p, a.y != b.y};
  if (a.y && b.y) r.p *= f;
  return r;
}

DivPoly dsub(const DivPoly& a, const DivPoly& b) {
  if (a.p.is_zero()) return {-b.p, b.y};
  if (b.p.is_zero()) return a;
  if (a.y != b.y) throw Error(ErrorKind::InternalInconsistency, "division polynomial parity mismatch");
  return {a.p - b.p, a.y};
}

class DivPolyTable {
 public:
  explicit DivPolyTable(const Curve& E) : E_(E), f_(E.rhs()) {
    const Num& A = E.A;
    const Num& B = E.B;
    t_[0] = {Poly(), false};
    t_[1] = {Poly(1), false};
    t_[2] = {Poly(2), true};
    t_[3] = {Poly(std::vector<Num>{-(A * A), Num(12) * B, Num(6) * A, Num(0), Num(3)}), false};
    Poly q(std::vector<Num>{Num(-8) * B * B - A * A * A, Num(-4) * A * B, Num(-5) * A * A, Num(20) * B,
                            Num(5) * A, Num(0), Num(1)});
    t_[4] = {q * Num(4), true};
  }

  const DivPoly& get(int n) {
    auto it = t_.find(n);
    if (it != t_.end()) return it->second;
    DivPoly r;
    if (n % 2 == 1) {
      int m = (n - 1) / 2;
      DivPoly pm = get(m), pm1 = get(m + 1), pm2 = get(m + 2), pmm = get(m - 1);
      DivPoly t1 = dmul(pm2, dmul(pm, dmul(pm, pm, f_), f_), f_);
      DivPoly t2 = dmul(pmm, dmul(pm1, dmul(pm1, pm1, f_), f_), f_);
      r = dsub(t1, t2);
    } else {
      int m = n / 2;
      DivPoly pm = get(m), pm1 = get(m + 1), pm2 = get(m + 2), pmm = get(m - 1), pmm2 = get(m - 2);
      DivPoly inner = dsub(dmul(pm2, dmul(pmm, pmm, f_), f_), dmul(pmm2, dmul(pm1, pm1, f_), f_));
      DivPoly prod = dmul(pm, inner, f_);
      // divide by 2y
      if (prod.y) {
        r = {prod.p * Num(mpq_class(1, 2)), false};
      } else {
        r = {exact_div(prod.p, f_) * Num(mpq_class(1, 2)), true};
      }
    }
    return t_[n] = r;
  }

  const Poly& f() const { return f_; }

 private:
  Curve E_;
  Poly f_;
  std::map<int, DivPoly> t_;
};

}  // namespace

Poly division_polynomial(const Curve& E, int N) {
  if (N < 1) throw Error(ErrorKind::InternalInconsistency, "division polynomial index must be >= 1");
  DivPolyTable T(E);
  const DivPoly& d = T.get(N);
  Poly p = d.y ? d.p * T.f() : d.p;
  return p.monic();
}

Poly primitive_division_polynomial(const Curve& E, int N) {
  Poly p = division_polynomial(E, N);
  for (int D = 1; D < N; ++D) {
    if (N % D != 0) continue;
    Poly g = gcd(p, division_polynomial(E, D));
    if (g.degree() > 0) p = exact_div(p, g);
  }
  return p.monic();
}

RatFunc multiplication_x_map(const Curve& E, int N) {
  if (N == 1) return RatFunc::poly(Poly::x());
  DivPolyTable T(E);
  const Poly& f = T.f();
  DivPoly lo = T.get(N - 1), hi = T.get(N + 1), mid = T.get(N);
  DivPoly num = dmul(lo, hi, f);
  DivPoly den = dmul(mid, mid, f);
  return RatFunc::poly(Poly::x()) - RatFunc(num.p, den.p);
}

CurveFn::CurveFn(const Curve& E, Poly a, Poly b, Poly d)
    : n0(std::move(a)), n1(std::move(b)), den(std::move(d)), E_(E) {
  normalize();
}

CurveFn CurveFn::constant(const Curve& E, const Num& c) { return CurveFn(E, Poly(c), Poly(), Poly(1)); }
CurveFn CurveFn::x(const Curve& E) { return CurveFn(E, Poly::x(), Poly(), Poly(1)); }
CurveFn CurveFn::y(const Curve& E) { return CurveFn(E, Poly(), Poly(1), Poly(1)); }

CurveFn CurveFn::from_ratfunc(const Curve& E, const RatFunc& r) { return CurveFn(E, r.num, Poly(), r.den); }

void CurveFn::normalize() {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "curve function with zero denominator");
  if (n0.is_zero() && n1.is_zero()) {
    den = Poly(1);
    return;
  }
  Poly g = gcd(gcd(n0, n1), den);
  if (g.degree() > 0) {
    n0 = exact_div(n0, g);
    n1 = exact_div(n1, g);
    den = exact_div(den, g);
  }
  Num l = den.lc();
  if (!l.is_one()) {
    n0 /= l;
    n1 /= l;
    den /= l;
  }
}

CurveFn CurveFn::operator-() const {
  CurveFn r = *this;
  r.n0 = -r.n0;
  r.n1 = -r.n1;
  return r;
}

Num CurveFn::eval(const Point& P) const {
  if (P.inf) throw Error(ErrorKind::InternalInconsistency, "evaluation at infinity");
  Num d = den.eval(P.x);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "pole of curve function");
  return (n0.eval(P.x) + n1.eval(P.x) * P.y) / d;
}

BigComplex CurveFn::eval(const BigComplex& x, const BigComplex& y) const {
  return (n0.eval(x) + n1.eval(x) * y) / den.eval(x);
}

std::string CurveFn::to_string() const {
  std::string num;
  if (n1.is_zero())
    num = n0.to_string("x");
  else if (n0.is_zero())
    num = "(" + n1.to_string("x") + ")*y";
  else
    num = n0.to_string("x") + " + (" + n1.to_string("x") + ")*y";
  if (den.degree() == 0) return num;
  return "(" + num + ")/(" + den.to_string("x") + ")";
}

CurveFn operator+(const CurveFn& a, const CurveFn& b) {
  if (a.den == b.den) return CurveFn(a.E_, a.n0 + b.n0, a.n1 + b.n1, a.den);
  Poly g = gcd(a.den, b.den);
  Poly ca = exact_div(b.den, g), cb = exact_div(a.den, g);
  return CurveFn(a.E_, a.n0 * ca + b.n0 * cb, a.n1 * ca + b.n1 * cb, a.den * ca);
}

CurveFn operator-(const CurveFn& a, const CurveFn& b) { return a + (-b); }

CurveFn operator*(const CurveFn& a, const CurveFn& b) {
  Poly f = a.E_.rhs();
  Poly m0 = a.n0 * b.n0 + a.n1 * b.n1 * f;
  Poly m1 = a.n0 * b.n1 + a.n1 * b.n0;
  return CurveFn(a.E_, std::move(m0), std::move(m1), a.den * b.den);
}

CurveFn operator/(const CurveFn& a, const CurveFn& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero function");
  Poly f = a.E_.rhs();
  // multiply through by the conjugate b0 - b1 y
  Poly norm = b.n0 * b.n0 - b.n1 * b.n1 * f;
  Poly m0 = a.n0 * b.n0 - a.n1 * b.n1 * f;
  Poly m1 = a.n1 * b.n0 - a.n0 * b.n1;
  return CurveFn(a.E_, m0 * b.den, m1 * b.den, a.den * norm);
}

IsoMap IsoMap::after(const IsoMap& inner) const {
  return {inner.source, target, X.compose(inner.X), Y.compose(inner.X) * inner.Y};
}

IsoMap IsoMap::negated() const { return {source, target, X, -Y}; }

std::string IsoMap::to_string() const {
  return "(x, y) -> (" + X.to_string("x") + ", y*(" + Y.to_string("x") + "))";
}

CurveFn pullback(const CurveFn& F, const IsoMap& m) {
  RatFunc a0 = RatFunc::poly(F.n0).compose(m.X);
  RatFunc a1 = RatFunc::poly(F.n1).compose(m.X) * m.Y;
  RatFunc d = RatFunc::poly(F.den).compose(m.X);
  // (a0 + a1 y) / d with a0 = p0/q0, a1 = p1/q1, d = pd/qd
  Poly n0 = a0.num * a1.den * d.den;
  Poly n1 = a1.num * a0.den * d.den;
  Poly dd = a0.den * a1.den * d.num;
  return CurveFn(m.source, std::move(n0), std::move(n1), std::move(dd));
}

std::pair<CurveFn, CurveFn> translation_map(const Curve& E, const Point& Q) {
  CurveFn X = CurveFn::x(E), Y = CurveFn::y(E);
  if (Q.inf) return {X, Y};
  CurveFn xq = CurveFn::constant(E, Q.x), yq = CurveFn::constant(E, Q.y);
  CurveFn lam = (Y - yq) / (X - xq);
  CurveFn x3 = lam * lam - X - xq;
  CurveFn y3 = lam * (X - x3) - Y;
  return {x3, y3};
}

namespace {
CurveFn eval_poly(const Poly& p, const CurveFn& X) {
  CurveFn r = CurveFn::constant(X.curve(), Num(0));
  for (int k = p.degree(); k >= 0; --k) r = r * X + CurveFn::constant(X.curve(), p.coeff(k));
  return r;
}
}  // namespace

CurveFn substitute(const CurveFn& G, const CurveFn& X, const CurveFn& Y) {
  CurveFn num = eval_poly(G.n0, X) + eval_poly(G.n1, X) * Y;
  return num / eval_poly(G.den, X);
}

}  // namespace eb
