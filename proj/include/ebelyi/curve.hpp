#pragma once

#include <string>

#include "ebelyi/poly.hpp"

namespace eb {

// y^2 = x^3 + A x + B over a tower level with base field K = Q(j).
struct Curve {
  Num A, B;
  Base base = Base::Qi;

  static Curve square() { return {Num(-1), Num(0), Base::Qi}; }  // y^2 = x^3 - x
  static Curve hex() { return {Num(0), Num(1), Base::Qz6}; }     // y^2 = x^3 + 1

  Poly rhs() const;  // x^3 + A x + B
  Num discriminant() const;  // 4A^3 + 27B^2 (nonzero for a curve)
  std::string to_string() const;
  bool operator==(const Curve& o) const { return A == o.A && B == o.B; }
};

// A point on y^2 = x^3 + Ax + B. With a twist parameter D the stored `y`
// is a coordinate c with actual y = c * sqrt(D); D = 1 is the plain model.
// This keeps points with y outside the current field inside it.
struct Point {
  bool inf = true;
  Num x, y;
  static Point infinity() { return {}; }
  static Point affine(Num x, Num y) { return {false, std::move(x), std::move(y)}; }
  bool operator==(const Point& o) const { return inf == o.inf && (inf || (x == o.x && y == o.y)); }
};

bool on_curve(const Curve& E, const Point& P, const Num& D = Num(1));
Point point_neg(const Point& P);
Point point_add(const Curve& E, const Point& P, const Point& Q, const Num& D = Num(1));
Point scalar_mul(const Curve& E, const Point& P, long n, const Num& D = Num(1));
// [j]P: (x, y) -> (-x, i y) when B = 0 (j = i), (-zeta6 x, -y) when A = 0
// (j = zeta6). Throws WrongCurve otherwise.
Point j_action(const Curve& E, const Point& P);
// [a + b j]P via the group law.
Point cyclotomic_mul(const Curve& E, const Point& P, long a, long b, const Num& D = Num(1));

// Monic polynomial whose roots are the x-coordinates of nonzero N-torsion points.
Poly division_polynomial(const Curve& E, int N);
// Monic polynomial for x-coordinates of points of exact order N.
Poly primitive_division_polynomial(const Curve& E, int N);
// x-coordinate of [N]P as a rational function of x(P).
RatFunc multiplication_x_map(const Curve& E, int N);

// (n0(x) + n1(x) y) / den(x) on a curve, with den monic and
// gcd(n0, n1, den) = 1.
class CurveFn {
 public:
  CurveFn() = default;
  explicit CurveFn(const Curve& E) : den(1), E_(E) {}
  CurveFn(const Curve& E, Poly n0, Poly n1, Poly den);
  static CurveFn constant(const Curve& E, const Num& c);
  static CurveFn x(const Curve& E);
  static CurveFn y(const Curve& E);
  static CurveFn from_ratfunc(const Curve& E, const RatFunc& r);

  const Curve& curve() const { return E_; }
  bool is_zero() const { return n0.is_zero() && n1.is_zero(); }
  bool x_only() const { return n1.is_zero(); }
  CurveFn operator-() const;
  bool operator==(const CurveFn& o) const { return n0 == o.n0 && n1 == o.n1 && den == o.den; }

  Num eval(const Point& P) const;  // plain model (D = 1)
  BigComplex eval(const BigComplex& x, const BigComplex& y) const;
  std::string to_string() const;

  Poly n0, n1, den;

 private:
  void normalize();
  Curve E_;
  friend CurveFn operator+(const CurveFn&, const CurveFn&);
  friend CurveFn operator*(const CurveFn&, const CurveFn&);
  friend CurveFn operator/(const CurveFn&, const CurveFn&);
};

CurveFn operator+(const CurveFn& a, const CurveFn& b);
CurveFn operator-(const CurveFn& a, const CurveFn& b);
CurveFn operator*(const CurveFn& a, const CurveFn& b);
CurveFn operator/(const CurveFn& a, const CurveFn& b);

// A map between curves of the shape (x, y) -> (X(x), y * Y(x)); every
// isogeny and [N] has this shape.
struct IsoMap {
  Curve source, target;
  RatFunc X, Y;
  // Composite this o inner (inner acts first).
  IsoMap after(const IsoMap& inner) const;
  IsoMap negated() const;  // [-1] o this
  std::string to_string() const;
};

// F o m for a function F on m.target; result lives on m.source.
CurveFn pullback(const CurveFn& F, const IsoMap& m);
// Image of (x, y) under the symbolic translation P -> P + Q, as functions on E.
std::pair<CurveFn, CurveFn> translation_map(const Curve& E, const Point& Q);
// G(X, Y) for a function G on the target curve and a pair of functions
// (X, Y) on E describing a map E -> target.
CurveFn substitute(const CurveFn& G, const CurveFn& X, const CurveFn& Y);

}  // namespace eb
