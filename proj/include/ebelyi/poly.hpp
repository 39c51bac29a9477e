#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ebelyi/field.hpp"

namespace eb {

// Dense univariate polynomial over a tower level, ascending coefficients,
// no trailing zeros (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  Poly(const Num& c);  // NOLINT: constant polynomial
  Poly(int c) : Poly(Num(c)) {}  // NOLINT
  explicit Poly(std::vector<Num> coeffs);
  static Poly x();
  static Poly monomial(const Num& c, int k);
  // Monic polynomial with the given roots.
  static Poly from_roots(const std::vector<Num>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Num>& coeffs() const { return c_; }
  Num coeff(int k) const;
  Num lc() const;
  void set_coeff(int k, const Num& v);

  FieldPtr field() const;  // join of coefficient fields

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Num& s);
  Poly& operator/=(const Num& s);
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Num eval(const Num& v) const;
  BigComplex eval(const BigComplex& v) const;  // embeds coefficients
  Poly derivative() const;
  Poly compose(const Poly& inner) const;  // this(inner(x))
  Poly monic() const;
  Poly pow(int n) const;
  // p(s x) for a scalar s.
  Poly scale_arg(const Num& s) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Num> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator*(Poly a, const Num& b);
Poly operator*(const Num& a, Poly b);

// Division with remainder; throws DivisionByZero on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Exact division; throws InternalInconsistency if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
// Squarefree decomposition by Yun's algorithm: monic factors with
// multiplicities, product equals monic(a).
std::vector<std::pair<Poly, int>> squarefree(const Poly& a);
Num resultant(const Poly& a, const Poly& b);
// Power sums s_0..s_k of the roots of a (s_0 = degree) by Newton's identities.
std::vector<Num> power_sums(const Poly& a, int k);

// Rational function N/D kept in lowest terms with monic denominator.
struct RatFunc {
  Poly num, den;
  RatFunc() : num(), den(1) {}
  RatFunc(Poly n, Poly d);  // normalizes
  static RatFunc poly(Poly p) { return RatFunc(std::move(p), Poly(1)); }
  RatFunc operator-() const { return RatFunc(-num, den); }
  Num eval(const Num& v) const;
  BigComplex eval(const BigComplex& v) const;
  RatFunc derivative() const;
  // this(inner(x)).
  RatFunc compose(const RatFunc& inner) const;
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
  std::string to_string(const std::string& var = "x") const;
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator/(const RatFunc& a, const RatFunc& b);

}  // namespace eb
