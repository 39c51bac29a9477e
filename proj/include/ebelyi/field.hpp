#pragma once

#include <gmpxx.h>

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ebelyi/bignum.hpp"

namespace eb {

// Cyclotomic base field K = Q(j): j = i (j^2 = -1) or j = zeta6 (j^2 = j - 1).
enum class Base { Qi, Qz6 };

class Num;
class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element a + b*j of K, used for minimal-polynomial coefficients.
struct KElt {
  mpq_class a, b;
};

// K or a relative extension K(t) = K[t]/(g(t)). Immutable once built.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr base(Base b);
  // g is monic over K, given as coefficients g_0..g_m (g_m = 1). `approx` is
  // a numerical root selecting the complex embedding of t.
  static FieldPtr extension(Base b, std::vector<KElt> g, const BigComplex& approx);

  Base base_kind() const { return base_; }
  int degree() const { return m_; }  // [L : K]
  bool is_base() const { return m_ == 1; }
  const std::vector<KElt>& minpoly() const { return g_; }

  // Numerical j and t at the given precision (t refined by Newton's method).
  BigComplex j_value(mpfr_prec_t prec) const;
  BigComplex t_value(mpfr_prec_t prec) const;

  std::string name() const;
  std::string minpoly_string() const;  // "t^2 + ..." over K, empty for K itself

  Num j() const;
  Num t() const;  // generator of a proper extension
  // Element with coordinates on the basis t^k j^e.
  Num element(std::vector<mpq_class> coords) const;

 private:
  Field(Base b, std::vector<KElt> g, BigComplex approx);
  Base base_;
  int m_;
  std::vector<KElt> g_;
  BigComplex approx_;
};

std::string base_name(Base b);
std::string k_to_string(Base b, const KElt& e);

// Element of a tower level. A rational element has no field attached and
// adapts to whatever field it meets. Otherwise the element is stored as
// coordinates c[2k + e] on the basis t^k j^e, 0 <= k < m, e in {0, 1}.
class Num {
 public:
  Num() : c_(1) {}
  Num(long v) : c_(1, mpq_class(v)) {}  // NOLINT: implicit on purpose
  Num(int v) : c_(1, mpq_class(v)) {}   // NOLINT
  Num(const mpq_class& v) : c_(1, v) {}  // NOLINT
  Num(const mpz_class& v) : c_(1, mpq_class(v)) {}  // NOLINT
  static Num rational(const mpq_class& v) { return Num(v); }
  static Num from_k(FieldPtr f, const mpq_class& a, const mpq_class& b);
  static Num from_coords(FieldPtr f, std::vector<mpq_class> coords);

  const FieldPtr& field() const { return f_; }
  const std::vector<mpq_class>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // lies in Q
  bool in_base() const;      // lies in K
  mpq_class rational_value() const;  // requires is_rational()
  KElt k_value() const;              // requires in_base()

  // Same element carried by field `f` (which must contain it).
  Num promoted(const FieldPtr& f) const;

  Num operator-() const;
  Num& operator+=(const Num& o);
  Num& operator-=(const Num& o);
  Num& operator*=(const Num& o);
  Num& operator/=(const Num& o);
  Num inv() const;
  Num pow(long n) const;

  bool operator==(const Num& o) const;
  bool operator!=(const Num& o) const { return !(*this == o); }

  // Complex conjugation; defined when the element lies in K.
  Num conj_k() const;

  BigComplex embed(mpfr_prec_t prec) const;
  std::string to_string() const;
  // Lexicographic key for deterministic ordering.
  bool less(const Num& o) const;

 private:
  FieldPtr f_;
  std::vector<mpq_class> c_;
};

Num operator+(Num a, const Num& b);
Num operator-(Num a, const Num& b);
Num operator*(Num a, const Num& b);
Num operator/(Num a, const Num& b);

// Field of a set of numbers: the unique non-rational field among them (or null).
FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);

}  // namespace eb
