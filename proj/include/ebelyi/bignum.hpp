#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace eb {

// RAII wrapper over mpfr_t. Every value carries its own precision; binary
// operations produce the larger of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(double v, mpfr_prec_t prec);
  BigFloat(const mpq_class& v, mpfr_prec_t prec);
  BigFloat(const mpz_class& v, mpfr_prec_t prec);
  BigFloat(const std::string& decimal, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  // Same value rounded to a new precision.
  BigFloat with_prec(mpfr_prec_t p) const;

  static BigFloat pi(mpfr_prec_t prec);

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent() const;  // binary exponent, very negative for zero
  mpq_class to_mpq() const;
  mpz_class round_to_mpz() const;
  std::string to_string(int digits) const;

 private:
  mpfr_t v_;
};

BigFloat operator+(BigFloat a, const BigFloat& b);
BigFloat operator-(BigFloat a, const BigFloat& b);
BigFloat operator*(BigFloat a, const BigFloat& b);
BigFloat operator/(BigFloat a, const BigFloat& b);
bool operator<(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat floor(const BigFloat& a);
BigFloat ldexp(const BigFloat& a, long e);  // a * 2^e
// 2^e at the given precision.
BigFloat pow2(long e, mpfr_prec_t prec);

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(long r, mpfr_prec_t prec) : re(r, prec), im(prec) {}
  BigComplex(const mpq_class& r, const mpq_class& i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

  mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
  BigComplex with_prec(mpfr_prec_t p) const { return {re.with_prec(p), im.with_prec(p)}; }

  static BigComplex i(mpfr_prec_t prec);

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& o);
  BigComplex& operator/=(const BigFloat& o);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::string to_string(int digits) const;

  BigFloat re, im;
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigComplex& b);
BigComplex operator/(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigFloat& b);
BigComplex operator/(BigComplex a, const BigFloat& b);

BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);  // |z|^2
BigFloat arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
// Principal n-th root: |z|^(1/n) e^(i arg(z)/n).
BigComplex root(const BigComplex& z, long n);
// Polar constructor r e^(i t).
BigComplex polar(const BigFloat& r, const BigFloat& t);

}  // namespace eb
