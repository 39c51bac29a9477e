#include "ebelyi/bignum.hpp"

#include <algorithm>
#include <vector>

namespace eb {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t maxp(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, kRnd);
}

BigFloat::BigFloat(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, kRnd);
}

BigFloat::BigFloat(const mpq_class& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const mpz_class& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), kRnd);
}

BigFloat::BigFloat(const std::string& decimal, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_str(v_, decimal.c_str(), 10, kRnd);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_prec(mpfr_prec_t p) const {
  BigFloat r(p);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), kRnd);
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), kRnd);
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), kRnd);
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), kRnd);
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

mpq_class BigFloat::to_mpq() const {
  mpq_class q;
  if (mpfr_number_p(v_) && !mpfr_zero_p(v_)) {
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    q = m;
    if (e >= 0) {
      mpz_class s = 1;
      mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
      q *= s;
    } else {
      mpz_class s = 1;
      mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
      q /= s;
    }
    q.canonicalize();
  }
  return q;
}

mpz_class BigFloat::round_to_mpz() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_abs(r.get(), a.get(), kRnd);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sqrt(r.get(), a.get(), kRnd);
  return r;
}

BigFloat exp(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_exp(r.get(), a.get(), kRnd);
  return r;
}

BigFloat log(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_log(r.get(), a.get(), kRnd);
  return r;
}

BigFloat sin(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sin(r.get(), a.get(), kRnd);
  return r;
}

BigFloat cos(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_cos(r.get(), a.get(), kRnd);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(maxp(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

BigFloat floor(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_floor(r.get(), a.get());
  return r;
}

BigFloat ldexp(const BigFloat& a, long e) {
  BigFloat r(a.prec());
  if (e >= 0)
    mpfr_mul_2ui(r.get(), a.get(), static_cast<unsigned long>(e), kRnd);
  else
    mpfr_div_2ui(r.get(), a.get(), static_cast<unsigned long>(-e), kRnd);
  return r;
}

BigFloat pow2(long e, mpfr_prec_t prec) { return ldexp(BigFloat(1L, prec), e); }

BigComplex BigComplex::i(mpfr_prec_t prec) { return {BigFloat(prec), BigFloat(1L, prec)}; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat n = norm(o);
  BigFloat r = (re * o.re + im * o.im) / n;
  BigFloat i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& o) {
  re *= o;
  im *= o;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigFloat& o) {
  re /= o;
  im /= o;
  return *this;
}

std::string BigComplex::to_string(int digits) const {
  std::string s = re.to_string(digits);
  std::string t = im.to_string(digits);
  if (!t.empty() && t[0] == '-')
    s += " - " + t.substr(1);
  else
    s += " + " + t;
  return s + "*I";
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
BigComplex operator/(BigComplex a, const BigFloat& b) { return a /= b; }

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.prec());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), kRnd);
  return r;
}

BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re);
  BigFloat s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), kRnd);
  return {m * c, m * s};
}

BigComplex sin(const BigComplex& z) {
  // sin(x+iy) = sin x cosh y + i cos x sinh y
  mpfr_prec_t p = z.prec();
  BigFloat s(p), c(p), sh(p), ch(p);
  mpfr_sin_cos(s.get(), c.get(), z.re.get(), kRnd);
  mpfr_sinh_cosh(sh.get(), ch.get(), z.im.get(), kRnd);
  return {s * ch, c * sh};
}

BigComplex cos(const BigComplex& z) {
  // cos(x+iy) = cos x cosh y - i sin x sinh y
  mpfr_prec_t p = z.prec();
  BigFloat s(p), c(p), sh(p), ch(p);
  mpfr_sin_cos(s.get(), c.get(), z.re.get(), kRnd);
  mpfr_sinh_cosh(sh.get(), ch.get(), z.im.get(), kRnd);
  return {c * ch, -(s * sh)};
}

BigComplex sqrt(const BigComplex& z) { return root(z, 2); }

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(1L, z.prec()) / pow(z, -n);
  BigComplex r(1L, z.prec());
  BigComplex b = z;
  while (n > 0) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

BigComplex root(const BigComplex& z, long n) {
  if (z.is_zero()) return z;
  mpfr_prec_t p = z.prec();
  BigFloat r = abs(z);
  BigFloat rr(p);
  mpfr_rootn_ui(rr.get(), r.get(), static_cast<unsigned long>(n), kRnd);
  BigFloat t = arg(z) / BigFloat(n, p);
  return polar(rr, t);
}

BigComplex polar(const BigFloat& r, const BigFloat& t) {
  mpfr_prec_t p = std::max(r.prec(), t.prec());
  BigFloat s(p), c(p);
  mpfr_sin_cos(s.get(), c.get(), t.get(), kRnd);
  return {r * c, r * s};
}

}  // namespace eb
