#include "ebelyi/recognize.hpp"

#include <cmath>

#include "ebelyi/error.hpp"

namespace eb {

namespace {

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  // nearest integer to a/b, b > 0
  mpz_class n = 2 * a + b, d = 2 * b, q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void lll_reduce(IntMatrix& b) {
  const int n = static_cast<int>(b.size());
  if (n < 2) return;
  // 1-based bookkeeping as in the integral algorithm: d[0] = 1, lam[k][j] for j < k.
  std::vector<mpz_class> d(n + 1);
  std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1));
  d[0] = 1;
  d[1] = dot(b[0], b[0]);
  if (d[1] == 0) throw Error(ErrorKind::RankDeficient, "LLL input has a zero row");
  int k = 2, kmax = 1;

  auto red = [&](int kk, int l) {
    if (2 * abs(lam[kk][l]) > d[l]) {
      mpz_class q = round_div(lam[kk][l], d[l]);
      for (size_t c = 0; c < b[kk - 1].size(); ++c) b[kk - 1][c] -= q * b[l - 1][c];
      lam[kk][l] -= q * d[l];
      for (int i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
    }
  };
  auto swap = [&](int kk) {
    std::swap(b[kk - 1], b[kk - 2]);
    for (int j = 1; j <= kk - 2; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    mpz_class l = lam[kk][kk - 1];
    mpz_class B = (d[kk - 2] * d[kk] + l * l) / d[kk - 1];
    for (int i = kk + 1; i <= kmax; ++i) {
      mpz_class t = lam[i][kk];
      lam[i][kk] = (d[kk] * lam[i][kk - 1] - l * t) / d[kk - 1];
      lam[i][kk - 1] = (B * t + l * lam[i][kk]) / d[kk];
    }
    d[kk - 1] = B;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 1; j <= k; ++j) {
        mpz_class u = dot(b[k - 1], b[j - 1]);
        for (int i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else
          d[k] = u;
      }
      if (d[k] == 0) throw Error(ErrorKind::RankDeficient, "LLL input rows are dependent");
    }
    red(k, k - 1);
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      swap(k);
      k = std::max(2, k - 1);
      continue;
    }
    for (int l = k - 2; l >= 1; --l) red(k, l);
    ++k;
  }
}

std::optional<mpq_class> rational_approx(const BigFloat& v, const BigFloat& tol, const mpz_class& maxden) {
  if (abs(v) <= tol) return mpq_class(0);
  mpq_class x = v.to_mpq();
  mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (int it = 0; it < 100000; ++it) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpz_class h = a * h1 + h2, k = a * k1 + k2;
    if (k > maxden) return std::nullopt;
    mpq_class c(h, k);
    c.canonicalize();
    if (abs(v - BigFloat(c, v.prec())) <= tol) return c;
    mpq_class frac = x - a;
    if (frac == 0) return c;
    x = 1 / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return std::nullopt;
}

std::optional<KElt> recognize_k(const BigComplex& z, Base b, mpfr_prec_t prec) {
  BigComplex zz = z.with_prec(prec);
  BigFloat scale = abs(zz);
  if (scale < BigFloat(1L, prec)) scale = BigFloat(1L, prec);
  BigFloat tol = ldexp(scale, -static_cast<long>(3 * prec / 4));
  mpz_class maxden = 1;
  mpz_mul_2exp(maxden.get_mpz_t(), maxden.get_mpz_t(), prec / 4);
  BigFloat re = zz.re, im = zz.im;
  if (b == Base::Qz6) {
    // z = a + b zeta6 = (a + b/2) + i b sqrt3/2
    im = im * BigFloat(2L, prec) / sqrt(BigFloat(3L, prec));
    re = re - im / BigFloat(2L, prec);
  }
  auto a = rational_approx(re, tol, maxden);
  if (!a) return std::nullopt;
  auto c = rational_approx(im, tol, maxden);
  if (!c) return std::nullopt;
  KElt e{*a, *c};
  BigComplex back = Num::from_k(Field::base(b), e.a, e.b).embed(prec);
  if (!(abs(back - zz) < ldexp(tol, 3))) return std::nullopt;
  return e;
}

std::optional<std::vector<mpz_class>> integer_relation(const std::vector<BigComplex>& v, mpfr_prec_t prec) {
  const size_t n = v.size();
  if (n < 2) return std::nullopt;
  BigFloat maxabs(prec);
  for (const auto& x : v) {
    BigFloat a = abs(x);
    if (maxabs < a) maxabs = a;
  }
  if (maxabs.is_zero()) return std::nullopt;
  long cbits = static_cast<long>(prec) - 40;
  if (cbits < 16) cbits = 16;
  IntMatrix rows(n, std::vector<mpz_class>(n + 2));
  std::vector<BigComplex> w;
  for (size_t i = 0; i < n; ++i) {
    w.push_back(v[i].with_prec(prec) / maxabs);
    rows[i][i] = 1;
    rows[i][n] = ldexp(w[i].re, cbits).round_to_mpz();
    rows[i][n + 1] = ldexp(w[i].im, cbits).round_to_mpz();
  }
  lll_reduce(rows);
  std::vector<mpz_class> c(rows[0].begin(), rows[0].begin() + static_cast<long>(n));
  mpz_class h = 1;
  bool nonzero = false;
  for (const auto& x : c) {
    if (x != 0) nonzero = true;
    if (abs(x) > h) h = abs(x);
  }
  if (!nonzero) return std::nullopt;
  BigComplex s(prec);
  for (size_t i = 0; i < n; ++i) s += w[i] * BigFloat(c[i], prec);
  // A genuine relation leaves a residual far below its coefficient size.
  if (!(ldexp(abs(s), cbits) < ldexp(BigFloat(h, prec), -8))) return std::nullopt;
  return c;
}

std::optional<std::vector<KElt>> recognize_minpoly(const BigComplex& z, Base b, int max_degree, mpfr_prec_t prec) {
  if (auto e = recognize_k(z, b, prec)) return std::vector<KElt>{{-e->a, -e->b}, {1, 0}};
  FieldPtr K = Field::base(b);
  BigComplex jv = K->j_value(prec);
  for (int d = 2; d <= max_degree; ++d) {
    std::vector<BigComplex> vals;
    BigComplex zk(1L, prec);
    for (int k = 0; k <= d; ++k) {
      vals.push_back(zk);
      vals.push_back(zk * jv);
      zk *= z.with_prec(prec);
    }
    auto rel = integer_relation(vals, prec);
    if (!rel) continue;
    const auto& c = *rel;
    Num lead = Num::from_k(K, c[2 * d], c[2 * d + 1]);
    if (lead.is_zero()) continue;
    std::vector<KElt> out;
    for (int k = 0; k <= d; ++k) {
      Num ck = Num::from_k(K, c[2 * k], c[2 * k + 1]) / lead;
      out.push_back(ck.in_base() ? ck.k_value() : KElt{0, 0});
    }
    return out;
  }
  return std::nullopt;
}

std::optional<Num> recognize_in_field(const BigComplex& z, const FieldPtr& f, Base b, mpfr_prec_t prec) {
  if (!f || f->is_base()) {
    auto e = recognize_k(z, b, prec);
    if (!e) return std::nullopt;
    return Num::from_k(Field::base(b), e->a, e->b);
  }
  const int m = f->degree();
  std::vector<BigComplex> vals{z.with_prec(prec)};
  BigComplex tv = f->t_value(prec), jv = f->j_value(prec);
  BigComplex tk(1L, prec);
  for (int k = 0; k < m; ++k) {
    vals.push_back(tk);
    vals.push_back(tk * jv);
    tk *= tv;
  }
  auto rel = integer_relation(vals, prec);
  if (!rel || (*rel)[0] == 0) return std::nullopt;
  std::vector<mpq_class> coords;
  for (size_t i = 1; i < rel->size(); ++i) {
    mpq_class q(-(*rel)[i], (*rel)[0]);
    q.canonicalize();
    coords.push_back(q);
  }
  return f->element(std::move(coords));
}

std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs, mpfr_prec_t prec) {
  std::vector<BigComplex> a;
  mpfr_prec_t wp = prec + 64;
  for (const auto& c : coeffs) a.push_back(c.with_prec(wp));
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) return {};
  if (n == 1) return {(-a[0] / a[1]).with_prec(prec)};

  double lead = abs(a[n]).to_double(), R = 0;
  for (int k = 1; k <= n; ++k) {
    double r = std::pow(abs(a[n - k]).to_double() / lead, 1.0 / k);
    if (std::isfinite(r)) R = std::max(R, r);
  }
  R = 2 * R + 1e-3;
  std::vector<BigComplex> z;
  for (int k = 0; k < n; ++k) {
    double t = 2 * M_PI * k / n + 0.4;
    z.push_back(polar(BigFloat(R, wp), BigFloat(t, wp)));
  }
  BigFloat one(1L, wp);
  BigFloat eps = pow2(-static_cast<long>(prec) - 16, wp);
  BigFloat noise = pow2(-static_cast<long>(wp) + 8, wp);
  for (int it = 0; it < 2000; ++it) {
    bool done = true;
    for (int k = 0; k < n; ++k) {
      BigComplex p = a[n], dp(wp);
      BigFloat az = abs(z[k]), bound = abs(a[n]);
      for (int i = n - 1; i >= 0; --i) {
        dp = dp * z[k] + p;
        p = p * z[k] + a[i];
        bound = bound * az + abs(a[i]);
      }
      // at the rounding level of p the root cannot improve (clustered roots)
      if (p.is_zero() || abs(p) < bound * noise) continue;
      if (dp.is_zero()) {
        z[k] += BigComplex(BigFloat(1e-20, wp), BigFloat(1e-20, wp));
        done = false;
        continue;
      }
      BigComplex w = p / dp;
      BigComplex s(wp);
      for (int j = 0; j < n; ++j)
        if (j != k) s += BigComplex(1L, wp) / (z[k] - z[j]);
      BigComplex step = w / (BigComplex(1L, wp) - w * s);
      z[k] -= step;
      BigFloat sc = abs(z[k]);
      if (sc < one) sc = one;
      if (!(abs(step) < eps * sc)) done = false;
    }
    if (done) {
      std::vector<BigComplex> out;
      for (auto& r : z) out.push_back(r.with_prec(prec));
      return out;
    }
  }
  throw Error(ErrorKind::PrecisionExhausted, "root finding did not converge");
}

std::vector<BigComplex> poly_roots(const Poly& p, mpfr_prec_t prec) {
  std::vector<BigComplex> c;
  for (const auto& x : p.coeffs()) c.push_back(x.embed(prec + 64));
  return poly_roots(c, prec);
}

}  // namespace eb
