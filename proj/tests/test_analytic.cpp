#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "ebelyi/curve.hpp"
#include "ebelyi/error.hpp"
#include "ebelyi/lattice.hpp"
#include "ebelyi/recognize.hpp"

using namespace eb;

namespace {

constexpr mpfr_prec_t kP = 128;

BigComplex c(double re, double im, mpfr_prec_t p = kP) { return {BigFloat(re, p), BigFloat(im, p)}; }
std::complex<double> d(const BigComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

BigComplex zeta6(mpfr_prec_t p) { return Num::from_k(Field::base(Base::Qz6), 0, 1).embed(p); }

bool small(const BigComplex& z, long bits) { return abs(z) < pow2(-bits, z.prec()); }

// Truncated Eisenstein sums in long double: 60 sum' w^-4, 140 sum' w^-6.
std::pair<std::complex<long double>, std::complex<long double>> lattice_sums(std::complex<long double> w1,
                                                                              std::complex<long double> w2, int R) {
  std::complex<long double> s4 = 0, s6 = 0;
  for (int m = -R; m <= R; ++m)
    for (int n = -R; n <= R; ++n) {
      if (!m && !n) continue;
      auto w = static_cast<long double>(m) * w1 + static_cast<long double>(n) * w2;
      auto w2i = 1.0L / (w * w);
      s4 += w2i * w2i;
      s6 += w2i * w2i * w2i;
    }
  return {60.0L * s4, 140.0L * s6};
}

}  // namespace

TEST(Eisenstein, SymmetricLattices) {
  auto sq = eisenstein(c(1, 0), c(0, 1), kP);
  EXPECT_TRUE(small(sq.g3, 100));
  EXPECT_FALSE(small(sq.g2, 10));
  auto hx = eisenstein(c(1, 0), zeta6(kP), kP);
  EXPECT_TRUE(small(hx.g2, 100));
  EXPECT_FALSE(small(hx.g3, 10));
}

TEST(Eisenstein, ConvergenceUnderPrecisionDoubling) {
  auto a = eisenstein(c(1, 0), c(0, 1), kP);
  auto b = eisenstein(c(1, 0, 2 * kP), c(0, 1, 2 * kP), 2 * kP);
  EXPECT_TRUE(small(a.g2.with_prec(2 * kP) - b.g2, kP / 2));
}

TEST(Eisenstein, MatchesDirectLatticeSum) {
  // deliberately unreduced basis
  std::complex<long double> w1(1.0L, 0.2L), w2(3.3L, 1.4L);
  auto [g2, g3] = lattice_sums(w1, w2, 400);
  auto inv = eisenstein(c(1.0, 0.2), c(3.3, 1.4), kP);
  auto e2 = d(inv.g2), e3 = d(inv.g3);
  EXPECT_LT(std::abs(std::complex<double>(g2) - e2) / std::abs(e2), 1e-4);
  EXPECT_LT(std::abs(std::complex<double>(g3) - e3) / std::abs(e3), 1e-4);
}

TEST(Eisenstein, Homogeneity) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  for (int it = 0; it < 5; ++it) {
    BigFloat t(u(rng), kP);
    auto a = eisenstein(c(1, 0.1), c(0.4, 1.3), kP);
    auto b = eisenstein(c(1, 0.1) * t, c(0.4, 1.3) * t, kP);
    BigFloat t2 = t * t;
    EXPECT_TRUE(small(b.g2 * t2 * t2 - a.g2, 90));
    EXPECT_TRUE(small(b.g3 * t2 * t2 * t2 - a.g3, 90));
  }
}

TEST(ScaleToModel, SquareAndHex) {
  auto L = scale_to_model(c(1, 0), c(0, 1), true, kP);
  EXPECT_TRUE(small(L.scaled.g2 - BigComplex(4L, kP), 100));
  EXPECT_TRUE(small(L.scaled.g3, 100));
  // half periods map to {0, 1, -1}
  std::vector<double> xs;
  for (auto z : {c(0.5, 0), c(0, 0.5), c(0.5, 0.5)}) {
    auto P = wp(z, L);
    EXPECT_TRUE(small(P.y, 90));
    EXPECT_TRUE(small(BigComplex(P.x.im, BigFloat(kP)), 90));
    xs.push_back(std::round(P.x.re.to_double()));
  }
  std::sort(xs.begin(), xs.end());
  EXPECT_EQ(xs, (std::vector<double>{-1, 0, 1}));

  auto H = scale_to_model(c(1, 0), zeta6(kP), false, kP);
  EXPECT_TRUE(small(H.scaled.g2, 100));
  EXPECT_TRUE(small(H.scaled.g3 + BigComplex(4L, kP), 100));
  for (auto z : {c(0.5, 0), zeta6(kP) / BigFloat(2L, kP), (c(1, 0) + zeta6(kP)) / BigFloat(2L, kP)}) {
    auto P = wp(z, H);
    EXPECT_TRUE(small(pow(P.x, 3) + BigComplex(1L, kP), 90));
  }
}

TEST(Wp, DifferentialEquationAndParity) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (bool square : {true, false}) {
    BigComplex w2 = square ? c(0, 1) : zeta6(kP);
    auto L = scale_to_model(c(1, 0), w2, square, kP);
    BigComplex A = square ? BigComplex(-1L, kP) : BigComplex(kP);
    BigComplex B = square ? BigComplex(kP) : BigComplex(1L, kP);
    for (int it = 0; it < 100; ++it) {
      BigComplex z = c(u(rng), u(rng));
      auto P = wp(z, L);
      BigComplex res = P.y * P.y - pow(P.x, 3) - A * P.x - B;
      BigComplex scale = BigComplex(1L, kP) + pow(P.x, 3);
      EXPECT_TRUE(small(res / scale, 110));
      auto Q = wp(-z, L);
      EXPECT_TRUE(small(P.x - Q.x, 90));
      EXPECT_TRUE(small(P.y + Q.y, 90));
    }
  }
}

TEST(Wp, RotationEquivariance) {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto L = scale_to_model(c(1, 0), c(0, 1), true, kP);
  BigComplex I = BigComplex::i(kP);
  auto H = scale_to_model(c(1, 0), zeta6(kP), false, kP);
  BigComplex z6 = zeta6(kP);
  for (int it = 0; it < 20; ++it) {
    BigComplex z = c(u(rng), u(rng));
    auto P = wp(z, L), Q = wp(I * z, L);
    EXPECT_TRUE(small(Q.x + P.x, 90));
    EXPECT_TRUE(small(Q.y - I * P.y, 90));
    auto R = wp(z, H), S = wp(z6 * z, H);
    EXPECT_TRUE(small(S.x + z6 * R.x, 90));
    EXPECT_TRUE(small(S.y + R.y, 90));
  }
}

TEST(Wp, ThreeDivisionPointIsRoot) {
  auto L = scale_to_model(c(1, 0), c(0, 1), true, kP);
  Poly f3 = primitive_division_polynomial(Curve::square(), 3);
  for (auto z : {BigComplex(mpq_class(1, 3), 0, kP), BigComplex(0, mpq_class(1, 3), kP),
                 BigComplex(mpq_class(1, 3), mpq_class(2, 3), kP)}) {
    auto P = wp(z, L);
    EXPECT_TRUE(small(f3.eval(P.x), 90));
  }
}

TEST(Wp, DivisionPointsWithVanishingSeriesTerms) {
  // at z = k/8 some cos(2 n w) terms are exactly zero
  auto L = scale_to_model(c(1, 0), c(0, 1), true, kP);
  Poly f8 = division_polynomial(Curve::square(), 8);
  for (int k = 1; k < 8; ++k) {
    if (k == 4) continue;
    auto P = wp(BigComplex(mpq_class(k, 8), 0, kP), L);
    EXPECT_TRUE(small(f8.eval(P.x) / (BigComplex(1L, kP) + pow(P.x, 31)), 100)) << k;
  }
  auto P = wp(BigComplex(mpq_class(1, 4), 0, kP), L);
  BigComplex r = BigComplex(1L, kP) + root(BigComplex(2L, kP), 2);
  EXPECT_TRUE(small(P.x - r, 110));
}

TEST(Wp, LatticePointRejected) {
  auto L = scale_to_model(c(1, 0), c(0, 1), true, kP);
  EXPECT_THROW(wp(c(2, -3), L), Error);
  try {
    wp(c(0, 0), L);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LatticePoint);
  }
}

TEST(Wp, BatchMatchesSerial) {
  auto L = scale_to_model(c(1, 0), zeta6(kP), false, kP);
  std::vector<BigComplex> zs;
  for (int k = 1; k < 40; ++k) zs.push_back(c(0.013 * k, 0.029 * k - 0.3));
  auto a = wp_batch(zs, L), b = wp_batch_serial(zs, L);
  ASSERT_EQ(a.size(), b.size());
  for (size_t k = 0; k < a.size(); ++k) {
    EXPECT_TRUE(mpfr_equal_p(a[k].x.re.get(), b[k].x.re.get()));
    EXPECT_TRUE(mpfr_equal_p(a[k].y.im.get(), b[k].y.im.get()));
  }
}

TEST(Recognize, Lll) {
  IntMatrix m{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  lll_reduce(m);
  // LLL bound: squared length of the first vector is at most 2^(n-1) lambda_1^2
  mpz_class n0 = m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[0][2] * m[0][2];
  EXPECT_LE(n0, 4);
  // determinant preserved up to sign: |det| = 3
  mpz_class det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  EXPECT_EQ(abs(det), 3);
}

TEST(Recognize, RationalApprox) {
  BigFloat v = BigFloat(mpq_class(355, 113), kP);
  auto q = rational_approx(v, pow2(-100, kP), mpz_class(1000));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, mpq_class(355, 113));
  EXPECT_FALSE(rational_approx(BigFloat::pi(kP), pow2(-100, kP), mpz_class(1000)).has_value());
}

TEST(Recognize, Sqrt2MinimalPolynomial) {
  BigComplex s(sqrt(BigFloat(2L, kP)), BigFloat(kP));
  auto mp = recognize_minpoly(s, Base::Qi, 4, kP);
  ASSERT_TRUE(mp.has_value());
  ASSERT_EQ(mp->size(), 3u);
  EXPECT_EQ((*mp)[0].a, -2);
  EXPECT_EQ((*mp)[1].a, 0);
  EXPECT_EQ((*mp)[2].a, 1);
  // over Q(zeta6): (1 + sqrt 2) zeta6 has a quadratic relation
  BigComplex t = (BigComplex(1L, kP) + s) * zeta6(kP);
  auto mt = recognize_minpoly(t, Base::Qz6, 4, kP);
  ASSERT_TRUE(mt.has_value());
  EXPECT_EQ(mt->size(), 3u);
}

TEST(Recognize, RoundTripSmallHeight) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> u(-50, 50), den(1, 30);
  for (int it = 0; it < 100; ++it) {
    Base b = it % 2 ? Base::Qi : Base::Qz6;
    mpq_class a(u(rng), den(rng)), bb(u(rng), den(rng));
    a.canonicalize();
    bb.canonicalize();
    Num x = Num::from_k(Field::base(b), a, bb);
    auto e = recognize_k(x.embed(kP), b, kP);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(e->a, a);
    EXPECT_EQ(e->b, bb);
  }
}

TEST(Recognize, ElementOfExtension) {
  BigComplex approx = root(c(1, 2), 3);
  FieldPtr L = Field::extension(Base::Qi, {{-1, -2}, {0, 0}, {0, 0}, {1, 0}}, approx);
  Num x = L->element({mpq_class(1, 3), 2, -1, 0, mpq_class(5, 7), 1});
  auto r = recognize_in_field(x.embed(256), L, Base::Qi, 256);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(*r == x);
}

TEST(Roots, Aberth) {
  auto r = poly_roots(Poly::x().pow(3) + Poly(1), kP);
  ASSERT_EQ(r.size(), 3u);
  for (const auto& z : r) EXPECT_TRUE(small(pow(z, 3) + BigComplex(1L, kP), 100));
  Poly p = Poly::x().pow(6) - Poly(3) * Poly::x() + Poly(Num::from_k(Field::base(Base::Qi), 1, 2));
  auto s = poly_roots(p, kP);
  ASSERT_EQ(s.size(), 6u);
  for (const auto& z : s) EXPECT_TRUE(small(p.eval(z), 100));
}
