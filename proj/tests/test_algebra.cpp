#include <gtest/gtest.h>

#include <random>

#include "ebelyi/curve.hpp"
#include "ebelyi/error.hpp"

using namespace eb;

namespace {

FieldPtr Qi() { return Field::base(Base::Qi); }
FieldPtr Qz() { return Field::base(Base::Qz6); }

Num i_() { return Num::from_k(Qi(), 0, 1); }
Num z6() { return Num::from_k(Qz(), 0, 1); }

Poly X() { return Poly::x(); }
Poly lin(const Num& r) { return X() - Poly(r); }

// Q(i)(t), t^3 = 1 + 2i: a proper cubic extension.
FieldPtr cubic_ext() {
  BigComplex approx = root(BigComplex(BigFloat(1L, 128), BigFloat(2L, 128)), 3);
  return Field::extension(Base::Qi, {{-1, -2}, {0, 0}, {0, 0}, {1, 0}}, approx);
}

Num random_elt(std::mt19937& rng, const FieldPtr& f) {
  std::uniform_int_distribution<int> u(-5, 5);
  std::vector<mpq_class> c;
  for (int k = 0; k < 2 * f->degree(); ++k) c.emplace_back(u(rng), 1 + (u(rng) + 5) % 3);
  for (auto& q : c) q.canonicalize();
  return f->element(c);
}

bool close(const BigComplex& a, const BigComplex& b, long bits) {
  return abs(a - b) < pow2(-bits, a.prec());
}

}  // namespace

TEST(Field, CyclotomicIdentities) {
  EXPECT_TRUE(z6() * z6() == z6() - Num(1));
  EXPECT_TRUE((Num(1) + i_()) * (Num(1) - i_()) == Num(2));
  EXPECT_TRUE(z6().pow(6) == Num(1));
  EXPECT_FALSE(z6().pow(3) == Num(1));
  EXPECT_TRUE(i_().pow(4) == Num(1));
  EXPECT_TRUE(i_().inv() == -i_());
  EXPECT_TRUE((Num(2) + z6()) * (Num(2) + z6()).inv() == Num(1));
  EXPECT_TRUE(Num::from_k(Qi(), 3, 0).is_rational());
  EXPECT_THROW(Num(0).inv(), Error);
}

TEST(Field, EmbeddingOfZeta6) {
  mpfr_prec_t p = 200;
  BigFloat third = BigFloat::pi(p) / BigFloat(3L, p);
  BigComplex expect(cos(third), sin(third));
  EXPECT_TRUE(close(z6().embed(p), expect, 180));
  EXPECT_EQ(z6().embed(p).im.to_string(50), "0.86602540378443864676372317075293618347140262690519");
}

TEST(Field, QuadraticExtension) {
  BigComplex s2(sqrt(BigFloat(2L, 128)), BigFloat(128));
  FieldPtr L = Field::extension(Base::Qi, {{-2, 0}, {0, 0}, {1, 0}}, s2);
  Num t = L->t();
  EXPECT_TRUE(t * t == Num(2));
  Num a = Num(1) + t;
  EXPECT_TRUE(a * a.inv() == Num(1));
  EXPECT_TRUE(close(t.embed(128), s2, 120));
  EXPECT_FALSE(t.in_base());
  EXPECT_TRUE((t * t).in_base());
}

TEST(Field, ExtensionArithmeticProperties) {
  FieldPtr L = cubic_ext();
  std::mt19937 rng(3);
  Num t = L->t();
  EXPECT_TRUE(t.pow(3) == Num(1) + Num(2) * i_());
  for (int it = 0; it < 50; ++it) {
    Num a = random_elt(rng, L), b = random_elt(rng, L), c = random_elt(rng, L);
    EXPECT_TRUE(a * (b + c) == a * b + a * c);
    EXPECT_TRUE((a * b) * c == a * (b * c));
    if (!a.is_zero()) {
      EXPECT_TRUE(a * a.inv() == Num(1));
    }
    mpfr_prec_t p = 160;
    EXPECT_TRUE(close((a * b).embed(p), a.embed(p) * b.embed(p), 120));
    EXPECT_TRUE(close((a + c).embed(p), a.embed(p) + c.embed(p), 120));
  }
}

TEST(Poly, GcdAndDivision) {
  Poly f = X().pow(3) - X();
  Poly g = X() * X() - Poly(1);
  EXPECT_EQ(gcd(f, g), g);
  auto [q, r] = divmod(f, g);
  EXPECT_EQ(q, X());
  EXPECT_TRUE(r.is_zero());
  EXPECT_TRUE(divides(g, f));
  EXPECT_FALSE(divides(X() + Poly(2), f));
  EXPECT_THROW(exact_div(f, X() + Poly(2)), Error);
  EXPECT_THROW(divmod(f, Poly()), Error);
}

TEST(Poly, SquarefreeDecomposition) {
  Poly p = lin(Num(8)) * lin(Num(-24)).pow(3);
  auto sf = squarefree(p);
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].first, lin(Num(8)));
  EXPECT_EQ(sf[0].second, 1);
  EXPECT_EQ(sf[1].first, lin(Num(-24)));
  EXPECT_EQ(sf[1].second, 3);

  // over an extension, with a scalar factor
  FieldPtr L = cubic_ext();
  Poly q = Poly(Num(5)) * lin(L->t()).pow(2) * lin(i_()) * lin(Num(1)).pow(2);
  Poly back(1);
  for (auto& [fac, m] : squarefree(q)) back *= fac.pow(m);
  EXPECT_EQ(back, q.monic());
}

TEST(Poly, Resultant) {
  Poly a = X() * X() + Poly(1);
  EXPECT_TRUE(resultant(a, lin(i_())).is_zero());
  EXPECT_TRUE(resultant(a, lin(Num(1))) == Num(2));
}

TEST(Poly, ComposeAndPowerSums) {
  Poly p = X() * X() + Poly(1);
  EXPECT_EQ(p.compose(X() + Poly(1)), X() * X() + Poly(2) * X() + Poly(2));
  auto s = power_sums(X().pow(3) + Poly(1), 3);  // roots: cube roots of -1
  EXPECT_TRUE(s[0] == Num(3));
  EXPECT_TRUE(s[1].is_zero());
  EXPECT_TRUE(s[2].is_zero());
  EXPECT_TRUE(s[3] == Num(-3));
}

TEST(RatFunc, NormalForm) {
  RatFunc r(X() * X() - Poly(1), Poly(2) * (X() - Poly(1)));
  EXPECT_EQ(r.num, (X() + Poly(1)) * Num(mpq_class(1, 2)));
  EXPECT_EQ(r.den, Poly(1));
  RatFunc inv(Poly(1), X());
  EXPECT_EQ(inv.compose(inv), RatFunc::poly(X()));
}

TEST(Curve, GroupLawByHand) {
  Curve sq = Curve::square(), hx = Curve::hex();
  Point t = Point::affine(Num(-1), Num(0));
  EXPECT_TRUE(scalar_mul(hx, t, 2).inf);
  Point o = Point::affine(Num(0), Num(0)), one = Point::affine(Num(1), Num(0));
  EXPECT_TRUE(scalar_mul(sq, o, 2).inf);
  EXPECT_EQ(point_add(sq, o, one), Point::affine(Num(-1), Num(0)));
  Point p = Point::affine(Num(2), Num(3));  // 9 = 8 + 1
  ASSERT_TRUE(on_curve(hx, p));
  EXPECT_TRUE(point_add(hx, p, point_neg(p)).inf);
  EXPECT_TRUE(scalar_mul(hx, p, 6).inf);  // (2,3) has order 6 on y^2 = x^3 + 1
}

TEST(Curve, JAction) {
  Curve sq = Curve::square(), hx = Curve::hex();
  Point o = Point::affine(Num(0), Num(0));
  EXPECT_EQ(j_action(sq, o), o);
  Point t = Point::affine(Num(-1), Num(0));
  Point jt = j_action(hx, t);
  Num zeta3 = z6() - Num(1);
  EXPECT_EQ(jt, Point::affine(-zeta3.inv(), Num(0)));
  EXPECT_TRUE(on_curve(hx, jt));
  Point p = Point::affine(Num(2), Num(3));
  Point q = p;
  for (int k = 1; k <= 6; ++k) {
    q = j_action(hx, q);
    EXPECT_TRUE(on_curve(hx, q));
    EXPECT_EQ(q == p, k == 6);
  }
  Point s = Point::affine(Num(2), Num(1));  // on the twist by D = 6
  Num D(6);
  ASSERT_TRUE(on_curve(sq, s, D));
  Point r = s;
  for (int k = 1; k <= 4; ++k) {
    r = j_action(sq, r);
    EXPECT_TRUE(on_curve(sq, r, D));
    EXPECT_EQ(r == s, k == 4);
  }
  EXPECT_THROW(j_action(Curve{Num(1), Num(1), Base::Qi}, p), Error);
}

TEST(Curve, GroupLawFuzzOnTwist) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> u(-3, 3);
  for (Curve E : {Curve::square(), Curve::hex()}) {
    // (x0, 1) on the twist by D = f(x0)
    Num x0(3);
    Num D = E.rhs().eval(x0);
    Point P = Point::affine(x0, Num(1));
    ASSERT_TRUE(on_curve(E, P, D));
    auto rnd = [&] { return cyclotomic_mul(E, P, u(rng), u(rng), D); };
    for (int it = 0; it < 6; ++it) {
      Point a = rnd(), b = rnd(), c = rnd();
      EXPECT_TRUE(on_curve(E, a, D));
      EXPECT_EQ(point_add(E, a, b, D), point_add(E, b, a, D));
      EXPECT_EQ(point_add(E, point_add(E, a, b, D), c, D), point_add(E, a, point_add(E, b, c, D), D));
    }
    // Z[j]-linearity of cyclotomic_mul
    for (int it = 0; it < 4; ++it) {
      long a1 = u(rng), b1 = u(rng), a2 = u(rng), b2 = u(rng);
      Point lhs = cyclotomic_mul(E, P, a1 + a2, b1 + b2, D);
      EXPECT_EQ(lhs, point_add(E, cyclotomic_mul(E, P, a1, b1, D), cyclotomic_mul(E, P, a2, b2, D), D));
      // (a1 + b1 j)(a2 + b2 j) with j^2 = -1 or j^2 = j - 1
      long pa, pb;
      if (E.base == Base::Qi) {
        pa = a1 * a2 - b1 * b2;
        pb = a1 * b2 + a2 * b1;
      } else {
        pa = a1 * a2 - b1 * b2;
        pb = a1 * b2 + a2 * b1 + b1 * b2;
      }
      Point inner = cyclotomic_mul(E, P, a2, b2, D);
      EXPECT_EQ(cyclotomic_mul(E, P, pa, pb, D), cyclotomic_mul(E, inner, a1, b1, D));
    }
    EXPECT_EQ(cyclotomic_mul(E, P, 1, 0, D), P);
    EXPECT_EQ(cyclotomic_mul(E, P, 0, 1, D), j_action(E, P));
  }
}

TEST(DivisionPolynomial, SmallCases) {
  Curve sq = Curve::square(), hx = Curve::hex();
  EXPECT_EQ(division_polynomial(sq, 2), X().pow(3) - X());
  EXPECT_EQ(division_polynomial(hx, 2), X().pow(3) + Poly(1));
  Poly psi3 = Poly(3) * X().pow(4) - Poly(6) * X().pow(2) - Poly(1);
  EXPECT_EQ(division_polynomial(sq, 3), psi3.monic());
  EXPECT_EQ(division_polynomial(sq, 1), Poly(1));
  EXPECT_EQ(primitive_division_polynomial(hx, 2), X().pow(3) + Poly(1));
}

TEST(DivisionPolynomial, DegreesAndDisjointness) {
  for (Curve E : {Curve::square(), Curve::hex(), Curve{Num(2), Num(-1), Base::Qi}}) {
    std::vector<Poly> prim(11);
    for (int N = 2; N <= 10; ++N) {
      Poly f = division_polynomial(E, N);
      int expect = N % 2 ? (N * N - 1) / 2 : (N * N - 4) / 2 + 3;
      EXPECT_EQ(f.degree(), expect) << "N=" << N;
      EXPECT_TRUE(f.lc().is_one());
      prim[N] = primitive_division_polynomial(E, N);
      EXPECT_TRUE(divides(prim[N], f));
      for (int D = 2; D < N; ++D)
        if (N % D == 0) EXPECT_EQ(gcd(prim[N], prim[D]).degree(), 0);
    }
    EXPECT_EQ(prim[4].degree(), 6);
  }
  Curve sq = Curve::square();
  EXPECT_EQ(gcd(primitive_division_polynomial(sq, 4), X().pow(3) - X()).degree(), 0);
  Curve hx = Curve::hex();
  EXPECT_TRUE(divides(primitive_division_polynomial(hx, 4), division_polynomial(hx, 4)));
}

TEST(DivisionPolynomial, MultiplicationMap) {
  Curve sq = Curve::square();
  // x([2]P) = (x^2 + 1)^2 / (4 (x^3 - x))
  RatFunc m2 = multiplication_x_map(sq, 2);
  EXPECT_EQ(m2, RatFunc((X() * X() + Poly(1)).pow(2), Poly(4) * (X().pow(3) - X())));
  // against the group law at a point of the twist
  Curve hx = Curve::hex();
  Point P = Point::affine(Num(2), Num(3));
  for (int N = 2; N <= 5; ++N) {
    Point Q = scalar_mul(hx, P, N);
    RatFunc m = multiplication_x_map(hx, N);
    if (Q.inf)
      EXPECT_TRUE(m.den.eval(P.x).is_zero());
    else
      EXPECT_TRUE(m.eval(P.x) == Q.x);
  }
  // composition [2][3] = [6]
  EXPECT_EQ(multiplication_x_map(hx, 2).compose(multiplication_x_map(hx, 3)), multiplication_x_map(hx, 6));
}

TEST(CurveFn, ArithmeticAndTranslation) {
  Curve hx = Curve::hex();
  CurveFn x = CurveFn::x(hx), y = CurveFn::y(hx);
  EXPECT_EQ((x * y) / y, x);
  EXPECT_EQ(y * y, x * x * x + CurveFn::constant(hx, Num(1)));
  CurveFn one = CurveFn::constant(hx, Num(1));
  EXPECT_EQ(y / (x * x * x + one), one / y);

  Point Q = Point::affine(Num(0), Num(1));
  auto [tx, ty] = translation_map(hx, Q);
  for (Point P : {Point::affine(Num(2), Num(3)), Point::affine(Num(-1), Num(0)), Point::affine(Num(2), Num(-3))}) {
    Point R = point_add(hx, P, Q);
    EXPECT_TRUE(tx.eval(P) == R.x);
    EXPECT_TRUE(ty.eval(P) == R.y);
  }
}

TEST(IsoMap, NegationAndPullback) {
  Curve hx = Curve::hex();
  IsoMap id{hx, hx, RatFunc::poly(X()), RatFunc::poly(Poly(1))};
  IsoMap neg = id.negated();
  CurveFn y = CurveFn::y(hx);
  EXPECT_EQ(pullback(y, neg), -y);
  EXPECT_EQ(pullback(y, neg.after(neg)), y);
}
