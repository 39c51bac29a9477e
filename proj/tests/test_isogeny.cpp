#include <gtest/gtest.h>

#include <set>

#include "ebelyi/error.hpp"
#include "ebelyi/isogeny.hpp"
#include "ebelyi/recognize.hpp"
#include "ebelyi/torsion.hpp"

using namespace eb;

namespace {

Poly xp(std::initializer_list<long> asc) {
  std::vector<Num> c;
  for (long v : asc) c.emplace_back(v);
  return Poly(c);
}

// Nonzero points of (1/N) Lambda_Gamma / Lambda_Delta up to sign, found by
// scanning the (1/N)-grid and testing membership directly.
size_t brute_coset_count(const SublatticeBasis& b) {
  const long N = b.index();
  std::set<std::pair<long, long>> seen;
  size_t count = 0;
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j) {
      if (i == 0 && j == 0) continue;
      if (i % b.n1) continue;
      long s = i / b.n1;
      if (((j - s * b.n2) % b.m2 + b.m2) % b.m2) continue;
      std::pair<long, long> neg{(N - i) % N, (N - j) % N};
      if (seen.count(neg)) continue;
      seen.insert({i, j});
      ++count;
    }
  return count;
}

std::vector<SublatticeBasis> all_bases(long max_index) {
  std::vector<SublatticeBasis> out;
  for (long n1 = 1; n1 <= max_index; ++n1)
    for (long m2 = 1; n1 * m2 <= max_index; ++m2)
      for (long n2 = 0; n2 < m2; ++n2) out.push_back({n1, n2, m2});
  return out;
}

}  // namespace

TEST(Cosets, FourTorsionExample) {
  auto c = kernel_cosets({2, 0, 2});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (LatticeCoords{0, mpq_class(1, 2)}));
  EXPECT_EQ(c[1], (LatticeCoords{mpq_class(1, 2), 0}));
  EXPECT_EQ(c[2], (LatticeCoords{mpq_class(1, 2), mpq_class(1, 2)}));
  EXPECT_TRUE(kernel_cosets({1, 0, 1}).empty());
}

TEST(Cosets, MatchBruteForce) {
  for (const auto& b : all_bases(12)) {
    auto c = kernel_cosets(b);
    EXPECT_EQ(c.size(), brute_coset_count(b)) << b.n1 << " " << b.n2 << " " << b.m2;
    for (const auto& p : c) {
      EXPECT_GE(p[0], 0);
      EXPECT_LT(p[0], 1);
      // N p lies in Lambda_Gamma
      mpq_class s = p[0] * b.index() / b.n1;
      mpq_class t = (p[1] * b.index() - s * b.n2) / b.m2;
      EXPECT_EQ(s.get_den(), 1);
      EXPECT_EQ(t.get_den(), 1);
    }
  }
}

TEST(Velu, TwoIsogenyOfSquareCurve) {
  // kernel (0, 0) on y^2 = x^3 - x: target y^2 = x^3 + 4x
  auto r = velu(Curve::square(), Poly::x());
  EXPECT_TRUE(r.target.A == Num(4));
  EXPECT_TRUE(r.target.B.is_zero());
  EXPECT_TRUE(r.map.X == RatFunc(xp({-1, 0, 1}), xp({0, 1})));
}

TEST(Velu, TrivialKernelIsIdentity) {
  auto r = velu(Curve::hex(), Poly(1));
  EXPECT_TRUE(r.target == Curve::hex());
  EXPECT_TRUE(r.map.X == RatFunc::poly(Poly::x()));
}

TEST(Velu, FullTwoTorsionIsScaledDoubling) {
  // E / E[2] is E with x scaled by 4
  auto r = velu(Curve::hex(), xp({1, 0, 0, 1}));
  EXPECT_TRUE(r.target.A.is_zero());
  EXPECT_TRUE(r.target.B == Num(64));
  RatFunc m2 = multiplication_x_map(Curve::hex(), 2);
  EXPECT_TRUE(r.map.X == RatFunc(m2.num * Num(4), m2.den));
}

TEST(Velu, RejectsNonKernels) {
  EXPECT_THROW(velu(Curve::hex(), xp({5, 1})), Error);
  EXPECT_THROW(velu(Curve::hex(), xp({0, 0, 1})), Error);
  EXPECT_THROW(velu(Curve::hex(), xp({2, 2})), Error);
}

TEST(Isogeny, FirstExampleKernelAndDual) {
  auto ctx = context(Case::k333);
  auto t = PermutationTriple::parse("(2,1,3)", "(4,3,1)", "(4,2,3)", 4);
  auto b = translation_basis(t, ctx);
  ASSERT_EQ(b, (SublatticeBasis{2, 0, 2}));
  auto iso = compute_isogenies(b, ctx);
  EXPECT_EQ(iso.N, 4);
  EXPECT_TRUE(iso.kernel.p == xp({1, 0, 0, 1}));
  EXPECT_TRUE(iso.gamma_curve().A.is_zero());
  EXPECT_TRUE(iso.gamma_curve().B == Num(64));
  Num s(mpq_class(1, 16));
  std::vector<Num> num{Num(0), Num(-32), Num(0), Num(0), s};
  EXPECT_TRUE(iso.dual.X == RatFunc(Poly(num), xp({64, 0, 0, 1})));
  std::vector<Num> ynum{Num(-512), Num(0), Num(0), Num(20), Num(0), Num(0), Num(mpq_class(1, 64))};
  EXPECT_TRUE(iso.dual.Y == RatFunc(Poly(ynum), xp({4096, 0, 0, 128, 0, 0, 1})));
}

TEST(Isogeny, DualComposesToMultiplication) {
  // compute_isogenies already certifies psi o psi-hat = [N]; exercise it on every sublattice
  for (Case c : {Case::k333, Case::k236, Case::k244}) {
    auto ctx = context(c);
    Curve Ed = delta_curve(ctx);
    for (const auto& b : all_bases(4)) {
      auto iso = compute_isogenies(b, ctx);
      EXPECT_EQ(iso.dual.X.num.degree(), iso.N);
      EXPECT_TRUE(divides(iso.kernel.p, division_polynomial(Ed, iso.N)));
      IsoMap back = iso.dual.after(iso.forward);
      EXPECT_TRUE(back.X == multiplication_x_map(Ed, iso.N)) << case_name(c) << " " << b.n1 << b.n2 << b.m2;
    }
  }
}

TEST(Isogeny, KernelRootsMatchNumericValues) {
  auto ctx = context(Case::k244);
  SublatticeBasis b{1, 0, 5};
  auto L = delta_lattice(ctx, 192);
  auto kd = kernel_polynomial(b, ctx, L, 128);
  for (const auto& z : kd.x_numeric) {
    BigComplex v = kd.p.eval(z);
    EXPECT_LT(abs(v).to_double(), 1e-30);
  }
}

TEST(Torsion, HexTwoTorsion) {
  auto T = torsion_generator(Curve::hex(), 2);
  EXPECT_TRUE(T.L->is_base());
  EXPECT_TRUE(Curve::hex().rhs().eval(T.theta).is_zero());
  std::set<std::string> xs;
  int inf = 0;
  for (const auto& x : T.x) {
    if (!x)
      ++inf;
    else
      xs.insert(x->to_string());
  }
  EXPECT_EQ(inf, 1);
  EXPECT_EQ(xs.size(), 3u);  // the three roots of x^3 + 1
}

TEST(Torsion, TrivialAndSquareTwoTorsion) {
  auto T1 = torsion_generator(Curve::hex(), 1);
  ASSERT_EQ(T1.x.size(), 1u);
  EXPECT_FALSE(T1.x[0].has_value());
  auto T2 = torsion_generator(Curve::square(), 2);
  EXPECT_EQ(T2.x.size(), 4u);
  EXPECT_FALSE(T2.at(0, 0).has_value());
  EXPECT_FALSE(T2.at(2, 4).has_value());
}

TEST(Torsion, TableCoversPrimitiveRoots) {
  for (const Curve& E : {Curve::square(), Curve::hex()}) {
    for (int N = 2; N <= 4; ++N) {
      auto T = torsion_generator(E, N);
      ASSERT_EQ(T.x.size(), static_cast<size_t>(N * N));
      Poly f = division_polynomial(E, N);
      Poly prim = primitive_division_polynomial(E, N);
      for (const auto& x : T.x) {
        if (!x) continue;
        EXPECT_TRUE(f.eval(*x).is_zero());
      }
      // every root of the primitive polynomial appears
      std::set<std::string> seen;
      for (const auto& x : T.x)
        if (x && prim.eval(*x).is_zero()) seen.insert(x->to_string());
      EXPECT_EQ(static_cast<long>(seen.size()), prim.degree()) << E.to_string() << " N=" << N;
      // theta embeds to a root recognizable over K(theta)
      auto back = recognize_in_field(T.theta.embed(256), T.L, E.base, 200);
      ASSERT_TRUE(back.has_value());
      EXPECT_TRUE(*back == T.theta);
    }
  }
}
