#include <gtest/gtest.h>

#include "ebelyi/error.hpp"
#include "ebelyi/triangle.hpp"

using namespace eb;

namespace {

const std::array<Case, 3> kCases{Case::k333, Case::k236, Case::k244};

Permutation perm_pow(const Permutation& p, long k) { return power(p, k); }

}  // namespace

TEST(Context, GeneratorsHaveOrderAndFixVertex) {
  for (Case c : kCases) {
    auto ctx = context(c);
    EXPECT_TRUE(ctx.vertex[1] == Num(1));
    EXPECT_TRUE(ctx.vertex[2].is_zero());
    for (int s = 0; s < 3; ++s) {
      const AffineMap& d = ctx.delta[s];
      EXPECT_TRUE(d.apply(ctx.vertex[s]) == ctx.vertex[s]);
      AffineMap m;
      for (int k = 1; k <= ctx.orders[s]; ++k) {
        m = compose(d, m);
        EXPECT_EQ(m.is_identity(), k == ctx.orders[s]);
      }
    }
    // apply delta_a, then delta_b, then delta_c
    EXPECT_TRUE(eval_word(ctx, "cba").is_identity()) << case_name(c);
  }
}

TEST(Context, ExplicitGenerator236) {
  auto ctx = context(Case::k236);
  auto K = ctx.K;
  EXPECT_TRUE(ctx.delta[0].u == Num(-1));
  EXPECT_TRUE(ctx.delta[0].v == Num::from_k(K, 1, 1));
  EXPECT_TRUE(ctx.vertex[0] == Num::from_k(K, mpq_class(1, 2), mpq_class(1, 2)));
}

TEST(Context, TranslationsIndependent) {
  for (Case c : kCases) {
    auto ctx = context(c);
    for (int k = 0; k < 2; ++k) {
      EXPECT_TRUE(ctx.omega[k].is_translation());
      EXPECT_FALSE(ctx.translation[k].is_zero());
      EXPECT_EQ(rho(ctx, ctx.omega_word[k]), 0);
    }
    // Im(w2 / w1) != 0
    Num ratio = ctx.translation[1] / ctx.translation[0];
    EXPECT_FALSE(ratio.conj_k() == ratio) << case_name(c);
  }
  auto sq = context(Case::k244);
  AffineMap w = eval_word(sq, "acc");
  EXPECT_TRUE(w.is_translation());
  EXPECT_FALSE(w.v.is_zero());
}

TEST(Rho, Letters) {
  auto ctx = context(Case::k236);
  EXPECT_EQ(rho(ctx, "c"), 1);
  EXPECT_EQ(rho(ctx, ""), 0);
  EXPECT_EQ(rho(ctx, "bcccc"), 0);
  EXPECT_EQ(rho(ctx, "a"), 3);
  auto c3 = context(Case::k333);
  EXPECT_EQ(rho(c3, "acc"), 0);
  EXPECT_EQ(rho(c3, "ac"), 2);
}

TEST(Hermite, TwoColumns) {
  auto b = hermite_two_columns({{2, 0}, {0, 2}, {2, 2}, {0, 0}});
  EXPECT_EQ(b, (SublatticeBasis{2, 0, 2}));
  auto c = hermite_two_columns({{3, 5}, {0, 4}, {6, 2}});
  EXPECT_EQ(c.n1, 3);
  EXPECT_EQ(c.m2, 4);
  EXPECT_EQ(c.n2, 1);
  EXPECT_THROW(hermite_two_columns({{1, 2}, {2, 4}}), Error);
}

TEST(TranslationBasis, Examples) {
  auto t = PermutationTriple::parse("(2,1,3)", "(4,3,1)", "(4,2,3)", 4);
  auto b = translation_basis(t, context(Case::k333));
  EXPECT_EQ(b, (SublatticeBasis{2, 0, 2}));
  EXPECT_EQ(rotation_index(b, 4, 3), 3);

  auto id = PermutationTriple::parse("id", "id", "id", 1);
  for (Case c : kCases) {
    auto bi = translation_basis(id, context(c));
    EXPECT_EQ(bi, (SublatticeBasis{1, 0, 1}));
    EXPECT_EQ(rotation_index(bi, 1, case_orders(c)[2]), case_orders(c)[2]);
  }

  auto g1 = PermutationTriple::parse("(1,2)(3,4)(5,6)", "(1,3,5)(2,4,6)", "(1,6,3,2,5,4)", 6);
  auto bg = translation_basis(g1, context(Case::k236));
  EXPECT_EQ(bg.index(), 1);
  EXPECT_EQ(rotation_index(bg, 6, 6), 1);
  EXPECT_THROW(rotation_index(SublatticeBasis{1, 0, 1}, 4, 3), Error);
}

TEST(TranslationBasis, BruteForceMembership) {
  for (Case c : kCases) {
    auto ctx = context(c);
    for (int d = 1; d <= 8; ++d) {
      for (const auto& t : enumerate_triples(d, c)) {
        Permutation p1 = perm_word(t, ctx.omega_word[0]);
        Permutation p2 = perm_word(t, ctx.omega_word[1]);
        ASSERT_EQ(compose(p1, p2), compose(p2, p1));
        auto b = translation_basis(t, ctx);
        ASSERT_GE(b.n1, 1);
        ASSERT_GE(b.m2, 1);
        ASSERT_GE(b.n2, 0);
        ASSERT_LT(b.n2, b.m2);
        // eta1, eta2 stabilize the base point
        EXPECT_EQ(compose(perm_pow(p1, b.n1), perm_pow(p2, b.n2))(0), 0);
        EXPECT_EQ(perm_pow(p2, b.m2)(0), 0);
        long l1 = p1.order(), l2 = p2.order();
        long hits = 0;
        for (long x = 0; x < l1; ++x)
          for (long y = 0; y < l2; ++y) {
            bool stab = compose(perm_pow(p1, x), perm_pow(p2, y))(0) == 0;
            bool in_span = x % b.n1 == 0 && ((y - (x / b.n1) * b.n2) % b.m2 + b.m2) % b.m2 == 0;
            EXPECT_EQ(stab, in_span);
            hits += stab;
          }
        // the stabilizer has index N in the translation group image
        EXPECT_EQ(l1 * l2, hits * b.index());
        int r = rotation_index(b, d, case_orders(c)[2]);
        EXPECT_EQ(passport(t, c).genus == 1, r == 1);
      }
    }
  }
}
