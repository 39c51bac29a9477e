#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ebelyi/error.hpp"
#include "ebelyi/triangle.hpp"
#include "ebelyi/triples.hpp"

using namespace eb;

namespace {

PermutationTriple example_333() { return PermutationTriple::parse("(2,4,3)", "(1,3,4)", "(1,2,3)", 4); }
PermutationTriple genus_one_236() {
  return PermutationTriple::parse("(1,2)(3,4)(5,6)", "(1,3,5)(2,4,6)", "(1,6,3,2,5,4)", 6);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

std::vector<Permutation> all_perms(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Independent oracle: every (a, b) in S_d x S_d, c forced, classes found by
// taking the minimum over all conjugates.
size_t brute_force_count(int d, Case c) {
  auto ords = case_orders(c);
  auto perms = all_perms(d);
  std::set<std::array<std::vector<int>, 3>> classes;
  for (const auto& a : perms) {
    if (ords[0] % a.order()) continue;
    for (const auto& b : perms) {
      if (ords[1] % b.order()) continue;
      Permutation cc = then(a, b).inverse();
      if (ords[2] % cc.order()) continue;
      PermutationTriple t{a, b, cc};
      if (!is_transitive(t)) continue;
      std::array<std::vector<int>, 3> best;
      bool first = true;
      for (const auto& tau : perms) {
        PermutationTriple u = conjugate(t, tau);
        std::array<std::vector<int>, 3> key{u.a.images(), u.b.images(), u.c.images()};
        if (first || key < best) best = key;
        first = false;
      }
      classes.insert(best);
    }
  }
  return classes.size();
}

}  // namespace

TEST(Permutation, ParseAndPrint) {
  Permutation p = Permutation::parse("(2,4,3)", 4);
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p(3), 2);
  EXPECT_EQ(p(0), 0);
  EXPECT_EQ(p.to_string(), "(2,4,3)");
  EXPECT_TRUE(Permutation::parse("id", 3).is_identity());
  EXPECT_TRUE(Permutation::parse("()", 3).is_identity());
  EXPECT_EQ(Permutation::parse("(1 2)(3 4)", 4).cycle_type(), (std::vector<int>{2, 2}));
  EXPECT_EQ(kind_of([] { Permutation::parse("(1,2", 3); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { Permutation::parse("(1,5)", 3); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { Permutation::parse("(1,2,1)", 3); }), ErrorKind::ParseError);
}

TEST(Validate, ExamplesAndErrors) {
  EXPECT_NO_THROW(validate(example_333()));
  EXPECT_NO_THROW(validate(PermutationTriple::parse("id", "id", "id", 1)));
  EXPECT_NO_THROW(validate(PermutationTriple::parse("(1,2)", "(1,2)", "id", 2)));
  EXPECT_EQ(kind_of([] { validate(PermutationTriple::parse("(1,2)", "id", "id", 2)); }),
            ErrorKind::RelationViolated);
  EXPECT_EQ(kind_of([] { validate(PermutationTriple::parse("(1,2)", "(1,2)", "id", 3)); }),
            ErrorKind::NotTransitive);
  EXPECT_EQ(kind_of([] {
              validate(PermutationTriple{Permutation::identity(2), Permutation::identity(3), Permutation::identity(2)});
            }),
            ErrorKind::DegreeMismatch);
}

TEST(Passport, GenusByHand) {
  Passport p = passport(example_333());
  EXPECT_EQ(p.orders, (std::array<int, 3>{3, 3, 3}));
  for (const auto& ct : p.cycle_types) EXPECT_EQ(ct, (std::vector<int>{3, 1}));
  EXPECT_EQ(p.genus, 0);

  Passport q = passport(genus_one_236());
  EXPECT_EQ(q.orders, (std::array<int, 3>{2, 3, 6}));
  EXPECT_EQ(q.genus, 1);
  EXPECT_EQ(q.euclidean_case, Case::k236);

  EXPECT_EQ(passport(PermutationTriple::parse("id", "id", "id", 1), Case::k333).genus, 0);
}

TEST(Passport, RejectsNonEuclidean) {
  // orders (2,3,5): spherical
  Permutation a = Permutation::parse("(1,2)(3,4)", 5), b = Permutation::parse("(2,4,5)", 5);
  PermutationTriple t{a, b, then(a, b).inverse()};
  ASSERT_EQ(t.c.order(), 5);
  ASSERT_NO_THROW(validate(t));
  EXPECT_EQ(kind_of([&] { passport(t); }), ErrorKind::NotEuclidean);
}

TEST(Conjugate, ExampleTransposition) {
  auto t = conjugate(example_333(), Permutation::transposition(4, 1, 4));
  EXPECT_EQ(t, PermutationTriple::parse("(2,1,3)", "(4,3,1)", "(4,2,3)", 4));
  auto back = conjugate(t, Permutation::transposition(4, 1, 4));
  EXPECT_EQ(back, example_333());
  EXPECT_EQ(conjugate(example_333(), Permutation::identity(4)), example_333());
}

TEST(Conjugate, PassportInvariantUnderRandomConjugation) {
  std::mt19937 rng(7);
  for (Case c : {Case::k333, Case::k236, Case::k244}) {
    for (int d = 1; d <= 6; ++d) {
      for (const auto& t : enumerate_triples(d, c)) {
        std::vector<int> v(d);
        std::iota(v.begin(), v.end(), 0);
        std::shuffle(v.begin(), v.end(), rng);
        auto u = conjugate(t, Permutation(v));
        EXPECT_NO_THROW(validate(u));
        Passport p = passport(t, c), q = passport(u, c);
        EXPECT_EQ(p.cycle_types, q.cycle_types);
        EXPECT_EQ(p.genus, q.genus);
      }
    }
  }
}

TEST(Preprocess, ExampleRotationIndex) {
  auto pre = preprocess(example_333(), Case::k333);
  EXPECT_EQ(pre.r, 3);
  EXPECT_EQ(pre.side, Role::c);
  EXPECT_EQ(pre.conjugator, Permutation::transposition(4, 1, 4));

  auto g1 = preprocess(genus_one_236(), Case::k236);
  EXPECT_EQ(g1.r, 1);
  EXPECT_TRUE(g1.conjugator.is_identity());

  auto t = PermutationTriple::parse("(1,4)(2,5)(3,6)", "(1,3,5)", "(1,4,5,2,3,6)", 6);
  auto pb = preprocess(t, Case::k236);
  EXPECT_EQ(pb.r, 3);
  EXPECT_EQ(pb.side, Role::b);
  EXPECT_EQ(pb.triple.b(0), 0);
}

TEST(Preprocess, OutputHasOneInQualifyingCycle) {
  for (Case c : {Case::k333, Case::k236, Case::k244}) {
    auto ctx = context(c);
    for (int d = 1; d <= 7; ++d) {
      for (const auto& t : enumerate_triples(d, c)) {
        auto pre = preprocess(t, c);
        int s = case_orders(c)[static_cast<int>(pre.side)];
        const Permutation& sig = pre.triple[pre.side];
        int len = 1;
        for (int x = sig(0); x != 0; x = sig(x)) ++len;
        EXPECT_EQ(len, s / pre.r);
        auto basis = translation_basis(pre.triple, ctx);
        EXPECT_EQ(rotation_index(basis, d, case_orders(c)[2]), pre.r);
        EXPECT_EQ(passport(t, c).genus == 1, pre.r == 1);
      }
    }
  }
}

TEST(Enumerate, SmallCases) {
  auto one = enumerate_triples(1, Case::k333);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].a.is_identity());

  auto four = enumerate_triples(4, Case::k333);
  auto target = canonical_form(example_333());
  ASSERT_TRUE(target.has_value());
  EXPECT_NE(std::find(four.begin(), four.end(), *target), four.end());
}

TEST(Enumerate, MatchesBruteForce) {
  for (Case c : {Case::k333, Case::k236, Case::k244})
    for (int d = 1; d <= 5; ++d) EXPECT_EQ(enumerate_triples(d, c).size(), brute_force_count(d, c)) << case_name(c) << " d=" << d;
}

TEST(Enumerate, FrozenCounts) {
  // counts produced by the brute-force oracle, frozen
  const std::array<std::array<size_t, 6>, 3> expected{{{1, 0, 4, 1, 0, 1}, {1, 1, 2, 1, 0, 5}, {1, 3, 0, 7, 2, 2}}};
  const std::array<Case, 3> cases{Case::k333, Case::k236, Case::k244};
  for (int i = 0; i < 3; ++i)
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(enumerate_triples(d, cases[i]).size(), expected[i][d - 1]);
}

TEST(Enumerate, RepresentativesPairwiseNonConjugate) {
  for (Case c : {Case::k333, Case::k236, Case::k244}) {
    for (int d = 1; d <= 6; ++d) {
      auto reps = enumerate_triples(d, c);
      std::set<PermutationTriple> forms;
      for (const auto& t : reps) forms.insert(*canonical_form(t));
      EXPECT_EQ(forms.size(), reps.size());
      for (const auto& t : reps) EXPECT_NO_THROW(validate(t));
    }
  }
}

TEST(Enumerate, ParallelMatchesSerial) {
  for (Case c : {Case::k333, Case::k236, Case::k244})
    for (int d = 1; d <= 7; ++d) EXPECT_EQ(enumerate_triples(d, c), enumerate_triples_serial(d, c));
}
