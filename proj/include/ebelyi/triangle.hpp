#pragma once

#include <array>
#include <string>
#include <vector>

#include "ebelyi/field.hpp"
#include "ebelyi/triples.hpp"

namespace eb {

// z -> u z + v with u a root of unity in K.
struct AffineMap {
  Num u{1}, v{0};
  Num apply(const Num& z) const { return u * z + v; }
  AffineMap inverse() const;
  bool is_identity() const { return u.is_one() && v.is_zero(); }
  bool is_translation() const { return u.is_one(); }
  bool operator==(const AffineMap& o) const { return u == o.u && v == o.v; }
};

// (f o g)(z) = f(g(z)).
AffineMap compose(const AffineMap& f, const AffineMap& g);

// Words are strings over {a, b, c}; the word l1 l2 ... lk denotes the
// composite l1 o l2 o ... o lk (rightmost letter acts first). Permutations
// follow the same composition rule.
struct TriangleContext {
  Case kase = Case::k333;
  std::array<int, 3> orders{};
  Base base = Base::Qz6;
  FieldPtr K;
  std::array<Num, 3> vertex;  // v_a, v_b, v_c
  std::array<AffineMap, 3> delta;
  std::array<std::string, 2> omega_word;
  std::array<AffineMap, 2> omega;
  std::array<Num, 2> translation;  // omega_i(0)

  int order(Role r) const { return orders[static_cast<int>(r)]; }
  const AffineMap& delta_of(Role r) const { return delta[static_cast<int>(r)]; }
  const Num& vertex_of(Role r) const { return vertex[static_cast<int>(r)]; }
};

TriangleContext context(Case c);
AffineMap eval_word(const TriangleContext& ctx, const std::string& word);
// Rotation homomorphism: letters contribute c/a, c/b, 1; result mod c.
int rho(const TriangleContext& ctx, const std::string& word);
Permutation perm_word(const PermutationTriple& t, const std::string& word);

// Basis eta1 = w1^n1 w2^n2, eta2 = w2^m2 of the translation subgroup of Gamma.
struct SublatticeBasis {
  long n1 = 1, n2 = 0, m2 = 1;
  long index() const { return n1 * m2; }
  bool operator==(const SublatticeBasis& o) const { return n1 == o.n1 && n2 == o.n2 && m2 == o.m2; }
};

// Row Hermite normal form of an integer matrix with two columns: returns
// (n1, n2), (0, m2) with positive pivots and 0 <= n2 < m2.
SublatticeBasis hermite_two_columns(const std::vector<std::array<long, 2>>& rows);

SublatticeBasis translation_basis(const PermutationTriple& t, const TriangleContext& ctx);
int rotation_index(const SublatticeBasis& basis, int d, int c);

}  // namespace eb
