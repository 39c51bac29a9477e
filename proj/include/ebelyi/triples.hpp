#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace eb {

// Permutation of {0,...,d-1}; text form is 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based images, validated
  static Permutation identity(int d);
  // "(2,4,3)(1,5)", "(2 4 3)", "id" or "()"; fixed points implicit.
  static Permutation parse(const std::string& text, int d);
  static Permutation transposition(int d, int i, int j);  // 1-based points

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  // Disjoint cycles (0-based), each starting at its smallest point, sorted by it.
  std::vector<std::vector<int>> cycles() const;
  // Cycle lengths including fixed points, sorted descending.
  std::vector<int> cycle_type() const;
  long order() const;
  int num_cycles() const;
  bool is_identity() const;
  std::string to_string() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

// Function composition: (f o g)(i) = f(g(i)).
Permutation compose(const Permutation& f, const Permutation& g);
// Right-action product: apply p first, then q.
Permutation then(const Permutation& p, const Permutation& q);
Permutation power(const Permutation& p, long k);

enum class Case { k333, k236, k244 };

std::array<int, 3> case_orders(Case c);
std::string case_name(Case c);  // "(3,3,3)"
std::optional<Case> case_from_orders(int a, int b, int c);
// Accepts "3,3,3", "(2,3,6)", "244", ...; throws ParseError.
Case parse_case(const std::string& text);

enum class Role { a = 0, b = 1, c = 2 };
char role_char(Role r);

struct PermutationTriple {
  Permutation a, b, c;

  int degree() const { return a.degree(); }
  const Permutation& operator[](Role r) const;
  PermutationTriple inverted() const;  // elementwise inverses
  std::string to_string() const;       // "(2,4,3) (1,3,4) (1,2,3)"
  bool operator==(const PermutationTriple& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const PermutationTriple& o) const;

  static PermutationTriple parse(const std::string& sa, const std::string& sb, const std::string& sc,
                                 int d);
};

bool is_transitive(const PermutationTriple& t);
// Checks equal degrees, "apply a, then b, then c" = identity, transitivity.
const PermutationTriple& validate(const PermutationTriple& t);

struct Passport {
  std::array<int, 3> orders{};                 // actual element orders
  std::array<std::vector<int>, 3> cycle_types;  // descending
  int genus = 0;
  Case euclidean_case = Case::k333;
};

// Infers the case from the actual orders unless given; each order must
// divide the corresponding case entry. Throws NotEuclidean.
Passport passport(const PermutationTriple& t, std::optional<Case> c = std::nullopt);

// Relabel every point i as tau(i): sigma' = tau o sigma o tau^-1.
PermutationTriple conjugate(const PermutationTriple& t, const Permutation& tau);

struct Preprocessed {
  PermutationTriple triple;
  int r = 0;           // rotation index
  Role side = Role::c;
  Permutation conjugator;  // identity or a transposition (1 i)
};

// Moves 1 into a cycle of sigma_s of length s/r (roles tried c, b, a).
Preprocessed preprocess(const PermutationTriple& t, Case c);

// Canonical representative under simultaneous conjugation; nullopt when
// the triple is not transitive.
std::optional<PermutationTriple> canonical_form(const PermutationTriple& t);

// One representative per conjugacy class of transitive triples with
// sigma_s^s = 1, sorted. OpenMP over the sigma_b candidates.
std::vector<PermutationTriple> enumerate_triples(int d, Case c);
// Serial reference implementation of enumerate_triples.
std::vector<PermutationTriple> enumerate_triples_serial(int d, Case c);

}  // namespace eb
