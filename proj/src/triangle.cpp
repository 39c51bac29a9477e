#include "ebelyi/triangle.hpp"

#include <cstdlib>
#include <numeric>

#include "ebelyi/error.hpp"

namespace eb {

AffineMap AffineMap::inverse() const {
  Num ui = u.inv();
  return {ui, -(v * ui)};
}

AffineMap compose(const AffineMap& f, const AffineMap& g) { return {f.u * g.u, f.u * g.v + f.v}; }

namespace {

// exp(2 pi i / s) as an element of K.
Num root_of_unity(const FieldPtr& K, Base b, int s) {
  switch (s) {
    case 1: return Num(1);
    case 2: return Num(-1);
    case 4:
      if (b != Base::Qi) break;
      return Num::from_k(K, 0, 1);
    case 3:
      if (b != Base::Qz6) break;
      return Num::from_k(K, -1, 1);  // zeta3 = zeta6 - 1
    case 6:
      if (b != Base::Qz6) break;
      return Num::from_k(K, 0, 1);
    default: break;
  }
  throw Error(ErrorKind::NotEuclidean, "no rotation of order " + std::to_string(s) + " in " + base_name(b));
}

AffineMap rotation(const FieldPtr& K, Base b, int s, const Num& center) {
  Num u = root_of_unity(K, b, s);
  return {u, center - u * center};
}

}  // namespace

TriangleContext context(Case c) {
  TriangleContext ctx;
  ctx.kase = c;
  ctx.orders = case_orders(c);
  ctx.base = c == Case::k244 ? Base::Qi : Base::Qz6;
  ctx.K = Field::base(ctx.base);
  const FieldPtr& K = ctx.K;
  switch (c) {
    case Case::k333:
      ctx.vertex = {Num::from_k(K, 0, 1), Num(1), Num(0)};
      ctx.omega_word = {"acc", "bcc"};
      break;
    case Case::k236:
      ctx.vertex = {Num::from_k(K, mpq_class(1, 2), mpq_class(1, 2)), Num(1), Num(0)};
      ctx.omega_word = {"accc", "bcccc"};
      break;
    case Case::k244:
      ctx.vertex = {Num::from_k(K, mpq_class(1, 2), mpq_class(1, 2)), Num(1), Num(0)};
      ctx.omega_word = {"acc", "bccc"};
      break;
  }
  for (int s = 0; s < 3; ++s) ctx.delta[s] = rotation(K, ctx.base, ctx.orders[s], ctx.vertex[s]);
  for (int k = 0; k < 2; ++k) {
    ctx.omega[k] = eval_word(ctx, ctx.omega_word[k]);
    if (!ctx.omega[k].is_translation())
      throw Error(ErrorKind::InternalInconsistency, "omega word is not a translation");
    ctx.translation[k] = ctx.omega[k].v;
  }
  return ctx;
}

AffineMap eval_word(const TriangleContext& ctx, const std::string& word) {
  AffineMap m;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int s = *it - 'a';
    if (s < 0 || s > 2) throw Error(ErrorKind::ParseError, "bad letter in word " + word);
    m = compose(ctx.delta[s], m);
  }
  return m;
}

int rho(const TriangleContext& ctx, const std::string& word) {
  int c = ctx.orders[2];
  int r = 0;
  for (char ch : word) {
    int s = ch - 'a';
    if (s < 0 || s > 2) throw Error(ErrorKind::ParseError, "bad letter in word " + word);
    r += c / ctx.orders[s];
  }
  return r % c;
}

Permutation perm_word(const PermutationTriple& t, const std::string& word) {
  Permutation p = Permutation::identity(t.degree());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int s = *it - 'a';
    if (s < 0 || s > 2) throw Error(ErrorKind::ParseError, "bad letter in word " + word);
    p = compose(t[static_cast<Role>(s)], p);
  }
  return p;
}

SublatticeBasis hermite_two_columns(const std::vector<std::array<long, 2>>& input) {
  std::vector<std::array<long, 2>> rows;
  for (const auto& r : input)
    if (r[0] != 0 || r[1] != 0) rows.push_back(r);
  // Eliminate column 0 by repeated Euclidean steps.
  auto reduce_col = [](std::vector<std::array<long, 2>>& rs, int col) {
    while (true) {
      int piv = -1;
      int nz = 0;
      for (int i = 0; i < static_cast<int>(rs.size()); ++i) {
        if (rs[i][col] == 0) continue;
        ++nz;
        if (piv < 0 || std::labs(rs[i][col]) < std::labs(rs[piv][col])) piv = i;
      }
      if (nz <= 1) return piv;
      for (int i = 0; i < static_cast<int>(rs.size()); ++i) {
        if (i == piv || rs[i][col] == 0) continue;
        long q = rs[i][col] / rs[piv][col];
        rs[i][0] -= q * rs[piv][0];
        rs[i][1] -= q * rs[piv][1];
      }
    }
  };
  int p0 = reduce_col(rows, 0);
  if (p0 < 0) throw Error(ErrorKind::RankDeficient, "no row with nonzero first entry");
  std::array<long, 2> top = rows[p0];
  rows.erase(rows.begin() + p0);
  int p1 = reduce_col(rows, 1);
  if (p1 < 0) throw Error(ErrorKind::RankDeficient, "translation lattice has rank < 2");
  SublatticeBasis b;
  b.n1 = top[0];
  b.n2 = top[1];
  if (b.n1 < 0) {
    b.n1 = -b.n1;
    b.n2 = -b.n2;
  }
  b.m2 = std::labs(rows[p1][1]);
  b.n2 = ((b.n2 % b.m2) + b.m2) % b.m2;
  return b;
}

SublatticeBasis translation_basis(const PermutationTriple& t, const TriangleContext& ctx) {
  Permutation p1 = perm_word(t, ctx.omega_word[0]);
  Permutation p2 = perm_word(t, ctx.omega_word[1]);
  if (!(compose(p1, p2) == compose(p2, p1)))
    throw Error(ErrorKind::InternalInconsistency, "translation permutations do not commute");
  Permutation p2i = p2.inverse();
  // Orbits of 1 under tau1 = <p1> and tau2 = <p2^-1>.
  std::vector<int> orb1{0}, orb2{0};
  for (int x = p1(0); x != 0; x = p1(x)) orb1.push_back(x);
  for (int x = p2i(0); x != 0; x = p2i(x)) orb2.push_back(x);
  long l1 = static_cast<long>(orb1.size()), l2 = static_cast<long>(orb2.size());
  std::vector<std::array<long, 2>> rows;
  for (long b1 = 0; b1 <= l1; ++b1)
    for (long b2 = 0; b2 <= l2; ++b2)
      if (orb1[b1 % l1] == orb2[b2 % l2]) rows.push_back({b1, b2});
  return hermite_two_columns(rows);
}

int rotation_index(const SublatticeBasis& basis, int d, int c) {
  long num = static_cast<long>(c) * basis.index();
  if (num % d != 0)
    throw Error(ErrorKind::NonIntegral, "c*N/d = " + std::to_string(num) + "/" + std::to_string(d));
  return static_cast<int>(num / d);
}

}  // namespace eb
