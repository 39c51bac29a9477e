#include "ebelyi/belyi.hpp"

#include <algorithm>
#include <numeric>

#include "ebelyi/error.hpp"
#include "ebelyi/recognize.hpp"

namespace eb {

namespace {

using Matrix = std::vector<std::vector<Num>>;

// Basis of the right kernel of m (rows of equal length).
std::vector<std::vector<Num>> nullspace(Matrix m, size_t cols) {
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Num inv = m[row][c].inv();
    for (size_t k = c; k < cols; ++k) m[row][k] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Num s = m[r][c];
      for (size_t k = c; k < cols; ++k)
        if (!m[row][k].is_zero()) m[r][k] -= s * m[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Num>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Num> v(cols, Num(0));
    v[f] = Num(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

CurveFn eval_at(const Poly& p, const CurveFn& X) {
  CurveFn r = CurveFn::constant(X.curve(), Num(0));
  for (int k = p.degree(); k >= 0; --k) r = r * X + CurveFn::constant(X.curve(), p.coeff(k));
  return r;
}

CurveFn compose_fn(const RatFunc& phi, const CurveFn& X) { return eval_at(phi.num, X) / eval_at(phi.den, X); }

// Order of vanishing at O (x has a double pole, y a triple pole).
long order_at_origin(const Poly& n0, const Poly& n1, const Poly& den) {
  long a = n0.is_zero() ? -1000000 : 2L * n0.degree();
  long b = n1.is_zero() ? -1000000 : 2L * n1.degree() + 3;
  return 2L * den.degree() - std::max(a, b);
}

Profile sorted_desc(Profile p) {
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

void add_roots(Profile& out, const Poly& p) {
  for (const auto& [g, m] : squarefree(p))
    for (int k = 0; k < g.degree(); ++k) out.push_back(m);
}

bool same_profiles(std::array<Profile, 3> a, std::array<Profile, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

long excess(const std::array<Profile, 3>& f) {
  long s = 0;
  for (const auto& p : f)
    for (int e : p) s += e - 1;
  return s;
}

// Which of 0, 1, infinity the function takes at P (P may be O).
int special_value(const CurveFn& F, const Point& P) {
  if (P.inf) {
    long o = order_at_origin(F.n0, F.n1, F.den);
    if (o < 0) return 2;
    if (o > 0) return 0;
    throw Error(ErrorKind::InternalInconsistency, "vertex image is not over 0 or infinity");
  }
  if (F.den.eval(P.x).is_zero()) return 2;
  Num v = F.eval(P);
  if (v.is_zero()) return 0;
  if (v.is_one()) return 1;
  throw Error(ErrorKind::InternalInconsistency, "vertex image is not over 0, 1 or infinity");
}

Role role_of(int k) { return static_cast<Role>(k); }

struct Relabeled {
  PermutationTriple triple;
  std::array<Role, 3> original;  // processed role -> input role
  std::string name = "none";
  bool mirrored = false;
  Role side = Role::c;
};

// Moves a vertex of maximal rotation at v_a or v_b to v_c where the
// tessellation allows it.
Relabeled relabel(const Preprocessed& pp, Case c) {
  const auto& t = pp.triple;
  Relabeled out{t, {Role::a, Role::b, Role::c}, "none", false, pp.side};
  if (pp.side == Role::c || pp.r == 1) {
    out.side = pp.r == 1 ? Role::c : pp.side;
    return out;
  }
  if (c == Case::k333) {
    if (pp.side == Role::a) {
      out.triple = {t.b, t.c, t.a};
      out.original = {Role::b, Role::c, Role::a};
      out.name = "rotate-a";
    } else {
      out.triple = {t.c, t.a, t.b};
      out.original = {Role::c, Role::a, Role::b};
      out.name = "rotate-b";
    }
    out.side = Role::c;
  } else if (c == Case::k244 && pp.side == Role::b) {
    out.triple = {t.a.inverse(), t.c.inverse(), t.b.inverse()};
    out.original = {Role::a, Role::c, Role::b};
    out.name = "swap-bc";
    out.mirrored = true;
    out.side = Role::c;
  }
  return out;
}

// Preimage of v_O on E(Gamma), recognized over the field of psi and checked
// against psi(Q_O) = P_O.
std::optional<Point> recognize_q(const TriangleContext& ctx, const SublatticeBasis& b, const IsogenyPair& iso,
                                 Role vertex, const Point& P, const FieldPtr& field, DescentCase& dc,
                                 mpfr_prec_t prec) {
  const Curve Eg = iso.gamma_curve();
  for (mpfr_prec_t p = prec; p <= 1024; p *= 2) {
    mpfr_prec_t wpp = p + 64;
    ScaledLattice L = delta_lattice(ctx, wpp);
    BigComplex w1 = ctx.translation[0].embed(wpp), w2 = ctx.translation[1].embed(wpp);
    BigFloat Nf(b.index(), wpp);
    BigComplex e1 = (w1 * BigFloat(b.n1, wpp) + w2 * BigFloat(b.n2, wpp)) / Nf * L.mu;
    BigComplex e2 = w2 * BigFloat(b.m2, wpp) / Nf * L.mu;
    BigComplex z = ctx.vertex_of(vertex).embed(wpp) / Nf * L.mu;
    auto [x, xp] = weierstrass_p(z, e1, e2, wpp);
    BigComplex y = xp / BigFloat(2L, wpp);
    dc.Q_O_numeric = std::array<BigComplex, 2>{x.with_prec(p), y.with_prec(p)};
    FieldPtr Fq = field ? field : ctx.K;
    auto qx = recognize_in_field(x, Fq, ctx.base, p);
    if (!qx && Fq->is_base()) {
      // Q_O often needs a small extension generated by its x-coordinate
      auto g = recognize_minpoly(x, ctx.base, 6, p);
      if (!g || g->size() < 3) continue;
      Fq = Field::extension(ctx.base, *g, x);
      qx = recognize_in_field(x, Fq, ctx.base, p);
    }
    auto qy = recognize_in_field(y, Fq, ctx.base, p);
    if (!qx || !qy) continue;
    Point Q = Point::affine(*qx, *qy);
    if (!on_curve(Eg, Q)) continue;
    if (iso.dual.X.den.eval(Q.x).is_zero()) continue;
    Num X = iso.dual.X.eval(Q.x);
    Num Y = Q.y * iso.dual.Y.eval(Q.x);
    if (X == P.x && Y == P.y) return Q;
    if (X == P.x && Y == -P.y) return point_neg(Q);
  }
  return std::nullopt;
}

}  // namespace

std::string beta_shape_name(BetaShape s) {
  switch (s) {
    case BetaShape::identity: return "identity";
    case BetaShape::x: return "x";
    case BetaShape::y: return "y";
    case BetaShape::x2: return "x^2";
    case BetaShape::y2: return "y^2";
  }
  return "?";
}

BetaShape beta_shape(int r) {
  switch (r) {
    case 1: return BetaShape::identity;
    case 2: return BetaShape::x;
    case 3: return BetaShape::y;
    case 4: return BetaShape::x2;
    case 6: return BetaShape::y2;
  }
  throw Error(ErrorKind::UnsupportedCase, "rotation index " + std::to_string(r));
}

Point vertex_point(const TriangleContext& ctx, Role r, mpfr_prec_t prec) {
  if (r == Role::c) return Point::infinity();
  FieldPtr K = ctx.K;
  std::vector<Point> cand;
  if (ctx.base == Base::Qi) {
    for (long v : {0L, 1L, -1L}) cand.push_back(Point::affine(Num(v), Num(0)));
  } else {
    Num z = K->j();
    for (const Num& v : {Num(-1), z, Num(1) - z}) cand.push_back(Point::affine(v, Num(0)));
    cand.push_back(Point::affine(Num(0), Num(1)));
    cand.push_back(Point::affine(Num(0), Num(-1)));
  }
  ScaledLattice L = delta_lattice(ctx, prec);
  WpPoint w = wp(ctx.vertex_of(r).embed(prec + 64), L);
  std::vector<double> dist;
  for (const auto& P : cand)
    dist.push_back((abs(P.x.embed(prec) - w.x) + abs(P.y.embed(prec) - w.y)).to_double());
  size_t best = static_cast<size_t>(std::min_element(dist.begin(), dist.end()) - dist.begin());
  for (size_t k = 0; k < dist.size(); ++k)
    if (k != best && dist[k] < 1e-6) throw Error(ErrorKind::AmbiguousMatch, "vertex image is ambiguous");
  if (dist[best] > 1e-20) throw Error(ErrorKind::AmbiguousMatch, "vertex image matches no torsion point");
  return cand[best];
}

CurveFn alpha(const TriangleContext& ctx) {
  const Curve E = delta_curve(ctx);
  switch (ctx.orders[2]) {
    case 3: {
      Num h(mpq_class(1, 2));
      return CurveFn(E, Poly(h), Poly(h), Poly(1));
    }
    case 4: return CurveFn(E, Poly::x() * Poly::x(), Poly(), Poly(1));
    case 6: return CurveFn(E, E.rhs(), Poly(), Poly(1));
  }
  throw Error(ErrorKind::UnsupportedCase, "no quotient map for c = " + std::to_string(ctx.orders[2]));
}

CurveFn alpha_shifted(const TriangleContext& ctx, const Point& P) {
  CurveFn a = alpha(ctx);
  if (P.inf) return a;
  auto [X, Y] = translation_map(delta_curve(ctx), P);
  return substitute(a, X, Y);
}

CurveFn beta(int r, const Curve& E) {
  const bool a0 = E.A.is_zero(), b0 = E.B.is_zero();
  switch (r) {
    case 2: return CurveFn::x(E);
    case 3:
      if (!a0) throw Error(ErrorKind::ShapeViolation, "r = 3 needs y^2 = x^3 + B, got " + E.to_string());
      return CurveFn::y(E);
    case 4:
      if (!b0) throw Error(ErrorKind::ShapeViolation, "r = 4 needs y^2 = x^3 + A x, got " + E.to_string());
      return CurveFn(E, Poly::x() * Poly::x(), Poly(), Poly(1));
    case 6:
      if (!a0) throw Error(ErrorKind::ShapeViolation, "r = 6 needs y^2 = x^3 + B, got " + E.to_string());
      return CurveFn(E, E.rhs(), Poly(), Poly(1));
  }
  throw Error(ErrorKind::UnsupportedCase, "no monomial quotient for r = " + std::to_string(r));
}

RatFunc substitute_beta(const CurveFn& xi, const CurveFn& beta, int d) {
  if (beta.den.degree() != 0) throw Error(ErrorKind::InternalInconsistency, "beta must be a polynomial");
  const Curve& E = xi.curve();
  const Poly f = E.rhs();
  // beta^k = p_k + q_k y
  std::vector<Poly> p, q;
  CurveFn bk = CurveFn::constant(E, Num(1));
  for (int k = 0; k <= d; ++k) {
    p.push_back(bk.n0 * bk.den.lc().inv());
    q.push_back(bk.n1 * bk.den.lc().inv());
    bk = bk * beta;
  }
  // unknowns B_0..B_d, A_0..A_d; columns hold the two components of
  // (n0 + n1 y) beta^k and -den beta^k
  std::vector<std::pair<Poly, Poly>> col;
  for (int k = 0; k <= d; ++k) col.push_back({xi.n0 * p[k] + xi.n1 * q[k] * f, xi.n0 * q[k] + xi.n1 * p[k]});
  for (int k = 0; k <= d; ++k) col.push_back({-(xi.den * p[k]), -(xi.den * q[k])});
  int rows0 = 0, rows1 = 0;
  for (const auto& [c0, c1] : col) {
    rows0 = std::max(rows0, c0.degree() + 1);
    rows1 = std::max(rows1, c1.degree() + 1);
  }
  const size_t cols = col.size();
  Matrix m;
  for (int i = 0; i < rows0; ++i) {
    std::vector<Num> row;
    for (const auto& c : col) row.push_back(c.first.coeff(i));
    m.push_back(std::move(row));
  }
  for (int i = 0; i < rows1; ++i) {
    std::vector<Num> row;
    for (const auto& c : col) row.push_back(c.second.coeff(i));
    m.push_back(std::move(row));
  }
  auto ker = nullspace(std::move(m), cols);
  if (ker.empty()) throw Error(ErrorKind::NotInvariant, "xi is not a function of beta");
  if (ker.size() > 1) throw Error(ErrorKind::InternalInconsistency, "substitution is not unique");
  const auto& v = ker[0];
  std::vector<Num> bc(v.begin(), v.begin() + d + 1), ac(v.begin() + d + 1, v.end());
  Poly A(ac), B(bc);
  if (B.is_zero()) throw Error(ErrorKind::NotInvariant, "substitution has zero denominator");
  return RatFunc(A, B);
}

std::array<Profile, 3> rational_fibers(const RatFunc& phi) {
  const Poly& nu = phi.num;
  const Poly& de = phi.den;
  const int dn = nu.degree(), dd = de.degree();
  const int d = std::max(dn, dd);
  std::array<Profile, 3> out;
  add_roots(out[0], nu);
  add_roots(out[2], de);
  if (dd > dn) out[0].push_back(dd - dn);
  if (dn > dd) out[2].push_back(dn - dd);
  Poly diff = nu - de;
  if (!diff.is_zero()) add_roots(out[1], diff);
  if (dn == dd && (nu.lc() / de.lc()).is_one()) out[1].push_back(d - diff.degree());
  for (auto& p : out) p = sorted_desc(p);
  return out;
}

std::array<Profile, 3> curve_fibers(const CurveFn& phi, int d, mpfr_prec_t prec) {
  const Curve& E = phi.curve();
  const Poly f = E.rhs();
  prec = std::max<mpfr_prec_t>(prec, 48L * d + 192);
  mpq_class eps = 1;
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), static_cast<mp_bitcnt_t>(40 * d));
  std::array<Profile, 3> out;
  for (int which = 0; which < 3; ++which) {
    CurveFn F = which == 2 ? CurveFn::constant(E, Num(1)) / phi : phi;
    Num t0 = which == 1 ? Num(1) : Num(0);
    Poly g0 = F.n0 - F.den * Poly(t0);
    long at_o = order_at_origin(g0, F.n1, F.den);
    // perturbed fiber over t0 + eps: every point is simple
    Num t = t0 + Num(eps);
    Poly h = F.n0 - F.den * Poly(t);
    Poly R = F.n1.is_zero() ? h : F.n1 * F.n1 * f - h * h;
    for (Poly g = gcd(R, F.den); g.degree() > 0; g = gcd(R, F.den)) R = exact_div(R, g);
    R = exact_div(R, gcd(R, R.derivative()));
    std::vector<BigComplex> xs = poly_roots(R, prec);
    std::vector<std::array<BigComplex, 2>> pts;
    for (const auto& x : xs) {
      if (F.n1.is_zero()) {
        BigComplex y = root(f.eval(x), 2);
        pts.push_back({x, y});
        pts.push_back({x, -y});
      } else {
        // -h/n1 is 0/0 where two fiber points share x; pick the sign of
        // sqrt(f) that solves n1 y = -h instead
        BigComplex y = root(f.eval(x), 2);
        BigComplex hx = h.eval(x), nx = F.n1.eval(x);
        if (abs(hx - nx * y) < abs(hx + nx * y)) y = -y;
        pts.push_back({x, y});
      }
    }
    // the at_o points closest to O
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return abs(a[0]) > abs(b[0]); });
    Profile prof;
    size_t start = 0;
    if (at_o > 0) {
      for (long k = 0; k < at_o && k < static_cast<long>(pts.size()); ++k)
        if (abs(pts[k][0]).to_double() < 1e10) throw Error(ErrorKind::ProfileMismatch, "points near O not isolated");
      prof.push_back(static_cast<int>(at_o));
      start = static_cast<size_t>(at_o);
    }
    const size_t n = pts.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (size_t i = start; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        BigFloat s = BigFloat(1L, prec) + abs(pts[i][0]) + abs(pts[i][1]);
        BigFloat dist = abs(pts[i][0] - pts[j][0]) + abs(pts[i][1] - pts[j][1]);
        if ((dist / s).to_double() < 1e-8) parent[find(i)] = find(j);
      }
    std::vector<int> size(n, 0);
    for (size_t i = start; i < n; ++i) ++size[find(i)];
    for (size_t i = start; i < n; ++i)
      if (size[i] > 0) prof.push_back(size[i]);
    out[which] = sorted_desc(prof);
  }
  return out;
}

VerificationReport verify_genus0(const BelyiResult& r) {
  VerificationReport rep;
  rep.checked = true;
  rep.exact = true;
  const int d = r.degree;
  rep.fibers = rational_fibers(r.phi);
  rep.ramification_excess = excess(rep.fibers);
  rep.degree_ok = std::max(r.phi.num.degree(), r.phi.den.degree()) == d;
  std::array<Profile, 3> expected;
  for (int k = 0; k < 3; ++k) expected[k] = r.passport.cycle_types[k];
  bool labeled = true;
  for (int k = 0; k < 3; ++k)
    if (rep.fibers[k] != expected[static_cast<int>(r.labels.over[k])]) labeled = false;
  // phi o beta against alpha o psi on E(Gamma)
  const TriangleContext ctx = context(r.passport.euclidean_case);
  const Curve Eg = r.gamma_curve;
  CurveFn lhs, rhs;
  if (r.descent.P_O && r.descent.Q_O) {
    auto [X, Y] = translation_map(Eg, point_neg(*r.descent.Q_O));
    lhs = compose_fn(r.phi, substitute(beta(r.descent.r, Eg), X, Y));
    rhs = pullback(alpha(ctx), r.iso.dual);
  } else {
    lhs = compose_fn(r.phi, beta(r.descent.r, Eg));
    rhs = pullback(alpha_shifted(ctx, r.descent.P_O.value_or(Point::infinity())), r.iso.dual);
    if (r.descent.P_O) rep.note = "commutativity checked in coordinates centered at Q_O";
  }
  rep.commutes = lhs == rhs;
  rep.ok = rep.degree_ok && rep.commutes && labeled && rep.ramification_excess == 2L * d - 2 &&
           same_profiles(rep.fibers, expected);
  if (!labeled && rep.note.empty()) rep.note = "fibers do not follow the branch labeling";
  return rep;
}

VerificationReport verify_genus1(const BelyiResult& r) {
  VerificationReport rep;
  rep.checked = true;
  rep.exact = false;
  const int d = r.degree;
  rep.fibers = curve_fibers(r.phi_on_curve, d);
  rep.ramification_excess = excess(rep.fibers);
  std::array<Profile, 3> expected;
  for (int k = 0; k < 3; ++k) expected[k] = r.passport.cycle_types[k];
  bool labeled = true;
  for (int k = 0; k < 3; ++k)
    if (rep.fibers[k] != expected[static_cast<int>(r.labels.over[k])]) labeled = false;
  const TriangleContext ctx = context(r.passport.euclidean_case);
  // exact: psi lands on E(Delta) and phi = alpha o psi
  const IsoMap& psi = r.iso.dual;
  const Curve& Ed = psi.target;
  RatFunc lhs = RatFunc::poly(r.gamma_curve.rhs()) * psi.Y * psi.Y;
  RatFunc rhs = psi.X * psi.X * psi.X + RatFunc::poly(Poly(Ed.A)) * psi.X + RatFunc::poly(Poly(Ed.B));
  bool on_target = lhs == rhs;
  rep.commutes = on_target && r.phi_on_curve == pullback(alpha_shifted(ctx, r.descent.P_O.value_or(Point::infinity())), psi);
  // regular fibers have exactly d points
  bool regular = true;
  for (long t : {3L, -5L, 7L}) {
    CurveFn F = r.phi_on_curve;
    Poly h = F.n0 - F.den * Poly(Num(mpq_class(t, 11)));
    Poly R = F.n1.is_zero() ? h : F.n1 * F.n1 * F.curve().rhs() - h * h;
    for (Poly g = gcd(R, F.den); g.degree() > 0; g = gcd(R, F.den)) R = exact_div(R, g);
    long pts = F.n1.is_zero() ? 2L * R.degree() : R.degree();
    if (gcd(R, R.derivative()).degree() > 0 || pts != d) regular = false;
  }
  rep.degree_ok = regular;
  // genus 1 source: sum of (e - 1) is 2d
  rep.ok = regular && rep.commutes && labeled && rep.ramification_excess == 2L * d &&
           same_profiles(rep.fibers, expected);
  rep.note = "genus-1 fibers counted numerically";
  if (!labeled) rep.note += "; fibers do not follow the branch labeling";
  return rep;
}

BelyiResult run_pipeline(const PermutationTriple& t, const PipelineOptions& opt) {
  BelyiResult res;
  res.input = t;
  Relabeled rl;
  Preprocessed pp;
  try {
    validate(t);
    res.passport = passport(t, opt.kase);
    pp = preprocess(t, res.passport.euclidean_case);
    rl = relabel(pp, res.passport.euclidean_case);
  } catch (const Error& e) {
    throw e.at_stage("preprocess");
  }
  const Case kase = res.passport.euclidean_case;
  const TriangleContext ctx = context(kase);
  const int d = t.degree();
  res.degree = d;
  res.genus = res.passport.genus;
  res.processed = rl.triple;
  res.labels.relabel = rl.name;
  res.labels.mirrored = rl.mirrored;
  DescentCase& dc = res.descent;
  dc.kase = kase;
  dc.vertex = rl.side;
  dc.r = pp.r;
  dc.shape = beta_shape(pp.r);

  SublatticeBasis basis;
  try {
    basis = translation_basis(rl.triple, ctx);
    if (rotation_index(basis, d, ctx.orders[2]) != pp.r)
      throw Error(ErrorKind::InternalInconsistency, "rotation index disagrees with preprocessing");
    if ((res.genus == 1) != (pp.r == 1))
      throw Error(ErrorKind::InternalInconsistency, "genus 1 must coincide with r = 1");
  } catch (const Error& e) {
    throw e.at_stage("lattice");
  }

  try {
    res.iso = compute_isogenies(basis, ctx, opt.prec);
  } catch (const Error& e) {
    throw e.at_stage("isogeny");
  }
  res.gamma_curve = res.iso.gamma_curve();

  CurveFn a;
  try {
    if (dc.vertex != Role::c && dc.r > 1) dc.P_O = vertex_point(ctx, dc.vertex, opt.prec);
    a = alpha_shifted(ctx, dc.P_O.value_or(Point::infinity()));
    // branch labeling from alpha at the vertex images
    CurveFn a0 = alpha(ctx);
    for (int s = 0; s < 3; ++s) {
      int v = special_value(a0, vertex_point(ctx, role_of(s), opt.prec));
      res.labels.over[v] = rl.original[s];
    }
  } catch (const Error& e) {
    throw e.at_stage("descent");
  }

  try {
    for (int attempt = 0;; ++attempt) {
      CurveFn xi = pullback(a, res.iso.dual);
      if (dc.r == 1) {
        res.phi_on_curve = xi;
        break;
      }
      try {
        res.phi = substitute_beta(xi, beta(dc.r, res.gamma_curve), d);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInvariant || attempt > 0) throw;
        res.iso.dual = res.iso.dual.negated();
      }
    }
  } catch (const Error& e) {
    throw e.at_stage("substitute");
  }

  if (dc.P_O) {
    FieldPtr fq = res.iso.field();
    dc.Q_O = recognize_q(ctx, basis, res.iso, dc.vertex, *dc.P_O, fq, dc, opt.prec);
  }
  FieldPtr fld = res.iso.field();
  if (res.genus == 0) {
    fld = join_fields(fld, res.phi.num.field());
    fld = join_fields(fld, res.phi.den.field());
  } else {
    fld = join_fields(fld, res.phi_on_curve.n0.field());
    fld = join_fields(fld, res.phi_on_curve.n1.field());
    fld = join_fields(fld, res.phi_on_curve.den.field());
  }
  res.field = fld ? fld : ctx.K;

  if (opt.verify) {
    try {
      res.report = res.genus == 0 ? verify_genus0(res) : verify_genus1(res);
    } catch (const Error& e) {
      throw e.at_stage("verify");
    }
    if (!res.report.ok) {
      std::string msg = "fiber profiles or commutativity check failed";
      if (!res.report.note.empty()) msg += " (" + res.report.note + ")";
      throw Error(ErrorKind::ProfileMismatch, msg, "verify");
    }
  }
  return res;
}

}  // namespace eb
