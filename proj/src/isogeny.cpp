#include "ebelyi/isogeny.hpp"

#include <algorithm>
#include <set>

#include "ebelyi/error.hpp"
#include "ebelyi/recognize.hpp"

namespace eb {

namespace {

mpq_class frac(mpq_class q) {
  q.canonicalize();
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - f;
}

// Monic polynomial with the given numeric roots, ascending coefficients.
std::vector<BigComplex> numeric_from_roots(const std::vector<BigComplex>& roots, mpfr_prec_t p) {
  std::vector<BigComplex> c{BigComplex(1L, p)};
  for (const auto& r : roots) {
    std::vector<BigComplex> n(c.size() + 1, BigComplex(p));
    for (size_t k = 0; k < c.size(); ++k) {
      n[k + 1] += c[k];
      n[k] -= c[k] * r;
    }
    c = std::move(n);
  }
  return c;
}

std::optional<Poly> recognize_over(const std::vector<BigComplex>& coeffs, const FieldPtr& f, Base b,
                                   mpfr_prec_t prec) {
  std::vector<Num> c;
  for (const auto& z : coeffs) {
    auto v = recognize_in_field(z, f, b, prec);
    if (!v) return std::nullopt;
    c.push_back(*v);
  }
  return Poly(c);
}

}  // namespace

std::vector<LatticeCoords> kernel_cosets(const SublatticeBasis& b) {
  const long N = b.index();
  std::set<LatticeCoords> seen;
  std::vector<LatticeCoords> out;
  for (long t1 = 0; t1 < b.m2; ++t1)
    for (long t2 = 0; t2 < b.n1; ++t2) {
      LatticeCoords c{frac(mpq_class(t1 * b.n1, N)), frac(mpq_class(t1 * b.n2 + t2 * b.m2, N))};
      if (c[0] == 0 && c[1] == 0) continue;
      LatticeCoords neg{frac(-c[0]), frac(-c[1])};
      if (seen.count(c) || seen.count(neg)) continue;
      seen.insert(c);
      out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Curve delta_curve(const TriangleContext& ctx) {
  return ctx.base == Base::Qi ? Curve::square() : Curve::hex();
}

ScaledLattice delta_lattice(const TriangleContext& ctx, mpfr_prec_t prec) {
  return scale_to_model(ctx.translation[0].embed(prec + 64), ctx.translation[1].embed(prec + 64),
                        ctx.base == Base::Qi, prec);
}

BigComplex lattice_point(const TriangleContext& ctx, const LatticeCoords& c, mpfr_prec_t prec) {
  mpfr_prec_t p = prec + 64;
  return ctx.translation[0].embed(p) * BigFloat(c[0], p) + ctx.translation[1].embed(p) * BigFloat(c[1], p);
}

std::optional<Poly> recognize_poly(const std::vector<BigComplex>& coeffs, Base b, const FieldPtr& hint,
                                   mpfr_prec_t prec) {
  // over K
  std::vector<Num> c;
  std::vector<size_t> outside;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    auto e = recognize_k(coeffs[k], b, prec);
    if (e) {
      c.push_back(Num::from_k(Field::base(b), e->a, e->b));
    } else {
      c.emplace_back(0);
      outside.push_back(k);
    }
  }
  if (outside.empty()) return Poly(c);
  if (hint && !hint->is_base()) {
    if (auto r = recognize_over(coeffs, hint, b, prec)) return r;
  }
  // One primitive element for all coefficients: a small integer combination.
  const int max_deg = 16;
  for (int attempt = 0; attempt < 3; ++attempt) {
    BigComplex theta(prec);
    for (size_t k = 0; k < outside.size(); ++k)
      theta += coeffs[outside[k]] * BigFloat(static_cast<long>(1 + (k * (attempt + 2)) % 5), prec);
    auto g = recognize_minpoly(theta, b, max_deg, prec);
    if (!g || g->size() < 3) continue;
    FieldPtr L = Field::extension(b, *g, theta);
    if (auto r = recognize_over(coeffs, L, b, prec)) return r;
  }
  return std::nullopt;
}

KernelData kernel_polynomial(const SublatticeBasis& b, const TriangleContext& ctx, const ScaledLattice& L,
                             mpfr_prec_t prec) {
  KernelData kd;
  kd.cosets = kernel_cosets(b);
  const Curve E = delta_curve(ctx);
  if (kd.cosets.empty()) {
    kd.p = Poly(1);
    kd.field = ctx.K;
    return kd;
  }
  for (const auto& c : kd.cosets) kd.x_numeric.push_back(wp(lattice_point(ctx, c, L.prec), L).x);
  auto coeffs = numeric_from_roots(kd.x_numeric, L.prec);
  auto p = recognize_poly(coeffs, ctx.base, nullptr, prec);
  if (!p) throw Error(ErrorKind::RecognitionFailed, "kernel polynomial coefficients not recognized");
  if (!divides(*p, division_polynomial(E, static_cast<int>(b.index()))))
    throw Error(ErrorKind::NotAKernel, "kernel polynomial does not divide the division polynomial");
  kd.p = *p;
  kd.field = p->field() ? p->field() : ctx.K;
  return kd;
}

VeluResult velu(const Curve& E, const Poly& p) {
  if (p.degree() <= 0) return {E, IsoMap{E, E, RatFunc::poly(Poly::x()), RatFunc::poly(Poly(1))}};
  if (!p.lc().is_one()) throw Error(ErrorKind::NotAKernel, "kernel polynomial must be monic");
  if (gcd(p, p.derivative()).degree() > 0) throw Error(ErrorKind::NotAKernel, "kernel polynomial is not squarefree");
  const Poly f = E.rhs();
  const Poly fp = f.derivative();
  Poly p2 = gcd(p, f);
  Poly po = exact_div(p, p2);
  const long n2 = p2.degree(), no = po.degree();
  const int N = static_cast<int>(2 * no + n2 + 1);
  if (!divides(p, division_polynomial(E, N)))
    throw Error(ErrorKind::NotAKernel, "roots are not " + std::to_string(N) + "-torsion");

  auto so = power_sums(po, 3);
  auto s2 = power_sums(p2, 3);
  const Num& A = E.A;
  const Num& B = E.B;
  Num t = Num(2) * (Num(3) * so[2] + A * Num(no)) + (Num(3) * s2[2] + A * Num(n2));
  Num w = Num(4) * (so[3] + A * so[1] + B * Num(no)) + Num(2) * (Num(3) * so[3] + A * so[1]) +
          (Num(3) * s2[3] + A * s2[1]);
  Curve target{A - Num(5) * t, B - Num(7) * w, E.base};
  if (target.discriminant().is_zero()) throw Error(ErrorKind::NotAKernel, "Velu target is singular");

  RatFunc x = RatFunc::poly(Poly::x());
  RatFunc X = x;
  if (n2 > 0)
    X = X + RatFunc(fp * p2.derivative(), p2) - RatFunc::poly(Poly(Num(3 * n2)) * Poly::x() + Poly(Num(3) * s2[1]));
  if (no > 0) {
    Poly d1 = po.derivative(), d2 = d1.derivative();
    X = X + RatFunc::poly(Poly(Num(2 * no)) * Poly::x() - Poly(Num(2) * so[1])) -
        RatFunc(Poly(2) * fp * d1, po) + RatFunc(Poly(4) * f * (d1 * d1 - po * d2), po * po);
  }
  RatFunc Y = X.derivative();
  // (y Y)^2 must satisfy the target equation identically.
  RatFunc lhs = RatFunc::poly(f) * Y * Y;
  RatFunc rhs = X * X * X + RatFunc::poly(Poly(target.A)) * X + RatFunc::poly(Poly(target.B));
  if (!(lhs == rhs)) throw Error(ErrorKind::NotAKernel, "Velu map does not land on the target curve");
  if (X.num.degree() != N || X.den.degree() != N - 1)
    throw Error(ErrorKind::NotAKernel, "Velu map has the wrong degree");
  return {target, IsoMap{E, target, X, Y}};
}

IsoMap dual_isogeny(const IsoMap& fwd, const SublatticeBasis& b, const TriangleContext& ctx, const ScaledLattice& L,
                    const FieldPtr& field, mpfr_prec_t prec) {
  const long N = b.index();
  const Curve& Ed = fwd.source;
  const Curve& Eg = fwd.target;
  if (N == 1) return IsoMap{Eg, Ed, RatFunc::poly(Poly::x()), RatFunc::poly(Poly(1))};
  // image of E(Delta)[N]: points (a w1 + b w2)/N for (a, b) in Lambda_Delta / Lambda_Gamma
  std::vector<BigComplex> vals;
  for (long a = 0; a < b.n1; ++a)
    for (long c = 0; c < b.m2; ++c) {
      if (a == 0 && c == 0) continue;
      LatticeCoords z{mpq_class(a, N), mpq_class(c, N)};
      vals.push_back(fwd.X.eval(wp(lattice_point(ctx, z, L.prec), L).x));
    }
  // +-pairs share x; keep one value per cluster
  BigFloat tol = pow2(-static_cast<long>(L.prec / 4), L.prec);
  std::vector<BigComplex> roots;
  for (const auto& v : vals) {
    bool dup = false;
    for (const auto& r : roots) {
      BigFloat s = abs(r);
      if (s < BigFloat(1L, L.prec)) s = BigFloat(1L, L.prec);
      if (abs(v - r) < tol * s) {
        dup = true;
        break;
      }
    }
    if (!dup) roots.push_back(v);
  }
  auto q = recognize_poly(numeric_from_roots(roots, L.prec), ctx.base, field, prec);
  if (!q) throw Error(ErrorKind::RecognitionFailed, "dual kernel polynomial not recognized");
  VeluResult back = velu(Eg, *q);
  Num N2(N * N);
  if (!(back.target.A == Ed.A * N2 * N2 && back.target.B == Ed.B * N2 * N2 * N2))
    throw Error(ErrorKind::NoIsomorphism, "dual Velu curve is not E(Delta) scaled by N");
  Num inv2 = N2.inv(), inv3 = (N2 * Num(N)).inv();
  IsoMap dual{Eg, Ed, RatFunc(back.map.X.num * inv2, back.map.X.den), RatFunc(back.map.Y.num * inv3, back.map.Y.den)};
  // dual o forward = [N] with the y-multiplier X_N' / N
  IsoMap comp = dual.after(fwd);
  RatFunc mN = multiplication_x_map(Ed, static_cast<int>(N));
  if (!(comp.X == mN)) throw Error(ErrorKind::NotAKernel, "dual o forward is not [N] on x");
  RatFunc yN = mN.derivative() * RatFunc::poly(Poly(Num(N).inv()));
  if (!(comp.Y == yN)) throw Error(ErrorKind::InternalInconsistency, "dual o forward is not [N] on y");
  return dual;
}

IsogenyPair compute_isogenies(const SublatticeBasis& b, const TriangleContext& ctx, mpfr_prec_t prec) {
  const Curve Ed = delta_curve(ctx);
  for (mpfr_prec_t p = prec;; p *= 2) {
    try {
      IsogenyPair out;
      out.N = static_cast<int>(b.index());
      ScaledLattice L = delta_lattice(ctx, p + 32);
      out.kernel = kernel_polynomial(b, ctx, L, p);
      VeluResult fw = velu(Ed, out.kernel.p);
      out.forward = fw.map;
      out.dual = dual_isogeny(out.forward, b, ctx, L, out.kernel.field, p);
      return out;
    } catch (const Error& e) {
      if (!is_precision_error(e.kind()) || p >= 4096) throw;
    }
  }
}

}  // namespace eb
