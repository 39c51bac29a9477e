#include "ebelyi/lattice.hpp"

#include "ebelyi/error.hpp"

namespace eb {

namespace {

constexpr long kGuard = 64;

BigFloat im_ratio(const BigComplex& a, const BigComplex& b) { return (b / a).im; }

// Theta constants and theta functions at nome q = exp(i pi tau), all at argument w.
struct Thetas {
  BigComplex t1, t2, t3, t4;
};

// Sums the four Jacobi theta series at w. With tau reduced, |q| <= exp(-pi sqrt3 / 2).
Thetas theta_all(const BigComplex& w, const BigComplex& tau, mpfr_prec_t p) {
  BigFloat pi = BigFloat::pi(p);
  BigComplex ipt = BigComplex::i(p) * tau * pi;  // i pi tau
  BigComplex q = exp(ipt);
  BigComplex q4 = exp(ipt / BigFloat(4L, p));  // q^(1/4)
  BigComplex E = exp(BigComplex::i(p) * w);  // e^(i w)
  BigComplex Ei = BigComplex(1L, p) / E;
  BigFloat tiny = pow2(-static_cast<long>(p) - 8, p);

  // q^(n^2) and q^(n^2 + n) via running products.
  BigComplex one(1L, p);
  BigComplex qn2 = one;  // q^(n^2)
  BigComplex qstep = q;  // q^(2n+1)
  BigComplex qq = q * q;
  BigComplex s3 = one, s4 = one;
  // n-th powers of E and Ei
  BigComplex Ep = one, Eip = one;
  BigComplex E2 = E * E, Ei2 = Ei * Ei;
  for (long n = 1; n < 100000; ++n) {
    qn2 *= qstep;  // q^(n^2)
    qstep *= qq;
    Ep *= E2;
    Eip *= Ei2;
    BigComplex c2n = (Ep + Eip) / BigFloat(2L, p);  // cos(2 n w)
    BigComplex term = qn2 * c2n * BigFloat(2L, p);
    s3 += term;
    if (n % 2)
      s4 -= term;
    else
      s4 += term;
    // bound by |q^(n^2)| max(|E|,|Ei|)^(2n): individual terms can vanish
    if (n > 1 && abs(qn2) * (abs(Ep) + abs(Eip)) < tiny) break;
  }
  // theta1, theta2: sum over n >= 0 of q^(n^2+n) q^(1/4) [sin|cos]((2n+1)w)
  BigComplex qnn = one;       // q^(n^2 + n)
  BigComplex qstep2 = qq;     // q^(2n+2)
  BigComplex Eo = E, Eio = Ei;  // e^(+-i(2n+1)w)
  BigComplex s1(p), s2(p);
  BigComplex twoi = BigComplex::i(p) * BigFloat(2L, p);
  for (long n = 0; n < 100000; ++n) {
    BigComplex sn = (Eo - Eio) / twoi;
    BigComplex cn = (Eo + Eio) / BigFloat(2L, p);
    BigComplex a = qnn * sn, b = qnn * cn;
    if (n % 2)
      s1 -= a;
    else
      s1 += a;
    s2 += b;
    if (n > 1 && abs(qnn) * (abs(Eo) + abs(Eio)) < tiny) break;
    qnn *= qstep2;
    qstep2 *= qq;
    Eo *= E2;
    Eio *= Ei2;
  }
  BigFloat two(2L, p);
  return {s1 * q4 * two, s2 * q4 * two, s3, s4};
}

struct Reduced {
  BigComplex w1, w2, tau;
};

Reduced reduced(const BigComplex& w1, const BigComplex& w2, mpfr_prec_t p) {
  auto [a, b] = reduce_basis(w1.with_prec(p), w2.with_prec(p));
  BigComplex tau = b / a;
  return {a, b, tau};
}

}  // namespace

std::pair<BigComplex, BigComplex> reduce_basis(const BigComplex& w1, const BigComplex& w2) {
  BigComplex a = w1, b = w2;
  if (im_ratio(a, b).sign() < 0) b = -b;
  if (im_ratio(a, b).is_zero()) throw Error(ErrorKind::RankDeficient, "lattice basis is degenerate");
  // Gauss reduction; swaps only on a strict decrease so ties |a| = |b| terminate.
  BigFloat shrink = BigFloat(1L, a.prec()) - pow2(-static_cast<long>(a.prec()) / 2, a.prec());
  for (int it = 0; it < 10000; ++it) {
    BigComplex r = b / a;
    BigFloat k = floor(r.re + BigFloat(mpq_class(1, 2), r.re.prec()));
    if (!k.is_zero()) b -= a * k;
    if (!(norm(b) < norm(a) * shrink)) break;
    BigComplex t = a;
    a = b;
    b = -t;  // keep orientation
  }
  if (im_ratio(a, b).sign() < 0) b = -b;
  return {a, b};
}

LatticeInvariants eisenstein(const BigComplex& w1, const BigComplex& w2, mpfr_prec_t prec) {
  mpfr_prec_t p = prec + kGuard;
  Reduced R = reduced(w1, w2, p);
  Thetas T = theta_all(BigComplex(p), R.tau, p);
  BigComplex c = BigComplex(BigFloat::pi(p), BigFloat(p)) / R.w1;  // pi / w1
  BigComplex t2 = pow(T.t2, 4), t3 = pow(T.t3, 4), t4 = pow(T.t4, 4);
  BigComplex c4 = pow(c, 4), c6 = pow(c, 6);
  BigComplex g2 = c4 * (t2 * t2 + t3 * t3 + t4 * t4) * BigFloat(mpq_class(2, 3), p);
  BigComplex g3 = c6 * (t2 + t3) * (t3 + t4) * (t4 - t2) * BigFloat(mpq_class(4, 27), p);
  return {g2.with_prec(prec), g3.with_prec(prec)};
}

std::pair<BigComplex, BigComplex> weierstrass_p(const BigComplex& z, const BigComplex& w1, const BigComplex& w2,
                                                mpfr_prec_t prec) {
  mpfr_prec_t p = prec + kGuard;
  Reduced R = reduced(w1, w2, p);
  // z = s w1 + t w2 with real s, t; reduce both into [-1/2, 1/2).
  BigComplex u = z.with_prec(p) / R.w1;
  BigFloat t = u.im / R.tau.im;
  BigFloat s = u.re - t * R.tau.re;
  BigFloat half(mpq_class(1, 2), p);
  BigFloat ks = floor(s + half), kt = floor(t + half);
  BigComplex zr = z.with_prec(p) - R.w1 * ks - R.w2 * kt;
  if (abs(zr / R.w1).exponent() < -static_cast<long>(prec) + 8)
    throw Error(ErrorKind::LatticePoint, "argument of p is a lattice point");
  BigFloat pi = BigFloat::pi(p);
  BigComplex c = BigComplex(pi, BigFloat(p)) / R.w1;
  BigComplex w = c * zr;
  Thetas C = theta_all(BigComplex(p), R.tau, p);
  Thetas T = theta_all(w, R.tau, p);
  BigComplex c2 = c * c;
  BigComplex r = C.t2 * C.t3 * T.t4 / T.t1;
  BigComplex P = c2 * (r * r - (pow(C.t2, 4) + pow(C.t3, 4)) / BigFloat(3L, p));
  BigComplex k = C.t2 * C.t3 * C.t4;
  BigComplex Pp = -(c2 * c * k * k * T.t2 * T.t3 * T.t4 / pow(T.t1, 3)) * BigFloat(2L, p);
  return {P.with_prec(prec), Pp.with_prec(prec)};
}

ScaledLattice scale_to_model(const BigComplex& w1, const BigComplex& w2, bool square, mpfr_prec_t prec) {
  mpfr_prec_t p = prec + kGuard;
  LatticeInvariants inv = eisenstein(w1, w2, p);
  ScaledLattice L;
  L.w1 = w1.with_prec(p);
  L.w2 = w2.with_prec(p);
  L.square = square;
  L.prec = prec;
  if (square)
    L.mu = root(inv.g2 / BigFloat(4L, p), 4);
  else
    L.mu = root(-(inv.g3 / BigFloat(4L, p)), 6);
  L.scaled = eisenstein(L.w1 * L.mu, L.w2 * L.mu, prec);
  return L;
}

WpPoint wp(const BigComplex& z, const ScaledLattice& L) {
  auto [P, Pp] = weierstrass_p(L.mu * z.with_prec(L.prec + kGuard), L.mu * L.w1, L.mu * L.w2, L.prec);
  return {P, Pp / BigFloat(2L, L.prec)};
}

std::vector<WpPoint> wp_batch_serial(const std::vector<BigComplex>& zs, const ScaledLattice& L) {
  std::vector<WpPoint> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back(wp(z, L));
  return out;
}

std::vector<WpPoint> wp_batch(const std::vector<BigComplex>& zs, const ScaledLattice& L) {
  std::vector<WpPoint> out(zs.size(), WpPoint{BigComplex(L.prec), BigComplex(L.prec)});
  const long n = static_cast<long>(zs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = wp(zs[i], L);
  return out;
}

}  // namespace eb
