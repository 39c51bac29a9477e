#pragma once

#include <utility>
#include <vector>

#include "ebelyi/bignum.hpp"

namespace eb {

struct LatticeInvariants {
  BigComplex g2, g3;
};

// Basis of the same lattice with tau = w2/w1 in the standard fundamental
// domain (Im tau > 0, |Re tau| <= 1/2, |tau| >= 1).
std::pair<BigComplex, BigComplex> reduce_basis(const BigComplex& w1, const BigComplex& w2);

// g2 = 60 sum' w^-4, g3 = 140 sum' w^-6 via theta constants.
LatticeInvariants eisenstein(const BigComplex& w1, const BigComplex& w2, mpfr_prec_t prec);

// Weierstrass p and p' of the lattice Z w1 + Z w2 at z. Throws LatticePoint.
std::pair<BigComplex, BigComplex> weierstrass_p(const BigComplex& z, const BigComplex& w1, const BigComplex& w2,
                                                mpfr_prec_t prec);

// Lattice Z w1 + Z w2 together with a scale mu such that mu * Lattice has
// (g2, g3) = (4, 0) (square, y^2 = x^3 - x) or (0, -4) (hexagonal, y^2 = x^3 + 1).
struct ScaledLattice {
  BigComplex w1, w2;  // unscaled basis as given
  BigComplex mu;
  LatticeInvariants scaled;  // invariants of mu * Lattice
  bool square = true;
  mpfr_prec_t prec = 128;
};

ScaledLattice scale_to_model(const BigComplex& w1, const BigComplex& w2, bool square, mpfr_prec_t prec);

// (p(mu z), p'(mu z)/2) for the scaled lattice: a point on the model curve.
struct WpPoint {
  BigComplex x, y;
};
WpPoint wp(const BigComplex& z, const ScaledLattice& L);

// Batched evaluation; OpenMP over the inputs.
std::vector<WpPoint> wp_batch(const std::vector<BigComplex>& zs, const ScaledLattice& L);
// Serial reference implementation of wp_batch.
std::vector<WpPoint> wp_batch_serial(const std::vector<BigComplex>& zs, const ScaledLattice& L);

}  // namespace eb
