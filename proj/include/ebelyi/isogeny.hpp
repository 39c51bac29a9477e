#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ebelyi/curve.hpp"
#include "ebelyi/lattice.hpp"
#include "ebelyi/triangle.hpp"

namespace eb {

using LatticeCoords = std::array<mpq_class, 2>;  // coordinates over omega1(0), omega2(0)

// One representative per +-pair of nonzero points of (1/N) Lambda_Gamma mod
// Lambda_Delta, reduced into [0, 1)^2, sorted.
std::vector<LatticeCoords> kernel_cosets(const SublatticeBasis& b);

// E(Delta): y^2 = x^3 - x for (2,4,4), y^2 = x^3 + 1 otherwise.
Curve delta_curve(const TriangleContext& ctx);
// Lambda_Delta = Z omega1(0) + Z omega2(0) scaled onto delta_curve.
ScaledLattice delta_lattice(const TriangleContext& ctx, mpfr_prec_t prec);
BigComplex lattice_point(const TriangleContext& ctx, const LatticeCoords& c, mpfr_prec_t prec);

// Monic polynomial over K, over `hint`, or over a new extension K(theta)
// whose coefficients embed to the given values. nullopt on failure.
std::optional<Poly> recognize_poly(const std::vector<BigComplex>& coeffs, Base b, const FieldPtr& hint,
                                   mpfr_prec_t prec);

struct KernelData {
  std::vector<LatticeCoords> cosets;
  std::vector<BigComplex> x_numeric;
  Poly p;  // monic kernel polynomial over K'
  FieldPtr field;  // K'
};

// Throws RecognitionFailed / NotAKernel when the precision is insufficient.
KernelData kernel_polynomial(const SublatticeBasis& b, const TriangleContext& ctx, const ScaledLattice& L,
                             mpfr_prec_t prec);

struct VeluResult {
  Curve target;
  IsoMap map;  // normalized: pulls dx/2y back to dx/2y
};

// Isogeny with kernel cut out by the monic squarefree polynomial p.
VeluResult velu(const Curve& E, const Poly& p);

struct IsogenyPair {
  int N = 1;
  KernelData kernel;
  IsoMap forward;  // psi-hat: E(Delta) -> E(Gamma)
  IsoMap dual;     // psi: E(Gamma) -> E(Delta), dual o forward = [N]
  Curve gamma_curve() const { return forward.target; }
  FieldPtr field() const { return kernel.field; }
};

// Dual of `fwd` (kernel cut out by basis b) built from the image of E(Delta)[N].
IsoMap dual_isogeny(const IsoMap& fwd, const SublatticeBasis& b, const TriangleContext& ctx, const ScaledLattice& L,
                    const FieldPtr& field, mpfr_prec_t prec);

// Kernel, Velu and dual with precision doubling from `prec` up to 4096 bits.
IsogenyPair compute_isogenies(const SublatticeBasis& b, const TriangleContext& ctx, mpfr_prec_t prec = 128);

}  // namespace eb
