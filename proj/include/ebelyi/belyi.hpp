#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ebelyi/isogeny.hpp"
#include "ebelyi/triples.hpp"

namespace eb {

enum class BetaShape { identity, x, y, x2, y2 };
std::string beta_shape_name(BetaShape s);

// Shape of the rotation quotient for rotation index r (1, 2, 3, 4, 6).
BetaShape beta_shape(int r);

// Image on E(Delta) of a triangle vertex, matched against the exact
// candidates (2-torsion, (0, +-1) on y^2 = x^3 + 1, (0, 0) on y^2 = x^3 - x).
// v_c is the origin.
Point vertex_point(const TriangleContext& ctx, Role r, mpfr_prec_t prec = 128);

// Quotient E(Delta) -> P^1 by the rotations about v_c:
// (y + 1)/2, x^2, y^2 for c = 3, 4, 6.
CurveFn alpha(const TriangleContext& ctx);
// alpha in coordinates centered at P: alpha o tau_P. P = O gives alpha.
CurveFn alpha_shifted(const TriangleContext& ctx, const Point& P);

// Monomial quotient of E(Gamma) by its automorphisms of order r. Checks
// A = 0 for r = 3, 6 and B = 0 for r = 4 (ShapeViolation otherwise).
CurveFn beta(int r, const Curve& E);

// phi(u) with phi o beta = xi, deg phi <= d. NotInvariant when xi is not a
// function of beta.
RatFunc substitute_beta(const CurveFn& xi, const CurveFn& beta, int d);

struct DescentCase {
  Case kase = Case::k333;
  Role vertex = Role::c;  // v_O after relabeling
  int r = 1;
  BetaShape shape = BetaShape::identity;
  std::optional<Point> P_O;                 // on E(Delta) when v_O != v_c and r > 1
  std::optional<Point> Q_O;                 // exact preimage on E(Gamma) when recognized
  std::optional<std::array<BigComplex, 2>> Q_O_numeric;
};

// Which input role sits over 0, 1 and infinity.
struct BranchLabeling {
  std::array<Role, 3> over{Role::a, Role::b, Role::c};
  std::string relabel = "none";  // "none", "rotate-a", "rotate-b", "swap-bc"
  bool mirrored = false;          // map is the complex conjugate of the input's map
};

using Profile = std::vector<int>;  // descending multiplicities

struct VerificationReport {
  bool checked = false;
  bool ok = false;
  bool exact = true;  // false for the numeric genus-1 fiber count
  std::array<Profile, 3> fibers;  // over 0, 1, infinity
  long ramification_excess = 0;   // sum of (e - 1)
  bool commutes = false;          // phi o beta == alpha o psi
  bool degree_ok = false;
  std::string note;
};

struct BelyiResult {
  PermutationTriple input;
  PermutationTriple processed;  // after conjugation and relabeling
  Passport passport;
  int degree = 0;
  int genus = 0;
  DescentCase descent;
  IsogenyPair iso;
  Curve gamma_curve;
  FieldPtr field;
  RatFunc phi;           // genus 0: phi(u) on X(Gamma) = P^1
  CurveFn phi_on_curve;  // genus 1: phi = alpha o psi on E(Gamma)
  BranchLabeling labels;
  VerificationReport report;
};

struct PipelineOptions {
  mpfr_prec_t prec = 128;
  bool verify = true;
  // Needed when the orders are proper divisors of a Euclidean triple.
  std::optional<Case> kase;
};

BelyiResult run_pipeline(const PermutationTriple& t, const PipelineOptions& opt = {});

// Fiber profiles of a rational function over 0, 1, infinity (exact).
std::array<Profile, 3> rational_fibers(const RatFunc& phi);
// Fiber profiles of a function on an elliptic curve, by numeric fiber counting.
std::array<Profile, 3> curve_fibers(const CurveFn& phi, int d, mpfr_prec_t prec = 512);

VerificationReport verify_genus0(const BelyiResult& r);
VerificationReport verify_genus1(const BelyiResult& r);

}  // namespace eb
