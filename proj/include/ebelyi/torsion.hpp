#pragma once

#include <optional>
#include <vector>

#include "ebelyi/curve.hpp"

namespace eb {

// A generator P of E[N] as a Z[j]-module together with x([a + b j]P) for all
// a, b mod N. P = (theta, 1) lives on the twist by D = f(theta), so only
// x-coordinates are ever needed in L = K(theta).
struct TorsionTable {
  int N = 1;
  FieldPtr L;  // K(theta); K itself when theta lies in K
  Num theta;
  Num D;
  std::vector<std::optional<Num>> x;  // index a * N + b; nullopt marks infinity

  const std::optional<Num>& at(long a, long b) const;
};

// Curve must be Curve::square() or Curve::hex(). P corresponds to z = 1/N on
// the lattice Z + Z j scaled to the model.
TorsionTable torsion_generator(const Curve& E, int N, mpfr_prec_t prec = 128);

// Number of units in Z[j]/N.
long unit_count(Base b, int N);

}  // namespace eb
