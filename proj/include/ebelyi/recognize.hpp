#pragma once

#include <optional>
#include <vector>

#include "ebelyi/poly.hpp"

namespace eb {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Integral LLL (delta = 3/4) on linearly independent rows, in place.
void lll_reduce(IntMatrix& rows);

// First continued-fraction convergent p/q of v with |v - p/q| <= tol, as
// long as q <= maxden.
std::optional<mpq_class> rational_approx(const BigFloat& v, const BigFloat& tol, const mpz_class& maxden);

// a + b j close to z, with denominators up to 2^(prec/4) and error below
// 2^(-3 prec/4) |z|.
std::optional<KElt> recognize_k(const BigComplex& z, Base b, mpfr_prec_t prec);

// Small integer vector c with sum c_k v_k = 0 to working accuracy. The values
// must be accurate to about prec bits.
std::optional<std::vector<mpz_class>> integer_relation(const std::vector<BigComplex>& v, mpfr_prec_t prec);

// Monic polynomial over K of least degree <= max_degree with root z
// (coefficients ascending). Degree 1 is handled by recognize_k.
std::optional<std::vector<KElt>> recognize_minpoly(const BigComplex& z, Base b, int max_degree, mpfr_prec_t prec);

// Element of the field f whose embedding is z.
std::optional<Num> recognize_in_field(const BigComplex& z, const FieldPtr& f, Base b, mpfr_prec_t prec);

// Roots of a squarefree polynomial with complex coefficients (ascending) by
// Aberth iteration.
std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs, mpfr_prec_t prec);
std::vector<BigComplex> poly_roots(const Poly& p, mpfr_prec_t prec);

}  // namespace eb
