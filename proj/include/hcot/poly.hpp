#pragma once

// Univariate polynomials over GF(p), coefficients lowest degree first.

#include <vector>

#include "hcot/matrix.hpp"
#include "hcot/options.hpp"

namespace hcot {

using Poly = std::vector<Scalar>;

/// Characteristic polynomial det(xI - A), monic of degree rows(A).
Poly char_poly(const Mat& a);
/// Distinct roots in GF(p), ascending.
std::vector<Scalar> poly_roots(const Poly& f, const PrimeField& field, Rng& rng);

}  // namespace hcot
