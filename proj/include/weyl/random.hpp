#pragma once

// Seeded, bounded random elements for reproducible property tests:
// q-degree <= 4 and integer coefficients in [-9,9].

#include <random>

#include "weyl/ring.hpp"

namespace weyl {

using Rng = std::mt19937_64;

QRat random_qrat(Rng& rng);
QRat random_nonzero_qrat(Rng& rng);

// at most `terms` monomials with per-variable exponents in [lo_e, hi_e]
// (lo_e clamped to 0 on non-invertible variables) and simple scalar coefficients
CoefPoly random_coefpoly(Rng& rng, const RingSpec& ring, int terms = 3, int hi_e = 2,
                         int lo_e = 0);

} // namespace weyl
