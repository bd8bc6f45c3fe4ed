#pragma once

// The distinguished base-ring elements governing primes over powers of x:
// r_n, z_n, the linear factors s^n_j, and their partial products pi^n_m.

#include <vector>

#include "weyl/ring.hpp"

namespace weyl {

// r_n = (q^{2n}+1)^2 d + q^{2n} t^2
CoefPoly rn_elem(int n, const RingSpec& ring);

// z_n = -q^{2n}/(q^{2n}+1)^2 t^2 + q^{-2} u t - q^{-4} u^2
CoefPoly zn_elem(int n, const RingSpec& ring);

// s^n_j = u - q^{2j}/(q^{2n}+1) t
CoefPoly snj_elem(int n, int j, const RingSpec& ring);

// J^n_m: [1..n-m] for m >= 0, [(-m)+1..n] for m <= 0
std::vector<int> jnm_range(int n, int m);

// pi^n_m = prod_{j in J^n_m} s^n_j (empty product = 1)
CoefPoly pinm_elem(int n, int m, const RingSpec& ring);

} // namespace weyl
