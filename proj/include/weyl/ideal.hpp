#pragma once

// Ideal membership over Q(q) with certificates, via Groebner bases. Laurent
// variables are handled by adjoining a fresh inverse variable with relation
// v*v^{-1} - 1 inside the oracle only; user-facing polynomials keep honest
// negative exponents.

#include <memory>
#include <vector>

#include "weyl/ring.hpp"

namespace weyl {

struct IdealGens {
    RingSpec ring;
    std::vector<CoefPoly> gens;

    IdealGens(RingSpec r, std::vector<CoefPoly> g);
};

struct Membership {
    bool member = false;
    // cofactors in the Laurent ring, one per generator; on success
    // f = sum_i cofactors[i] * gens[i] exactly
    std::vector<CoefPoly> cofactors;
    explicit operator bool() const { return member; }
};

int default_degree_cap();
void set_default_degree_cap(int cap);

// Reusable oracle: the Groebner basis is computed once per ideal. Cofactor
// certificates can be disabled when only yes/no answers are needed; that
// skips the bookkeeping that dominates Buchberger's cost.
class IdealOracle {
public:
    explicit IdealOracle(IdealGens ideal, int degree_cap = default_degree_cap(),
                         bool certificates = true);
    ~IdealOracle();
    IdealOracle(IdealOracle&&) noexcept;
    IdealOracle& operator=(IdealOracle&&) noexcept;

    const IdealGens& ideal() const { return ideal_; }
    Membership contains(const CoefPoly& f) const;
    bool is_member(const CoefPoly& f) const;
    bool is_unit_ideal() const;
    // a minimal interreduced generating set of the same ideal
    std::vector<CoefPoly> basis_generators() const;

private:
    IdealGens ideal_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Membership ideal_member(const CoefPoly& f, const IdealGens& ideal,
                        int degree_cap = default_degree_cap());

// true iff <f,g> is the unit ideal
bool coprime_check(const CoefPoly& f, const CoefPoly& g);

// CRT idempotents for the window [l1..l2] of the linear factors s^n_j in
// k[u^±,t^±], via the Lagrange closed form, verified against the membership
// oracle before returning.
std::vector<CoefPoly> crt_idempotents(int n, int l1, int l2);

} // namespace weyl
