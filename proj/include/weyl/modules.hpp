#pragma once

// Finite-dimensional weight-module machinery for GWAs whose sigma acts
// diagonally with a single moving variable (the reflection equation algebra
// has sigma(u) = q^2 u with t, d fixed). Weights are points of the base
// ring; modules carry exact matrices for every generator action.

#include <optional>
#include <variant>
#include <vector>

#include "weyl/gwa.hpp"
#include "weyl/qmatrix.hpp"

namespace weyl {

// The maximal ideal <u-u0, t-t0, d-d0> (coordinates for absent variables are
// ignored). Infinite sigma-orbit iff the moving variable's value is nonzero.
struct Weight {
    QRat u0, t0, d0;
    auto operator<=>(const Weight&) const = default;

    QRat value(Var v) const;
    std::array<QRat, 3> point() const { return {u0, t0, d0}; }
    std::string str() const;
};

class WeightModule {
public:
    // actions indexed per variable; absent variables have no matrix
    WeightModule(GwaPtr inst, std::array<std::optional<QMatrix>, 3> ring_actions, QMatrix x_action,
                 QMatrix y_action);

    const GwaPtr& instance() const { return inst_; }
    int dim() const { return dim_; }
    const QMatrix& action(Var v) const;
    const QMatrix& x_action() const { return x_; }
    const QMatrix& y_action() const { return y_; }

    // evaluate a coefficient-ring polynomial on the commuting ring actions
    QMatrix ring_matrix(const CoefPoly& f) const;

    // all GWA relations as exact matrix identities; throws RelationFailure
    void validate() const;

    // weights recomputed from the diagonal ring actions; UnsupportedShape if
    // some ring action is not diagonal in the given basis
    std::vector<Weight> weights() const;

    WeightModule direct_sum(const WeightModule& other) const;

private:
    GwaPtr inst_;
    int dim_;
    std::array<std::optional<QMatrix>, 3> ring_;
    QMatrix x_, y_;
};

// ---- weight bookkeeping on a diagonal-sigma instance ----

// the value of sigma^m(z) at the weight; zero iff sigma^m(z) lies in m(w)
QRat shifted_z_value(const GwaPtr& w, const Weight& wt, int m);

// the weight of sigma^m applied to the maximal ideal
Weight shift_weight(const GwaPtr& w, const Weight& wt, int m);

// all integers m with sigma^m(z) in m(w); finite since z has positive degree
// in the moving variable
std::vector<int> z_vanishing_shifts(const GwaPtr& w, const Weight& wt);

// ---- constructions ----

struct SimpleModuleResult {
    std::optional<WeightModule> module; // empty means infinite-dimensional
    std::string infinite_reason;
    int n = 0, n_prime = 0; // the minimal cut data when finite
};

// The simple module V_m for a weight with infinite sigma-orbit: dimension
// n + n' - 1 with the x-shift / y-multiplication action, when positive
// integers n, n' solve sigma^{-n+1}(z), sigma^{n'}(z) in m(w). Throws ZeroU0
// when the moving variable vanishes on the weight.
SimpleModuleResult simple_module(const GwaPtr& w, const Weight& wt);

// convenience for the reflection equation algebra: V_n(u0)
WeightModule rea_simple_module(int n, const QRat& u0);

// Quotient of the Verma-style module M_m by the type-4 submodule with cuts
// j (top) and j' (bottom); both cut conditions are validated.
WeightModule verma_truncation(const GwaPtr& w, const Weight& wt, int j, int j_prime);

// Closure of every basis vector under the five actions spans the whole
// space. Requires diagonal ring actions with pairwise distinct joint
// weights; throws UnsupportedShape otherwise.
bool is_simple(const WeightModule& x);

// Separated-chains predicate on a set of weights in the chain set M;
// members are validated (NotInM).
bool separated_chains(const GwaPtr& w, const std::vector<Weight>& s);

struct DecomposeResult {
    bool semisimple = false;
    // weight of each simple factor with multiplicity, when semisimple
    std::vector<std::pair<Weight, int>> factors;
    // a proper nonzero invariant subspace otherwise (rows span it)
    std::vector<std::vector<QRat>> witness;
};

// Decomposition of a chain-type finite-dimensional weight module into
// simple factors by generating from weight-space basis vectors.
DecomposeResult decompose(const WeightModule& x);

struct Classification {
    int n = 0;
    QRat u0;
};

// dimension and the u-eigenvalue on ann(y) of a simple A-module with u
// invertible; asserts the t and d eigenvalues match the V_n(u0) family.
Classification classify(const WeightModule& x);

} // namespace weyl
