#pragma once

// The 2x2 reflection equation algebra A, presented on generators u11, u12,
// u21, u22 and realized as the GWA k[u,t,d][x,y;sigma,z] through the change
// of variables u22 = u, u11 = t - q^{-2}u, u21 = x, u12 = y,
// z = d + q^{-2}tu - q^{-4}u^2.

#include <string>
#include <vector>

#include "weyl/gwa.hpp"
#include "weyl/report.hpp"

namespace weyl {

// sigma: u -> q^2 u, t -> t, d -> d on any ring containing u
SigmaMap rea_sigma(const RingSpec& ring);
// z = d + q^{-2} t u - q^{-4} u^2
CoefPoly rea_z(const RingSpec& ring);

// A itself over k[u,t,d]; a shared singleton
const GwaPtr& rea_instance();
// the localization A_ut over k[u^±,t^±,d]
const GwaPtr& rea_ut_instance();

// Parse an expression over {u11,u12,u21,u22,u,t,d,x,y,q}, integer literals,
// + - * ^ (integer exponents) and parentheses; translate it into the GWA
// normal form sum a_m v_m.
GwaElem rea_to_gwa(const std::string& word);

// Same grammar restricted to {u,t,d,q}; evaluates to a coefficient-ring
// polynomial in the given ring.
CoefPoly parse_ring_poly(const std::string& expr, const RingSpec& ring);

// The six defining relations; each must reduce to zero.
Report check_relations();

// Aut(A) = (k^x)^2: u11 -> a u11, u12 -> (a/g) u12, u21 -> a g u21,
// u22 -> a u22; in GWA coordinates u -> a u, t -> a t, d -> a^2 d,
// x -> a g x, y -> (a/g) y.
struct ReaAut {
    QRat alpha, gamma;
    ReaAut(QRat a, QRat g);
    friend ReaAut operator*(const ReaAut& second, const ReaAut& first)
    {
        return ReaAut(second.alpha * first.alpha, second.gamma * first.gamma);
    }
};

GwaElem apply_aut(const ReaAut& phi, const GwaElem& a);

// Exact nullspace computation of the commutator action on the monomial
// basis {u^a t^b d^c v_m : a+b+c+|m| <= bound}; returns a basis of the
// degree-bounded center.
std::vector<GwaElem> central_scan(int bound, int cap = 16);

// sigma-eigenvector monomial families u^a * f(t,d) of total degree <= bound,
// each verified through is_normal.
struct NormalFamily {
    int u_power = 0;
    QRat eigenvalue;                 // q^{2a}
    std::vector<CoefPoly> monomials; // the t^b d^c with a+b+c <= bound
};
std::vector<NormalFamily> normal_scan(int bound, int cap = 16);

} // namespace weyl
