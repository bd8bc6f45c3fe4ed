#pragma once

// U_q(sl2) simple modules and the pullback homomorphisms psi_alpha realizing
// every simple A-module on which u22 acts invertibly.

#include "weyl/modules.hpp"

namespace weyl {

struct UqModule {
    int dim = 0;
    QMatrix e, f, k, k_inv;

    // verifies KK^{-1}=1, KE=q^2EK, KF=q^{-2}FK, EF-FE=(K-K^{-1})/(q-q^{-1})
    UqModule(int n, QMatrix e_, QMatrix f_, QMatrix k_, QMatrix k_inv_);
};

// the quantum integer [k]_q = (q^k - q^{-k})/(q - q^{-1})
QRat quantum_int(int k);

// the n-dimensional simple module V(n-1,+): K m_p = q^{n-1-2p} m_p,
// F m_p = m_{p+1}, E m_p = [p]_q [n-p]_q m_{p-1}
UqModule uqsl2_module(int n);

// pullback along psi_alpha: u11 -> q^{-1}(q-q^{-1})^2 a EF + a K^{-1},
// u12 -> a E, u21 -> q^{-1}(q-q^{-1})^2 a KF, u22 -> a K; verifies the six
// defining relations on the image matrices and repackages the module in GWA
// coordinates.
WeightModule psi_alpha(const QRat& alpha, const UqModule& m);

struct PullbackMatch {
    bool match = false;
    Classification witness;
};

// does the pullback of V(n-1,+) along psi_alpha classify as V_n(alpha q^{n-1})?
PullbackMatch pullback_matches(const QRat& alpha, int n);

} // namespace weyl
