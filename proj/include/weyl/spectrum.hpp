#pragma once

// Prime-spectrum machinery: the distinguished elements r_n, z_n, s^n_j,
// pi^n_m, two-sided saturation of <x^n>, homogeneous-ideal validators,
// stratum ideal builders, inclusion tests, and the pathology witnesses
// (catenarity failure, missing normal separation, UFD spot checks).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyl/gwa.hpp"
#include "weyl/ideal.hpp"
#include "weyl/report.hpp"
#include "weyl/special.hpp"

namespace weyl {

// A_(n) = k[u^±,t^±][x,y;sigma,z_n]; shared per n
const GwaPtr& an_instance(int n);

struct SpecialElements {
    CoefPoly r;                     // r_n over k[u^±,t^±,d]
    CoefPoly z;                     // z_n over k[u^±,t^±]
    std::map<int, CoefPoly> s;      // s^n_j for |j| <= range + n
    std::map<int, CoefPoly> pi;     // pi^n_m for |m| <= range + n
};
SpecialElements special_elements(int n, int range = 2);

// r_n = q^{2n+2}/(q^{2n}-1) t u^{-1} (sigma^n(z) - z)
//     + (q^{2n}+1)/(q^{2n}-1) (q^{4n} z - sigma^n(z)), exactly
bool rn_identity_check(int n);
// same identity with a caller-supplied candidate for r_n (negative controls)
bool rn_identity_check_with(int n, const CoefPoly& candidate);

// Window of per-degree ideal generator lists (I_m) representing a
// homogeneous two-sided ideal sum I_m v_m. Components beyond a stabilized
// end repeat the end component.
class HomIdealFamily {
public:
    HomIdealFamily(GwaPtr inst, int lo, int hi);

    const GwaPtr& instance() const { return inst_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool stab_lo() const { return stab_lo_; }
    bool stab_hi() const { return stab_hi_; }
    void set_stabilized(bool lo, bool hi);

    void set_component(int m, std::vector<CoefPoly> gens);
    void add_generator(int m, CoefPoly g);
    // clamps into the window when the corresponding end is stabilized
    const std::vector<CoefPoly>& component(int m) const;

    std::string str() const;

private:
    GwaPtr inst_;
    int lo_, hi_;
    bool stab_lo_ = false, stab_hi_ = false;
    std::map<int, std::vector<CoefPoly>> gens_;
    static const std::vector<CoefPoly> empty_;
};

enum class IdealKind { right, left, twosided };

// the per-degree inclusion conditions for homogeneous right/left/two-sided
// ideals, each checked through the membership oracle on the window
bool validate_family(const HomIdealFamily& f, IdealKind kind);

// Least fixed point of the two-sided closure rules on the window, starting
// from the given seeds. Degrees are capped by the oracle's default cap.
HomIdealFamily saturate_twosided(const GwaPtr& w,
                                 const std::map<int, std::vector<CoefPoly>>& seeds, int lo,
                                 int hi);

// <x^n> in A_(n): saturation from I_n = <1> on [-n-pad, n+pad]; asserts
// stabilization at both ends (NoStabilization) and componentwise equality
// with the pi^n_m family, both inclusions through the oracle.
HomIdealFamily xn_ideal(int n, int pad = 2);

// the certificate chain prod_{j=n-i+1}^{n} r_j in <x^n>_{n-i} inside A_ut,
// for 0 <= i <= n, using an inner saturation of <x^n> plus the oracle
bool xn_certificate_chain(int n);

struct StratumDescriptor {
    enum class Kind { T1, T2, T3 };
    Kind kind = Kind::T2;
    // T1: generator expressions over u11, u12, u21 (each must translate to a
    // homogeneous element of A)
    std::vector<std::string> t1_gens;
    // T2: generators inside k[t,d]
    std::vector<CoefPoly> t2_gens;
    // T3: the layer index and p(t), either zero or t - c with c != 0
    int n = 1;
    std::optional<QRat> t3_c; // p = t - c; absent means p = 0

    static StratumDescriptor T1(std::vector<std::string> gens);
    static StratumDescriptor T2(std::vector<CoefPoly> gens);
    static StratumDescriptor T3(int n, std::optional<QRat> c = std::nullopt);
};

HomIdealFamily stratum_ideal(const StratumDescriptor& s);

// componentwise <P_m> subset of <Q_m> through the membership oracle
bool ideal_includes(const HomIdealFamily& p, const HomIdealFamily& q);

// Builds the T3-shaped ideals of A_(n)/<x^n> for the k[t^±] ideals <a>, <b>,
// computes their componentwise product plus <x^n>, and compares with the
// ideal built from <a*b>.
bool product_correspondence_check(int n, const CoefPoly& a, const CoefPoly& b);

// sigma-eigenvector scan of P/<r_1> up to the given total degree, where
// P = <pi^1_0, x, y, r_1>; the returned list is empty exactly when no
// element of P \ <r_1> of that degree is normal modulo <r_1>
std::vector<CoefPoly> normal_separation_scan(int degree);

// catenarity chains, the normal-separation scan, and the UFD spot checks
Report pathologies(int scan_degree = 3);

} // namespace weyl
