#include "weyl/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "weyl/qmatrix.hpp"
#include "weyl/rea.hpp"

namespace weyl {

const GwaPtr& an_instance(int n)
{
    static std::map<int, GwaPtr> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        RingSpec ring = RingSpec::laurent_ut();
        it = cache.emplace(n, make_gwa(ring, rea_sigma(ring), zn_elem(n, ring))).first;
    }
    return it->second;
}

SpecialElements special_elements(int n, int range)
{
    if (n < 1) throw Error("special_elements: n must be positive");
    SpecialElements out{rn_elem(n, RingSpec::laurent_ut_poly_d()),
                        zn_elem(n, RingSpec::laurent_ut()),
                        {},
                        {}};
    RingSpec ring = RingSpec::laurent_ut();
    for (int j = -(range + n); j <= range + n; ++j) out.s.emplace(j, snj_elem(n, j, ring));
    for (int m = -(range + n); m <= range + n; ++m) out.pi.emplace(m, pinm_elem(n, m, ring));
    return out;
}

bool rn_identity_check_with(int n, const CoefPoly& candidate)
{
    RingSpec ring = RingSpec::laurent_u_poly_td();
    SigmaMap s = rea_sigma(ring);
    CoefPoly z = rea_z(ring);
    QRat q2n = QRat::q_pow(2 * n);
    QRat c1 = QRat::q_pow(2 * n + 2) / (q2n - QRat(1));
    QRat c2 = (q2n + QRat(1)) / (q2n - QRat(1));
    CoefPoly tui = CoefPoly::var(ring, Var::t) * CoefPoly::var(ring, Var::u, -1);
    CoefPoly szn = s.apply(z, n);
    CoefPoly rhs = c1 * (tui * (szn - z)) + c2 * (QRat::q_pow(4 * n) * z - szn);
    return candidate.cast(ring) == rhs;
}

bool rn_identity_check(int n)
{
    return rn_identity_check_with(n, rn_elem(n, RingSpec::laurent_u_poly_td()));
}

// --------------------------------------------------------- HomIdealFamily ----

const std::vector<CoefPoly> HomIdealFamily::empty_;

HomIdealFamily::HomIdealFamily(GwaPtr inst, int lo, int hi)
    : inst_(std::move(inst)), lo_(lo), hi_(hi)
{
    if (lo_ > hi_) throw WindowEmpty();
}

void HomIdealFamily::set_stabilized(bool lo, bool hi)
{
    stab_lo_ = lo;
    stab_hi_ = hi;
}

void HomIdealFamily::set_component(int m, std::vector<CoefPoly> gens)
{
    if (m < lo_ || m > hi_) throw Error("HomIdealFamily: index outside window");
    std::vector<CoefPoly> kept;
    for (auto& g : gens)
        if (!g.is_zero()) kept.push_back(std::move(g));
    gens_[m] = std::move(kept);
}

void HomIdealFamily::add_generator(int m, CoefPoly g)
{
    if (m < lo_ || m > hi_) throw Error("HomIdealFamily: index outside window");
    if (!g.is_zero()) gens_[m].push_back(std::move(g));
}

const std::vector<CoefPoly>& HomIdealFamily::component(int m) const
{
    if (m < lo_) {
        if (!stab_lo_) throw Error("HomIdealFamily: component below an unstabilized window");
        m = lo_;
    } else if (m > hi_) {
        if (!stab_hi_) throw Error("HomIdealFamily: component above an unstabilized window");
        m = hi_;
    }
    auto it = gens_.find(m);
    return it == gens_.end() ? empty_ : it->second;
}

std::string HomIdealFamily::str() const
{
    std::ostringstream os;
    for (int m = lo_; m <= hi_; ++m) {
        os << "I_" << m << " = <";
        const auto& gens = component(m);
        for (size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].str();
        os << ">\n";
    }
    return os.str();
}

// ------------------------------------------------------------- validation ----

namespace {

// membership of every element of lhs in the ideal spanned by rhs
bool contained(const GwaPtr& w, const std::vector<CoefPoly>& lhs,
               const std::vector<CoefPoly>& rhs)
{
    IdealOracle oracle(IdealGens(w->ring(), rhs), default_degree_cap(), false);
    for (const CoefPoly& g : lhs)
        if (!oracle.is_member(g)) return false;
    return true;
}

std::vector<CoefPoly> apply_all(const GwaPtr& w, const std::vector<CoefPoly>& gens, int k,
                                const CoefPoly* mult = nullptr)
{
    std::vector<CoefPoly> out;
    for (const CoefPoly& g : gens) {
        CoefPoly v = w->sigma().apply(g, k);
        if (mult) v *= *mult;
        out.push_back(std::move(v));
    }
    return out;
}

bool components_equal(const GwaPtr& w, const std::vector<CoefPoly>& a,
                      const std::vector<CoefPoly>& b)
{
    return contained(w, a, b) && contained(w, b, a);
}

bool sigma_stable(const GwaPtr& w, const std::vector<CoefPoly>& gens)
{
    return contained(w, apply_all(w, gens, 1), gens) &&
           contained(w, apply_all(w, gens, -1), gens);
}

} // namespace

bool validate_family(const HomIdealFamily& f, IdealKind kind)
{
    const GwaPtr& w = f.instance();
    const SigmaMap& s = w->sigma();
    const CoefPoly z = w->z();
    const CoefPoly sz = s.apply(z, 1);
    const bool right = kind == IdealKind::right || kind == IdealKind::twosided;
    const bool left = kind == IdealKind::left || kind == IdealKind::twosided;

    for (int k = f.lo(); k < f.hi(); ++k) {
        const auto& low = f.component(k);
        const auto& high = f.component(k + 1);
        CoefPoly sz_k1 = s.apply(z, k + 1);
        if (k >= 0) {
            if (right) {
                if (!contained(w, low, high)) return false; // I_k subset I_{k+1}
                if (!contained(w, apply_all(w, high, 0, &sz_k1), low))
                    return false; // I_k contains I_{k+1} sigma^{k+1}(z)
            }
            if (left) {
                if (!contained(w, apply_all(w, low, 1), high)) return false;
                std::vector<CoefPoly> v = apply_all(w, high, -1, &z);
                if (!contained(w, v, low)) return false; // I_k contains sigma^{-1}(I_{k+1}) z
            }
        } else {
            if (right) {
                if (!contained(w, high, low)) return false; // I_{-(n+1)} contains I_{-n}
                if (!contained(w, apply_all(w, low, 0, &sz_k1), high))
                    return false; // I_{-(n+1)} sigma^{-n}(z) subset I_{-n}
            }
            if (left) {
                if (!contained(w, apply_all(w, high, -1), low)) return false;
                std::vector<CoefPoly> v = apply_all(w, low, 1, &sz);
                if (!contained(w, v, high)) return false; // sigma(I_{-(n+1)}) sigma(z) in I_{-n}
            }
        }
    }
    // beyond a stabilized end the component repeats; for left/two-sided
    // validity that requires the end component to be sigma-stable
    if (left) {
        if (f.stab_hi() && !sigma_stable(w, f.component(f.hi()))) return false;
        if (f.stab_lo() && !sigma_stable(w, f.component(f.lo()))) return false;
    }
    return true;
}

// -------------------------------------------------------------- saturation ----

HomIdealFamily saturate_twosided(const GwaPtr& w,
                                 const std::map<int, std::vector<CoefPoly>>& seeds, int lo,
                                 int hi)
{
    std::map<int, std::vector<CoefPoly>> gens;
    std::map<int, std::unique_ptr<IdealOracle>> oracles;
    for (int m = lo; m <= hi; ++m) gens[m] = {};
    for (const auto& [m, list] : seeds) {
        if (m < lo || m > hi) throw Error("saturate_twosided: seed outside window");
        for (const auto& g : list)
            if (!g.is_zero()) gens[m].push_back(g);
    }

    auto rebuild = [&](int m) {
        auto& o = oracles[m];
        if (!o && !gens[m].empty()) {
            o = std::make_unique<IdealOracle>(IdealGens(w->ring(), gens[m]),
                                              default_degree_cap(), false);
            // compact to the minimal interreduced generating set
            gens[m] = o->basis_generators();
            o = std::make_unique<IdealOracle>(IdealGens(w->ring(), gens[m]),
                                              default_degree_cap(), false);
        }
    };
    auto member = [&](int m, const CoefPoly& g) {
        if (g.is_zero()) return true;
        if (gens[m].empty()) return false;
        rebuild(m);
        return oracles[m]->is_member(g);
    };
    auto add = [&](int m, const CoefPoly& g) {
        if (member(m, g)) return false;
        gens[m].push_back(g);
        oracles[m].reset();
        return true;
    };

    const SigmaMap& s = w->sigma();
    const CoefPoly z = w->z();
    const CoefPoly sz = s.apply(z, 1);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = lo; k < hi; ++k) {
            std::vector<CoefPoly> low = gens[k], high = gens[k + 1];
            CoefPoly sz_k1 = s.apply(z, k + 1);
            if (k >= 0) {
                for (const auto& g : low) {
                    changed |= add(k + 1, g);
                    changed |= add(k + 1, s.apply(g, 1));
                }
                for (const auto& g : high) {
                    changed |= add(k, g * sz_k1);
                    changed |= add(k, s.apply(g, -1) * z);
                }
            } else {
                for (const auto& g : high) {
                    changed |= add(k, g);
                    changed |= add(k, s.apply(g, -1));
                }
                for (const auto& g : low) {
                    changed |= add(k + 1, g * sz_k1);
                    changed |= add(k + 1, s.apply(g, 1) * sz);
                }
            }
        }
    }

    HomIdealFamily out(w, lo, hi);
    for (int m = lo; m <= hi; ++m) out.set_component(m, gens[m]);
    return out;
}

namespace {

// stabilization = the two components at each end agree and the end is
// sigma-stable, so the family extends constantly beyond the window
void assert_stabilized(HomIdealFamily& f)
{
    const GwaPtr& w = f.instance();
    if (!components_equal(w, f.component(f.hi()), f.component(f.hi() - 1)) ||
        !sigma_stable(w, f.component(f.hi())))
        throw NoStabilization("top of window " + std::to_string(f.hi()));
    if (!components_equal(w, f.component(f.lo()), f.component(f.lo() + 1)) ||
        !sigma_stable(w, f.component(f.lo())))
        throw NoStabilization("bottom of window " + std::to_string(f.lo()));
    f.set_stabilized(true, true);
}

} // namespace

HomIdealFamily xn_ideal(int n, int pad)
{
    if (n < 1) throw Error("xn_ideal: n must be positive");
    if (pad < 1) throw Error("xn_ideal: pad must be positive");
    const GwaPtr& w = an_instance(n);
    const RingSpec& ring = w->ring();

    HomIdealFamily fam = saturate_twosided(
        w, {{n, {CoefPoly::one(ring)}}}, -n - pad, n + pad);

    // I_m constant for m >= n and for m <= -n
    for (int m = n; m < fam.hi(); ++m)
        if (!components_equal(w, fam.component(m), fam.component(m + 1)))
            throw NoStabilization("I_" + std::to_string(m) + " != I_" + std::to_string(m + 1));
    for (int m = fam.lo(); m < -n; ++m)
        if (!components_equal(w, fam.component(m), fam.component(m + 1)))
            throw NoStabilization("I_" + std::to_string(m) + " != I_" + std::to_string(m + 1));
    assert_stabilized(fam);

    // componentwise equality with <pi^n_m>, certified in both directions
    for (int m = fam.lo(); m <= fam.hi(); ++m) {
        std::vector<CoefPoly> pim{pinm_elem(n, m, ring)};
        if (!components_equal(w, fam.component(m), pim))
            throw Error("xn_ideal: component " + std::to_string(m) +
                        " differs from <pi^n_m>");
    }
    return fam;
}

bool xn_certificate_chain(int n)
{
    // Descend from <x^n>_n = <1> through the two-sided closure rules only:
    // C_{m-1} collects g sigma^m(z) and sigma^{-1}(g) z for g in C_m. Every
    // element of C_m genuinely lies in <x^n>_m, so oracle membership of the
    // product prod_{j=n-i+1}^{n} r_j in <C_{n-i}> certifies the chain.
    const GwaPtr& w = rea_ut_instance();
    const RingSpec& ring = w->ring();
    const SigmaMap& s = w->sigma();
    std::vector<CoefPoly> level{CoefPoly::one(ring)};
    for (int i = 0; i <= n; ++i) {
        int m = n - i;
        CoefPoly prod = CoefPoly::one(ring);
        for (int j = m + 1; j <= n; ++j) prod *= rn_elem(j, ring);
        if (!contained(w, {prod}, level)) return false;
        std::vector<CoefPoly> next;
        CoefPoly sz_m = s.apply(w->z(), m);
        for (const CoefPoly& g : level) {
            next.push_back(g * sz_m);
            next.push_back(s.apply(g, -1) * w->z());
        }
        level = std::move(next);
    }
    return true;
}

// ----------------------------------------------------------------- strata ----

StratumDescriptor StratumDescriptor::T1(std::vector<std::string> gens)
{
    StratumDescriptor s;
    s.kind = Kind::T1;
    s.t1_gens = std::move(gens);
    return s;
}

StratumDescriptor StratumDescriptor::T2(std::vector<CoefPoly> gens)
{
    StratumDescriptor s;
    s.kind = Kind::T2;
    s.t2_gens = std::move(gens);
    return s;
}

StratumDescriptor StratumDescriptor::T3(int n, std::optional<QRat> c)
{
    StratumDescriptor s;
    s.kind = Kind::T3;
    s.n = n;
    s.t3_c = std::move(c);
    return s;
}

HomIdealFamily stratum_ideal(const StratumDescriptor& s)
{
    const GwaPtr& w = rea_instance();
    const RingSpec& ring = w->ring();

    switch (s.kind) {
    case StratumDescriptor::Kind::T1: {
        if (s.t1_gens.empty()) throw InvalidDescriptor("T1 needs generators");
        std::map<int, std::vector<CoefPoly>> seeds;
        seeds[0].push_back(CoefPoly::var(ring, Var::u));
        int maxdeg = 1;
        for (const std::string& expr : s.t1_gens) {
            GwaElem g = rea_to_gwa(expr);
            if (g.is_zero()) continue;
            if (g.components().size() != 1)
                throw InvalidDescriptor("T1 generator is not homogeneous: " + expr);
            auto [deg, coef] = *g.components().begin();
            seeds[deg].push_back(coef);
            maxdeg = std::max(maxdeg, std::abs(deg));
        }
        int half = maxdeg + 2;
        HomIdealFamily fam = saturate_twosided(w, seeds, -half, half);
        assert_stabilized(fam);
        if (!validate_family(fam, IdealKind::twosided))
            throw Error("stratum_ideal: T1 family failed validation");
        return fam;
    }
    case StratumDescriptor::Kind::T2: {
        for (const CoefPoly& g : s.t2_gens)
            for (const auto& [e, c] : g.terms())
                if (e[0] != 0)
                    throw InvalidDescriptor("T2 generators must lie in k[t,d]");
        HomIdealFamily fam(w, -2, 2);
        std::vector<CoefPoly> gens;
        for (const CoefPoly& g : s.t2_gens)
            if (!g.is_zero()) gens.push_back(g.cast(ring));
        for (int m = -2; m <= 2; ++m) fam.set_component(m, gens);
        fam.set_stabilized(true, true);
        if (!validate_family(fam, IdealKind::twosided))
            throw Error("stratum_ideal: T2 family failed validation");
        return fam;
    }
    case StratumDescriptor::Kind::T3: {
        if (s.n < 1) throw InvalidDescriptor("T3 needs n >= 1");
        std::optional<CoefPoly> p;
        if (s.t3_c) {
            if (s.t3_c->is_zero()) throw InvalidDescriptor("T3 point must be nonzero");
            p = CoefPoly::var(ring, Var::t) - CoefPoly::scalar(ring, *s.t3_c);
        }
        int half = s.n + 2;
        HomIdealFamily fam(w, -half, half);
        CoefPoly r = rn_elem(s.n, ring);
        for (int m = -half; m <= half; ++m) {
            std::vector<CoefPoly> gens{pinm_elem(s.n, m, ring).cast(ring), r};
            if (p) gens.push_back(*p);
            fam.set_component(m, gens);
        }
        fam.set_stabilized(true, true);
        if (!validate_family(fam, IdealKind::twosided))
            throw Error("stratum_ideal: T3 family failed validation");
        return fam;
    }
    }
    throw Error("unreachable");
}

bool ideal_includes(const HomIdealFamily& p, const HomIdealFamily& q)
{
    if (p.instance() != q.instance()) throw InstanceMismatch();
    int lo = std::min(p.lo(), q.lo()), hi = std::max(p.hi(), q.hi());
    for (int m = lo; m <= hi; ++m)
        if (!contained(p.instance(), p.component(m), q.component(m))) return false;
    return true;
}

bool product_correspondence_check(int n, const CoefPoly& a, const CoefPoly& b)
{
    const GwaPtr& w = an_instance(n);
    const RingSpec& ring = w->ring();
    for (const CoefPoly* p : {&a, &b})
        for (const auto& [e, c] : p->terms())
            if (e[0] != 0 || e[2] != 0)
                throw InvalidDescriptor("point generators must lie in k[t^±]");

    const int half = n + 2;
    auto t3fam = [&](const CoefPoly& p) {
        HomIdealFamily f(w, -half, half);
        for (int m = -half; m <= half; ++m) {
            std::vector<CoefPoly> gens{pinm_elem(n, m, ring)};
            if (!p.is_zero()) gens.push_back(p.cast(ring));
            f.set_component(m, gens);
        }
        f.set_stabilized(true, true);
        return f;
    };

    HomIdealFamily fa = t3fam(a.cast(ring)), fb = t3fam(b.cast(ring));
    HomIdealFamily fab = t3fam((a * b).cast(ring));

    // (P*Q)_k = sum_{i+j=k} P_i sigma^i(Q_j) [[i,j]], plus the <x^n>
    // components; products with |i| or |j| beyond the stabilized window land
    // inside <pi^n_k> and are absorbed by that summand
    HomIdealFamily prod(w, -half, half);
    for (int k = -half; k <= half; ++k) {
        std::vector<CoefPoly> gens{pinm_elem(n, k, ring)};
        for (int i = -half; i <= half; ++i) {
            int j = k - i;
            if (j < -half || j > half) continue;
            const CoefPoly& zz = w->zz(i, j);
            for (const CoefPoly& ga : fa.component(i))
                for (const CoefPoly& gb : fb.component(j))
                    gens.push_back(ga * w->sigma().apply(gb, i) * zz);
        }
        prod.set_component(k, gens);
    }
    prod.set_stabilized(true, true);

    return ideal_includes(prod, fab) && ideal_includes(fab, prod);
}

// ------------------------------------------------------------- pathologies ----

std::vector<CoefPoly> normal_separation_scan(int degree)
{
    // Work in A/<r_1> = k[u,t][x,y;sigma,z_1]; P/<r_1> has degree-0
    // component <s^1_1> and unit components elsewhere. Normal elements of
    // the quotient are sigma-eigenvectors in k[u,t], so the scan solves the
    // eigenvector problem inside <s^1_1> degree by degree.
    RingSpec ring = RingSpec::poly_ut();
    SigmaMap s = rea_sigma(ring);
    CoefPoly z1 = zn_elem(1, ring);
    CoefPoly s11 = snj_elem(1, 1, ring);

    // nonzero degrees are ruled out exactly when no sigma-power of z_1 is a
    // unit multiple of z_1
    for (int m = 1; m <= degree; ++m) {
        for (int sgn : {1, -1}) {
            CoefPoly img = s.apply(z1, m * sgn);
            auto quot = img.divided_by(z1);
            if (quot && quot->is_unit())
                throw HypothesisUnverified("sigma^m(z_1) is a unit multiple of z_1");
        }
    }

    // basis of the degree-bounded slice of <s^1_1>
    std::vector<CoefPoly> slice;
    for (int atot = 0; atot + 1 <= degree; ++atot)
        for (int aa = 0; aa <= atot; ++aa)
            slice.push_back(s11 * CoefPoly::monomial(ring, {aa, atot - aa, 0}, QRat(1)));

    std::vector<CoefPoly> found;
    for (int i = 0; i <= degree; ++i) {
        QRat lambda = QRat::q_pow(2 * i);
        std::map<Expt, int> row_of;
        std::vector<std::map<int, QRat>> rows;
        for (size_t col = 0; col < slice.size(); ++col) {
            CoefPoly delta = s.apply(slice[col], 1) - lambda * slice[col];
            for (const auto& [e, c] : delta.terms()) {
                auto [it, fresh] = row_of.emplace(e, static_cast<int>(rows.size()));
                if (fresh) rows.emplace_back();
                rows[it->second][static_cast<int>(col)] = c;
            }
        }
        QMatrix m(static_cast<int>(rows.size()), static_cast<int>(slice.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [col, c] : rows[r]) m.at(static_cast<int>(r), col) = c;
        for (const auto& vec : qmat_kernel(m)) {
            CoefPoly elem = CoefPoly::zero(ring);
            for (size_t col = 0; col < slice.size(); ++col)
                if (!vec[col].is_zero()) elem += vec[col] * slice[col];
            if (!elem.is_zero()) found.push_back(std::move(elem));
        }
    }
    return found;
}

Report pathologies(int scan_degree)
{
    Report rep;
    const GwaPtr& w = rea_instance();
    const RingSpec& ring = w->ring();
    CoefPoly one = CoefPoly::one(ring);

    // the five primes of the catenarity diagram, n = 1
    HomIdealFamily p1 = stratum_ideal(StratumDescriptor::T2({rn_elem(1, ring)}));
    HomIdealFamily p2 =
        saturate_twosided(w, {{0, {CoefPoly::var(ring, Var::u), rn_elem(1, ring)}}}, -3, 3);
    assert_stabilized(p2);
    HomIdealFamily p3 = saturate_twosided(
        w, {{0, {CoefPoly::var(ring, Var::u), CoefPoly::var(ring, Var::t)}}, {1, {one}}}, -3, 3);
    assert_stabilized(p3);
    HomIdealFamily p4 = saturate_twosided(
        w, {{0, {CoefPoly::var(ring, Var::u), CoefPoly::var(ring, Var::t)}},
            {1, {one}},
            {-1, {one}}},
        -3, 3);
    assert_stabilized(p4);
    HomIdealFamily p5 = stratum_ideal(StratumDescriptor::T3(1));

    auto strict = [&](const HomIdealFamily& small, const HomIdealFamily& big) {
        return ideal_includes(small, big) && !ideal_includes(big, small);
    };
    rep.add("chain <r_1> < <r_1,u22>", strict(p1, p2));
    rep.add("chain <r_1,u22> < <u11,u22,u21>", strict(p2, p3));
    rep.add("chain <u11,u22,u21> < max", strict(p3, p4));
    rep.add("chain <r_1> < T3(1) ideal", strict(p1, p5));
    rep.add("chain T3(1) ideal < max", strict(p5, p4));
    // the two saturated chains have lengths 3 and 2, so A is not catenary

    auto scan = normal_separation_scan(scan_degree);
    rep.add("no element of P\\Q normal mod Q at degree " + std::to_string(scan_degree),
            scan.empty(),
            scan.empty() ? "" : "found " + std::to_string(scan.size()) + " normal elements");

    // every T3 sample prime contains the principal prime <r_n>
    for (int n : {1, 2}) {
        HomIdealFamily rn = stratum_ideal(StratumDescriptor::T2({rn_elem(n, ring)}));
        HomIdealFamily t30 = stratum_ideal(StratumDescriptor::T3(n));
        HomIdealFamily t31 = stratum_ideal(StratumDescriptor::T3(n, QRat(1)));
        rep.add("<r_" + std::to_string(n) + "> inside T3(n," + "0)", ideal_includes(rn, t30));
        rep.add("<r_" + std::to_string(n) + "> inside T3(n,t-1)", ideal_includes(rn, t31));
    }
    return rep;
}

} // namespace weyl
