#include "weyl/random.hpp"

namespace weyl {

namespace {

ZPoly random_zpoly(Rng& rng, bool nonzero)
{
    std::uniform_int_distribution<int> deg(0, 4), coef(-9, 9);
    for (;;) {
        ZPoly p;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) p = p + ZPoly::monomial(coef(rng), i);
        if (!nonzero || !p.is_zero()) return p;
    }
}

} // namespace

QRat random_qrat(Rng& rng) { return QRat(random_zpoly(rng, false), random_zpoly(rng, true)); }

QRat random_nonzero_qrat(Rng& rng)
{
    for (;;) {
        QRat r = random_qrat(rng);
        if (!r.is_zero()) return r;
    }
}

CoefPoly random_coefpoly(Rng& rng, const RingSpec& ring, int terms, int hi_e, int lo_e)
{
    std::uniform_int_distribution<int> coef(-9, 9);
    CoefPoly p = CoefPoly::zero(ring);
    for (int k = 0; k < terms; ++k) {
        Expt e{0, 0, 0};
        for (Var v : all_vars) {
            int i = static_cast<int>(v);
            if (!ring.has(v)) continue;
            int lo = ring.inv(v) ? lo_e : std::max(lo_e, 0);
            std::uniform_int_distribution<int> ex(lo, hi_e);
            e[i] = ex(rng);
        }
        p += CoefPoly::monomial(ring, e, QRat(coef(rng)));
    }
    return p;
}

} // namespace weyl
