#include "weyl/sigma.hpp"

namespace weyl {

SigmaMap::SigmaMap(RingSpec ring, std::array<std::optional<CoefPoly>, 3> fwd,
                   std::array<std::optional<CoefPoly>, 3> bwd)
    : ring_(ring), fwd_(std::move(fwd)), bwd_(std::move(bwd))
{
    for (Var v : all_vars) {
        if (!ring_.has(v)) continue;
        CoefPoly x = CoefPoly::var(ring_, v);
        if (apply(x, 1).substitute(bwd_, ring_) != x || apply(x, -1).substitute(fwd_, ring_) != x)
            throw Error("SigmaMap: forward and backward maps are not mutually inverse on " +
                        std::string(var_name(v)));
    }
    inverse_ok_ = true;
    cache_scales();
}

SigmaMap SigmaMap::unchecked(RingSpec ring, std::array<std::optional<CoefPoly>, 3> fwd,
                             std::array<std::optional<CoefPoly>, 3> bwd)
{
    SigmaMap s;
    s.ring_ = ring;
    s.fwd_ = std::move(fwd);
    s.bwd_ = std::move(bwd);
    s.inverse_ok_ = false;
    s.cache_scales();
    return s;
}

SigmaMap SigmaMap::scaling(const RingSpec& ring, const std::array<QRat, 3>& scale)
{
    std::array<std::optional<CoefPoly>, 3> fwd, bwd;
    for (Var v : all_vars) {
        int i = static_cast<int>(v);
        if (!ring.has(v)) continue;
        fwd[i] = scale[i] * CoefPoly::var(ring, v);
        bwd[i] = scale[i].inverse() * CoefPoly::var(ring, v);
    }
    return SigmaMap(ring, fwd, bwd);
}

const CoefPoly& SigmaMap::image(Var v) const
{
    const auto& img = fwd_[static_cast<int>(v)];
    if (!img) throw Error("SigmaMap: no image for " + std::string(var_name(v)));
    return *img;
}

const CoefPoly& SigmaMap::preimage(Var v) const
{
    const auto& img = bwd_[static_cast<int>(v)];
    if (!img) throw Error("SigmaMap: no preimage for " + std::string(var_name(v)));
    return *img;
}

CoefPoly SigmaMap::apply(const CoefPoly& f, int k) const
{
    if (k == 0) return f;
    if (scales_) {
        // diagonal action: sigma^k(c * prod v^e) = c * prod scale_v^{k e} v^e
        const auto& sc = *scales_;
        CoefPoly r(ring_);
        for (const auto& [e, c] : f.terms()) {
            QRat factor = c;
            for (int i = 0; i < 3; ++i)
                if (e[i] != 0 && !sc[i].is_one()) factor *= sc[i].pow(k * e[i]);
            r += CoefPoly::monomial(ring_, e, factor);
        }
        return r;
    }
    CoefPoly r = f;
    const auto& images = k >= 0 ? fwd_ : bwd_;
    for (int step = 0; step < (k >= 0 ? k : -k); ++step) r = r.substitute(images, ring_);
    return r;
}

void SigmaMap::cache_scales()
{
    std::array<QRat, 3> scale{QRat(1), QRat(1), QRat(1)};
    for (Var v : all_vars) {
        int i = static_cast<int>(v);
        if (!ring_.has(v)) continue;
        if (!fwd_[i]) return;
        const auto& terms = fwd_[i]->terms();
        Expt want{0, 0, 0};
        want[i] = 1;
        if (terms.size() != 1 || terms.begin()->first != want) return;
        // require the stored inverse to match, so unchecked corruptions
        // still exercise the slow path
        if (!bwd_[i]) return;
        CoefPoly expect = terms.begin()->second.inverse() * CoefPoly::var(ring_, v);
        if (!(*bwd_[i] == expect)) return;
        scale[i] = terms.begin()->second;
    }
    scales_ = scale;
}

std::optional<std::array<QRat, 3>> SigmaMap::diagonal_scales() const { return scales_; }

} // namespace weyl
