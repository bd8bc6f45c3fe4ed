#pragma once

// Ring automorphisms given by per-variable substitution, with an explicit
// inverse that is verified at construction.

#include <array>
#include <optional>

#include "weyl/ring.hpp"

namespace weyl {

class SigmaMap {
public:
    // fwd[v] / bwd[v] are the images of each present variable. Throws unless
    // fwd∘bwd and bwd∘fwd fix every variable.
    SigmaMap(RingSpec ring, std::array<std::optional<CoefPoly>, 3> fwd,
             std::array<std::optional<CoefPoly>, 3> bwd);

    // skips the inverse verification; for negative-control tests only
    static SigmaMap unchecked(RingSpec ring, std::array<std::optional<CoefPoly>, 3> fwd,
                              std::array<std::optional<CoefPoly>, 3> bwd);

    // diagonal automorphism v -> scale[v] * v
    static SigmaMap scaling(const RingSpec& ring, const std::array<QRat, 3>& scale);

    const RingSpec& ring() const { return ring_; }
    const CoefPoly& image(Var v) const;
    const CoefPoly& preimage(Var v) const;

    CoefPoly apply(const CoefPoly& f, int k = 1) const; // sigma^k, any sign

    // if sigma is diagonal, the per-variable scale factors
    std::optional<std::array<QRat, 3>> diagonal_scales() const;

    bool inverse_ok() const { return inverse_ok_; }

private:
    SigmaMap() = default;
    void cache_scales();
    RingSpec ring_;
    std::array<std::optional<CoefPoly>, 3> fwd_, bwd_;
    std::optional<std::array<QRat, 3>> scales_; // set when sigma is diagonal
    bool inverse_ok_ = false;
};

inline CoefPoly sigma_pow(const SigmaMap& s, const CoefPoly& f, int k) { return s.apply(f, k); }

} // namespace weyl
