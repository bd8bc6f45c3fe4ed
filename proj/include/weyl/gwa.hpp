#pragma once

// Generic generalized Weyl algebra engine over a commutative coefficient
// ring R in u,t,d: R[x,y;sigma,z] with yx = z, xy = sigma(z), xr = sigma(r)x,
// yr = sigma^{-1}(r)y. Elements are stored sparsely by degree in the free
// R-basis {v_m}, and products use v_n v_m = [[n,m]] v_{n+m}.

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "weyl/report.hpp"
#include "weyl/ring.hpp"
#include "weyl/sigma.hpp"

namespace weyl {

class GwaInstance : public std::enable_shared_from_this<GwaInstance> {
public:
    GwaInstance(RingSpec ring, SigmaMap sigma, CoefPoly z);

    const RingSpec& ring() const { return ring_; }
    const SigmaMap& sigma() const { return sigma_; }
    const CoefPoly& z() const { return z_; }

    // sigma^{[j,k]}(z) = prod_{l=j}^{k} sigma^l(z); empty product = 1
    CoefPoly sigma_interval(int j, int k) const;

    // the structure constant [[n,m]] with v_n v_m = [[n,m]] v_{n+m}; memoized
    const CoefPoly& zz(int n, int m) const;

private:
    RingSpec ring_;
    SigmaMap sigma_;
    CoefPoly z_;
    mutable std::map<std::pair<int, int>, CoefPoly> zz_memo_;
    mutable std::mutex memo_mutex_;
};

using GwaPtr = std::shared_ptr<const GwaInstance>;

inline GwaPtr make_gwa(RingSpec ring, SigmaMap sigma, CoefPoly z)
{
    return std::make_shared<GwaInstance>(std::move(ring), std::move(sigma), std::move(z));
}

class GwaElem {
public:
    GwaElem() = default;
    explicit GwaElem(GwaPtr inst) : inst_(std::move(inst)) {}

    static GwaElem zero(const GwaPtr& w) { return GwaElem(w); }
    static GwaElem one(const GwaPtr& w) { return ring_elem(w, CoefPoly::one(w->ring())); }
    static GwaElem scalar(const GwaPtr& w, const QRat& c)
    {
        return ring_elem(w, CoefPoly::scalar(w->ring(), c));
    }
    static GwaElem ring_elem(const GwaPtr& w, const CoefPoly& r);
    static GwaElem var(const GwaPtr& w, Var v) { return ring_elem(w, CoefPoly::var(w->ring(), v)); }
    static GwaElem x(const GwaPtr& w) { return basis(w, 1); }
    static GwaElem y(const GwaPtr& w) { return basis(w, -1); }
    static GwaElem basis(const GwaPtr& w, int m, std::optional<CoefPoly> coeff = std::nullopt);

    const GwaPtr& instance() const { return inst_; }
    const std::map<int, CoefPoly>& components() const { return comps_; }
    CoefPoly component(int m) const;
    bool is_zero() const { return comps_.empty(); }
    // degree-0 ring element if homogeneous of degree 0
    std::optional<CoefPoly> as_ring_elem() const;
    int min_degree() const { return comps_.empty() ? 0 : comps_.begin()->first; }
    int max_degree() const { return comps_.empty() ? 0 : comps_.rbegin()->first; }
    int total_degree() const; // |m| + coefficient degree, max over components

    GwaElem operator-() const;
    friend GwaElem operator+(const GwaElem& a, const GwaElem& b);
    friend GwaElem operator-(const GwaElem& a, const GwaElem& b);
    friend GwaElem operator*(const GwaElem& a, const GwaElem& b);
    friend GwaElem operator*(const QRat& c, const GwaElem& a);
    friend GwaElem operator*(const CoefPoly& c, const GwaElem& a);
    GwaElem& operator+=(const GwaElem& b) { return *this = *this + b; }
    GwaElem& operator-=(const GwaElem& b) { return *this = *this - b; }
    GwaElem& operator*=(const GwaElem& b) { return *this = *this * b; }
    friend bool operator==(const GwaElem& a, const GwaElem& b);
    friend bool operator!=(const GwaElem& a, const GwaElem& b) { return !(a == b); }

    GwaElem pow(int e) const; // e < 0 only for units of the coefficient ring

    std::string str() const;

private:
    void add_component(int m, const CoefPoly& c);
    GwaPtr inst_;
    std::map<int, CoefPoly> comps_;
};

// Presentation and associativity checks; the associativity identity
// [[a,b]][[a+b,c]] = sigma^a([[b,c]]) [[a,b+c]] is swept over |a|,|b|,|c| <= bound.
Report verify_presentation(const GwaPtr& w, int assoc_bound = 2);

// Elements of the skew Laurent ring R[x^±;sigma], written sum c_m x^m.
class SkewLaurent {
public:
    explicit SkewLaurent(GwaPtr inst) : inst_(std::move(inst)) {}
    static SkewLaurent monomial(const GwaPtr& w, int m, const CoefPoly& c);

    const std::map<int, CoefPoly>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    friend SkewLaurent operator+(const SkewLaurent& a, const SkewLaurent& b);
    friend SkewLaurent operator*(const SkewLaurent& a, const SkewLaurent& b);
    friend SkewLaurent operator*(const CoefPoly& c, const SkewLaurent& a);
    friend bool operator==(const SkewLaurent& a, const SkewLaurent& b)
    {
        return a.comps_ == b.comps_;
    }
    SkewLaurent pow(int e) const; // any sign; x is a unit here

private:
    void add_component(int m, const CoefPoly& c);
    GwaPtr inst_;
    std::map<int, CoefPoly> comps_;
};

enum class LaurentEmbedding {
    y_to_z_xinv, // x -> x,  y -> z x^{-1}
    x_to_xz,     // x -> xz, y -> x^{-1}
};

SkewLaurent to_skew_laurent(const GwaElem& a, LaurentEmbedding variant);

struct NormalWitness {
    bool normal = false;
    CoefPoly unit; // sigma(r) = unit * r when normal
};

// Normality test for coefficient-ring elements, valid when no nonzero sigma
// power fixes z up to units; that side condition is itself checked for
// |m| <= hyp_bound and HypothesisUnverified is thrown on failure.
NormalWitness is_normal(const CoefPoly& r, const GwaPtr& w, int hyp_bound = 6);

// Commutation with the ring generators, x, and y; sufficient by generation.
bool is_central(const GwaElem& a);

} // namespace weyl
