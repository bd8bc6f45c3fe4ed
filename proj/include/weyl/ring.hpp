#pragma once

// Sparse (Laurent) polynomials in u, t, d over Q(q). A RingSpec pins down
// which variables exist and which are invertible; exponent signs are checked
// against it everywhere.

#include <array>
#include <map>
#include <optional>
#include <string>

#include "weyl/qrat.hpp"

namespace weyl {

enum class Var : int { u = 0, t = 1, d = 2 };
inline constexpr std::array<Var, 3> all_vars{Var::u, Var::t, Var::d};
inline constexpr const char* var_name(Var v)
{
    switch (v) {
    case Var::u: return "u";
    case Var::t: return "t";
    case Var::d: return "d";
    }
    return "?";
}

struct RingSpec {
    std::array<bool, 3> present{false, false, false};
    std::array<bool, 3> invertible{false, false, false};

    bool has(Var v) const { return present[static_cast<int>(v)]; }
    bool inv(Var v) const { return invertible[static_cast<int>(v)]; }
    friend bool operator==(const RingSpec& a, const RingSpec& b) = default;

    static RingSpec poly_utd() { return {{true, true, true}, {false, false, false}}; }
    static RingSpec laurent_u_poly_td() { return {{true, true, true}, {true, false, false}}; }
    static RingSpec laurent_ut() { return {{true, true, false}, {true, true, false}}; }
    static RingSpec laurent_ut_poly_d() { return {{true, true, true}, {true, true, false}}; }
    static RingSpec poly_u() { return {{true, false, false}, {false, false, false}}; }
    static RingSpec poly_ut() { return {{true, true, false}, {false, false, false}}; }

    std::string str() const;
};

// exponent vector, indexed by Var
using Expt = std::array<int, 3>;

class CoefPoly {
public:
    CoefPoly() = default;
    explicit CoefPoly(RingSpec ring) : ring_(ring) {}

    static CoefPoly zero(const RingSpec& r) { return CoefPoly(r); }
    static CoefPoly one(const RingSpec& r) { return scalar(r, QRat(1)); }
    static CoefPoly scalar(const RingSpec& r, const QRat& c);
    static CoefPoly var(const RingSpec& r, Var v, int e = 1);
    static CoefPoly monomial(const RingSpec& r, const Expt& e, const QRat& c);

    const RingSpec& ring() const { return ring_; }
    const std::map<Expt, QRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // true iff a single term c*m with m a monomial in invertible variables
    bool is_unit() const;
    // scalar (constant) value if the polynomial is one; nullopt otherwise
    std::optional<QRat> as_scalar() const;

    int total_degree() const; // sum of |exponents|, max over terms

    CoefPoly operator-() const;
    friend CoefPoly operator+(const CoefPoly& a, const CoefPoly& b);
    friend CoefPoly operator-(const CoefPoly& a, const CoefPoly& b);
    friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
    friend CoefPoly operator*(const QRat& c, const CoefPoly& a);
    CoefPoly& operator+=(const CoefPoly& b) { return *this = *this + b; }
    CoefPoly& operator-=(const CoefPoly& b) { return *this = *this - b; }
    CoefPoly& operator*=(const CoefPoly& b) { return *this = *this * b; }
    friend bool operator==(const CoefPoly& a, const CoefPoly& b)
    {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CoefPoly& a, const CoefPoly& b) { return !(a == b); }

    CoefPoly pow(int e) const; // e < 0 requires a unit
    CoefPoly inverse_unit() const;

    QRat eval(const std::array<QRat, 3>& point) const;
    // substitute images[v] for each present variable; nullopt image = keep v
    CoefPoly substitute(const std::array<std::optional<CoefPoly>, 3>& images,
                        const RingSpec& target) const;

    // exact division test in the Laurent ring: g | *this (g != 0); quotient on success
    std::optional<CoefPoly> divided_by(const CoefPoly& g) const;

    // same polynomial in a wider/narrower ring (throws if exponents do not fit)
    CoefPoly cast(const RingSpec& target) const;

    std::string str() const;

private:
    void add_term(const Expt& e, const QRat& c);
    void check_expt(const Expt& e) const;
    RingSpec ring_;
    std::map<Expt, QRat> terms_;
};

} // namespace weyl
