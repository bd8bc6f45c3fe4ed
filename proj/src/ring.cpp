#include "weyl/ring.hpp"

#include <sstream>

namespace weyl {

std::string RingSpec::str() const
{
    std::string s = "k[";
    bool first = true;
    for (Var v : all_vars) {
        if (!has(v)) continue;
        if (!first) s += ",";
        s += var_name(v);
        if (inv(v)) s += "^±";
        first = false;
    }
    return s + "]";
}

void CoefPoly::check_expt(const Expt& e) const
{
    for (Var v : all_vars) {
        int i = static_cast<int>(v);
        if (e[i] == 0) continue;
        if (!ring_.has(v))
            throw SubstitutionLeavesRing(std::string(var_name(v)) + " not in " + ring_.str());
        if (e[i] < 0 && !ring_.inv(v))
            throw SubstitutionLeavesRing(std::string(var_name(v)) + "^" + std::to_string(e[i]) +
                                         " in " + ring_.str());
    }
}

void CoefPoly::add_term(const Expt& e, const QRat& c)
{
    if (c.is_zero()) return;
    check_expt(e);
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoefPoly CoefPoly::scalar(const RingSpec& r, const QRat& c)
{
    CoefPoly p(r);
    p.add_term({0, 0, 0}, c);
    return p;
}

CoefPoly CoefPoly::var(const RingSpec& r, Var v, int e)
{
    CoefPoly p(r);
    Expt ex{0, 0, 0};
    ex[static_cast<int>(v)] = e;
    p.add_term(ex, QRat(1));
    return p;
}

CoefPoly CoefPoly::monomial(const RingSpec& r, const Expt& e, const QRat& c)
{
    CoefPoly p(r);
    p.add_term(e, c);
    return p;
}

bool CoefPoly::is_unit() const
{
    if (terms_.size() != 1) return false;
    const Expt& e = terms_.begin()->first;
    for (Var v : all_vars)
        if (e[static_cast<int>(v)] != 0 && !ring_.inv(v)) return false;
    return true;
}

std::optional<QRat> CoefPoly::as_scalar() const
{
    if (terms_.empty()) return QRat(0);
    if (terms_.size() != 1 || terms_.begin()->first != Expt{0, 0, 0}) return std::nullopt;
    return terms_.begin()->second;
}

int CoefPoly::total_degree() const
{
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) d += x >= 0 ? x : -x;
        deg = std::max(deg, d);
    }
    return deg;
}

CoefPoly CoefPoly::operator-() const
{
    CoefPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

CoefPoly operator+(const CoefPoly& a, const CoefPoly& b)
{
    if (a.ring_ != b.ring_) throw Error("CoefPoly: ring mismatch");
    CoefPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

CoefPoly operator-(const CoefPoly& a, const CoefPoly& b) { return a + (-b); }

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b)
{
    if (a.ring_ != b.ring_) throw Error("CoefPoly: ring mismatch");
    CoefPoly r(a.ring_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Expt e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            r.add_term(e, ca * cb);
        }
    return r;
}

CoefPoly operator*(const QRat& c, const CoefPoly& a)
{
    CoefPoly r(a.ring_);
    for (const auto& [e, ca] : a.terms_) r.add_term(e, c * ca);
    return r;
}

CoefPoly CoefPoly::inverse_unit() const
{
    if (!is_unit()) throw Error("inverse of a non-unit: " + str());
    const auto& [e, c] = *terms_.begin();
    return monomial(ring_, {-e[0], -e[1], -e[2]}, c.inverse());
}

CoefPoly CoefPoly::pow(int e) const
{
    if (e < 0) return inverse_unit().pow(-e);
    CoefPoly r = one(ring_), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

QRat CoefPoly::eval(const std::array<QRat, 3>& point) const
{
    QRat v(0);
    for (const auto& [e, c] : terms_) {
        QRat term = c;
        for (Var var : all_vars) {
            int i = static_cast<int>(var);
            if (e[i] != 0) term *= point[i].pow(e[i]);
        }
        v += term;
    }
    return v;
}

CoefPoly CoefPoly::substitute(const std::array<std::optional<CoefPoly>, 3>& images,
                              const RingSpec& target) const
{
    CoefPoly r(target);
    for (const auto& [e, c] : terms_) {
        CoefPoly term = scalar(target, c);
        for (Var v : all_vars) {
            int i = static_cast<int>(v);
            if (e[i] == 0) continue;
            CoefPoly img = images[i] ? *images[i] : var(target, v);
            if (e[i] < 0 && !img.is_unit())
                throw SubstitutionLeavesRing("negative power of image of " + std::string(var_name(v)));
            term *= img.pow(e[i]);
        }
        r += term;
    }
    return r;
}

namespace {

// divides p by the per-variable minimal-exponent monomial, returning that
// exponent vector; afterwards every variable has minimum exponent 0
Expt normalize_corner(CoefPoly& p, const RingSpec& wide)
{
    Expt mn{0, 0, 0};
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < 3; ++i) mn[i] = first ? e[i] : std::min(mn[i], e[i]);
        first = false;
    }
    CoefPoly shifted(wide);
    for (const auto& [e, c] : p.terms())
        shifted += CoefPoly::monomial(wide, {e[0] - mn[0], e[1] - mn[1], e[2] - mn[2]}, c);
    p = shifted;
    return mn;
}

} // namespace

std::optional<CoefPoly> CoefPoly::divided_by(const CoefPoly& g) const
{
    if (g.is_zero()) throw DivisionByZero();
    if (is_zero()) return zero(ring_);
    // Shift both operands into the polynomial orthant so lex division
    // terminates, divide there, then move the corner monomial back.
    RingSpec wide = ring_;
    for (int i = 0; i < 3; ++i) wide.invertible[i] = wide.present[i];
    CoefPoly f = cast(wide), gs = g.cast(wide);
    Expt fm = normalize_corner(f, wide), gm = normalize_corner(gs, wide);

    CoefPoly rem = f, quot(wide);
    const auto& [ge, gc] = *gs.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        Expt e{re[0] - ge[0], re[1] - ge[1], re[2] - ge[2]};
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) return std::nullopt;
        CoefPoly m = monomial(wide, e, rc / gc);
        quot += m;
        rem -= m * gs;
    }
    Expt shift{fm[0] - gm[0], fm[1] - gm[1], fm[2] - gm[2]};
    for (Var v : all_vars) {
        int i = static_cast<int>(v);
        if (shift[i] < 0 && !ring_.inv(v)) {
            // quotient would need v^{-1}; check it is not actually needed
            int qmin = 0;
            bool first = true;
            for (const auto& [e, c] : quot.terms()) {
                qmin = first ? e[i] : std::min(qmin, e[i]);
                first = false;
            }
            if (qmin + shift[i] < 0) return std::nullopt;
        }
    }
    return (quot * monomial(wide, shift, QRat(1))).cast(ring_);
}

CoefPoly CoefPoly::cast(const RingSpec& target) const
{
    CoefPoly r(target);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

std::string CoefPoly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.pretty();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        bool has_vars = e != Expt{0, 0, 0};
        if (!has_vars || cs != "1") {
            os << cs;
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (Var v : all_vars) {
            int i = static_cast<int>(v);
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            os << var_name(v);
            if (e[i] != 1) os << "^" << e[i];
            firstv = false;
        }
        first = false;
    }
    return os.str();
}

} // namespace weyl
