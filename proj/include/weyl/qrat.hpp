#pragma once

// Exact arithmetic in Q(q): reduced fractions of integer polynomials in the
// quantum parameter q. A formal transcendental q encodes "q is not a root of
// unity" exactly, so identities proved here hold for every such q.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "weyl/errors.hpp"

namespace weyl {

// Dense univariate polynomial in q over Z. Coefficient i is the coefficient
// of q^i; no trailing zeros are stored.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(long c) { if (c != 0) coef_.push_back(mpz_class(c)); }
    explicit ZPoly(const mpz_class& c) { if (c != 0) coef_.push_back(c); }
    static ZPoly monomial(const mpz_class& c, int e);

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; } // -1 for zero
    const mpz_class& leading() const { return coef_.back(); }
    mpz_class coeff(int i) const;

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coef_ == b.coef_; }
    std::strong_ordering operator<=>(const ZPoly& b) const;

    mpz_class content() const;           // gcd of coefficients, sign of leading
    static ZPoly gcd(const ZPoly& a, const ZPoly& b);
    static ZPoly exact_div(const ZPoly& a, const ZPoly& b); // asserts divisibility

    mpq_class eval(const mpq_class& q0) const;

    std::string str() const; // e.g. "q^2-1", "-2*q+3"

private:
    void trim();
    std::vector<mpz_class> coef_;
};

// Element of Q(q) in canonical form: gcd(num,den)=1, den != 0, and den has
// positive leading coefficient. Structural equality equals mathematical
// equality.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long n) : num_(n), den_(1) {}                       // NOLINT(google-explicit-constructor)
    QRat(const ZPoly& n, const ZPoly& d) : num_(n), den_(d) { canonicalize(); }
    explicit QRat(const ZPoly& n) : num_(n), den_(1) {}

    static QRat q() { return QRat(ZPoly::monomial(1, 1)); }
    static QRat q_pow(int e); // q^e, any sign
    static QRat from_int(const mpz_class& n) { return QRat(ZPoly(n)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return *this == QRat(1); }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    // degree as a valuation: deg num - deg den (INT32_MIN for zero)
    int degree() const;

    QRat operator-() const;
    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b); // throws DivisionByZero
    QRat& operator+=(const QRat& b) { return *this = *this + b; }
    QRat& operator-=(const QRat& b) { return *this = *this - b; }
    QRat& operator*=(const QRat& b) { return *this = *this * b; }
    QRat& operator/=(const QRat& b) { return *this = *this / b; }
    friend bool operator==(const QRat& a, const QRat& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    std::strong_ordering operator<=>(const QRat& b) const;

    QRat inverse() const;
    QRat pow(int e) const;

    // Exact evaluation at a rational point q0; throws PoleAtPoint if the
    // denominator vanishes there.
    mpq_class eval(const mpq_class& q0) const;

    // Canonical wire form "(num)/(den)".
    std::string str() const;
    std::string pretty() const; // "(...)/(...)" with "/(1)" dropped

private:
    void canonicalize();
    ZPoly num_, den_;
};

enum class ArithOp { add, sub, mul, div };
QRat qrat_arith(const QRat& a, const QRat& b, ArithOp op);
mpq_class qrat_eval(const QRat& f, const mpq_class& q0);

// Expression parser over q: integers, q, + - * / ^ (integer exponents,
// possibly negative), parentheses, unary minus. Whitespace insensitive.
// Accepts the canonical wire form.
QRat parse_qrat(const std::string& s);

} // namespace weyl
