#include "weyl/qrat.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace weyl {

// ---------------------------------------------------------------- ZPoly ----

ZPoly ZPoly::monomial(const mpz_class& c, int e)
{
    ZPoly p;
    if (c != 0) {
        p.coef_.assign(e + 1, mpz_class(0));
        p.coef_[e] = c;
    }
    return p;
}

mpz_class ZPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coef_.size())) return 0;
    return coef_[i];
}

void ZPoly::trim()
{
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

ZPoly ZPoly::operator-() const
{
    ZPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b)
{
    ZPoly r;
    r.coef_.resize(std::max(a.coef_.size(), b.coef_.size()));
    for (size_t i = 0; i < r.coef_.size(); ++i) r.coef_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly r;
    r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.coef_.size(); ++i) {
        if (a.coef_[i] == 0) continue;
        for (size_t j = 0; j < b.coef_.size(); ++j) r.coef_[i + j] += a.coef_[i] * b.coef_[j];
    }
    r.trim();
    return r;
}

std::strong_ordering ZPoly::operator<=>(const ZPoly& b) const
{
    if (coef_.size() != b.coef_.size())
        return coef_.size() < b.coef_.size() ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    for (size_t i = coef_.size(); i-- > 0;) {
        int c = cmp(coef_[i], b.coef_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

mpz_class ZPoly::content() const
{
    mpz_class g = 0;
    for (const auto& c : coef_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (!coef_.empty() && coef_.back() < 0) g = -g;
    return g;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a = q*b + rem; returns rem.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b)
{
    const int db = b.degree();
    const mpz_class lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        ZPoly shift = ZPoly::monomial(a.leading(), a.degree() - db);
        a = ZPoly(lb) * a - shift * b;
    }
    return a;
}

ZPoly primitive_part(const ZPoly& a)
{
    if (a.is_zero()) return a;
    return ZPoly::exact_div(a, ZPoly(a.content()));
}

} // namespace

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b)
{
    if (a.is_zero()) return b.is_zero() || b.leading() > 0 ? b : -b;
    if (b.is_zero()) return a.leading() > 0 ? a : -a;
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

    // factor out the common power of q first; powers of q dominate in practice
    auto valuation = [](const ZPoly& p) {
        int v = 0;
        while (p.coeff(v) == 0) ++v;
        return v;
    };
    int va = valuation(a), vb = valuation(b), v = std::min(va, vb);
    auto shift_down = [](const ZPoly& p, int k) {
        ZPoly r;
        for (int i = k; i <= p.degree(); ++i) r = r + ZPoly::monomial(p.coeff(i), i - k);
        return r;
    };
    ZPoly a1 = shift_down(a, va), b1 = shift_down(b, vb);
    ZPoly head = ZPoly::monomial(cg, v);
    if (a1.degree() == 0 || b1.degree() == 0) {
        if (head.leading() < 0) head = -head;
        return head;
    }

    // primitive PRS on the q-free parts
    ZPoly r0 = primitive_part(a1), r1 = primitive_part(b1);
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        ZPoly r2 = pseudo_rem(r0, r1);
        r0 = r1;
        r1 = r2.is_zero() ? r2 : primitive_part(r2);
    }
    ZPoly g = head * r0;
    if (g.leading() < 0) g = -g;
    return g;
}

ZPoly ZPoly::exact_div(const ZPoly& a, const ZPoly& b)
{
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    ZPoly rem = a, q;
    q.coef_.assign(a.degree() - b.degree() + 1, mpz_class(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        mpz_class c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(),
                    b.leading().get_mpz_t());
        if (r != 0) throw Error("exact_div: not divisible");
        int e = rem.degree() - b.degree();
        q.coef_[e] = c;
        rem = rem - ZPoly::monomial(c, e) * b;
    }
    if (!rem.is_zero()) throw Error("exact_div: not divisible");
    q.trim();
    return q;
}

mpq_class ZPoly::eval(const mpq_class& q0) const
{
    mpq_class v = 0;
    for (size_t i = coef_.size(); i-- > 0;) v = v * q0 + mpq_class(coef_[i]);
    return v;
}

std::string ZPoly::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpz_class c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ----------------------------------------------------------------- QRat ----

void QRat::canonicalize()
{
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    ZPoly g = ZPoly::gcd(num_, den_);
    num_ = ZPoly::exact_div(num_, g);
    den_ = ZPoly::exact_div(den_, g);
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRat QRat::q_pow(int e)
{
    if (e >= 0) return QRat(ZPoly::monomial(1, e));
    return QRat(ZPoly(1), ZPoly::monomial(1, -e));
}

int QRat::degree() const
{
    if (is_zero()) return INT32_MIN;
    return num_.degree() - den_.degree();
}

QRat QRat::operator-() const
{
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat operator+(const QRat& a, const QRat& b)
{
    // Knuth 4.5.1: with gcd(num,den) = 1 on both sides, only gcds against
    // the denominator gcd are needed to keep the sum reduced.
    if (a.num_.is_zero()) return b;
    if (b.num_.is_zero()) return a;
    ZPoly d1 = ZPoly::gcd(a.den_, b.den_);
    QRat r;
    if (d1 == ZPoly(1)) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        if (r.num_.is_zero()) r.den_ = ZPoly(1);
        return r;
    }
    ZPoly ar = ZPoly::exact_div(a.den_, d1), br = ZPoly::exact_div(b.den_, d1);
    ZPoly t = a.num_ * br + b.num_ * ar;
    if (t.is_zero()) return QRat(0);
    ZPoly d2 = ZPoly::gcd(t, d1);
    r.num_ = ZPoly::exact_div(t, d2);
    r.den_ = ar * ZPoly::exact_div(b.den_, d2);
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b)
{
    // cross-reduction keeps the product reduced without a final gcd
    if (a.num_.is_zero() || b.num_.is_zero()) return QRat(0);
    ZPoly g1 = ZPoly::gcd(a.num_, b.den_), g2 = ZPoly::gcd(b.num_, a.den_);
    QRat r;
    r.num_ = ZPoly::exact_div(a.num_, g1) * ZPoly::exact_div(b.num_, g2);
    r.den_ = ZPoly::exact_div(a.den_, g2) * ZPoly::exact_div(b.den_, g1);
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QRat operator/(const QRat& a, const QRat& b)
{
    if (b.is_zero()) throw DivisionByZero();
    return a * b.inverse();
}

std::strong_ordering QRat::operator<=>(const QRat& b) const
{
    if (auto c = num_ <=> b.num_; c != 0) return c;
    return den_ <=> b.den_;
}

QRat QRat::inverse() const
{
    if (is_zero()) throw DivisionByZero();
    QRat r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QRat QRat::pow(int e) const
{
    if (e < 0) return inverse().pow(-e);
    QRat r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

mpq_class QRat::eval(const mpq_class& q0) const
{
    mpq_class d = den_.eval(q0);
    if (d == 0) throw PoleAtPoint(str());
    mpq_class v = num_.eval(q0) / d;
    v.canonicalize();
    return v;
}

std::string QRat::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

std::string QRat::pretty() const
{
    if (den_ == ZPoly(1)) {
        if (num_.degree() <= 0) return num_.str();
        return "(" + num_.str() + ")";
    }
    return str();
}

QRat qrat_arith(const QRat& a, const QRat& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw Error("unreachable");
}

mpq_class qrat_eval(const QRat& f, const mpq_class& q0) { return f.eval(q0); }

// --------------------------------------------------------------- parser ----

namespace {

struct QParser {
    const std::string& s;
    size_t i = 0;

    explicit QParser(const std::string& in) : s(in) {}

    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c)
    {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    QRat expr()
    {
        QRat v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    QRat term()
    {
        QRat v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) v /= factor();
            else return v;
        }
    }

    QRat factor()
    {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        QRat v = atom();
        skip();
        if (eat('^')) v = v.pow(integer());
        return v;
    }

    QRat atom()
    {
        skip();
        if (i >= s.size()) throw ParseError("unexpected end of input", i);
        if (s[i] == '(') {
            ++i;
            QRat v = expr();
            if (!eat(')')) throw ParseError("expected ')'", i);
            return v;
        }
        if (s[i] == 'q') {
            ++i;
            return QRat::q();
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            mpz_class n(s.substr(i, j - i));
            i = j;
            return QRat::from_int(n);
        }
        throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    }

    int integer()
    {
        skip();
        bool paren = eat('(');
        skip();
        int sign = 1;
        if (eat('-')) sign = -1;
        else if (eat('+')) sign = 1;
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer exponent", i);
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        long v = std::strtol(s.substr(i, j - i).c_str(), nullptr, 10);
        i = j;
        if (paren && !eat(')')) throw ParseError("expected ')'", i);
        return static_cast<int>(sign * v);
    }
};

} // namespace

QRat parse_qrat(const std::string& s)
{
    QParser p(s);
    QRat v = p.expr();
    p.skip();
    if (p.i != s.size()) throw ParseError("trailing input", p.i);
    return v;
}

} // namespace weyl
