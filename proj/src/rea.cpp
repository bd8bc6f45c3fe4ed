#include "weyl/rea.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "weyl/qmatrix.hpp"

namespace weyl {

SigmaMap rea_sigma(const RingSpec& ring)
{
    QRat q2 = QRat::q_pow(2);
    std::array<QRat, 3> scale{q2, QRat(1), QRat(1)};
    return SigmaMap::scaling(ring, scale);
}

CoefPoly rea_z(const RingSpec& ring)
{
    CoefPoly u = CoefPoly::var(ring, Var::u), t = CoefPoly::var(ring, Var::t),
             d = CoefPoly::var(ring, Var::d);
    return d + QRat::q_pow(-2) * (t * u) - QRat::q_pow(-4) * (u * u);
}

const GwaPtr& rea_instance()
{
    static GwaPtr inst = [] {
        RingSpec ring = RingSpec::poly_utd();
        return make_gwa(ring, rea_sigma(ring), rea_z(ring));
    }();
    return inst;
}

const GwaPtr& rea_ut_instance()
{
    static GwaPtr inst = [] {
        RingSpec ring = RingSpec::laurent_ut_poly_d();
        return make_gwa(ring, rea_sigma(ring), rea_z(ring));
    }();
    return inst;
}

// ---------------------------------------------------------------- parser ----

namespace {

struct Node {
    enum class Kind { integer, symbol, add, sub, mul, neg, pow };
    Kind kind;
    mpz_class value;         // integer
    std::string name;        // symbol
    int exponent = 0;        // pow
    std::vector<Node> args;
};

struct WordParser {
    const std::string& s;
    size_t i = 0;
    explicit WordParser(const std::string& in) : s(in) {}

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

    Node expr()
    {
        Node v = term();
        for (;;) {
            if (eat('+')) v = Node{Node::Kind::add, {}, "", 0, {std::move(v), term()}};
            else if (eat('-')) v = Node{Node::Kind::sub, {}, "", 0, {std::move(v), term()}};
            else return v;
        }
    }

    Node term()
    {
        Node v = factor();
        while (eat('*')) v = Node{Node::Kind::mul, {}, "", 0, {std::move(v), factor()}};
        return v;
    }

    Node factor()
    {
        skip();
        if (eat('-')) return Node{Node::Kind::neg, {}, "", 0, {factor()}};
        if (eat('+')) return factor();
        Node v = atom();
        skip();
        if (eat('^')) {
            int e = integer();
            v = Node{Node::Kind::pow, {}, "", e, {std::move(v)}};
        }
        return v;
    }

    Node atom()
    {
        skip();
        if (i >= s.size()) throw ParseError("unexpected end of input", i);
        if (s[i] == '(') {
            ++i;
            Node v = expr();
            if (!eat(')')) throw ParseError("expected ')'", i);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Node v{Node::Kind::integer, mpz_class(s.substr(i, j - i)), "", 0, {}};
            i = j;
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])))) ++j;
            Node v{Node::Kind::symbol, {}, s.substr(i, j - i), 0, {}};
            i = j;
            return v;
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
        long v = std::stol(s.substr(i, j - i));
        i = j;
        if (paren && !eat(')')) throw ParseError("expected ')'", i);
        return static_cast<int>(sign * v);
    }
};

template <class V>
V eval_node(const Node& n, const std::function<V(const std::string&)>& sym,
            const std::function<V(const mpz_class&)>& num)
{
    switch (n.kind) {
    case Node::Kind::integer: return num(n.value);
    case Node::Kind::symbol: return sym(n.name);
    case Node::Kind::add: return eval_node(n.args[0], sym, num) + eval_node(n.args[1], sym, num);
    case Node::Kind::sub: return eval_node(n.args[0], sym, num) - eval_node(n.args[1], sym, num);
    case Node::Kind::mul: return eval_node(n.args[0], sym, num) * eval_node(n.args[1], sym, num);
    case Node::Kind::neg: return num(-1) * eval_node(n.args[0], sym, num);
    case Node::Kind::pow: return eval_node(n.args[0], sym, num).pow(n.exponent);
    }
    throw Error("unreachable");
}

Node parse_word(const std::string& word)
{
    WordParser p(word);
    Node n = p.expr();
    p.skip();
    if (p.i != word.size()) throw ParseError("trailing input", p.i);
    return n;
}

} // namespace

GwaElem rea_to_gwa(const std::string& word)
{
    const GwaPtr& w = rea_instance();
    const RingSpec& ring = w->ring();
    CoefPoly u = CoefPoly::var(ring, Var::u), t = CoefPoly::var(ring, Var::t);
    std::function<GwaElem(const std::string&)> sym = [&](const std::string& name) -> GwaElem {
        if (name == "u22") return GwaElem::ring_elem(w, u);
        if (name == "u11") return GwaElem::ring_elem(w, t - QRat::q_pow(-2) * u);
        if (name == "u21" || name == "x") return GwaElem::x(w);
        if (name == "u12" || name == "y") return GwaElem::y(w);
        if (name == "u") return GwaElem::var(w, Var::u);
        if (name == "t") return GwaElem::var(w, Var::t);
        if (name == "d") return GwaElem::var(w, Var::d);
        if (name == "q") return GwaElem::scalar(w, QRat::q());
        throw ParseError("unknown identifier '" + name + "'", 0);
    };
    std::function<GwaElem(const mpz_class&)> num = [&](const mpz_class& v) {
        return GwaElem::scalar(w, QRat::from_int(v));
    };
    return eval_node(parse_word(word), sym, num);
}

CoefPoly parse_ring_poly(const std::string& expr, const RingSpec& ring)
{
    std::function<CoefPoly(const std::string&)> sym = [&](const std::string& name) -> CoefPoly {
        if (name == "u") return CoefPoly::var(ring, Var::u);
        if (name == "t") return CoefPoly::var(ring, Var::t);
        if (name == "d") return CoefPoly::var(ring, Var::d);
        if (name == "q") return CoefPoly::scalar(ring, QRat::q());
        throw ParseError("unknown ring identifier '" + name + "'", 0);
    };
    std::function<CoefPoly(const mpz_class&)> num = [&](const mpz_class& v) {
        return CoefPoly::scalar(ring, QRat::from_int(v));
    };
    return eval_node(parse_word(expr), sym, num);
}

// ------------------------------------------------------------- relations ----

Report check_relations()
{
    static const std::pair<const char*, const char*> rels[] = {
        {"u11*u22 = u22*u11", "u11*u22 - u22*u11"},
        {"u11*u12 = u12*(u11+(q^-2-1)u22)", "u11*u12 - u12*(u11+(q^-2-1)*u22)"},
        {"u21*u11 = (u11+(q^-2-1)u22)*u21", "u21*u11 - (u11+(q^-2-1)*u22)*u21"},
        {"u22*u12 = q^2 u12*u22", "u22*u12 - q^2*u12*u22"},
        {"u21*u22 = q^2 u22*u21", "u21*u22 - q^2*u22*u21"},
        {"u21*u12 - u12*u21 = (q^-2-1)u22(u22-u11)",
         "u21*u12 - u12*u21 - (q^-2-1)*u22*(u22-u11)"},
    };
    Report rep;
    for (const auto& [name, expr] : rels) {
        GwaElem v = rea_to_gwa(expr);
        rep.add(name, v.is_zero(), v.is_zero() ? "" : "residue " + v.str());
    }
    return rep;
}

// ----------------------------------------------------------- automorphisms ----

ReaAut::ReaAut(QRat a, QRat g) : alpha(std::move(a)), gamma(std::move(g))
{
    if (alpha.is_zero() || gamma.is_zero()) throw Error("ReaAut: parameters must be nonzero");
}

GwaElem apply_aut(const ReaAut& phi, const GwaElem& a)
{
    const GwaPtr& w = a.instance();
    const RingSpec& ring = w->ring();
    std::array<std::optional<CoefPoly>, 3> images;
    images[0] = phi.alpha * CoefPoly::var(ring, Var::u);
    if (ring.has(Var::t)) images[1] = phi.alpha * CoefPoly::var(ring, Var::t);
    if (ring.has(Var::d)) images[2] = (phi.alpha * phi.alpha) * CoefPoly::var(ring, Var::d);

    QRat xmul = phi.alpha * phi.gamma;          // x -> (alpha gamma) x
    QRat ymul = phi.alpha / phi.gamma;          // y -> (alpha/gamma) y
    GwaElem out(w);
    for (const auto& [m, c] : a.components()) {
        QRat scale = m >= 0 ? xmul.pow(m) : ymul.pow(-m);
        out += GwaElem::basis(w, m, scale * c.substitute(images, ring));
    }
    return out;
}

// ----------------------------------------------------------------- scans ----

namespace {

struct MonoKey {
    int gen; // which commutator produced the row
    Expt e;
    int m;
    auto operator<=>(const MonoKey&) const = default;
};

} // namespace

std::vector<GwaElem> central_scan(int bound, int cap)
{
    if (bound > cap) throw DegreeCapExceeded(cap);
    const GwaPtr& w = rea_instance();
    const RingSpec& ring = w->ring();

    // column basis: all u^a t^b d^c v_m with a+b+c+|m| <= bound
    std::vector<MonoKey> basis;
    for (int m = -bound; m <= bound; ++m)
        for (int a = 0; a + std::abs(m) <= bound; ++a)
            for (int b = 0; a + b + std::abs(m) <= bound; ++b)
                for (int c = 0; a + b + c + std::abs(m) <= bound; ++c)
                    basis.push_back({0, {a, b, c}, m});

    std::vector<GwaElem> gens{GwaElem::var(w, Var::u), GwaElem::x(w), GwaElem::y(w)};

    std::map<MonoKey, int> row_of;
    std::vector<std::map<int, QRat>> rows; // sparse rows over the column basis
    for (size_t col = 0; col < basis.size(); ++col) {
        GwaElem g = GwaElem::basis(
            w, basis[col].m, CoefPoly::monomial(ring, basis[col].e, QRat(1)));
        for (size_t k = 0; k < gens.size(); ++k) {
            GwaElem comm = gens[k] * g - g * gens[k];
            for (const auto& [deg, coefpoly] : comm.components())
                for (const auto& [e, coef] : coefpoly.terms()) {
                    MonoKey key{static_cast<int>(k), e, deg};
                    auto [it, fresh] = row_of.emplace(key, static_cast<int>(rows.size()));
                    if (fresh) rows.emplace_back();
                    rows[it->second][static_cast<int>(col)] = coef;
                }
        }
    }

    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, coef] : rows[r]) m.at(static_cast<int>(r), col) = coef;

    std::vector<GwaElem> out;
    for (const auto& vec : qmat_kernel(m)) {
        GwaElem e(w);
        for (size_t col = 0; col < basis.size(); ++col)
            if (!vec[col].is_zero())
                e += GwaElem::basis(w, basis[col].m,
                                    CoefPoly::monomial(ring, basis[col].e, vec[col]));
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<NormalFamily> normal_scan(int bound, int cap)
{
    if (bound > cap) throw DegreeCapExceeded(cap);
    const GwaPtr& w = rea_instance();
    const RingSpec& ring = w->ring();
    std::vector<NormalFamily> out;
    for (int a = 0; a <= bound; ++a) {
        NormalFamily fam;
        fam.u_power = a;
        fam.eigenvalue = QRat::q_pow(2 * a);
        CoefPoly ua = CoefPoly::var(ring, Var::u).pow(a);
        CoefPoly combo = CoefPoly::zero(ring);
        for (int b = 0; a + b <= bound; ++b)
            for (int c = 0; a + b + c <= bound; ++c) {
                CoefPoly td = CoefPoly::monomial(ring, {0, b, c}, QRat(1));
                // every monomial in the family is a sigma-eigenvector with
                // eigenvalue q^{2a}
                if (w->sigma().apply(ua * td, 1) != fam.eigenvalue * (ua * td))
                    throw Error("normal_scan: eigenvalue bookkeeping failed");
                fam.monomials.push_back(td);
                combo += QRat(1 + b + 2 * c) * td;
            }
        NormalWitness nw = is_normal(ua * combo, w);
        if (!nw.normal || !(nw.unit == CoefPoly::scalar(ring, fam.eigenvalue)))
            throw Error("normal_scan: is_normal rejected a family representative");
        out.push_back(std::move(fam));
    }
    return out;
}

} // namespace weyl
