#include "weyl/ideal.hpp"

#include <algorithm>
#include <atomic>

#include "weyl/special.hpp"

namespace weyl {

namespace {

std::atomic<int> g_degree_cap{40};

// internal monomials: base variables u,t,d then inverse variables; inverse
// variables last so they weigh least in the order
using GMono = std::array<int, 6>;

int gdeg(const GMono& m)
{
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// degree-reverse-lexicographic
struct MonoLess {
    bool operator()(const GMono& a, const GMono& b) const
    {
        int da = gdeg(a), db = gdeg(b);
        if (da != db) return da < db;
        for (int i = 5; i >= 0; --i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

using GPoly = std::map<GMono, QRat, MonoLess>;

void add_term(GPoly& p, const GMono& m, const QRat& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = p.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

GMono mono_mul(const GMono& a, const GMono& b)
{
    GMono r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const GMono& a, const GMono& b) // a | b
{
    for (int i = 0; i < 6; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

GMono mono_div(const GMono& b, const GMono& a)
{
    GMono r;
    for (int i = 0; i < 6; ++i) r[i] = b[i] - a[i];
    return r;
}

GMono mono_lcm(const GMono& a, const GMono& b)
{
    GMono r;
    for (int i = 0; i < 6; ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// p -= c * x^m * q
void sub_scaled(GPoly& p, const QRat& c, const GMono& m, const GPoly& q)
{
    for (const auto& [qm, qc] : q) add_term(p, mono_mul(m, qm), -(c * qc));
}

GPoly to_g(const CoefPoly& f)
{
    GPoly p;
    for (const auto& [e, c] : f.terms()) {
        GMono m{0, 0, 0, 0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            if (e[i] >= 0) m[i] = e[i];
            else m[3 + i] = -e[i];
        }
        add_term(p, m, c);
    }
    return p;
}

// ring homomorphism sending each inverse variable to the actual inverse
CoefPoly from_g(const GPoly& p, const RingSpec& ring)
{
    CoefPoly f = CoefPoly::zero(ring);
    for (const auto& [m, c] : p) {
        Expt e{m[0] - m[3], m[1] - m[4], m[2] - m[5]};
        f += CoefPoly::monomial(ring, e, c);
    }
    return f;
}

struct Row {
    GPoly p;                 // monic
    std::vector<GPoly> cof;  // p = sum cof[i] * input[i]
};

const GMono& lead(const GPoly& p) { return p.rbegin()->first; }

} // namespace

int default_degree_cap() { return g_degree_cap.load(); }
void set_default_degree_cap(int cap) { g_degree_cap.store(cap); }

IdealGens::IdealGens(RingSpec r, std::vector<CoefPoly> g) : ring(r)
{
    for (auto& f : g) {
        if (f.is_zero()) continue;
        if (!(f.ring() == ring)) throw Error("IdealGens: generator ring mismatch");
        gens.push_back(std::move(f));
    }
}

struct IdealOracle::Impl {
    int cap;
    bool certs = true;
    size_t n_inputs = 0;      // user generators + structural relations
    size_t n_user = 0;
    std::vector<Row> basis;   // monic Groebner basis, cofactors when certs
    std::vector<size_t> reducers; // rows forming a minimal basis

    void check_cap(const GPoly& p) const
    {
        if (!p.empty() && gdeg(lead(p)) > cap) throw DegreeCapExceeded(cap);
    }

    // Fully reduce p modulo the basis. The quantity (p + rem) - sum_i
    // cof[i]*input[i] is invariant across the loop, so a caller seeding
    // cof with a representation of p gets a representation of the remainder.
    GPoly reduce(GPoly p, std::vector<GPoly>* cof) const
    {
        GPoly rem;
        const auto& idx = reducers.empty() ? fallback_indices() : reducers;
        while (!p.empty()) {
            const GMono& lm = lead(p);
            const QRat lc = p.rbegin()->second;
            bool hit = false;
            for (size_t ri : idx) {
                const Row& row = basis[ri];
                if (!mono_divides(lead(row.p), lm)) continue;
                GMono m = mono_div(lm, lead(row.p));
                sub_scaled(p, lc, m, row.p);
                if (cof)
                    for (size_t i = 0; i < cof->size(); ++i)
                        sub_scaled((*cof)[i], lc, m, row.cof[i]);
                hit = true;
                break;
            }
            if (!hit) {
                add_term(rem, lm, lc);
                p.erase(std::prev(p.end()));
            }
        }
        return rem;
    }

    std::vector<size_t> fallback_indices() const
    {
        std::vector<size_t> all(basis.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }

    void pick_reducers()
    {
        reducers.clear();
        for (size_t i = 0; i < basis.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < basis.size() && !redundant; ++j)
                if (j != i && mono_divides(lead(basis[j].p), lead(basis[i].p)) &&
                    !(j > i && lead(basis[j].p) == lead(basis[i].p)))
                    redundant = true;
            if (!redundant) reducers.push_back(i);
        }
    }

    void buchberger(std::vector<GPoly> inputs)
    {
        n_inputs = inputs.size();
        for (size_t i = 0; i < inputs.size(); ++i) {
            if (inputs[i].empty()) continue;
            Row row;
            row.cof.resize(certs ? n_inputs : 0);
            QRat inv = inputs[i].rbegin()->second.inverse();
            for (const auto& [m, c] : inputs[i]) add_term(row.p, m, inv * c);
            if (certs) add_term(row.cof[i], GMono{0, 0, 0, 0, 0, 0}, inv);
            basis.push_back(std::move(row));
        }
        pick_reducers();

        struct Pair {
            size_t i, j;
            GMono lcm;
            int deg;
        };
        std::vector<Pair> pairs;
        auto push_pairs = [&](size_t j) {
            for (size_t i = 0; i < j; ++i) {
                GMono l = mono_lcm(lead(basis[i].p), lead(basis[j].p));
                // product criterion: coprime leading monomials reduce to zero
                if (l == mono_mul(lead(basis[i].p), lead(basis[j].p))) continue;
                pairs.push_back({i, j, l, gdeg(l)});
            }
        };
        for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

        while (!pairs.empty()) {
            auto it = std::min_element(pairs.begin(), pairs.end(),
                                       [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
            Pair pr = *it;
            pairs.erase(it);
            if (pr.deg > cap) throw DegreeCapExceeded(cap);

            const Row &fi = basis[pr.i], &fj = basis[pr.j];
            GMono mi = mono_div(pr.lcm, lead(fi.p)), mj = mono_div(pr.lcm, lead(fj.p));
            GPoly s;
            sub_scaled(s, QRat(-1), mi, fi.p);
            sub_scaled(s, QRat(1), mj, fj.p);
            std::vector<GPoly> cof(certs ? n_inputs : 0);
            if (certs)
                for (size_t k = 0; k < n_inputs; ++k) {
                    sub_scaled(cof[k], QRat(-1), mi, fi.cof[k]);
                    sub_scaled(cof[k], QRat(1), mj, fj.cof[k]);
                }
            GPoly rem = reduce(std::move(s), certs ? &cof : nullptr);
            if (rem.empty()) continue;
            check_cap(rem);
            Row row;
            QRat inv = rem.rbegin()->second.inverse();
            for (const auto& [m, c] : rem) add_term(row.p, m, inv * c);
            row.cof.resize(certs ? n_inputs : 0);
            if (certs)
                for (size_t k = 0; k < n_inputs; ++k)
                    for (const auto& [m, c] : cof[k]) add_term(row.cof[k], m, inv * c);
            basis.push_back(std::move(row));
            pick_reducers();
            push_pairs(basis.size() - 1);
        }
        pick_reducers();
    }
};

IdealOracle::IdealOracle(IdealGens ideal, int degree_cap, bool certificates)
    : ideal_(std::move(ideal)), impl_(std::make_unique<Impl>())
{
    impl_->cap = degree_cap;
    impl_->certs = certificates;
    std::vector<GPoly> inputs;
    for (const auto& g : ideal_.gens) inputs.push_back(to_g(g));
    impl_->n_user = inputs.size();
    // structural relations v * v^{-1} = 1 for each Laurent variable
    for (int i = 0; i < 3; ++i) {
        if (!ideal_.ring.invertible[i]) continue;
        GPoly rel;
        GMono m{0, 0, 0, 0, 0, 0};
        m[i] = 1;
        m[3 + i] = 1;
        add_term(rel, m, QRat(1));
        add_term(rel, GMono{0, 0, 0, 0, 0, 0}, QRat(-1));
        inputs.push_back(std::move(rel));
    }
    impl_->buchberger(std::move(inputs));
}

IdealOracle::~IdealOracle() = default;
IdealOracle::IdealOracle(IdealOracle&&) noexcept = default;
IdealOracle& IdealOracle::operator=(IdealOracle&&) noexcept = default;

Membership IdealOracle::contains(const CoefPoly& f) const
{
    if (!(f.ring() == ideal_.ring)) throw Error("ideal_member: ring mismatch");
    Membership out;
    if (f.is_zero()) {
        out.member = true;
        out.cofactors.assign(ideal_.gens.size(), CoefPoly::zero(ideal_.ring));
        return out;
    }
    if (!impl_->certs) throw Error("ideal oracle built without certificate support");
    // seed cof = 0; the reduce invariant leaves f - rem = -sum cof[i]*input[i]
    std::vector<GPoly> cof(impl_->n_inputs);
    GPoly rem = impl_->reduce(to_g(f), &cof);
    out.member = rem.empty();
    if (out.member) {
        for (size_t i = 0; i < impl_->n_user; ++i) {
            GPoly neg;
            sub_scaled(neg, QRat(1), GMono{0, 0, 0, 0, 0, 0}, cof[i]);
            out.cofactors.push_back(from_g(neg, ideal_.ring));
        }
    }
    return out;
}

bool IdealOracle::is_member(const CoefPoly& f) const
{
    if (!(f.ring() == ideal_.ring)) throw Error("ideal_member: ring mismatch");
    if (f.is_zero()) return true;
    return impl_->reduce(to_g(f), nullptr).empty();
}

std::vector<CoefPoly> IdealOracle::basis_generators() const
{
    std::vector<CoefPoly> out;
    for (size_t i : impl_->reducers) {
        CoefPoly g = from_g(impl_->basis[i].p, ideal_.ring);
        if (!g.is_zero()) out.push_back(std::move(g));
    }
    return out;
}

bool IdealOracle::is_unit_ideal() const { return is_member(CoefPoly::one(ideal_.ring)); }

Membership ideal_member(const CoefPoly& f, const IdealGens& ideal, int degree_cap)
{
    return IdealOracle(ideal, degree_cap).contains(f);
}

bool coprime_check(const CoefPoly& f, const CoefPoly& g)
{
    if (!(f.ring() == g.ring())) throw Error("coprime_check: ring mismatch");
    IdealGens pair(f.ring(), {f, g});
    return IdealOracle(pair).is_unit_ideal();
}

std::vector<CoefPoly> crt_idempotents(int n, int l1, int l2)
{
    if (l1 > l2) throw WindowEmpty();
    const RingSpec ring = RingSpec::laurent_ut();
    auto c_of = [&](int i) { return QRat::q_pow(2 * i) / (QRat::q_pow(2 * n) + QRat(1)); };

    std::vector<CoefPoly> es;
    CoefPoly t = CoefPoly::var(ring, Var::t);
    for (int j = l1; j <= l2; ++j) {
        // e_j = prod_{i != j} s^n_i / ((c_j - c_i) t); each factor evaluates
        // to 1 at u = c_j t and the numerator kills the other s^n_i
        CoefPoly e = CoefPoly::one(ring);
        for (int i = l1; i <= l2; ++i) {
            if (i == j) continue;
            CoefPoly denom = (c_of(j) - c_of(i)) * t;
            e *= snj_elem(n, i, ring) * denom.inverse_unit();
        }
        es.push_back(e);
    }

    // verify the three congruence properties against the membership oracle
    CoefPoly prod = CoefPoly::one(ring);
    for (int i = l1; i <= l2; ++i) prod *= snj_elem(n, i, ring);
    IdealOracle mod_prod(IdealGens(ring, {prod}));
    CoefPoly sum = CoefPoly::zero(ring);
    for (int j = l1; j <= l2; ++j) {
        const CoefPoly& e = es[j - l1];
        sum += e;
        if (!ideal_member(e - CoefPoly::one(ring), IdealGens(ring, {snj_elem(n, j, ring)})).member)
            throw Error("crt_idempotents: e_j != 1 mod s_j");
        for (int i = l1; i <= l2; ++i) {
            if (i == j) continue;
            if (!ideal_member(e, IdealGens(ring, {snj_elem(n, i, ring)})).member)
                throw Error("crt_idempotents: e_j != 0 mod s_i");
        }
    }
    if (!mod_prod.is_member(sum - CoefPoly::one(ring)))
        throw Error("crt_idempotents: idempotents do not sum to 1");
    return es;
}

} // namespace weyl
