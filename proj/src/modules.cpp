#include "weyl/modules.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "weyl/rea.hpp"

namespace weyl {

QRat Weight::value(Var v) const
{
    switch (v) {
    case Var::u: return u0;
    case Var::t: return t0;
    case Var::d: return d0;
    }
    throw Error("unreachable");
}

std::string Weight::str() const
{
    return "(" + u0.pretty() + ", " + t0.pretty() + ", " + d0.pretty() + ")";
}

// ---------------------------------------------------------- WeightModule ----

WeightModule::WeightModule(GwaPtr inst, std::array<std::optional<QMatrix>, 3> ring_actions,
                           QMatrix x_action, QMatrix y_action)
    : inst_(std::move(inst)), ring_(std::move(ring_actions)), x_(std::move(x_action)),
      y_(std::move(y_action))
{
    dim_ = x_.rows();
    auto square = [&](const QMatrix& m) { return m.rows() == dim_ && m.cols() == dim_; };
    if (!square(x_) || !square(y_)) throw Error("WeightModule: action shapes disagree");
    for (Var v : all_vars) {
        int i = static_cast<int>(v);
        if (inst_->ring().has(v)) {
            if (!ring_[i] || !square(*ring_[i]))
                throw Error("WeightModule: missing or misshapen action for " +
                            std::string(var_name(v)));
        } else if (ring_[i]) {
            throw Error("WeightModule: action supplied for absent variable");
        }
    }
}

const QMatrix& WeightModule::action(Var v) const
{
    const auto& m = ring_[static_cast<int>(v)];
    if (!m) throw Error("WeightModule: no action for " + std::string(var_name(v)));
    return *m;
}

QMatrix WeightModule::ring_matrix(const CoefPoly& f) const
{
    QMatrix out(dim_, dim_);
    for (const auto& [e, c] : f.terms()) {
        QMatrix term = QMatrix::identity(dim_);
        for (Var v : all_vars) {
            int i = static_cast<int>(v);
            if (e[i] == 0) continue;
            if (e[i] < 0) throw UnsupportedShape("negative exponent in ring action evaluation");
            term = term * action(v).pow(e[i]);
        }
        out = out + c * term;
    }
    return out;
}

void WeightModule::validate() const
{
    const SigmaMap& s = inst_->sigma();
    std::vector<Var> vars;
    for (Var v : all_vars)
        if (inst_->ring().has(v)) vars.push_back(v);

    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (!(action(vars[i]) * action(vars[j]) == action(vars[j]) * action(vars[i])))
                throw RelationFailure(std::string("ring actions do not commute: ") +
                                      var_name(vars[i]) + ", " + var_name(vars[j]));

    for (Var v : vars) {
        CoefPoly xv = CoefPoly::var(inst_->ring(), v);
        if (!(x_ * action(v) == ring_matrix(s.apply(xv, 1)) * x_))
            throw RelationFailure(std::string("x relation fails on ") + var_name(v));
        if (!(y_ * action(v) == ring_matrix(s.apply(xv, -1)) * y_))
            throw RelationFailure(std::string("y relation fails on ") + var_name(v));
    }

    if (!(y_ * x_ == ring_matrix(inst_->z()))) throw RelationFailure("yx != z");
    if (!(x_ * y_ == ring_matrix(s.apply(inst_->z(), 1)))) throw RelationFailure("xy != sigma(z)");
}

std::vector<Weight> WeightModule::weights() const
{
    std::array<std::vector<QRat>, 3> diag;
    for (Var v : all_vars) {
        int i = static_cast<int>(v);
        if (!inst_->ring().has(v)) {
            diag[i].assign(dim_, QRat(0));
            continue;
        }
        if (!action(v).is_diagonal())
            throw UnsupportedShape(std::string("action of ") + var_name(v) + " is not diagonal");
        diag[i] = action(v).diagonal_entries();
    }
    std::vector<Weight> out;
    for (int k = 0; k < dim_; ++k) out.push_back({diag[0][k], diag[1][k], diag[2][k]});
    return out;
}

WeightModule WeightModule::direct_sum(const WeightModule& other) const
{
    if (inst_ != other.inst_) throw InstanceMismatch();
    int n = dim_ + other.dim_;
    auto block = [&](const QMatrix& a, const QMatrix& b) {
        QMatrix m(n, n);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m.at(i, j) = a.at(i, j);
        for (int i = 0; i < other.dim_; ++i)
            for (int j = 0; j < other.dim_; ++j) m.at(dim_ + i, dim_ + j) = b.at(i, j);
        return m;
    };
    std::array<std::optional<QMatrix>, 3> ring;
    for (Var v : all_vars) {
        int i = static_cast<int>(v);
        if (inst_->ring().has(v)) ring[i] = block(action(v), other.action(v));
    }
    return WeightModule(inst_, ring, block(x_, other.x_), block(y_, other.y_));
}

// ------------------------------------------------------ weight shifting ----

namespace {

struct MovingVar {
    Var var;
    QRat scale;
};

// the unique variable scaled nontrivially by sigma
MovingVar moving_var(const GwaPtr& w)
{
    auto scales = w->sigma().diagonal_scales();
    if (!scales) throw UnsupportedShape("sigma is not diagonal");
    std::optional<MovingVar> mv;
    for (Var v : all_vars) {
        int i = static_cast<int>(v);
        if (!w->ring().has(v) || (*scales)[i].is_one()) continue;
        if (mv) throw UnsupportedShape("more than one sigma-moving variable");
        mv = MovingVar{v, (*scales)[i]};
    }
    if (!mv) throw UnsupportedShape("sigma fixes the whole ring");
    if (mv->scale.degree() == 0)
        throw UnsupportedShape("moving scale is not separated by q-degree");
    return *mv;
}

} // namespace

QRat shifted_z_value(const GwaPtr& w, const Weight& wt, int m)
{
    return w->sigma().apply(w->z(), m).eval(wt.point());
}

Weight shift_weight(const GwaPtr& w, const Weight& wt, int m)
{
    auto scales = w->sigma().diagonal_scales();
    if (!scales) throw UnsupportedShape("sigma is not diagonal");
    // sigma^m(<v - v0>) = <v - scale^{-m} v0>
    Weight out = wt;
    out.u0 = (*scales)[0].pow(-m) * wt.u0;
    out.t0 = (*scales)[1].pow(-m) * wt.t0;
    out.d0 = (*scales)[2].pow(-m) * wt.d0;
    return out;
}

std::vector<int> z_vanishing_shifts(const GwaPtr& w, const Weight& wt)
{
    MovingVar mv = moving_var(w);
    const int mvi = static_cast<int>(mv.var);

    // group z's terms by the moving exponent a: the value of sigma^m(z) at
    // the weight is P(scale^m) for P(Q) = sum_a A_a Q^a
    std::map<int, QRat> coef;
    for (const auto& [e, c] : w->z().terms()) {
        QRat val = c;
        for (Var v : all_vars) {
            int i = static_cast<int>(v);
            if (e[i] != 0) val *= wt.value(v).pow(e[i]);
        }
        coef[e[mvi]] += val;
    }
    std::vector<std::pair<int, QRat>> nz;
    for (const auto& [a, v] : coef)
        if (!v.is_zero()) nz.emplace_back(a, v);

    // any integer zero m must let two exponents a of P share the maximal
    // q-degree deg(A_a) + a*m*deg(scale); collect the pairwise candidates
    const int s = mv.scale.degree();
    std::set<int> candidates;
    for (size_t i = 0; i < nz.size(); ++i)
        for (size_t j = i + 1; j < nz.size(); ++j) {
            int num = nz[i].second.degree() - nz[j].second.degree();
            int den = s * (nz[j].first - nz[i].first);
            if (den != 0 && num % den == 0) candidates.insert(num / den);
        }
    std::vector<int> zeros;
    for (int m : candidates)
        if (shifted_z_value(w, wt, m).is_zero()) zeros.push_back(m);
    return zeros;
}

// --------------------------------------------------------- constructions ----

namespace {

WeightModule build_truncation(const GwaPtr& w, const Weight& wt, int n, int n_prime)
{
    const int dim = n + n_prime - 1;
    // basis e_i for i in [-n'+1, n-1]; column index is i + n' - 1
    auto idx = [&](int i) { return i + n_prime - 1; };

    std::array<std::optional<QMatrix>, 3> ring;
    for (Var v : all_vars) {
        if (!w->ring().has(v)) continue;
        std::vector<QRat> diag(dim);
        for (int i = -n_prime + 1; i <= n - 1; ++i)
            diag[idx(i)] = shift_weight(w, wt, i).value(v);
        ring[static_cast<int>(v)] = QMatrix::diagonal(diag);
    }

    QMatrix x(dim, dim), y(dim, dim);
    for (int i = -n_prime + 1; i <= n - 1; ++i) {
        if (i + 1 <= n - 1) x.at(idx(i + 1), idx(i)) = QRat(1);
        if (i - 1 >= -n_prime + 1) y.at(idx(i - 1), idx(i)) = shifted_z_value(w, wt, 1 - i);
    }

    WeightModule m(w, ring, x, y);
    m.validate();
    return m;
}

} // namespace

SimpleModuleResult simple_module(const GwaPtr& w, const Weight& wt)
{
    MovingVar mv = moving_var(w);
    if (wt.value(mv.var).is_zero()) throw ZeroU0();

    SimpleModuleResult out;
    std::vector<int> zeros = z_vanishing_shifts(w, wt);
    std::optional<int> top, bottom; // zero m <= 0 maximal, zero m >= 1 minimal
    for (int m : zeros) {
        if (m <= 0 && (!top || m > *top)) top = m;
        if (m >= 1 && (!bottom || m < *bottom)) bottom = m;
    }
    if (!top || !bottom) {
        std::ostringstream os;
        os << "no positive-integer cut pair: sigma^m(z) vanishes only at m in {";
        for (size_t i = 0; i < zeros.size(); ++i) os << (i ? "," : "") << zeros[i];
        os << "}";
        out.infinite_reason = os.str();
        return out;
    }
    out.n = 1 - *top;
    out.n_prime = *bottom;
    out.module = build_truncation(w, wt, out.n, out.n_prime);
    return out;
}

WeightModule rea_simple_module(int n, const QRat& u0)
{
    Weight wt{u0, (QRat::q_pow(-2 * n) + QRat(1)) * u0,
              -QRat(1) * QRat::q_pow(-2 * n) * u0 * u0};
    SimpleModuleResult r = simple_module(rea_instance(), wt);
    if (!r.module) throw Error("rea_simple_module: unexpected infinite module");
    if (r.module->dim() != n) throw Error("rea_simple_module: dimension bookkeeping failed");
    return *r.module;
}

WeightModule verma_truncation(const GwaPtr& w, const Weight& wt, int j, int j_prime)
{
    MovingVar mv = moving_var(w);
    if (wt.value(mv.var).is_zero()) throw ZeroU0();
    if (j < 1 || j_prime < 1) throw InvalidCut("cuts must be positive");
    if (!shifted_z_value(w, wt, -j + 1).is_zero())
        throw InvalidCut("sigma^{-j+1}(z) not in the weight ideal");
    if (!shifted_z_value(w, wt, j_prime).is_zero())
        throw InvalidCut("sigma^{j'}(z) not in the weight ideal");
    return build_truncation(w, wt, j, j_prime);
}

// --------------------------------------------------------------- queries ----

namespace {

std::vector<std::vector<QRat>> action_images(const WeightModule& x,
                                             const std::vector<QRat>& v)
{
    std::vector<const QMatrix*> acts{&x.x_action(), &x.y_action()};
    for (Var var : all_vars)
        if (x.instance()->ring().has(var)) acts.push_back(&x.action(var));
    std::vector<std::vector<QRat>> out;
    for (const QMatrix* a : acts) {
        std::vector<QRat> img(x.dim());
        for (int i = 0; i < x.dim(); ++i) {
            QRat s(0);
            for (int j = 0; j < x.dim(); ++j)
                if (!a->at(i, j).is_zero()) s += a->at(i, j) * v[j];
            img[i] = s;
        }
        out.push_back(std::move(img));
    }
    return out;
}

// span of W.v under repeated application of all generator actions
RowSpan closure(const WeightModule& x, const std::vector<QRat>& seed)
{
    RowSpan span(x.dim());
    std::vector<std::vector<QRat>> frontier;
    if (span.insert(seed)) frontier.push_back(seed);
    while (!frontier.empty()) {
        std::vector<std::vector<QRat>> next;
        for (const auto& v : frontier)
            for (auto& img : action_images(x, v))
                if (span.insert(img)) next.push_back(span.rows().back());
        frontier = std::move(next);
    }
    return span;
}

std::vector<QRat> unit_vector(int dim, int k)
{
    std::vector<QRat> v(dim);
    v[k] = QRat(1);
    return v;
}

} // namespace

bool is_simple(const WeightModule& x)
{
    std::vector<Weight> wts = x.weights();
    for (size_t i = 0; i < wts.size(); ++i)
        for (size_t j = i + 1; j < wts.size(); ++j)
            if (wts[i] == wts[j])
                throw UnsupportedShape("weight spaces are not 1-dimensional and distinct");
    for (int k = 0; k < x.dim(); ++k)
        if (closure(x, unit_vector(x.dim(), k)).dim() != x.dim()) return false;
    return true;
}

namespace {

struct ChainData {
    bool in_chain_set = false;
    int n = 0; // minimal n > 0 with sigma^{-n+1}(z) in the ideal
};

ChainData chain_data(const GwaPtr& w, const Weight& wt)
{
    ChainData out;
    if (!shifted_z_value(w, wt, 1).is_zero()) return out;
    std::optional<int> top;
    for (int m : z_vanishing_shifts(w, wt))
        if (m <= 0 && (!top || m > *top)) top = m;
    if (!top) return out;
    out.in_chain_set = true;
    out.n = 1 - *top;
    return out;
}

} // namespace

bool separated_chains(const GwaPtr& w, const std::vector<Weight>& s)
{
    MovingVar mv = moving_var(w);
    for (const Weight& wt : s) {
        if (wt.value(mv.var).is_zero()) throw NotInM("finite sigma-orbit: " + wt.str());
        ChainData cd = chain_data(w, wt);
        if (!cd.in_chain_set) throw NotInM(wt.str());
        Weight moved = shift_weight(w, wt, cd.n);
        if (std::find(s.begin(), s.end(), moved) != s.end()) return false;
    }
    return true;
}

DecomposeResult decompose(const WeightModule& x)
{
    const GwaPtr& w = x.instance();
    MovingVar mv = moving_var(w);
    std::vector<Weight> wts = x.weights();
    for (const Weight& wt : wts)
        if (wt.value(mv.var).is_zero())
            throw NotChainType("weight " + wt.str() + " has finite sigma-orbit");

    std::map<Weight, std::vector<int>> spaces;
    for (int k = 0; k < x.dim(); ++k) spaces[wts[k]].push_back(k);

    DecomposeResult out;
    int covered = 0;
    std::vector<RowSpan> parts;
    std::vector<std::pair<Weight, int>> factors;
    bool consistent = true;
    for (const auto& [wt, idxs] : spaces) {
        ChainData cd = chain_data(w, wt);
        if (!cd.in_chain_set) continue;
        factors.emplace_back(wt, static_cast<int>(idxs.size()));
        for (int k : idxs) {
            RowSpan span = closure(x, unit_vector(x.dim(), k));
            if (span.dim() != cd.n) consistent = false;
            covered += cd.n;
            parts.push_back(std::move(span));
        }
    }

    if (consistent && covered == x.dim()) {
        RowSpan total(x.dim());
        int stacked = 0;
        for (const RowSpan& p : parts)
            for (const auto& row : p.rows()) stacked += total.insert(row) ? 1 : 0;
        if (stacked == x.dim()) {
            out.semisimple = true;
            out.factors = std::move(factors);
            return out;
        }
    }

    // not semisimple: exhibit a proper nonzero invariant subspace
    for (int k = 0; k < x.dim(); ++k) {
        RowSpan span = closure(x, unit_vector(x.dim(), k));
        if (span.dim() > 0 && span.dim() < x.dim()) {
            out.witness = span.rows();
            break;
        }
    }
    return out;
}

Classification classify(const WeightModule& x)
{
    if (x.instance() != rea_instance())
        throw UnsupportedShape("classification targets the reflection equation algebra");
    if (!qmat_kernel(x.action(Var::u)).empty()) throw UNotInvertible();

    auto ker = qmat_kernel(x.y_action());
    if (ker.size() != 1)
        throw NotSimple("ann(y) has dimension " + std::to_string(ker.size()));
    const std::vector<QRat>& k0 = ker[0];

    // u-eigenvalue on ann(y)
    const QMatrix& u = x.action(Var::u);
    int lead = 0;
    while (k0[lead].is_zero()) ++lead;
    std::vector<QRat> uk(x.dim());
    for (int i = 0; i < x.dim(); ++i) {
        QRat s(0);
        for (int j = 0; j < x.dim(); ++j)
            if (!u.at(i, j).is_zero()) s += u.at(i, j) * k0[j];
        uk[i] = s;
    }
    QRat u0 = uk[lead] / k0[lead];
    for (int i = 0; i < x.dim(); ++i)
        if (!(uk[i] == u0 * k0[i])) throw NotSimple("ann(y) is not a u-eigenvector");

    Classification out;
    out.n = x.dim();
    out.u0 = u0;

    QRat t0 = (QRat::q_pow(-2 * out.n) + QRat(1)) * u0;
    QRat d0 = -QRat(1) * QRat::q_pow(-2 * out.n) * u0 * u0;
    if (!(x.action(Var::t) == t0 * QMatrix::identity(x.dim())))
        throw NotSimple("t does not act by the V_n(u0) scalar");
    if (!(x.action(Var::d) == d0 * QMatrix::identity(x.dim())))
        throw NotSimple("d does not act by the V_n(u0) scalar");

    try {
        if (!is_simple(x)) throw NotSimple("a basis vector generates a proper submodule");
    } catch (const UnsupportedShape&) {
        // duplicated weights cannot occur in a simple chain-type module
        throw NotSimple("weight spaces are not 1-dimensional and distinct");
    }
    return out;
}

} // namespace weyl
