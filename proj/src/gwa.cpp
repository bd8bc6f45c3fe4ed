#include "weyl/gwa.hpp"

#include <sstream>

namespace weyl {

GwaInstance::GwaInstance(RingSpec ring, SigmaMap sigma, CoefPoly z)
    : ring_(ring), sigma_(std::move(sigma)), z_(std::move(z))
{
    if (!(sigma_.ring() == ring_) || !(z_.ring() == ring_))
        throw Error("GwaInstance: ring mismatch between sigma/z and coefficient ring");
}

CoefPoly GwaInstance::sigma_interval(int j, int k) const
{
    CoefPoly p = CoefPoly::one(ring_);
    for (int l = j; l <= k; ++l) p *= sigma_.apply(z_, l);
    return p;
}

const CoefPoly& GwaInstance::zz(int n, int m) const
{
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = zz_memo_.find({n, m});
    if (it != zz_memo_.end()) return it->second;

    CoefPoly v = CoefPoly::one(ring_);
    if (n > 0 && m < 0)
        v = (n >= -m) ? sigma_interval(n + m + 1, n) : sigma_interval(1, n);
    else if (n < 0 && m > 0)
        v = (-n >= m) ? sigma_interval(n + 1, n + m) : sigma_interval(n + 1, 0);
    return zz_memo_.emplace(std::make_pair(n, m), std::move(v)).first->second;
}

// -------------------------------------------------------------- GwaElem ----

void GwaElem::add_component(int m, const CoefPoly& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = comps_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

GwaElem GwaElem::ring_elem(const GwaPtr& w, const CoefPoly& r)
{
    GwaElem e(w);
    e.add_component(0, r);
    return e;
}

GwaElem GwaElem::basis(const GwaPtr& w, int m, std::optional<CoefPoly> coeff)
{
    GwaElem e(w);
    e.add_component(m, coeff ? *coeff : CoefPoly::one(w->ring()));
    return e;
}

CoefPoly GwaElem::component(int m) const
{
    auto it = comps_.find(m);
    return it == comps_.end() ? CoefPoly::zero(inst_->ring()) : it->second;
}

std::optional<CoefPoly> GwaElem::as_ring_elem() const
{
    if (comps_.empty()) return CoefPoly::zero(inst_->ring());
    if (comps_.size() == 1 && comps_.begin()->first == 0) return comps_.begin()->second;
    return std::nullopt;
}

int GwaElem::total_degree() const
{
    int deg = 0;
    for (const auto& [m, c] : comps_)
        deg = std::max(deg, (m >= 0 ? m : -m) + c.total_degree());
    return deg;
}

namespace {
void require_same(const GwaPtr& a, const GwaPtr& b)
{
    if (a != b) throw InstanceMismatch();
}
} // namespace

GwaElem GwaElem::operator-() const
{
    GwaElem r = *this;
    for (auto& [m, c] : r.comps_) c = -c;
    return r;
}

GwaElem operator+(const GwaElem& a, const GwaElem& b)
{
    require_same(a.inst_, b.inst_);
    GwaElem r = a;
    for (const auto& [m, c] : b.comps_) r.add_component(m, c);
    return r;
}

GwaElem operator-(const GwaElem& a, const GwaElem& b) { return a + (-b); }

GwaElem operator*(const GwaElem& a, const GwaElem& b)
{
    require_same(a.inst_, b.inst_);
    const GwaInstance& w = *a.inst_;
    GwaElem r(a.inst_);
    for (const auto& [n, an] : a.comps_)
        for (const auto& [m, bm] : b.comps_)
            r.add_component(n + m, an * w.sigma().apply(bm, n) * w.zz(n, m));
    return r;
}

GwaElem operator*(const QRat& c, const GwaElem& a)
{
    GwaElem r(a.inst_);
    for (const auto& [m, am] : a.comps_) r.add_component(m, c * am);
    return r;
}

GwaElem operator*(const CoefPoly& c, const GwaElem& a)
{
    GwaElem r(a.inst_);
    for (const auto& [m, am] : a.comps_) r.add_component(m, c * am);
    return r;
}

bool operator==(const GwaElem& a, const GwaElem& b)
{
    require_same(a.inst_, b.inst_);
    return a.comps_ == b.comps_;
}

GwaElem GwaElem::pow(int e) const
{
    if (e < 0) {
        auto r = as_ring_elem();
        if (!r || !r->is_unit())
            throw Error("negative power of a non-unit element");
        return ring_elem(inst_, r->inverse_unit()).pow(-e);
    }
    GwaElem acc = one(inst_), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string GwaElem::str() const
{
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : comps_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (m > 0) {
            os << "*x";
            if (m > 1) os << "^" << m;
        } else if (m < 0) {
            os << "*y";
            if (m < -1) os << "^" << -m;
        }
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------- verification ------

Report verify_presentation(const GwaPtr& w, int assoc_bound)
{
    Report rep;
    const RingSpec& ring = w->ring();
    const SigmaMap& s = w->sigma();

    bool inv_ok = true;
    std::string bad;
    for (Var v : all_vars) {
        if (!ring.has(v)) continue;
        CoefPoly xv = CoefPoly::var(ring, v);
        if (s.apply(s.apply(xv, 1), -1) != xv || s.apply(s.apply(xv, -1), 1) != xv) {
            inv_ok = false;
            bad = var_name(v);
        }
    }
    rep.add("sigma inverse", inv_ok, inv_ok ? "" : "sigma^-1 fails on " + bad);

    GwaElem X = GwaElem::x(w), Y = GwaElem::y(w);
    rep.add("y*x = z", Y * X == GwaElem::ring_elem(w, w->z()));
    rep.add("x*y = sigma(z)", X * Y == GwaElem::ring_elem(w, s.apply(w->z(), 1)));

    for (Var v : all_vars) {
        if (!ring.has(v)) continue;
        GwaElem rv = GwaElem::var(w, v);
        CoefPoly img = s.apply(CoefPoly::var(ring, v), 1);
        CoefPoly pre = s.apply(CoefPoly::var(ring, v), -1);
        rep.add(std::string("x*") + var_name(v) + " = sigma(" + var_name(v) + ")*x",
                X * rv == img * X);
        rep.add(std::string("y*") + var_name(v) + " = sigma^-1(" + var_name(v) + ")*y",
                Y * rv == pre * Y);
    }

    int total = 0, bad_count = 0;
    for (int a = -assoc_bound; a <= assoc_bound; ++a)
        for (int b = -assoc_bound; b <= assoc_bound; ++b)
            for (int c = -assoc_bound; c <= assoc_bound; ++c) {
                ++total;
                CoefPoly lhs = w->zz(a, b) * w->zz(a + b, c);
                CoefPoly rhs = s.apply(w->zz(b, c), a) * w->zz(a, b + c);
                if (lhs != rhs) ++bad_count;
            }
    rep.add("associativity identity sweep", bad_count == 0,
            std::to_string(total - bad_count) + "/" + std::to_string(total) + " identities hold");
    return rep;
}

// --------------------------------------------------------- SkewLaurent ----

void SkewLaurent::add_component(int m, const CoefPoly& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = comps_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

SkewLaurent SkewLaurent::monomial(const GwaPtr& w, int m, const CoefPoly& c)
{
    SkewLaurent r(w);
    r.add_component(m, c);
    return r;
}

SkewLaurent operator+(const SkewLaurent& a, const SkewLaurent& b)
{
    require_same(a.inst_, b.inst_);
    SkewLaurent r = a;
    for (const auto& [m, c] : b.comps_) r.add_component(m, c);
    return r;
}

SkewLaurent operator*(const SkewLaurent& a, const SkewLaurent& b)
{
    require_same(a.inst_, b.inst_);
    SkewLaurent r(a.inst_);
    for (const auto& [n, an] : a.comps_)
        for (const auto& [m, bm] : b.comps_)
            r.add_component(n + m, an * a.inst_->sigma().apply(bm, n));
    return r;
}

SkewLaurent operator*(const CoefPoly& c, const SkewLaurent& a)
{
    SkewLaurent r(a.inst_);
    for (const auto& [m, am] : a.comps_) r.add_component(m, c * am);
    return r;
}

SkewLaurent SkewLaurent::pow(int e) const
{
    if (e < 0) throw Error("SkewLaurent::pow: negative powers of general elements unsupported");
    SkewLaurent r = monomial(inst_, 0, CoefPoly::one(inst_->ring())), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

SkewLaurent to_skew_laurent(const GwaElem& a, LaurentEmbedding variant)
{
    const GwaPtr& w = a.instance();
    const RingSpec& ring = w->ring();
    SkewLaurent img_x(w), img_y(w);
    if (variant == LaurentEmbedding::y_to_z_xinv) {
        img_x = SkewLaurent::monomial(w, 1, CoefPoly::one(ring));
        img_y = SkewLaurent::monomial(w, -1, w->z());
    } else {
        // x -> xz = sigma(z) x in left-coefficient form
        img_x = SkewLaurent::monomial(w, 1, w->sigma().apply(w->z(), 1));
        img_y = SkewLaurent::monomial(w, -1, CoefPoly::one(ring));
    }
    SkewLaurent out(w);
    for (const auto& [m, c] : a.components()) {
        SkewLaurent vm = m >= 0 ? img_x.pow(m) : img_y.pow(-m);
        out = out + c * vm;
    }
    return out;
}

// ----------------------------------------------------- normal / central ----

namespace {

// a = unit * b? returns the unit
std::optional<CoefPoly> unit_multiple_of(const CoefPoly& a, const CoefPoly& b)
{
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.term_count() != b.term_count()) return std::nullopt;
    const auto& [ea, ca] = *a.terms().rbegin();
    const auto& [eb, cb] = *b.terms().rbegin();
    Expt d{ea[0] - eb[0], ea[1] - eb[1], ea[2] - eb[2]};
    for (Var v : all_vars) {
        int i = static_cast<int>(v);
        if (d[i] != 0 && !a.ring().inv(v)) return std::nullopt;
    }
    CoefPoly cand = CoefPoly::monomial(a.ring(), d, ca / cb);
    if (cand * b == a) return cand;
    return std::nullopt;
}

} // namespace

NormalWitness is_normal(const CoefPoly& r, const GwaPtr& w, int hyp_bound)
{
    if (w->z().is_zero()) throw HypothesisUnverified("z = 0");
    for (int m = 1; m <= hyp_bound; ++m) {
        if (unit_multiple_of(w->sigma().apply(w->z(), m), w->z()))
            throw HypothesisUnverified("sigma^" + std::to_string(m) +
                                       "(z) is a unit multiple of z");
    }
    NormalWitness out;
    if (r.is_zero()) return out;
    auto unit = unit_multiple_of(w->sigma().apply(r, 1), r);
    if (unit) {
        out.normal = true;
        out.unit = *unit;
    }
    return out;
}

bool is_central(const GwaElem& a)
{
    const GwaPtr& w = a.instance();
    std::vector<GwaElem> gens{GwaElem::x(w), GwaElem::y(w)};
    for (Var v : all_vars)
        if (w->ring().has(v)) gens.push_back(GwaElem::var(w, v));
    for (const GwaElem& g : gens)
        if (a * g != g * a) return false;
    return true;
}

} // namespace weyl
