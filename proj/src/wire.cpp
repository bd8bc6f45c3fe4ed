#include "weyl/wire.hpp"

#include "weyl/rea.hpp"

namespace weyl {

json to_wire(const QRat& v) { return v.str(); }

QRat qrat_from_wire(const json& j)
{
    if (!j.is_string()) throw Error("QRat wire form must be a string");
    return parse_qrat(j.get<std::string>());
}

json to_wire(const RingSpec& r)
{
    json vars = json::array(), inv = json::array();
    for (Var v : all_vars) {
        if (r.has(v)) vars.push_back(var_name(v));
        if (r.inv(v)) inv.push_back(var_name(v));
    }
    return json{{"vars", vars}, {"inv", inv}};
}

namespace {
Var var_by_name(const std::string& name)
{
    for (Var v : all_vars)
        if (name == var_name(v)) return v;
    throw Error("unknown variable '" + name + "'");
}
} // namespace

RingSpec ringspec_from_wire(const json& j)
{
    RingSpec r;
    for (const auto& v : j.at("vars")) r.present[static_cast<int>(var_by_name(v))] = true;
    for (const auto& v : j.at("inv")) r.invertible[static_cast<int>(var_by_name(v))] = true;
    for (int i = 0; i < 3; ++i)
        if (r.invertible[i] && !r.present[i]) throw Error("invertible variable not present");
    return r;
}

json to_wire(const CoefPoly& p)
{
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json{{"u", e[0]}, {"t", e[1]}, {"d", e[2]}, {"c", c.str()}});
    return out;
}

CoefPoly coefpoly_from_wire(const json& j, const RingSpec& ring)
{
    CoefPoly p = CoefPoly::zero(ring);
    for (const auto& rec : j) {
        Expt e{rec.value("u", 0), rec.value("t", 0), rec.value("d", 0)};
        p += CoefPoly::monomial(ring, e, parse_qrat(rec.at("c").get<std::string>()));
    }
    return p;
}

json to_wire(const GwaElem& e)
{
    json comps = json::object();
    for (const auto& [m, c] : e.components()) comps[std::to_string(m)] = to_wire(c);
    return json{{"components", comps}};
}

GwaElem gwaelem_from_wire(const json& j, const GwaPtr& w)
{
    GwaElem e(w);
    for (const auto& [key, val] : j.at("components").items())
        e += GwaElem::basis(w, std::stoi(key), coefpoly_from_wire(val, w->ring()));
    return e;
}

json to_wire(const QMatrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(m.at(i, j2).str());
        rows.push_back(row);
    }
    return rows;
}

QMatrix qmatrix_from_wire(const json& j)
{
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = parse_qrat(j.at(i).at(c).get<std::string>());
    return m;
}

json to_wire(const WeightModule& m)
{
    json out{{"dim", m.dim()}, {"x", to_wire(m.x_action())}, {"y", to_wire(m.y_action())}};
    for (Var v : all_vars)
        if (m.instance()->ring().has(v)) out[var_name(v)] = to_wire(m.action(v));
    return out;
}

WeightModule weightmodule_from_wire(const json& j, const GwaPtr& w)
{
    std::array<std::optional<QMatrix>, 3> ring;
    for (Var v : all_vars)
        if (w->ring().has(v)) ring[static_cast<int>(v)] = qmatrix_from_wire(j.at(var_name(v)));
    WeightModule m(w, ring, qmatrix_from_wire(j.at("x")), qmatrix_from_wire(j.at("y")));
    if (j.contains("dim") && j.at("dim").get<int>() != m.dim())
        throw Error("WeightModule wire form: dim disagrees with matrices");
    m.validate();
    return m;
}

json to_wire(const HomIdealFamily& f)
{
    json gens = json::object();
    for (int m = f.lo(); m <= f.hi(); ++m) {
        json list = json::array();
        for (const auto& g : f.component(m)) list.push_back(to_wire(g));
        gens[std::to_string(m)] = list;
    }
    return json{{"window", json::array({f.lo(), f.hi()})},
                {"stabilized", json::array({f.stab_lo(), f.stab_hi()})},
                {"gens", gens}};
}

HomIdealFamily family_from_wire(const json& j, const GwaPtr& w)
{
    int lo = j.at("window").at(0).get<int>(), hi = j.at("window").at(1).get<int>();
    HomIdealFamily f(w, lo, hi);
    for (const auto& [key, list] : j.at("gens").items()) {
        std::vector<CoefPoly> gens;
        for (const auto& g : list) gens.push_back(coefpoly_from_wire(g, w->ring()));
        f.set_component(std::stoi(key), std::move(gens));
    }
    if (j.contains("stabilized"))
        f.set_stabilized(j.at("stabilized").at(0).get<bool>(),
                         j.at("stabilized").at(1).get<bool>());
    return f;
}

json to_wire(const StratumDescriptor& s)
{
    switch (s.kind) {
    case StratumDescriptor::Kind::T1: return json{{"kind", "T1"}, {"gens", s.t1_gens}};
    case StratumDescriptor::Kind::T2: {
        json gens = json::array();
        for (const auto& g : s.t2_gens) gens.push_back(to_wire(g));
        return json{{"kind", "T2"}, {"gens", gens}};
    }
    case StratumDescriptor::Kind::T3: {
        json out{{"kind", "T3"}, {"n", s.n}};
        out["p"] = s.t3_c ? json(("t-(" + s.t3_c->str() + ")")) : json("0");
        return out;
    }
    }
    throw Error("unreachable");
}

StratumDescriptor stratum_from_wire(const json& j)
{
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "T1") {
        std::vector<std::string> gens;
        for (const auto& g : j.at("gens")) gens.push_back(g.get<std::string>());
        return StratumDescriptor::T1(std::move(gens));
    }
    if (kind == "T2") {
        std::vector<CoefPoly> gens;
        for (const auto& g : j.at("gens"))
            gens.push_back(g.is_string()
                               ? parse_ring_poly(g.get<std::string>(), RingSpec::poly_utd())
                               : coefpoly_from_wire(g, RingSpec::poly_utd()));
        return StratumDescriptor::T2(std::move(gens));
    }
    if (kind == "T3") {
        int n = j.at("n").get<int>();
        std::string p = j.value("p", "0");
        if (p == "0") return StratumDescriptor::T3(n);
        // p must be t - c
        CoefPoly poly = parse_ring_poly(p, RingSpec::poly_utd());
        CoefPoly t = CoefPoly::var(RingSpec::poly_utd(), Var::t);
        CoefPoly c = t - poly;
        auto scalar = c.as_scalar();
        if (!scalar) throw InvalidDescriptor("T3 point polynomial must be t - c");
        return StratumDescriptor::T3(n, *scalar);
    }
    throw InvalidDescriptor("unknown stratum kind '" + kind + "'");
}

json to_wire(const Report& r)
{
    json details = json::array();
    for (const auto& c : r.checks)
        details.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return json{{"passed", r.passed()}, {"failed", r.failed()}, {"details", details}};
}

} // namespace weyl
