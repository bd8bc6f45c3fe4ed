// Command-line front end: normal-form reduction, verification suites,
// module construction/decomposition, and spectrum computations, with JSON
// output first and pretty text second.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "weyl/modules.hpp"
#include "weyl/rea.hpp"
#include "weyl/spectrum.hpp"
#include "weyl/uqsl2.hpp"
#include "weyl/verify.hpp"
#include "weyl/wire.hpp"

using namespace weyl;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 20260810;
    int degree_cap = 40;
    bool text = false; // default output is JSON
};

void emit(const json& payload, const GlobalOpts& opts, const std::string& pretty)
{
    if (opts.text) std::cout << pretty << "\n";
    else std::cout << payload.dump(2) << "\n";
}

// malformed input (usage contract: exit code 2)
struct BadInput : Error {
    using Error::Error;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    json j;
    in >> j;
    return j;
}

template <class Fn>
auto parse_input(Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const Error& e) {
        throw BadInput(e.what());
    }
}

std::string report_text(const Report& rep)
{
    std::string out;
    for (const auto& c : rep.checks)
        out += std::string(c.ok ? "PASS" : "FAIL") + "  " + c.name +
               (c.detail.empty() ? "" : "  [" + c.detail + "]") + "\n";
    out += std::to_string(rep.passed()) + "/" + std::to_string(rep.checks.size()) + " checks passed";
    return out;
}

int run_reduce(const GlobalOpts& opts, const std::string& expr)
{
    GwaElem e = rea_to_gwa(expr);
    json payload{{"input", expr}, {"normal_form", to_wire(e)}, {"text", e.str()}};
    emit(payload, opts, e.str());
    return 0;
}

int run_verify(const GlobalOpts& opts, const std::string& suite)
{
    Report rep = verify_suite(suite, opts.seed);
    emit(to_wire(rep), opts, report_text(rep));
    return rep.ok() ? 0 : 1;
}

int run_module(const GlobalOpts& opts, const std::string& action, int n, const std::string& u0,
               const std::string& alpha, const std::string& input)
{
    if (action == "simple") {
        WeightModule v = rea_simple_module(n, parse_qrat(u0));
        emit(to_wire(v), opts, "V_" + std::to_string(n) + "(" + u0 + "): dim " +
                                   std::to_string(v.dim()));
        return 0;
    }
    if (action == "pullback") {
        WeightModule v = psi_alpha(parse_qrat(alpha), uqsl2_module(n));
        PullbackMatch m = pullback_matches(parse_qrat(alpha), n);
        json payload = to_wire(v);
        payload["match"] = m.match;
        payload["classified_n"] = m.witness.n;
        payload["classified_u0"] = m.witness.u0.str();
        emit(payload, opts,
             "pullback of V(n-1,+) at alpha=" + alpha + ": classified as (n=" +
                 std::to_string(m.witness.n) + ", u0=" + m.witness.u0.pretty() +
                 "), match=" + (m.match ? "true" : "false"));
        return 0;
    }
    if (action == "decompose") {
        WeightModule x = parse_input(
            [&] { return weightmodule_from_wire(read_json_file(input), rea_instance()); });
        DecomposeResult res = decompose(x);
        json payload{{"semisimple", res.semisimple}};
        std::string pretty;
        if (res.semisimple) {
            json factors = json::array();
            for (const auto& [wt, mult] : res.factors) {
                factors.push_back(json{{"u0", wt.u0.str()},
                                       {"t0", wt.t0.str()},
                                       {"d0", wt.d0.str()},
                                       {"multiplicity", mult}});
                pretty += wt.str() + " x" + std::to_string(mult) + "\n";
            }
            payload["factors"] = factors;
        } else {
            json rows = json::array();
            for (const auto& row : res.witness) {
                json r = json::array();
                for (const auto& c : row) r.push_back(c.str());
                rows.push_back(r);
            }
            payload["witness_subspace"] = rows;
            pretty = "not semisimple; proper invariant subspace of dimension " +
                     std::to_string(res.witness.size());
        }
        emit(payload, opts, pretty);
        return 0;
    }
    throw CLI::ValidationError("module", "unknown action '" + action + "'");
}

int run_spectrum(const GlobalOpts& opts, const std::string& action, int n,
                 const std::string& p_expr, const std::string& kind, const std::string& a_expr,
                 const std::string& b_expr, const std::string& p_file,
                 const std::string& q_file, const std::vector<std::string>& gens)
{
    if (action == "xn-ideal") {
        HomIdealFamily fam = xn_ideal(n);
        emit(to_wire(fam), opts, fam.str());
        return 0;
    }
    if (action == "stratum") {
        StratumDescriptor s;
        if (kind == "T1") {
            s = StratumDescriptor::T1(gens);
        } else if (kind == "T2") {
            std::vector<CoefPoly> polys;
            for (const auto& g : gens)
                polys.push_back(parse_ring_poly(g, rea_instance()->ring()));
            s = StratumDescriptor::T2(std::move(polys));
        } else if (kind == "T3") {
            s = stratum_from_wire(json{{"kind", "T3"}, {"n", n}, {"p", p_expr}});
        } else {
            throw CLI::ValidationError("spectrum", "unknown stratum kind '" + kind + "'");
        }
        HomIdealFamily fam = stratum_ideal(s);
        emit(to_wire(fam), opts, fam.str());
        return 0;
    }
    if (action == "includes") {
        HomIdealFamily p = parse_input(
            [&] { return family_from_wire(read_json_file(p_file), rea_instance()); });
        HomIdealFamily q = parse_input(
            [&] { return family_from_wire(read_json_file(q_file), rea_instance()); });
        bool inc = ideal_includes(p, q);
        emit(json{{"includes", inc}}, opts, inc ? "true" : "false");
        return 0;
    }
    if (action == "product-check") {
        RingSpec ring = RingSpec::laurent_ut();
        bool ok = product_correspondence_check(n, parse_ring_poly(a_expr, ring),
                                               parse_ring_poly(b_expr, ring));
        emit(json{{"equal", ok}}, opts, ok ? "true" : "false");
        return ok ? 0 : 1;
    }
    throw CLI::ValidationError("spectrum", "unknown action '" + action + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computation in the 2x2 reflection equation algebra"};
    app.require_subcommand(1);
    app.fallthrough(); // let global flags appear after the subcommand

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "seed for the randomized property suites");
    app.add_option("--degree-cap", opts.degree_cap, "total-degree cap for the membership oracle");
    auto* text_flag = app.add_flag("--text", opts.text, "pretty text output");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "JSON output (default)")->excludes(text_flag);

    auto* reduce = app.add_subcommand("reduce", "normal form of an expression in the generators");
    std::string expr;
    reduce->add_option("expr", expr, "expression over u11,u12,u21,u22,u,t,d,x,y,q")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    verify->add_option("suite", suite, "gwa | rea | modules | uqsl2 | spectrum | all")
        ->check(CLI::IsMember({"gwa", "rea", "modules", "uqsl2", "spectrum", "all"}));

    auto* module_cmd = app.add_subcommand("module", "simple modules, pullbacks, decomposition");
    std::string action, u0 = "1", alpha = "1", input;
    int n = 1;
    module_cmd->add_option("action", action, "simple | pullback | decompose")->required();
    module_cmd->add_option("--n", n, "dimension parameter");
    module_cmd->add_option("--u0", u0, "u-eigenvalue on ann(y), as an expression in q");
    module_cmd->add_option("--alpha", alpha, "pullback parameter, as an expression in q");
    module_cmd->add_option("--in", input, "WeightModule JSON file");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "ideal machinery of Spec");
    std::string sp_action, p_expr = "0", kind = "T3", a_expr = "1", b_expr = "1", p_file, q_file;
    std::vector<std::string> gens;
    int sp_n = 1;
    spectrum_cmd->add_option("action", sp_action, "xn-ideal | stratum | includes | product-check")
        ->required();
    spectrum_cmd->add_option("--n", sp_n, "layer index");
    spectrum_cmd->add_option("--p", p_expr, "point polynomial, 0 or t-c");
    spectrum_cmd->add_option("--kind", kind, "stratum kind: T1 | T2 | T3");
    spectrum_cmd->add_option("--gen", gens, "stratum generators (repeatable)");
    spectrum_cmd->add_option("--a", a_expr, "first point polynomial");
    spectrum_cmd->add_option("--b", b_expr, "second point polynomial");
    spectrum_cmd->add_option("--P", p_file, "family JSON file (candidate smaller ideal)");
    spectrum_cmd->add_option("--Q", q_file, "family JSON file (candidate larger ideal)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_default_degree_cap(opts.degree_cap);
    try {
        if (reduce->parsed()) return run_reduce(opts, expr);
        if (verify->parsed()) return run_verify(opts, suite);
        if (module_cmd->parsed()) return run_module(opts, action, n, u0, alpha, input);
        if (spectrum_cmd->parsed())
            return run_spectrum(opts, sp_action, sp_n, p_expr, kind, a_expr, b_expr, p_file,
                                q_file, gens);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
