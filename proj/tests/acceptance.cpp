// Acceptance suite: one line per criterion, wall-clock timed, nonzero exit
// on any failure. All tolerances are exact equality in Q(q).

#include <chrono>
#include <cstdio>
#include <string>

#include "weyl/verify.hpp"

using namespace weyl;

namespace {

int failures = 0;
int index = 0;

void run(const std::string& name, Report (*fn)(std::uint64_t), std::uint64_t seed,
         double budget_seconds)
{
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    bool threw = false;
    std::string what;
    try {
        rep = fn(seed);
    } catch (const std::exception& e) {
        threw = true;
        what = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = !threw && rep.ok() && secs <= budget_seconds;
    ++index;
    std::printf("[%d/9] %s  %-58s (%.1fs / %.0fs)\n", index, ok ? "PASS" : "FAIL", name.c_str(),
                secs, budget_seconds);
    if (threw) std::printf("        exception: %s\n", what.c_str());
    if (!threw && !rep.ok())
        for (const auto& c : rep.checks)
            if (!c.ok)
                std::printf("        FAIL %s %s\n", c.name.c_str(), c.detail.c_str());
    if (!ok) ++failures;
}

Report no_seed_rel(std::uint64_t) { return criterion_relations(); }
Report no_seed_center(std::uint64_t) { return criterion_center(); }
Report no_seed_simple(std::uint64_t) { return criterion_simple_modules(); }
Report no_seed_pull(std::uint64_t) { return criterion_pullbacks(); }
Report no_seed_spec(std::uint64_t) { return criterion_spectrum(); }
Report no_seed_neg(std::uint64_t) { return criterion_negative_controls(); }

} // namespace

int main()
{
    const std::uint64_t seed = 20260810;
    run("GWA soundness: 343 associativity identities + 200 random triples",
        criterion_gwa_soundness, seed, 30);
    run("relations of the reflection equation algebra", no_seed_rel, seed, 1);
    run("center: central_scan(4) = span{t^b d^c : b+c <= 4}", no_seed_center, seed, 120);
    run("automorphism group (k^x)^2: invariance + group law", criterion_automorphisms, seed,
        30);
    run("simple modules V_n(u0), n <= 8", no_seed_simple, seed, 60);
    run("Uq(sl2) pullbacks, n <= 6", no_seed_pull, seed, 60);
    run("semisimplicity: 50 random sums + non-semisimple control",
        criterion_semisimplicity, seed, 120);
    run("spectrum identities and ideal machinery", no_seed_spec, seed, 600);
    run("negative controls are rejected", no_seed_neg, seed, 10);
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 9 acceptance criteria passed\n");
    return failures ? 1 : 0;
}
