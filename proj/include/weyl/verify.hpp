#pragma once

// One-shot verification suites; each returns a pass/fail report. The
// acceptance binary and the CLI `verify` subcommand both run these.

#include <cstdint>

#include "weyl/report.hpp"

namespace weyl {

// associativity identity sweep (|a|,|b|,|c| <= 3) and 200 seeded random
// exact associativity triples
Report criterion_gwa_soundness(std::uint64_t seed);

// the six defining relations reduce to zero
Report criterion_relations();

// central_scan(4) is exactly the span of {t^b d^c : b+c <= 4}
Report criterion_center();

// 20 random automorphisms preserve the relations; the group law holds
Report criterion_automorphisms(std::uint64_t seed);

// V_n(u0) for n <= 8, u0 in {1,2,q,q^-3}: relations, simplicity,
// classification round trip, and the lambda vanishing pattern
Report criterion_simple_modules();

// psi_alpha images satisfy the relations and pull back to V_n(alpha q^{n-1})
// for n <= 6, alpha in {1,2,q}
Report criterion_pullbacks();

// 50 seeded random direct sums decompose to the correct multiset; the
// 4-dimensional modified-z example is rejected as non-semisimple
Report criterion_semisimplicity(std::uint64_t seed);

// r_n identities, <x^n> saturation vs pi-families, certificate chains, CRT
// idempotents, the product correspondence grid, stratum validators, the
// inclusion lattice, catenarity chains, and the normal-separation scan
Report criterion_spectrum();

// corrupted sigma inverse, corrupted r_n, and a non-ideal family are rejected
Report criterion_negative_controls();

Report verify_suite(const std::string& name, std::uint64_t seed);

} // namespace weyl
