#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/random.hpp"
#include "weyl/rea.hpp"

using namespace weyl;

namespace {
const QRat q = QRat::q();
}

TEST_CASE("generator dictionary")
{
    const GwaPtr& w = rea_instance();
    const RingSpec& ring = w->ring();
    CoefPoly u = CoefPoly::var(ring, Var::u), t = CoefPoly::var(ring, Var::t);

    CHECK(rea_to_gwa("u22") == GwaElem::ring_elem(w, u));
    CHECK(rea_to_gwa("u11") == GwaElem::ring_elem(w, t - QRat::q_pow(-2) * u));
    CHECK(rea_to_gwa("u21") == GwaElem::x(w));
    CHECK(rea_to_gwa("u12") == GwaElem::y(w));
    CHECK(rea_to_gwa("q^2") == GwaElem::scalar(w, q * q));

    // u21*u12 - u12*u21 = (q^-2 - 1) u22 (u22 - u11)
    CHECK(rea_to_gwa("u21*u12 - u12*u21") ==
          rea_to_gwa("(q^-2-1)*u22*(u22-u11)"));
    // x*y - y*x = sigma(z) - z
    CHECK(rea_to_gwa("x*y - y*x") ==
          GwaElem::ring_elem(w, w->sigma().apply(w->z(), 1) - w->z()));

    CHECK_THROWS_AS(rea_to_gwa("u13"), ParseError);
    CHECK_THROWS_AS(rea_to_gwa("u11 + "), ParseError);
    CHECK_THROWS_AS(rea_to_gwa("u^-1"), Error); // u is not invertible in A
}

TEST_CASE("round trip of the change of variables")
{
    // t = u11 + q^-2 u22 and d = z - q^-2 u11 u22 against the GWA-side values
    const GwaPtr& w = rea_instance();
    CHECK(rea_to_gwa("u11 + q^-2*u22") == GwaElem::var(w, Var::t));
    CHECK(rea_to_gwa("u12*u21 - q^-2*u11*u22") == GwaElem::var(w, Var::d));
}

TEST_CASE("all six relations hold")
{
    Report rep = check_relations();
    CHECK(rep.checks.size() == 6);
    for (const auto& c : rep.checks) {
        INFO(c.name);
        CHECK(c.ok);
    }
}

TEST_CASE("rea_to_gwa is multiplicative on random words")
{
    Rng rng(5);
    const char* words[] = {"u11", "u12", "u21", "u22", "u11+u22", "u21*u12", "q^2*u12 - u21"};
    std::uniform_int_distribution<int> pick(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::string a = words[pick(rng)], b = words[pick(rng)];
        CHECK(rea_to_gwa("(" + a + ")*(" + b + ")") == rea_to_gwa(a) * rea_to_gwa(b));
    }
}

TEST_CASE("automorphisms")
{
    const GwaPtr& w = rea_instance();

    SUBCASE("identity and the d scaling law")
    {
        ReaAut id(QRat(1), QRat(1));
        GwaElem g = rea_to_gwa("u21*u12 + u11^2");
        CHECK(apply_aut(id, g) == g);

        ReaAut phi(q, QRat(3));
        CHECK(apply_aut(phi, GwaElem::var(w, Var::d)) ==
              GwaElem::ring_elem(w, (q * q) * CoefPoly::var(w->ring(), Var::d)));
    }

    SUBCASE("relations are preserved by 20 random automorphisms")
    {
        const char* rels[] = {
            "u11*u22 - u22*u11",
            "u11*u12 - u12*(u11+(q^-2-1)*u22)",
            "u21*u11 - (u11+(q^-2-1)*u22)*u21",
            "u22*u12 - q^2*u12*u22",
            "u21*u22 - q^2*u22*u21",
            "u21*u12 - u12*u21 - (q^-2-1)*u22*(u22-u11)",
        };
        Rng rng(2718);
        for (int trial = 0; trial < 20; ++trial) {
            ReaAut phi(random_nonzero_qrat(rng), random_nonzero_qrat(rng));
            for (const char* rel : rels) CHECK(apply_aut(phi, rea_to_gwa(rel)).is_zero());
        }
    }

    SUBCASE("group law on the generators")
    {
        Rng rng(161803);
        for (int trial = 0; trial < 10; ++trial) {
            ReaAut f(random_nonzero_qrat(rng), random_nonzero_qrat(rng));
            ReaAut g(random_nonzero_qrat(rng), random_nonzero_qrat(rng));
            for (const char* gen : {"u11", "u12", "u21", "u22"}) {
                GwaElem e = rea_to_gwa(gen);
                CHECK(apply_aut(g, apply_aut(f, e)) == apply_aut(g * f, e));
            }
        }
    }

    SUBCASE("multiplicative on words")
    {
        ReaAut phi(QRat(2), q.inverse());
        GwaElem a = rea_to_gwa("u21*u11"), b = rea_to_gwa("u12 + u22^2");
        CHECK(apply_aut(phi, a * b) == apply_aut(phi, a) * apply_aut(phi, b));
    }
}

TEST_CASE("central scan finds exactly k[t,d] up to the bound")
{
    SUBCASE("bound 0")
    {
        auto basis = central_scan(0);
        REQUIRE(basis.size() == 1);
        auto r = basis[0].as_ring_elem();
        REQUIRE(r.has_value());
        CHECK(r->as_scalar().has_value()); // span{1}
    }

    SUBCASE("bound 2: exactly {1,t,d,t^2,td,d^2}")
    {
        auto basis = central_scan(2);
        CHECK(basis.size() == 6);
        for (const auto& e : basis) {
            auto r = e.as_ring_elem();
            REQUIRE(r.has_value());
            for (const auto& [expt, c] : r->terms()) CHECK(expt[0] == 0); // no u
        }
    }

    SUBCASE("bound 3: count is the number of t^b d^c with b+c <= 3")
    {
        CHECK(central_scan(3).size() == 10);
    }
}

TEST_CASE("normal scan returns the sigma-eigenvector families")
{
    auto fams = normal_scan(3);
    REQUIRE(fams.size() == 4); // u^0..u^3
    CHECK(fams[1].eigenvalue == q * q);
    CHECK(fams[0].eigenvalue == QRat(1));
    // family sizes: monomials t^b d^c with b+c <= 3-a
    CHECK(fams[0].monomials.size() == 10);
    CHECK(fams[3].monomials.size() == 1);
    // u+t is not in any family: not an eigenvector
    CHECK_FALSE(is_normal(CoefPoly::var(rea_instance()->ring(), Var::u) +
                              CoefPoly::var(rea_instance()->ring(), Var::t),
                          rea_instance())
                    .normal);
}
