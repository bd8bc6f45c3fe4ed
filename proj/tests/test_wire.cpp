#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/random.hpp"
#include "weyl/rea.hpp"
#include "weyl/uqsl2.hpp"
#include "weyl/wire.hpp"

using namespace weyl;

TEST_CASE("QRat wire form")
{
    QRat v = parse_qrat("(q^2-1)/(q^3+2)");
    CHECK(qrat_from_wire(to_wire(v)) == v);
    // the unparenthesized form is not produced
    CHECK(to_wire(QRat::q_pow(2) - QRat(1)).get<std::string>() == "(q^2-1)/(1)");
}

TEST_CASE("RingSpec and CoefPoly round trips")
{
    for (const RingSpec& ring : {RingSpec::poly_utd(), RingSpec::laurent_ut(),
                                 RingSpec::laurent_ut_poly_d(), RingSpec::poly_u()}) {
        CHECK(ringspec_from_wire(to_wire(ring)) == ring);
        Rng rng(11);
        for (int i = 0; i < 5; ++i) {
            CoefPoly p = random_coefpoly(rng, ring, 3, 2, -2);
            CHECK(coefpoly_from_wire(to_wire(p), ring) == p);
        }
    }
}

TEST_CASE("GwaElem round trip")
{
    GwaElem e = rea_to_gwa("u21*u12 + q^-2*u11^2 - u22");
    CHECK(gwaelem_from_wire(to_wire(e), rea_instance()) == e);
}

TEST_CASE("WeightModule wire form re-validates")
{
    WeightModule v = rea_simple_module(3, QRat::q());
    json j = to_wire(v);
    WeightModule back = weightmodule_from_wire(j, rea_instance());
    CHECK(back.dim() == 3);
    CHECK(back.x_action() == v.x_action());
    // corrupting an entry breaks a relation and is rejected
    j["x"][0][0] = "(1)/(1)";
    CHECK_THROWS_AS(weightmodule_from_wire(j, rea_instance()), RelationFailure);
}

TEST_CASE("HomIdealFamily and stratum wire forms")
{
    HomIdealFamily f = stratum_ideal(StratumDescriptor::T3(1, QRat(2)));
    HomIdealFamily back = family_from_wire(to_wire(f), rea_instance());
    CHECK(back.lo() == f.lo());
    CHECK(ideal_includes(f, back));
    CHECK(ideal_includes(back, f));

    StratumDescriptor s = stratum_from_wire(json{{"kind", "T3"}, {"n", 2}, {"p", "t-1"}});
    CHECK(s.n == 2);
    REQUIRE(s.t3_c.has_value());
    CHECK(*s.t3_c == QRat(1));
    CHECK_THROWS_AS(stratum_from_wire(json{{"kind", "T3"}, {"n", 1}, {"p", "t^2-1"}}),
                    InvalidDescriptor);
    CHECK_THROWS_AS(stratum_from_wire(json{{"kind", "T9"}}), InvalidDescriptor);
}
