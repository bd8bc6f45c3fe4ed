#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/random.hpp"
#include "weyl/ring.hpp"
#include "weyl/sigma.hpp"
#include "weyl/special.hpp"

using namespace weyl;

namespace {
const QRat q = QRat::q();

// sigma of the reflection equation algebra base ring: u -> q^2 u
SigmaMap rea_sigma(const RingSpec& ring)
{
    return SigmaMap::scaling(ring, {q * q, QRat(1), QRat(1)});
}

CoefPoly rea_z(const RingSpec& ring)
{
    CoefPoly u = CoefPoly::var(ring, Var::u), t = CoefPoly::var(ring, Var::t),
             d = CoefPoly::var(ring, Var::d);
    return d + QRat::q_pow(-2) * (t * u) - QRat::q_pow(-4) * (u * u);
}
} // namespace

TEST_CASE("Laurent exponent discipline")
{
    RingSpec poly = RingSpec::poly_utd();
    CHECK_THROWS_AS(CoefPoly::var(poly, Var::u, -1), SubstitutionLeavesRing);
    RingSpec lu = RingSpec::laurent_u_poly_td();
    CHECK(CoefPoly::var(lu, Var::u, -2).is_unit());
    CHECK_FALSE((CoefPoly::var(lu, Var::u) + CoefPoly::var(lu, Var::t)).is_unit());
}

TEST_CASE("sigma powers of z match the closed form")
{
    RingSpec ring = RingSpec::poly_utd();
    SigmaMap s = rea_sigma(ring);
    CoefPoly z = rea_z(ring);
    CoefPoly u = CoefPoly::var(ring, Var::u), t = CoefPoly::var(ring, Var::t),
             d = CoefPoly::var(ring, Var::d);
    // sigma^m(z) = d + q^{2m-2} t u - q^{4m-4} u^2, by direct expansion
    for (int m = -6; m <= 6; ++m) {
        CoefPoly expect =
            d + QRat::q_pow(2 * m - 2) * (t * u) - QRat::q_pow(4 * m - 4) * (u * u);
        CHECK(sigma_pow(s, z, m) == expect);
    }
    CHECK(sigma_pow(s, z, 0) == z);
    // m=1 specializes to d + tu - u^2
    CHECK(sigma_pow(s, z, 1) == d + t * u - u * u);
}

TEST_CASE("sigma is multiplicative on random pairs")
{
    RingSpec ring = RingSpec::laurent_u_poly_td();
    SigmaMap s = rea_sigma(ring);
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        CoefPoly f = random_coefpoly(rng, ring, 3, 2, -2);
        CoefPoly g = random_coefpoly(rng, ring, 3, 2, -2);
        for (int k = -3; k <= 3; ++k)
            CHECK(sigma_pow(s, f * g, k) == sigma_pow(s, f, k) * sigma_pow(s, g, k));
    }
}

TEST_CASE("sigma construction rejects a corrupted inverse")
{
    RingSpec ring = RingSpec::poly_utd();
    std::array<std::optional<CoefPoly>, 3> fwd, bwd;
    fwd[0] = (q * q) * CoefPoly::var(ring, Var::u);
    bwd[0] = QRat::q_pow(-4) * CoefPoly::var(ring, Var::u); // wrong scale
    for (int i : {1, 2}) {
        Var v = static_cast<Var>(i);
        fwd[i] = CoefPoly::var(ring, v);
        bwd[i] = CoefPoly::var(ring, v);
    }
    CHECK_THROWS(SigmaMap(ring, fwd, bwd));
    SigmaMap bad = SigmaMap::unchecked(ring, fwd, bwd);
    CHECK_FALSE(bad.inverse_ok());
}

TEST_CASE("sigma shift of the linear factors: sigma^-1(s^n_j) = q^-2 s^n_{j+1}")
{
    RingSpec ring = RingSpec::laurent_ut();
    SigmaMap s = rea_sigma(ring);
    for (int n = 1; n <= 4; ++n)
        for (int j = -2; j <= n + 2; ++j)
            CHECK(sigma_pow(s, snj_elem(n, j, ring), -1) ==
                  QRat::q_pow(-2) * snj_elem(n, j + 1, ring));
}

TEST_CASE("sigma^i(z_n) = -q^{4i-4} s^n_{n-i+1} s^n_{1-i}")
{
    RingSpec ring = RingSpec::laurent_ut();
    SigmaMap s = rea_sigma(ring);
    for (int n = 1; n <= 3; ++n) {
        CoefPoly zn = zn_elem(n, ring);
        for (int i = -3; i <= 3; ++i) {
            CoefPoly expect = -QRat(1) * QRat::q_pow(4 * i - 4) *
                              (snj_elem(n, n - i + 1, ring) * snj_elem(n, 1 - i, ring));
            CHECK(sigma_pow(s, zn, i) == expect);
        }
    }
}

TEST_CASE("evaluation and exact Laurent division")
{
    RingSpec ring = RingSpec::laurent_ut();
    CoefPoly u = CoefPoly::var(ring, Var::u), t = CoefPoly::var(ring, Var::t);
    CoefPoly f = (u - t) * (u + t) * CoefPoly::var(ring, Var::u, -1);
    CHECK(f.eval({QRat(3), QRat(1), QRat(0)}) == QRat(8) / QRat(3));

    auto g = f.divided_by(u + t);
    REQUIRE(g.has_value());
    CHECK(*g * (u + t) == f);
    CHECK_FALSE(f.divided_by(u + QRat(2) * t).has_value());

    // in a non-Laurent ring u^2 is not divisible by u^3
    RingSpec poly = RingSpec::poly_ut();
    CoefPoly u2 = CoefPoly::var(poly, Var::u, 2), u3 = CoefPoly::var(poly, Var::u, 3);
    CHECK_FALSE(u2.divided_by(u3).has_value());
    CHECK(u3.divided_by(u2).has_value());
}
