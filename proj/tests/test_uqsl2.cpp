#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/rea.hpp"
#include "weyl/uqsl2.hpp"

using namespace weyl;

namespace {
const QRat q = QRat::q();
}

TEST_CASE("quantum integers satisfy the product recurrence")
{
    CHECK(quantum_int(1) == QRat(1));
    CHECK(quantum_int(2) == q + q.inverse());
    // [p+1][n-1-p] - [p][n-p] = [n-1-2p], the identity behind EF - FE
    for (int n = 1; n <= 8; ++n)
        for (int p = 0; p < n; ++p)
            CHECK(quantum_int(p + 1) * quantum_int(n - 1 - p) -
                      quantum_int(p) * quantum_int(n - p) ==
                  quantum_int(n - 1 - 2 * p));
}

TEST_CASE("module construction self-verifies the four relations")
{
    for (int n = 1; n <= 8; ++n) CHECK_NOTHROW(uqsl2_module(n));

    UqModule m1 = uqsl2_module(1);
    CHECK(m1.e.is_zero());
    CHECK(m1.f.is_zero());
    CHECK(m1.k == QMatrix::identity(1));

    UqModule m2 = uqsl2_module(2);
    CHECK(m2.k.diagonal_entries() == std::vector<QRat>{q, q.inverse()});

    UqModule m5 = uqsl2_module(5);
    CHECK(m5.k.diagonal_entries() ==
          std::vector<QRat>{q.pow(4), q.pow(2), QRat(1), q.pow(-2), q.pow(-4)});

    // a corrupted K is rejected
    QMatrix bad_k = m2.k;
    bad_k.at(0, 0) = q * q;
    CHECK_THROWS_AS(UqModule(2, m2.e, m2.f, bad_k, m2.k_inv), RelationFailure);
}

TEST_CASE("psi_alpha pullbacks")
{
    SUBCASE("n=1 gives the one-dimensional module V_1(alpha)")
    {
        WeightModule x = psi_alpha(QRat(3), uqsl2_module(1));
        CHECK(x.dim() == 1);
        CHECK(x.action(Var::u).at(0, 0) == QRat(3)); // u22 = alpha K = alpha
        Classification c = classify(x);
        CHECK(c.n == 1);
        CHECK(c.u0 == QRat(3));
    }

    SUBCASE("u22 spectrum for n=2, alpha=1 is {q, q^{-1}}")
    {
        WeightModule x = psi_alpha(QRat(1), uqsl2_module(2));
        CHECK(x.action(Var::u).diagonal_entries() == std::vector<QRat>{q, q.inverse()});
    }

    SUBCASE("images satisfy all relations for n <= 6, alpha in {1,2,q}")
    {
        for (int n = 1; n <= 6; ++n)
            for (const QRat& a : {QRat(1), QRat(2), q})
                CHECK_NOTHROW(psi_alpha(a, uqsl2_module(n))); // throws RelationFailure if not
    }
}

TEST_CASE("pullback classification")
{
    // V(n-1,+) pulled back along psi_alpha is V_n(alpha q^{n-1})
    auto r = pullback_matches(QRat(1), 3);
    CHECK(r.match);
    CHECK(r.witness.n == 3);
    CHECK(r.witness.u0 == q * q);

    r = pullback_matches(q, 1);
    CHECK(r.match);
    CHECK(r.witness.u0 == q);

    r = pullback_matches(QRat(2), 4);
    CHECK(r.match);
    CHECK(r.witness.u0 == QRat(2) * q.pow(3));

    for (int n = 1; n <= 6; ++n)
        for (const QRat& a : {QRat(1), QRat(2), q}) CHECK(pullback_matches(a, n).match);
}
