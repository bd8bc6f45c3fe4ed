#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/qmatrix.hpp"
#include "weyl/random.hpp"

using namespace weyl;

namespace {
const QRat q = QRat::q();

bool annihilates(const QMatrix& m, const std::vector<QRat>& v)
{
    for (int i = 0; i < m.rows(); ++i) {
        QRat s(0);
        for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
        if (!s.is_zero()) return false;
    }
    return true;
}
} // namespace

TEST_CASE("kernel of identity and zero")
{
    CHECK(qmat_kernel(QMatrix::identity(2)).empty());
    CHECK(qmat_kernel(QMatrix(2, 2)).size() == 2);
}

TEST_CASE("rank-1 kernel by row proportionality")
{
    // [[q,-1],[q^2,-q]] has nullspace spanned by (1,q)
    QMatrix m(2, 2);
    m.at(0, 0) = q;
    m.at(0, 1) = QRat(-1);
    m.at(1, 0) = q * q;
    m.at(1, 1) = -q;
    auto ker = qmat_kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(annihilates(m, ker[0]));
    // proportional to (1, q)
    CHECK(ker[0][1] == q * ker[0][0]);
}

TEST_CASE("kernel vectors are independent, annihilated, and rank-nullity holds")
{
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        int rows = dim(rng), cols = dim(rng);
        QMatrix m(rows, cols);
        std::uniform_int_distribution<int> pick(0, 3);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (pick(rng) != 0) m.at(i, j) = random_qrat(rng);
        auto ker = qmat_kernel(m);
        RowSpan span(cols);
        for (const auto& v : ker) {
            CHECK(annihilates(m, v));
            CHECK(span.insert(v)); // each vector enlarges the span
        }
        CHECK(qmat_rank(m) + static_cast<int>(ker.size()) == cols);
    }
}

TEST_CASE("matrix algebra and RowSpan membership")
{
    QMatrix a = QMatrix::diagonal({q, q.inverse()});
    CHECK(a.pow(2) == QMatrix::diagonal({q * q, q.pow(-2)}));
    CHECK(a.is_diagonal());

    RowSpan span(3);
    CHECK(span.insert({QRat(1), QRat(0), q}));
    CHECK(span.insert({QRat(0), QRat(1), QRat(1)}));
    CHECK_FALSE(span.insert({QRat(2), QRat(2), QRat(2) * q + QRat(2)}));
    CHECK(span.contains({QRat(1), QRat(1), q + QRat(1)}));
    CHECK_FALSE(span.contains({QRat(0), QRat(0), QRat(1)}));
    CHECK(span.dim() == 2);
}
