#include "weyl/uqsl2.hpp"

#include "weyl/rea.hpp"

namespace weyl {

namespace {
const QRat& q()
{
    static QRat v = QRat::q();
    return v;
}
} // namespace

QRat quantum_int(int k)
{
    return (QRat::q_pow(k) - QRat::q_pow(-k)) / (q() - QRat::q_pow(-1));
}

UqModule::UqModule(int n, QMatrix e_, QMatrix f_, QMatrix k_, QMatrix k_inv_)
    : dim(n), e(std::move(e_)), f(std::move(f_)), k(std::move(k_)), k_inv(std::move(k_inv_))
{
    QMatrix id = QMatrix::identity(dim);
    if (!(k * k_inv == id) || !(k_inv * k == id))
        throw RelationFailure("K K^{-1} != 1");
    if (!(k * e == (q() * q()) * (e * k))) throw RelationFailure("KE != q^2 EK");
    if (!(k * f == QRat::q_pow(-2) * (f * k))) throw RelationFailure("KF != q^{-2} FK");
    QRat coef = (q() - QRat::q_pow(-1)).inverse();
    if (!(e * f - f * e == coef * (k - k_inv)))
        throw RelationFailure("EF - FE != (K - K^{-1})/(q - q^{-1})");
}

UqModule uqsl2_module(int n)
{
    if (n < 1) throw Error("uqsl2_module: n must be positive");
    QMatrix e(n, n), f(n, n), k(n, n), k_inv(n, n);
    for (int p = 0; p < n; ++p) {
        k.at(p, p) = QRat::q_pow(n - 1 - 2 * p);
        k_inv.at(p, p) = QRat::q_pow(-(n - 1 - 2 * p));
        if (p + 1 < n) f.at(p + 1, p) = QRat(1);
        if (p > 0) e.at(p - 1, p) = quantum_int(p) * quantum_int(n - p);
    }
    return UqModule(n, e, f, k, k_inv);
}

WeightModule psi_alpha(const QRat& alpha, const UqModule& m)
{
    if (alpha.is_zero()) throw Error("psi_alpha: alpha must be nonzero");
    QRat c = QRat::q_pow(-1) * (q() - QRat::q_pow(-1)) * (q() - QRat::q_pow(-1));

    QMatrix u11 = (c * alpha) * (m.e * m.f) + alpha * m.k_inv;
    QMatrix u12 = alpha * m.e;
    QMatrix u21 = (c * alpha) * (m.k * m.f);
    QMatrix u22 = alpha * m.k;

    // the six defining relations, as exact matrix identities
    QRat q2 = q() * q(), dq = QRat::q_pow(-2) - QRat(1);
    auto fail = [](const char* what) { throw RelationFailure(what); };
    if (!(u11 * u22 == u22 * u11)) fail("u11 u22 = u22 u11");
    if (!(u11 * u12 == u12 * (u11 + dq * u22))) fail("u11 u12 = u12(u11+(q^-2-1)u22)");
    if (!(u21 * u11 == (u11 + dq * u22) * u21)) fail("u21 u11 = (u11+(q^-2-1)u22)u21");
    if (!(u22 * u12 == q2 * (u12 * u22))) fail("u22 u12 = q^2 u12 u22");
    if (!(u21 * u22 == q2 * (u22 * u21))) fail("u21 u22 = q^2 u22 u21");
    if (!(u21 * u12 - u12 * u21 == dq * (u22 * (u22 - u11))))
        fail("u21 u12 - u12 u21 = (q^-2-1)u22(u22-u11)");

    // GWA coordinates: u = u22, t = u11 + q^{-2} u22, d = yx - q^{-2} u11 u22
    std::array<std::optional<QMatrix>, 3> ring;
    ring[0] = u22;
    ring[1] = u11 + QRat::q_pow(-2) * u22;
    ring[2] = u12 * u21 - QRat::q_pow(-2) * (u11 * u22);
    WeightModule out(rea_instance(), ring, u21, u12);
    out.validate();
    return out;
}

PullbackMatch pullback_matches(const QRat& alpha, int n)
{
    PullbackMatch out;
    WeightModule x = psi_alpha(alpha, uqsl2_module(n));
    if (!is_simple(x)) return out;
    out.witness = classify(x);
    out.match = out.witness.n == n && out.witness.u0 == alpha * QRat::q_pow(n - 1);
    return out;
}

} // namespace weyl
