#include "weyl/special.hpp"

namespace weyl {

CoefPoly rn_elem(int n, const RingSpec& ring)
{
    QRat qn = QRat::q_pow(2 * n);
    QRat c = (qn + QRat(1)) * (qn + QRat(1));
    return c * CoefPoly::var(ring, Var::d) + qn * CoefPoly::var(ring, Var::t, 2);
}

CoefPoly zn_elem(int n, const RingSpec& ring)
{
    QRat qn = QRat::q_pow(2 * n);
    QRat c = -qn / ((qn + QRat(1)) * (qn + QRat(1)));
    CoefPoly u = CoefPoly::var(ring, Var::u), t = CoefPoly::var(ring, Var::t);
    return c * (t * t) + QRat::q_pow(-2) * (u * t) - QRat::q_pow(-4) * (u * u);
}

CoefPoly snj_elem(int n, int j, const RingSpec& ring)
{
    QRat c = QRat::q_pow(2 * j) / (QRat::q_pow(2 * n) + QRat(1));
    return CoefPoly::var(ring, Var::u) - c * CoefPoly::var(ring, Var::t);
}

std::vector<int> jnm_range(int n, int m)
{
    std::vector<int> js;
    if (m >= 0)
        for (int j = 1; j <= n - m; ++j) js.push_back(j);
    else
        for (int j = -m + 1; j <= n; ++j) js.push_back(j);
    return js;
}

CoefPoly pinm_elem(int n, int m, const RingSpec& ring)
{
    CoefPoly p = CoefPoly::one(ring);
    for (int j : jnm_range(n, m)) p *= snj_elem(n, j, ring);
    return p;
}

} // namespace weyl
