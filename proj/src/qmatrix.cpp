#include "weyl/qmatrix.hpp"

#include <algorithm>

namespace weyl {

QMatrix QMatrix::identity(int n)
{
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = QRat(1);
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<QRat>& d)
{
    QMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

bool QMatrix::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const QRat& c) { return c.is_zero(); });
}

bool QMatrix::is_diagonal() const
{
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

std::vector<QRat> QMatrix::diagonal_entries() const
{
    std::vector<QRat> d;
    for (int i = 0; i < std::min(rows_, cols_); ++i) d.push_back(at(i, i));
    return d;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b)
{
    QMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b)
{
    QMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b)
{
    QMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const QRat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const QRat& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

QMatrix operator*(const QRat& c, const QMatrix& a)
{
    QMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = c * a.e_[i];
    return r;
}

QMatrix QMatrix::pow(int e) const
{
    QMatrix r = identity(rows_), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::vector<std::vector<QRat>> qmat_kernel(const QMatrix& m)
{
    const int rows = m.rows(), cols = m.cols();
    // row-reduce a working copy to RREF
    std::vector<std::vector<QRat>> a(rows, std::vector<QRat>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        QRat inv = a[r][c].inverse();
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            QRat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<QRat>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<QRat> v(cols);
        v[c] = QRat(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

int qmat_rank(QMatrix m)
{
    return m.cols() - static_cast<int>(qmat_kernel(m).size());
}

void RowSpan::reduce(std::vector<QRat>& v) const
{
    for (size_t i = 0; i < rows_.size(); ++i) {
        const QRat& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        QRat f = c; // rows are pivot-normalized to 1
        for (int j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
    }
}

bool RowSpan::insert(std::vector<QRat> v)
{
    reduce(v);
    int p = -1;
    for (int j = 0; j < width_; ++j)
        if (!v[j].is_zero()) {
            p = j;
            break;
        }
    if (p < 0) return false;
    QRat inv = v[p].inverse();
    for (int j = 0; j < width_; ++j) v[j] *= inv;
    // keep existing rows reduced against the new one
    for (size_t i = 0; i < rows_.size(); ++i) {
        QRat f = rows_[i][p];
        if (f.is_zero()) continue;
        for (int j = 0; j < width_; ++j) rows_[i][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpan::contains(std::vector<QRat> v) const
{
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const QRat& c) { return c.is_zero(); });
}

} // namespace weyl
