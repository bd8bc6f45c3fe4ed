#pragma once

// Dense exact linear algebra over Q(q).

#include <vector>

#include "weyl/qrat.hpp"

namespace weyl {

class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    static QMatrix identity(int n);
    static QMatrix diagonal(const std::vector<QRat>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    QRat& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const QRat& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_diagonal() const;
    std::vector<QRat> diagonal_entries() const;

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QRat& c, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    QMatrix pow(int e) const; // e >= 0

private:
    int rows_, cols_;
    std::vector<QRat> e_;
};

// Exact basis of the right nullspace {v : Mv = 0}, one column vector per
// basis element.
std::vector<std::vector<QRat>> qmat_kernel(const QMatrix& m);

int qmat_rank(QMatrix m);

// Incrementally row-reduced span; used for module closures and span tests.
class RowSpan {
public:
    explicit RowSpan(int width) : width_(width) {}
    // Reduces v against the span; returns true if it enlarged the span.
    bool insert(std::vector<QRat> v);
    bool contains(std::vector<QRat> v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<QRat>>& rows() const { return rows_; }

private:
    void reduce(std::vector<QRat>& v) const;
    int width_;
    std::vector<std::vector<QRat>> rows_; // echelon, pivots_ [i] = pivot col of rows_[i]
    std::vector<int> pivots_;
};

} // namespace weyl
