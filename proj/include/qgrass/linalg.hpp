#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qgrass {

using Cplx = std::complex<double>;

// Dense row-major complex matrix.  Everything here is small (at most a few
// thousand rows), so no attempt is made at blocking or sparsity.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}

    static CMatrix identity(int m) {
        CMatrix out(m, m);
        for (int i = 0; i < m; ++i) out(i, i) = 1.0;
        return out;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cplx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Cplx& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cplx> a_;
};

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    CMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            Cplx aik = a(i, k);
            if (aik == Cplx{}) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

// Max row sum norm.
inline double inf_norm(const CMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        m = std::max(m, s);
    }
    return m;
}

// Determinant by LU with partial pivoting; takes a copy.
inline Cplx det(CMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det needs a square matrix");
    const int m = a.rows();
    Cplx result = 1.0;
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (a(pivot, col) == Cplx{}) return Cplx{};
        if (pivot != col) {
            for (int j = col; j < m; ++j) std::swap(a(pivot, j), a(col, j));
            result = -result;
        }
        result *= a(col, col);
        for (int r = col + 1; r < m; ++r) {
            Cplx f = a(r, col) / a(col, col);
            if (f == Cplx{}) continue;
            for (int j = col; j < m; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return result;
}

}  // namespace qgrass
