#include "unimod/linalg.hpp"

namespace unimod {

Rref rref(Matrix m) {
    Rref out;
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Scalar inv = m.at(r, c).inv();
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) = inv * m.at(r, j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(m);
    return out;
}

Matrix kernel_basis(const Matrix& a) {
    Rref r = rref(a);
    std::size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix out(free_cols.size(), cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        out.at(k, f) = Scalar(1);
        for (std::size_t row = 0; row < r.rank; ++row)
            out.at(k, r.pivots[row]) = -r.mat.at(row, f);
    }
    // Canonical form for basis-comparison downstream.
    return rref(std::move(out)).mat;
}

Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == n) return Scalar(0);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Scalar inv = m.at(c, c).inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = inv * m.at(i, c);
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    Rref r = rref(std::move(aug));
    if (r.rank < n || r.pivots[n - 1] >= n) return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = r.mat.at(i, n + j);
    return out;
}

Matrix inverse_or_throw(const Matrix& m) {
    auto inv = inverse(m);
    if (!inv) throw InternalConsistencyError("expected invertible matrix");
    return *inv;
}

Subspace Subspace::from_rows(std::size_t ambient, const Matrix& rows) {
    if (rows.cols() != ambient && rows.rows() > 0)
        throw std::invalid_argument("subspace row length mismatch");
    Rref r = rref(rows);
    Subspace s(ambient);
    Matrix basis(r.rank, ambient);
    for (std::size_t i = 0; i < r.rank; ++i) basis.set_row(i, r.mat.row(i));
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::from_vectors(std::size_t ambient, const std::vector<Vector>& vecs) {
    Matrix rows(vecs.size(), ambient);
    for (std::size_t i = 0; i < vecs.size(); ++i) rows.set_row(i, vecs[i]);
    return from_rows(ambient, rows);
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) return false;
    Vector w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // each basis row has a leading 1 at its pivot; eliminate
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        if (p == ambient_) continue;
        if (!w[p].is_zero()) {
            Scalar f = w[p];
            for (std::size_t j = p; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
        }
    }
    return w.is_zero();
}

bool Subspace::operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

SolveResult solve(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
    std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    Rref r = rref(std::move(aug));
    SolveResult out;
    out.kernel = Subspace::from_rows(n, kernel_basis(a));
    bool consistent = true;
    for (std::size_t i = 0; i < r.rank; ++i)
        if (r.pivots[i] == n) consistent = false;  // pivot in the b column
    if (consistent) {
        Vector x(n);
        for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.mat.at(i, n);
        out.particular = std::move(x);
    }
    return out;
}

}  // namespace unimod
