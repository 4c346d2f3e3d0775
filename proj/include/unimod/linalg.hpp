#pragma once

#include "unimod/matrix.hpp"

#include <optional>
#include <vector>

namespace unimod {

struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank = 0;
};

/// Reduced row echelon form with exact pivoting: leftmost nonzero column,
/// first nonzero row.
Rref rref(Matrix m);

/// Rows form a basis of { x : A x = 0 }, canonicalized via rref.
Matrix kernel_basis(const Matrix& a);

Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
Matrix inverse_or_throw(const Matrix& m);

/// A linear subspace of k^ambient held as an rref row basis, so equality of
/// subspaces is row-by-row comparison.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace from_rows(std::size_t ambient, const Matrix& rows);
    static Subspace from_vectors(std::size_t ambient, const std::vector<Vector>& vecs);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vector& v) const;
    bool operator==(const Subspace& rhs) const;
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

private:
    std::size_t ambient_;
    Matrix basis_;
};

struct SolveResult {
    std::optional<Vector> particular;
    Subspace kernel;
    bool consistent() const { return particular.has_value(); }
};

/// Exact solution set of A x = b: one particular solution (if consistent)
/// plus the full kernel.  Inconsistency is reported, never thrown.
SolveResult solve(const Matrix& a, const Vector& b);

}  // namespace unimod
