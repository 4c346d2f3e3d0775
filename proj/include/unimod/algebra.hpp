#pragma once

#include "unimod/linalg.hpp"
#include "unimod/pit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unimod {

struct AxiomReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::string what) { failures.push_back(std::move(what)); }
    std::string summary() const;
};

/// Finite-dimensional associative unital algebra over Q(zeta_N), given by
/// structure constants c[i][j][k] (coefficient of basis k in b_i * b_j).
class StructureAlgebra {
public:
    StructureAlgebra() : order_(1), dim_(0) {}
    StructureAlgebra(unsigned order, std::vector<std::string> basis_names, Vector unit);

    unsigned order() const { return order_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Vector& unit() const { return unit_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return mult_[(i * dim_ + j) * dim_ + k];
    }
    void set_c(std::size_t i, std::size_t j, std::size_t k, Scalar v) {
        mult_[(i * dim_ + j) * dim_ + k] = std::move(v);
        finalized_ = false;
    }

    /// Builds the sparse per-pair product rows; products fall back to the
    /// dense tensor until called.  Invalidated by set_c.
    void finalize();
    bool finalized() const { return finalized_; }
    using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
    const SparseRow& product_row(std::size_t i, std::size_t j) const {
        return sparse_[i * dim_ + j];
    }

    Vector basis_vector(std::size_t i) const { return Vector::unit(dim_, i, order_); }
    Vector zero() const { return Vector(dim_, order_); }
    Scalar scalar(long v) const { return Scalar(v, order_); }

    Vector multiply(const Vector& u, const Vector& v) const;
    Vector power(const Vector& u, unsigned long e) const;
    Matrix left_mult(const Vector& a) const;
    Matrix right_mult(const Vector& a) const;

    /// lambda(u * v) for a covector lambda.
    Scalar bilinear(const Vector& lambda, const Vector& u, const Vector& v) const;

    AxiomReport verify() const;

    /// Inverse iff the left-multiplication matrix is invertible; the result
    /// is checked to be two-sided.
    std::optional<Vector> invert(const Vector& a) const;

    Subspace center() const;

    /// Matrix is a unital algebra automorphism (multiplicative, unit-fixing,
    /// invertible)?
    bool is_automorphism(const Matrix& sigma) const;

private:
    unsigned order_;
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<Scalar> mult_;  // dense dim^3
    std::vector<SparseRow> sparse_;
    bool finalized_ = false;
    Vector unit_;
};

/// Frobenius system (lambda, {a^i}, {b_i}) together with the Nakayama
/// automorphism.  b_basis columns default to the structure basis; a_dual
/// columns are the dual elements a^i with lambda(a^i b_j) = delta_ij.
struct FrobeniusSystem {
    Vector lambda;
    Matrix a_dual;
    Matrix b_basis;
    Matrix nakayama;
};

Matrix gram_matrix(const StructureAlgebra& alg, const Vector& lambda);

struct FrobeniusSearch {
    std::optional<Vector> lambda;
    bool certified;  // "none" certified symbolically (dim <= 6) or trivially
};

/// Searches for a Frobenius form: each dual-basis covector first, then
/// seeded small-integer combinations (<= 64 trials), then for dim <= 6 a
/// symbolic Gram determinant decides existence outright.
FrobeniusSearch frobenius_form(const StructureAlgebra& alg,
                               std::uint64_t seed = kDefaultPitSeed);

/// a_dual/b_basis with lambda(a^i b_j) = delta_ij; throws on singular Gram.
std::pair<Matrix, Matrix> dual_bases(const StructureAlgebra& alg, const Vector& lambda);

/// The unique automorphism with lambda(ab) = lambda(nu(b) a); verified to be
/// a unital automorphism satisfying the defining identity on all pairs.
Matrix nakayama(const StructureAlgebra& alg, const Vector& lambda);

FrobeniusSystem make_frobenius_system(const StructureAlgebra& alg, const Vector& lambda);
/// Variant with a caller-chosen b-basis (columns of p); used to exercise
/// basis independence.
FrobeniusSystem make_frobenius_system(const StructureAlgebra& alg, const Vector& lambda,
                                      const Matrix& p);

/// The three dual-basis identities plus the pairing condition, checked on
/// every basis element.
AxiomReport check_frobenius_identities(const StructureAlgebra& alg, const FrobeniusSystem& fs);

/// Componentwise product in the tensor-product algebra (first (x) second)
/// under the global ordering (i,k) -> i*dim(second)+k.
Vector tensor_multiply(const StructureAlgebra& first, const StructureAlgebra& second,
                       const Vector& u, const Vector& v);

}  // namespace unimod
