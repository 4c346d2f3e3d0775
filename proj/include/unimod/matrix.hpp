#pragma once

#include "unimod/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace unimod {

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n, unsigned order = 1) : e_(n, Scalar::zero(order)) {}
    Vector(std::initializer_list<Scalar> init) : e_(init) {}
    static Vector unit(std::size_t n, std::size_t i, unsigned order = 1);

    std::size_t size() const { return e_.size(); }
    Scalar& operator[](std::size_t i) { return e_[i]; }
    const Scalar& operator[](std::size_t i) const { return e_[i]; }

    bool is_zero() const;
    bool operator==(const Vector& rhs) const;
    bool operator!=(const Vector& rhs) const { return !(*this == rhs); }

    Vector operator-() const;
    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& c, Vector v);

    /// Dot product without conjugation (used for covector pairing).
    Scalar dot(const Vector& rhs) const;

    /// Tensor coordinates: (this ⊗ rhs) under (i,j) -> i*rhs.size()+j.
    Vector tensor(const Vector& rhs) const;

    std::string str() const;

private:
    std::vector<Scalar> e_;
};

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, unsigned order = 1)
        : rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(order)) {}
    static Matrix identity(std::size_t n, unsigned order = 1);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    void set_row(std::size_t i, const Vector& v);
    void set_col(std::size_t j, const Vector& v);

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& c, Matrix m);
    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(const Vector& v) const;

    Matrix transpose() const;

    /// Kronecker product under the global tensor ordering
    /// (i,j) -> i*B.rows()+j for rows and likewise for columns.
    static Matrix kron(const Matrix& a, const Matrix& b);

    /// Rows of `top` followed by rows of `bottom` (equal column counts).
    static Matrix vstack(const Matrix& top, const Matrix& bottom);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

}  // namespace unimod
