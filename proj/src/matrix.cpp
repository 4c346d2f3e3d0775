#include "unimod/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace unimod {

namespace {
void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}
}  // namespace

Vector Vector::unit(std::size_t n, std::size_t i, unsigned order) {
    Vector v(n, order);
    v[i] = Scalar::one(order);
    return v;
}

bool Vector::is_zero() const {
    for (const auto& c : e_)
        if (!c.is_zero()) return false;
    return true;
}

bool Vector::operator==(const Vector& rhs) const {
    if (size() != rhs.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (e_[i] != rhs.e_[i]) return false;
    return true;
}

Vector Vector::operator-() const {
    Vector v = *this;
    for (auto& c : v.e_) c = -c;
    return v;
}

Vector& Vector::operator+=(const Vector& rhs) {
    require(size() == rhs.size(), "vector size mismatch");
    for (std::size_t i = 0; i < size(); ++i) e_[i] += rhs.e_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
    require(size() == rhs.size(), "vector size mismatch");
    for (std::size_t i = 0; i < size(); ++i) e_[i] -= rhs.e_[i];
    return *this;
}

Vector operator*(const Scalar& c, Vector v) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * v[i];
    return v;
}

Scalar Vector::dot(const Vector& rhs) const {
    require(size() == rhs.size(), "vector size mismatch");
    Scalar acc;
    for (std::size_t i = 0; i < size(); ++i) {
        if (e_[i].is_zero() || rhs.e_[i].is_zero()) continue;
        acc += e_[i] * rhs.e_[i];
    }
    return acc;
}

Vector Vector::tensor(const Vector& rhs) const {
    Vector out(size() * rhs.size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (e_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            if (rhs.e_[j].is_zero()) continue;
            out[i * rhs.size() + j] = e_[i] * rhs.e_[j];
        }
    }
    return out;
}

std::string Vector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ", ";
        os << e_[i].str();
    }
    os << ")";
    return os.str();
}

Matrix Matrix::identity(std::size_t n, unsigned order) {
    Matrix m(n, n, order);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(order);
    return m;
}

Vector Matrix::row(std::size_t i) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
    require(v.size() == cols_, "row size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vector& v) {
    require(v.size() == rows_, "column size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const {
    for (const auto& c : e_)
        if (!c.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != rhs.e_[i]) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& c : m.e_) c = -c;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= rhs.e_[i];
    return *this;
}

Matrix operator*(const Scalar& c, Matrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = c * m.at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require(cols_ == rhs.rows_, "matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    require(cols_ == v.size(), "matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero() || v[j].is_zero()) continue;
            out[i] += a * v[j];
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& c = a.at(i, j);
            if (c.is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    if (b.at(p, q).is_zero()) continue;
                    out.at(i * b.rows() + p, j * b.cols() + q) = c * b.at(p, q);
                }
        }
    return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    require(top.cols() == bottom.cols(), "vstack column mismatch");
    Matrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j)
            out.at(top.rows() + i, j) = bottom.at(i, j);
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n" : "") << row(i).str();
    }
    return os.str();
}

}  // namespace unimod
