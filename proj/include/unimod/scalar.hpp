#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unimod {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown by Scalar::inv and operator/ on a zero divisor.
class DivisionByZeroError : public std::domain_error {
public:
    DivisionByZeroError() : std::domain_error("division by zero") {}
};

/// Thrown when two scalars live in incompatible cyclotomic fields.
class FieldMismatchError : public std::invalid_argument {
public:
    explicit FieldMismatchError(unsigned a, unsigned b)
        : std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b)) {}
};

/// Internal cross-check failures (indicate a bug, not bad input).
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Precomputed data for Q(zeta_N): the N-th cyclotomic polynomial and
/// reduction tables for powers of zeta.
struct CyclotomicTable {
    unsigned order = 1;
    unsigned degree = 1;                   // phi(N)
    std::vector<Rat> modulus;              // Phi_N, monic, length degree+1
    std::vector<std::vector<Rat>> powers;  // x^k mod Phi_N, k = 0 .. max(N-1, 2*degree-2)
};

const CyclotomicTable& cyclotomic_table(unsigned order);

unsigned euler_phi(unsigned n);

/// An element of the cyclotomic field Q(zeta_N), stored canonically as a
/// polynomial in zeta_N reduced modulo Phi_N.  Order 1 is plain Q.
/// Mixed-order arithmetic is allowed only when one operand is rational
/// (order 1); it is lifted into the other field.
class Scalar {
public:
    Scalar() : order_(1), coeffs_(1, Rat(0)) {}
    explicit Scalar(const Rat& r, unsigned order = 1);
    explicit Scalar(long v, unsigned order = 1) : Scalar(Rat(v), order) {}

    static Scalar zero(unsigned order) { return Scalar(Rat(0), order); }
    static Scalar one(unsigned order) { return Scalar(Rat(1), order); }
    static Scalar zeta(unsigned order, long exponent = 1);
    /// Sum of terms coeff * zeta^exponent; exponents taken mod order.
    static Scalar from_terms(unsigned order, const std::vector<std::pair<long, Rat>>& terms);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    Scalar lifted(unsigned order) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inv() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Canonical term list: (exponent, coefficient), ascending exponents,
    /// zero coefficients omitted.  The empty list is 0.
    std::vector<std::pair<unsigned, Rat>> terms() const;

    /// Human-readable form, e.g. "1 - 2/3*z^2" (z denotes zeta_N).
    std::string str() const;

private:
    static unsigned common_order(const Scalar& a, const Scalar& b);

    unsigned order_;
    std::vector<Rat> coeffs_;  // length phi(order_)
};

Rat parse_rational(const std::string& text);
std::string rational_str(const Rat& r);

}  // namespace unimod
