#pragma once

#include "unimod/matrix.hpp"

#include <map>
#include <vector>

namespace unimod {

/// Sparse multivariate polynomial over Scalar.  Only used at small sizes
/// (symbolic Gram determinants, test oracles); no performance tuning.
class MPoly {
public:
    explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    static MPoly constant(std::size_t nvars, const Scalar& c);
    static MPoly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    MPoly operator*(const MPoly& rhs) const;
    friend MPoly operator*(const Scalar& c, const MPoly& p);

    Scalar eval(const std::vector<Scalar>& point) const;

    unsigned total_degree() const;

private:
    void add_term(const std::vector<unsigned>& exp, const Scalar& c);

    std::size_t nvars_;
    std::map<std::vector<unsigned>, Scalar> terms_;
};

/// Determinant of a matrix of polynomials by cofactor expansion along the
/// first column.  Intended for n <= 6.
MPoly mpoly_determinant(const std::vector<std::vector<MPoly>>& m);

}  // namespace unimod
