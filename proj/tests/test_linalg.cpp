#include "unimod/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace unimod;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = Scalar(v);
        ++i;
    }
    return m;
}

Vector vec(std::initializer_list<long> vals) {
    Vector v(vals.size());
    std::size_t i = 0;
    for (long x : vals) v[i++] = Scalar(x);
    return v;
}

}  // namespace

TEST_CASE("solve: kernel of the all-ones 2x2 system") {
    auto r = solve(from_rows({{1, 1}, {1, 1}}), vec({0, 0}));
    REQUIRE(r.consistent());
    CHECK(r.kernel.dim() == 1);
    // span{(1,-1)}
    CHECK(r.kernel.contains(vec({1, -1})));
}

TEST_CASE("solve: unique solution") {
    auto r = solve(from_rows({{1, 0}, {0, 1}}), vec({2, 3}));
    REQUIRE(r.consistent());
    CHECK(*r.particular == vec({2, 3}));
    CHECK(r.kernel.dim() == 0);
}

TEST_CASE("solve: inconsistent system reports, does not throw") {
    auto r = solve(from_rows({{1, 1}, {1, 1}}), vec({0, 1}));
    CHECK(!r.consistent());
    CHECK(r.kernel.dim() == 1);
}

TEST_CASE("solve postconditions on random systems") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
        Matrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = Scalar(static_cast<long>(rng() % 7) - 3);
        Vector b(m);
        for (std::size_t i = 0; i < m; ++i) b[i] = Scalar(static_cast<long>(rng() % 7) - 3);
        auto r = solve(a, b);
        if (r.consistent()) CHECK(a * *r.particular == b);
        for (std::size_t k = 0; k < r.kernel.dim(); ++k)
            CHECK((a * r.kernel.basis_vector(k)).is_zero());
        // affine solution set is exactly particular + kernel: re-solving any
        // shifted particular lands in the same coset
        if (r.consistent() && r.kernel.dim() > 0) {
            Vector shifted = *r.particular + r.kernel.basis_vector(0);
            CHECK(a * shifted == b);
        }
    }
}

TEST_CASE("subspace reduction is idempotent and canonical") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t amb = 2 + rng() % 5, k = 1 + rng() % 4;
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < k; ++i) {
            Vector v(amb);
            for (std::size_t j = 0; j < amb; ++j)
                v[j] = Scalar(static_cast<long>(rng() % 5) - 2);
            vs.push_back(v);
        }
        Subspace s = Subspace::from_vectors(amb, vs);
        Subspace again = Subspace::from_rows(amb, s.basis());
        CHECK(s == again);
        // scaled spans agree
        std::vector<Vector> scaled;
        for (auto& v : vs) scaled.push_back(Scalar(3) * v);
        CHECK(Subspace::from_vectors(amb, scaled) == s);
        for (const auto& v : vs) CHECK(s.contains(v));
    }
}

TEST_CASE("determinant and inverse over a cyclotomic field") {
    Matrix m(2, 2, 4);
    m.at(0, 0) = Scalar::zeta(4);
    m.at(0, 1) = Scalar::one(4);
    m.at(1, 0) = Scalar::zero(4);
    m.at(1, 1) = Scalar::zeta(4, 3);
    CHECK(determinant(m) == Scalar::one(4));  // zeta * zeta^3 = zeta^4 = 1
    auto mi = inverse(m);
    REQUIRE(mi.has_value());
    CHECK((*mi * m).is_identity());
    CHECK((m * *mi).is_identity());
}
