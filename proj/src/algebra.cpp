#include "unimod/algebra.hpp"

#include "unimod/mpoly.hpp"

#include <random>
#include <sstream>

namespace unimod {

std::string AxiomReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << failures.size() << " failure(s):";
    for (const auto& f : failures) os << "\n  - " << f;
    return os.str();
}

StructureAlgebra::StructureAlgebra(unsigned order, std::vector<std::string> basis_names,
                                   Vector unit)
    : order_(order), dim_(basis_names.size()), names_(std::move(basis_names)) {
    if (unit.size() != dim_) throw std::invalid_argument("unit length mismatch");
    mult_.assign(dim_ * dim_ * dim_, Scalar::zero(order));
    unit_ = Vector(dim_, order);
    for (std::size_t i = 0; i < dim_; ++i) unit_[i] = unit[i].lifted(order);
}

void StructureAlgebra::finalize() {
    sparse_.assign(dim_ * dim_, SparseRow{});
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            SparseRow& row = sparse_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) row.emplace_back(k, c(i, j, k));
        }
    finalized_ = true;
}

Vector StructureAlgebra::multiply(const Vector& u, const Vector& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw std::invalid_argument("algebra element length mismatch");
    Vector out = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            Scalar uv = u[i] * v[j];
            if (finalized_) {
                for (const auto& [k, s] : sparse_[i * dim_ + j]) out[k] += uv * s;
            } else {
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Scalar& s = c(i, j, k);
                    if (!s.is_zero()) out[k] += uv * s;
                }
            }
        }
    }
    return out;
}

Vector StructureAlgebra::power(const Vector& u, unsigned long e) const {
    Vector acc = unit_;
    for (unsigned long i = 0; i < e; ++i) acc = multiply(acc, u);
    return acc;
}

Matrix StructureAlgebra::left_mult(const Vector& a) const {
    Matrix m(dim_, dim_, order_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, multiply(a, basis_vector(j)));
    return m;
}

Matrix StructureAlgebra::right_mult(const Vector& a) const {
    Matrix m(dim_, dim_, order_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, multiply(basis_vector(j), a));
    return m;
}

Scalar StructureAlgebra::bilinear(const Vector& lambda, const Vector& u, const Vector& v) const {
    return lambda.dot(multiply(u, v));
}

AxiomReport StructureAlgebra::verify() const {
    AxiomReport report;
    for (std::size_t i = 0; i < dim_; ++i) {
        Vector bi = basis_vector(i);
        if (multiply(unit_, bi) != bi || multiply(bi, unit_) != bi)
            report.fail("unit law fails at basis " + names_[i]);
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        Vector bi = basis_vector(i);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vector bij = multiply(bi, basis_vector(j));
            for (std::size_t k = 0; k < dim_; ++k) {
                Vector lhs = multiply(bij, basis_vector(k));
                Vector rhs = multiply(bi, multiply(basis_vector(j), basis_vector(k)));
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "associativity fails at (" << i << "," << j << "," << k << ")";
                    report.fail(os.str());
                }
            }
        }
    }
    return report;
}

std::optional<Vector> StructureAlgebra::invert(const Vector& a) const {
    auto li = inverse(left_mult(a));
    if (!li) return std::nullopt;
    Vector inv = *li * unit_;
    if (multiply(a, inv) != unit_ || multiply(inv, a) != unit_)
        throw InternalConsistencyError("one-sided inverse in finite-dimensional algebra");
    return inv;
}

Subspace StructureAlgebra::center() const {
    // z with z*b_i = b_i*z for all i
    Matrix rows(dim_ * dim_, dim_, order_);
    std::size_t r = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        Matrix d = left_mult(basis_vector(i)) - right_mult(basis_vector(i));
        for (std::size_t p = 0; p < dim_; ++p, ++r) rows.set_row(r, d.row(p));
    }
    return Subspace::from_rows(dim_, kernel_basis(rows));
}

bool StructureAlgebra::is_automorphism(const Matrix& sigma) const {
    if (sigma.rows() != dim_ || sigma.cols() != dim_) return false;
    if (sigma * unit_ != unit_) return false;
    if (!inverse(sigma)) return false;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            Vector lhs = sigma * multiply(basis_vector(i), basis_vector(j));
            Vector rhs = multiply(sigma * basis_vector(i), sigma * basis_vector(j));
            if (lhs != rhs) return false;
        }
    return true;
}

Matrix gram_matrix(const StructureAlgebra& alg, const Vector& lambda) {
    std::size_t n = alg.dim();
    Matrix g(n, n, alg.order());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.at(i, j) = lambda.dot(alg.multiply(alg.basis_vector(i), alg.basis_vector(j)));
    return g;
}

FrobeniusSearch frobenius_form(const StructureAlgebra& alg, std::uint64_t seed) {
    std::size_t n = alg.dim();
    auto nondegenerate = [&](const Vector& lam) { return inverse(gram_matrix(alg, lam)).has_value(); };

    for (std::size_t i = 0; i < n; ++i) {
        Vector lam = Vector::unit(n, i, alg.order());
        if (nondegenerate(lam)) return {lam, true};
    }
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 64; ++trial) {
        Vector lam(n, alg.order());
        for (std::size_t i = 0; i < n; ++i)
            lam[i] = Scalar(static_cast<long>(rng() % 7) - 3, alg.order());
        if (lam.is_zero()) continue;
        if (nondegenerate(lam)) return {lam, true};
    }
    if (n <= 6) {
        // generic Gram determinant: entries are linear in the covector
        // coefficients t_0..t_{n-1}
        std::vector<std::vector<MPoly>> g(n, std::vector<MPoly>(n, MPoly(n)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                MPoly entry(n);
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& s = alg.c(i, j, k);
                    if (!s.is_zero()) entry += s * MPoly::variable(n, k);
                }
                g[i][j] = entry;
            }
        MPoly det = mpoly_determinant(g);
        if (det.is_zero()) return {std::nullopt, true};
        // the determinant is nonzero somewhere on {0..n}^n
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<Scalar> pt(n);
            Vector lam(n, alg.order());
            for (std::size_t k = 0; k < n; ++k) {
                pt[k] = Scalar(static_cast<long>(idx[k]), alg.order());
                lam[k] = pt[k];
            }
            if (!det.eval(pt).is_zero()) return {lam, true};
            std::size_t k = n;
            bool done = true;
            while (k > 0) {
                --k;
                if (++idx[k] <= n) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
            if (done) throw InternalConsistencyError("nonzero Gram determinant with empty grid");
        }
    }
    return {std::nullopt, false};
}

std::pair<Matrix, Matrix> dual_bases(const StructureAlgebra& alg, const Vector& lambda) {
    Matrix b = Matrix::identity(alg.dim(), alg.order());
    Matrix g = gram_matrix(alg, lambda);
    auto ginv = inverse(g);
    if (!ginv) throw std::invalid_argument("not a Frobenius form: Gram matrix is singular");
    return {ginv->transpose(), b};
}

Matrix nakayama(const StructureAlgebra& alg, const Vector& lambda) {
    Matrix g = gram_matrix(alg, lambda);
    auto gtinv = inverse(g.transpose());
    if (!gtinv) throw std::invalid_argument("not a Frobenius form: Gram matrix is singular");
    Matrix nu = *gtinv * g;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            Scalar lhs = alg.bilinear(lambda, alg.basis_vector(i), alg.basis_vector(j));
            Scalar rhs = lambda.dot(alg.multiply(nu * alg.basis_vector(j), alg.basis_vector(i)));
            if (lhs != rhs)
                throw InternalConsistencyError("Nakayama defining identity failed");
        }
    if (!alg.is_automorphism(nu))
        throw InternalConsistencyError("Nakayama map is not a unital algebra automorphism");
    return nu;
}

FrobeniusSystem make_frobenius_system(const StructureAlgebra& alg, const Vector& lambda) {
    auto [a, b] = dual_bases(alg, lambda);
    return FrobeniusSystem{lambda, a, b, nakayama(alg, lambda)};
}

FrobeniusSystem make_frobenius_system(const StructureAlgebra& alg, const Vector& lambda,
                                      const Matrix& p) {
    std::size_t n = alg.dim();
    Matrix g(n, n, alg.order());  // g_{kj} = lambda(b_k * p_j)
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            g.at(k, j) = lambda.dot(alg.multiply(alg.basis_vector(k), p.col(j)));
    auto ginv = inverse(g);
    if (!ginv) throw std::invalid_argument("b-basis change is singular against this form");
    return FrobeniusSystem{lambda, ginv->transpose(), p, nakayama(alg, lambda)};
}

Vector tensor_multiply(const StructureAlgebra& first, const StructureAlgebra& second,
                       const Vector& u, const Vector& v) {
    std::size_t n = first.dim(), m = second.dim();
    if (u.size() != n * m || v.size() != n * m)
        throw std::invalid_argument("tensor element length mismatch");
    std::vector<std::size_t> unz, vnz;
    for (std::size_t t = 0; t < n * m; ++t) {
        if (!u[t].is_zero()) unz.push_back(t);
        if (!v[t].is_zero()) vnz.push_back(t);
    }
    bool sparse = first.finalized() && second.finalized();
    Vector out(n * m, first.order());
    for (std::size_t s : unz) {
        std::size_t i = s / m, k = s % m;
        for (std::size_t t : vnz) {
            std::size_t j = t / m, l = t % m;
            Scalar ab = u[s] * v[t];
            if (sparse) {
                for (const auto& [p, cf] : first.product_row(i, j))
                    for (const auto& [q, cs] : second.product_row(k, l))
                        out[p * m + q] += ab * cf * cs;
            } else {
                Vector ff = first.multiply(first.basis_vector(i), first.basis_vector(j));
                Vector ss = second.multiply(second.basis_vector(k), second.basis_vector(l));
                for (std::size_t p = 0; p < n; ++p) {
                    if (ff[p].is_zero()) continue;
                    for (std::size_t q = 0; q < m; ++q) {
                        if (ss[q].is_zero()) continue;
                        out[p * m + q] += ab * ff[p] * ss[q];
                    }
                }
            }
        }
    }
    return out;
}

AxiomReport check_frobenius_identities(const StructureAlgebra& alg, const FrobeniusSystem& fs) {
    AxiomReport report;
    std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar pairing = fs.lambda.dot(alg.multiply(fs.a_dual.col(i), fs.b_basis.col(j)));
            Scalar expect = i == j ? Scalar::one(alg.order()) : Scalar::zero(alg.order());
            if (pairing != expect) {
                report.fail("pairing lambda(a^" + std::to_string(i) + " b_" + std::to_string(j) +
                            ") != delta");
            }
        }

    Vector sum_la_b = alg.zero(), sum_lb_a = alg.zero();
    for (std::size_t i = 0; i < n; ++i) {
        sum_la_b += fs.lambda.dot(fs.a_dual.col(i)) * fs.b_basis.col(i);
        sum_lb_a += fs.lambda.dot(fs.b_basis.col(i)) * fs.a_dual.col(i);
    }
    if (sum_la_b != alg.unit()) report.fail("lambda(a^i) b_i != 1");
    if (sum_lb_a != alg.unit()) report.fail("lambda(b_i) a^i != 1");

    std::size_t nn = n * n;
    for (std::size_t t = 0; t < n; ++t) {
        Vector cvec = alg.basis_vector(t);
        Vector lhs1(nn, alg.order()), rhs1(nn, alg.order());
        Vector lhs2(nn, alg.order()), rhs2(nn, alg.order());
        Vector nuc = fs.nakayama * cvec;
        for (std::size_t i = 0; i < n; ++i) {
            lhs1 += alg.multiply(fs.a_dual.col(i), cvec).tensor(fs.b_basis.col(i));
            rhs1 += fs.a_dual.col(i).tensor(alg.multiply(cvec, fs.b_basis.col(i)));
            lhs2 += alg.multiply(nuc, fs.a_dual.col(i)).tensor(fs.b_basis.col(i));
            rhs2 += fs.a_dual.col(i).tensor(alg.multiply(fs.b_basis.col(i), cvec));
        }
        if (lhs1 != rhs1) report.fail("a^i c (x) b_i != a^i (x) c b_i at c = " + alg.basis_names()[t]);
        if (lhs2 != rhs2)
            report.fail("nu(c) a^i (x) b_i != a^i (x) b_i c at c = " + alg.basis_names()[t]);
    }
    return report;
}

}  // namespace unimod
