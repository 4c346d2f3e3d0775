#include "unimod/hopf.hpp"

#include <sstream>

namespace unimod {

AxiomReport verify_hopf(const HopfPresentation& p) {
    AxiomReport report = p.algebra.verify();
    const StructureAlgebra& alg = p.algebra;
    std::size_t n = alg.dim();
    if (p.comult.rows() != n * n || p.comult.cols() != n) {
        report.fail("comultiplication matrix has wrong shape");
        return report;
    }
    if (p.counit.size() != n || p.antipode.rows() != n || p.antipode.cols() != n) {
        report.fail("counit/antipode have wrong shape");
        return report;
    }
    if (!report.ok()) return report;

    // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    for (std::size_t j = 0; j < n; ++j) {
        Vector d = p.comult.col(j);
        Vector lhs(n * n * n, alg.order()), rhs(n * n * n, alg.order());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = d[i * n + k];
                if (c.is_zero()) continue;
                Vector di = p.comult.col(i);
                for (std::size_t a = 0; a < n * n; ++a)
                    if (!di[a].is_zero()) lhs[a * n + k] += c * di[a];
                Vector dk = p.comult.col(k);
                for (std::size_t b = 0; b < n * n; ++b)
                    if (!dk[b].is_zero()) rhs[i * n * n + b] += c * dk[b];
            }
        if (lhs != rhs) report.fail("coassociativity fails at basis " + alg.basis_names()[j]);
    }

    // counit law
    for (std::size_t j = 0; j < n; ++j) {
        Vector d = p.comult.col(j);
        Vector left(n, alg.order()), right(n, alg.order());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = d[i * n + k];
                if (c.is_zero()) continue;
                left[k] += c * p.counit[i];
                right[i] += c * p.counit[k];
            }
        if (left != alg.basis_vector(j) || right != alg.basis_vector(j))
            report.fail("counit law fails at basis " + alg.basis_names()[j]);
    }

    // Delta and eps are algebra maps
    Vector unit_tensor = alg.unit().tensor(alg.unit());
    if (p.comult * alg.unit() != unit_tensor) report.fail("Delta(1) != 1 (x) 1");
    if (!p.counit.dot(alg.unit()).is_one()) report.fail("eps(1) != 1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector prod = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
            if (p.comult * prod !=
                tensor_multiply(alg, alg, p.comult.col(i), p.comult.col(j))) {
                std::ostringstream os;
                os << "Delta not multiplicative at (" << i << "," << j << ")";
                report.fail(os.str());
            }
            if (p.counit.dot(prod) != p.counit[i] * p.counit[j]) {
                std::ostringstream os;
                os << "eps not multiplicative at (" << i << "," << j << ")";
                report.fail(os.str());
            }
        }

    // antipode axiom: m(S (x) id)Delta = u eps = m(id (x) S)Delta
    for (std::size_t j = 0; j < n; ++j) {
        Vector d = p.comult.col(j);
        Vector lhs = alg.zero(), rhs = alg.zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = d[i * n + k];
                if (c.is_zero()) continue;
                lhs += c * alg.multiply(p.antipode * alg.basis_vector(i), alg.basis_vector(k));
                rhs += c * alg.multiply(alg.basis_vector(i), p.antipode * alg.basis_vector(k));
            }
        Vector target = p.counit[j] * alg.unit();
        if (lhs != target) report.fail("antipode axiom m(S x id)Delta fails at " + alg.basis_names()[j]);
        if (rhs != target) report.fail("antipode axiom m(id x S)Delta fails at " + alg.basis_names()[j]);
    }

    if (!inverse(p.antipode)) report.fail("antipode is not invertible");
    return report;
}

HopfData::HopfData(HopfPresentation p) : p_(std::move(p)) {
    p_.algebra.finalize();
    AxiomReport report = verify_hopf(p_);
    if (!report.ok())
        throw std::invalid_argument("invalid Hopf data: " + report.summary());
    s_inv_ = inverse_or_throw(p_.antipode);
    compute_integral();
    compute_cointegral();
    compute_nakayama();
    if (!radford_s4_holds())
        throw InternalConsistencyError("Radford S^4 identity failed on valid Hopf data");
}

Matrix HopfData::antipode_power(long e) const {
    const Matrix& base = e >= 0 ? p_.antipode : s_inv_;
    long k = e >= 0 ? e : -e;
    Matrix acc = Matrix::identity(dim(), order());
    for (long i = 0; i < k; ++i) acc = base * acc;
    return acc;
}

void HopfData::compute_integral() {
    const StructureAlgebra& alg = p_.algebra;
    std::size_t n = alg.dim();
    Matrix rows(n * n, n, order());
    for (std::size_t i = 0; i < n; ++i) {
        Matrix d = alg.left_mult(alg.basis_vector(i));
        for (std::size_t r = 0; r < n; ++r) {
            Vector row = d.row(r);
            row[r] -= p_.counit[i];
            rows.set_row(i * n + r, row);
        }
    }
    Matrix ker = kernel_basis(rows);
    if (ker.rows() != 1)
        throw std::invalid_argument("left-integral space has dimension " +
                                    std::to_string(ker.rows()) + ", expected 1");
    integral_ = ker.row(0);

    // distinguished character: Lambda h = alpha(h) Lambda
    std::size_t pivot = 0;
    while (integral_[pivot].is_zero()) ++pivot;
    alpha_ = Vector(n, order());
    for (std::size_t j = 0; j < n; ++j) {
        Vector lh = alg.multiply(integral_, alg.basis_vector(j));
        alpha_[j] = lh[pivot] / integral_[pivot];
        if (lh != alpha_[j] * integral_)
            throw std::invalid_argument("Lambda h is not proportional to Lambda");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector prod = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
            if (alpha_.dot(prod) != alpha_[i] * alpha_[j])
                throw InternalConsistencyError("distinguished character is not multiplicative");
        }
    if (!alpha_.dot(alg.unit()).is_one())
        throw InternalConsistencyError("distinguished character is not unital");
}

void HopfData::compute_cointegral() {
    const StructureAlgebra& alg = p_.algebra;
    std::size_t n = alg.dim();
    // lambda(h1) h2 = lambda(h) 1 for all basis h: rows indexed by (j,k)
    Matrix rows(n * n, n, order());
    for (std::size_t j = 0; j < n; ++j) {
        Vector d = p_.comult.col(j);
        for (std::size_t k = 0; k < n; ++k) {
            Vector row(n, order());
            for (std::size_t i = 0; i < n; ++i) row[i] = d[i * n + k];
            row[j] -= alg.unit()[k];
            rows.set_row(j * n + k, row);
        }
    }
    Matrix ker = kernel_basis(rows);
    if (ker.rows() != 1)
        throw std::invalid_argument("right-cointegral space has dimension " +
                                    std::to_string(ker.rows()) + ", expected 1");
    cointegral_ = ker.row(0);
    Scalar pairing = cointegral_.dot(integral_);
    if (pairing.is_zero())
        throw std::invalid_argument("cointegral pairs to zero with the integral");
    cointegral_ = pairing.inv() * cointegral_;

    // distinguished grouplike: h1 lambda(h2) = lambda(h) g_H
    std::size_t jstar = 0;
    while (cointegral_.dot(p_.algebra.basis_vector(jstar)).is_zero()) ++jstar;
    Scalar lj = cointegral_[jstar];
    Vector d = p_.comult.col(jstar);
    grouplike_ = Vector(n, order());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& c = d[i * n + k];
            if (!c.is_zero()) grouplike_[i] += c * cointegral_[k];
        }
    grouplike_ = lj.inv() * grouplike_;
    for (std::size_t j = 0; j < n; ++j) {
        Vector dj = p_.comult.col(j);
        Vector lhs(n, order());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = dj[i * n + k];
                if (!c.is_zero()) lhs[i] += c * cointegral_[k];
            }
        if (lhs != cointegral_[j] * grouplike_)
            throw std::invalid_argument("h1 lambda(h2) is not proportional to the grouplike");
    }
    if (!is_grouplike(grouplike_))
        throw std::invalid_argument("distinguished element failed the grouplike check");
    auto inv = p_.algebra.invert(grouplike_);
    if (!inv) throw std::invalid_argument("distinguished grouplike is not invertible");
    grouplike_inv_ = *inv;
}

void HopfData::compute_nakayama() {
    const StructureAlgebra& alg = p_.algebra;
    std::size_t n = alg.dim();
    // nu_H(h) = alpha(h1) S^2(h2)
    Matrix s2 = antipode_power(2);
    nakayama_ = Matrix(n, n, order());
    for (std::size_t j = 0; j < n; ++j) {
        Vector d = p_.comult.col(j);
        Vector out(n, order());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = d[i * n + k];
                if (c.is_zero() || alpha_[i].is_zero()) continue;
                out += (c * alpha_[i]) * (s2 * alg.basis_vector(k));
            }
        nakayama_.set_col(j, out);
    }
    Matrix from_form = unimod::nakayama(alg, cointegral_);
    if (nakayama_ != from_form)
        throw InternalConsistencyError(
            "closed-form Nakayama disagrees with the Frobenius-form computation");

    // inverse closed form: S^2(g^-1 h1 g) alpha(S(h2))
    Matrix nu_bar(n, n, order());
    for (std::size_t j = 0; j < n; ++j) {
        Vector d = p_.comult.col(j);
        Vector out(n, order());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = d[i * n + k];
                if (c.is_zero()) continue;
                Scalar w = alpha_.dot(p_.antipode * alg.basis_vector(k));
                if (w.is_zero()) continue;
                Vector conj = alg.multiply(grouplike_inv_,
                                           alg.multiply(alg.basis_vector(i), grouplike_));
                out += (c * w) * (s2 * conj);
            }
        nu_bar.set_col(j, out);
    }
    nakayama_inv_ = nu_bar;
    if (nakayama_ * nakayama_inv_ != Matrix::identity(n, order()) ||
        nakayama_inv_ * nakayama_ != Matrix::identity(n, order()))
        throw InternalConsistencyError("closed-form Nakayama inverse is not the inverse");
}

bool HopfData::unimodular() const { return alpha_ == p_.counit; }

bool HopfData::dual_unimodular() const { return grouplike_ == p_.algebra.unit(); }

Vector HopfData::alpha_s() const {
    Vector v(dim(), order());
    for (std::size_t j = 0; j < dim(); ++j)
        v[j] = alpha_.dot(p_.antipode * p_.algebra.basis_vector(j));
    return v;
}

bool HopfData::is_grouplike(const Vector& g) const {
    if (g.is_zero()) return false;
    return p_.comult * g == g.tensor(g) && p_.counit.dot(g).is_one();
}

bool HopfData::radford_s4_holds() const {
    const StructureAlgebra& alg = p_.algebra;
    std::size_t n = alg.dim();
    Matrix s4 = antipode_power(4);
    Vector alpha_bar = alpha_s();
    for (std::size_t j = 0; j < n; ++j) {
        // h1 (x) h2 (x) h3 via (Delta (x) id) Delta
        Vector d = p_.comult.col(j);
        Vector mid = alg.zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = d[i * n + k];
                if (c.is_zero() || alpha_bar[k].is_zero()) continue;
                Vector di = p_.comult.col(i);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const Scalar& cc = di[p * n + q];
                        if (cc.is_zero() || alpha_[p].is_zero()) continue;
                        mid += (c * cc * alpha_[p] * alpha_bar[k]) * alg.basis_vector(q);
                    }
            }
        Vector rhs = alg.multiply(grouplike_, alg.multiply(mid, grouplike_inv_));
        if (s4 * alg.basis_vector(j) != rhs) return false;
    }
    return true;
}

}  // namespace unimod
