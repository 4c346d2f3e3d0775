#include "unimod/comodule.hpp"

#include <random>
#include <sstream>

namespace unimod {

AxiomReport verify_comodule_algebra(const HopfData& hopf, const ComodulePresentation& p) {
    AxiomReport report = p.algebra.verify();
    const StructureAlgebra& h = hopf.algebra();
    const StructureAlgebra& a = p.algebra;
    std::size_t n = h.dim(), m = a.dim();
    if (a.order() != h.order()) {
        report.fail("comodule algebra lives over a different cyclotomic field");
        return report;
    }
    if (p.coaction.rows() != n * m || p.coaction.cols() != m) {
        report.fail("coaction matrix has wrong shape");
        return report;
    }
    if (!report.ok()) return report;

    // (Delta (x) id) delta = (id (x) delta) delta
    for (std::size_t j = 0; j < m; ++j) {
        Vector d = p.coaction.col(j);
        Vector lhs(n * n * m, a.order()), rhs(n * n * m, a.order());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                const Scalar& c = d[i * m + k];
                if (c.is_zero()) continue;
                Vector di = hopf.comult().col(i);
                for (std::size_t ab = 0; ab < n * n; ++ab)
                    if (!di[ab].is_zero()) lhs[ab * m + k] += c * di[ab];
                Vector dk = p.coaction.col(k);
                for (std::size_t bl = 0; bl < n * m; ++bl)
                    if (!dk[bl].is_zero()) rhs[i * n * m + bl] += c * dk[bl];
            }
        if (lhs != rhs) report.fail("coaction coassociativity fails at " + a.basis_names()[j]);
    }

    // (eps (x) id) delta = id
    for (std::size_t j = 0; j < m; ++j) {
        Vector d = p.coaction.col(j);
        Vector out(m, a.order());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                const Scalar& c = d[i * m + k];
                if (!c.is_zero()) out[k] += c * hopf.counit()[i];
            }
        if (out != a.basis_vector(j)) report.fail("coaction counit law fails at " + a.basis_names()[j]);
    }

    // delta multiplicative and unital
    if (p.coaction * a.unit() != h.unit().tensor(a.unit()))
        report.fail("delta(1_A) != 1_H (x) 1_A");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vector prod = a.multiply(a.basis_vector(i), a.basis_vector(j));
            Vector lhs = p.coaction * prod;
            Vector rhs = tensor_multiply(h, a, p.coaction.col(i), p.coaction.col(j));
            if (lhs != rhs) {
                std::ostringstream os;
                os << "delta not multiplicative at (" << a.basis_names()[i] << ","
                   << a.basis_names()[j] << ")";
                report.fail(os.str());
            }
        }
    return report;
}

ComoduleAlgebra::ComoduleAlgebra(HopfPtr hopf, ComodulePresentation p,
                                 std::vector<NamedForm> forms,
                                 std::vector<Vector> grouplike_candidates, std::uint64_t seed)
    : hopf_(std::move(hopf)),
      p_(std::move(p)),
      forms_(std::move(forms)),
      candidates_(std::move(grouplike_candidates)) {
    p_.algebra.finalize();
    AxiomReport report = verify_comodule_algebra(*hopf_, p_);
    if (!report.ok())
        throw std::invalid_argument("invalid comodule algebra: " + report.summary());

    gc_ = find_grouplike_cointegral(*hopf_, p_, candidates_, seed);

    Vector lambda;
    if (!forms_.empty()) {
        lambda = forms_[0].lambda;
        frob_name_ = forms_[0].name;
    } else if (gc_ && gc_->nondegenerate) {
        lambda = gc_->lambda;
        frob_name_ = "grouplike";
        forms_.push_back({frob_name_, lambda});
    } else {
        FrobeniusSearch search = frobenius_form(p_.algebra, seed);
        if (!search.lambda) {
            throw std::invalid_argument(
                search.certified ? "algebra admits no Frobenius form"
                                 : "no Frobenius form found (probabilistic search exhausted)");
        }
        lambda = *search.lambda;
        frob_name_ = "generic";
        forms_.push_back({frob_name_, lambda});
    }

    frob_ = make_frobenius_system(p_.algebra, lambda);
    AxiomReport fr = check_frobenius_identities(p_.algebra, frob_);
    if (!fr.ok()) throw InternalConsistencyError("Frobenius identities failed: " + fr.summary());

    serre_twist_ = serre_twist_for(frob_);
    if (!p_.algebra.is_automorphism(serre_twist_))
        throw std::invalid_argument("Serre twist nu' is not an algebra automorphism");
    nu_tilde_ = nu_tilde_for(frob_);
    if (!p_.algebra.is_automorphism(nu_tilde_))
        throw std::invalid_argument("twist nu~ is not an algebra automorphism");
    if (nu_tilde_ != frob_.nakayama * serre_twist_)
        throw InternalConsistencyError("nu~ != nu o nu'");

    im_ = im_element_for(frob_);
    // dual-basis independence: a permuted and rescaled system gives the same Im
    std::size_t m_ = p_.algebra.dim();
    Matrix alt(m_, m_, order());
    for (std::size_t i = 0; i < m_; ++i)
        alt.at(m_ - 1 - i, i) = Scalar(static_cast<long>(i) + 2, order());
    FrobeniusSystem fs2 = make_frobenius_system(p_.algebra, lambda, alt);
    if (im_element_for(fs2) != im_)
        throw InternalConsistencyError("Im depends on the choice of dual bases");
}

Vector ComoduleAlgebra::h_leg(const Vector& a, const Vector& lambda) const {
    std::size_t n = hopf_->dim(), m = dim();
    Vector d = p_.coaction * a;
    Vector out(n, order());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            const Scalar& c = d[i * m + k];
            if (!c.is_zero() && !lambda[k].is_zero()) out[i] += c * lambda[k];
        }
    return out;
}

ComoduleAlgebra ComoduleAlgebra::with_form(const std::string& name) const {
    for (const auto& f : forms_)
        if (f.name == name) return with_form(f);
    throw std::invalid_argument("no attached Frobenius form named '" + name + "'");
}

ComoduleAlgebra ComoduleAlgebra::with_form(const NamedForm& form) const {
    std::vector<NamedForm> reordered{form};
    for (const auto& f : forms_)
        if (f.name != form.name) reordered.push_back(f);
    return ComoduleAlgebra(hopf_, p_, std::move(reordered), candidates_);
}

Matrix ComoduleAlgebra::serre_twist_for(const FrobeniusSystem& fs) const {
    // nu'(a) = alpha(S(a_(-1))) nu(a_(0))
    std::size_t n = hopf_->dim(), m = dim();
    Vector alpha_s = hopf_->alpha_s();
    Matrix out(m, m, order());
    for (std::size_t j = 0; j < m; ++j) {
        Vector d = p_.coaction.col(j);
        Vector col(m, order());
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha_s[i].is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k) {
                const Scalar& c = d[i * m + k];
                if (c.is_zero()) continue;
                col += (c * alpha_s[i]) * (fs.nakayama * p_.algebra.basis_vector(k));
            }
        }
        out.set_col(j, col);
    }
    return out;
}

Matrix ComoduleAlgebra::nu_tilde_for(const FrobeniusSystem& fs) const {
    // nu~(a) = alpha(S(a_(-1))) nu^2(a_(0))
    std::size_t n = hopf_->dim(), m = dim();
    Vector alpha_s = hopf_->alpha_s();
    Matrix nu2 = fs.nakayama * fs.nakayama;
    Matrix out(m, m, order());
    for (std::size_t j = 0; j < m; ++j) {
        Vector d = p_.coaction.col(j);
        Vector col(m, order());
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha_s[i].is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k) {
                const Scalar& c = d[i * m + k];
                if (c.is_zero()) continue;
                col += (c * alpha_s[i]) * (nu2 * p_.algebra.basis_vector(k));
            }
        }
        out.set_col(j, col);
    }
    return out;
}

Vector ComoduleAlgebra::im_element_for(const FrobeniusSystem& fs) const {
    // Im = lambda(a^i_(0)) lambda(a^j_(0)) g_H S^-3(a^j_(-1)) S^-1(a^i_(-1))
    //      (x) nu(b_j b_i)
    const StructureAlgebra& h = hopf_->algebra();
    const StructureAlgebra& a = p_.algebra;
    std::size_t n = h.dim(), m = a.dim();
    Matrix s1 = hopf_->antipode_power(-1);
    Matrix s3 = hopf_->antipode_power(-3);
    std::vector<Vector> u1(m), u3(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vector u = h_leg(fs.a_dual.col(i), fs.lambda);
        u1[i] = s1 * u;
        u3[i] = s3 * u;
    }
    Vector im(n * m, order());
    for (std::size_t j = 0; j < m; ++j) {
        Vector left = h.multiply(hopf_->grouplike(), u3[j]);
        if (left.is_zero()) continue;
        for (std::size_t i = 0; i < m; ++i) {
            Vector hpart = h.multiply(left, u1[i]);
            if (hpart.is_zero()) continue;
            Vector apart = fs.nakayama * a.multiply(fs.b_basis.col(j), fs.b_basis.col(i));
            im += hpart.tensor(apart);
        }
    }
    return im;
}

std::optional<GrouplikeCointegral> find_grouplike_cointegral(const HopfData& hopf,
                                                             const ComodulePresentation& p,
                                                             const std::vector<Vector>& candidates,
                                                             std::uint64_t seed) {
    const StructureAlgebra& a = p.algebra;
    std::size_t n = hopf.dim(), m = a.dim();
    for (const auto& g : candidates) {
        if (!hopf.is_grouplike(g))
            throw std::invalid_argument("grouplike candidate fails the grouplike check");
        // a_(-1) lambda(a_(0)) = lambda(a) g: rows indexed by (j, i)
        Matrix rows(m * n, m, a.order());
        for (std::size_t j = 0; j < m; ++j) {
            Vector d = p.coaction.col(j);
            for (std::size_t i = 0; i < n; ++i) {
                Vector row(m, a.order());
                for (std::size_t k = 0; k < m; ++k) row[k] = d[i * m + k];
                row[j] -= g[i];
                rows.set_row(j * n + i, row);
            }
        }
        Matrix ker = kernel_basis(rows);
        auto nondeg = [&](const Vector& lam) {
            return !lam.is_zero() && inverse(gram_matrix(a, lam)).has_value();
        };
        for (std::size_t r = 0; r < ker.rows(); ++r)
            if (nondeg(ker.row(r))) return GrouplikeCointegral{g, ker.row(r), true};
        if (ker.rows() > 1) {
            std::mt19937_64 rng(seed);
            for (int trial = 0; trial < 64; ++trial) {
                Vector lam(m, a.order());
                for (std::size_t r = 0; r < ker.rows(); ++r)
                    lam += Scalar(static_cast<long>(rng() % 7) - 3, a.order()) * ker.row(r);
                if (nondeg(lam)) return GrouplikeCointegral{g, lam, true};
            }
        }
    }
    return std::nullopt;
}

bool verify_im_simplification(const ComoduleAlgebra& c, const GrouplikeCointegral& gc) {
    const StructureAlgebra& h = c.hopf().algebra();
    auto ginv = h.invert(gc.grouplike);
    if (!ginv) return false;
    Vector g2 = h.multiply(*ginv, *ginv);
    Vector expected = h.multiply(g2, c.hopf().grouplike()).tensor(c.algebra().unit());
    return c.im_element() == expected;
}

}  // namespace unimod
