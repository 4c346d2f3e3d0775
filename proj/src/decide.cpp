#include "unimod/decide.hpp"

namespace unimod {

std::string UnimodularReport::verdict_str() const {
    switch (verdict) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::probabilistic_no: return "probabilistic-no";
    }
    return "?";
}

Subspace unimodular_subspace(const ComoduleAlgebra& c) {
    const StructureAlgebra& a = c.algebra();
    const StructureAlgebra& h = c.hopf().algebra();
    std::size_t m = a.dim(), n = h.dim();

    // (i) w b_i = nu~(b_i) w for every basis element
    Matrix cond1(m * m, m, c.order());
    for (std::size_t i = 0; i < m; ++i) {
        Matrix d = a.right_mult(a.basis_vector(i)) - a.left_mult(c.nu_tilde() * a.basis_vector(i));
        for (std::size_t r = 0; r < m; ++r) cond1.set_row(i * m + r, d.row(r));
    }

    // (ii) Im . delta(w) = 1_H (x) w, both sides in H (x) A
    Matrix lmul_im(n * m, n * m, c.order());
    const Vector& im = c.im_element();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            const Scalar& s = im[p * m + q];
            if (s.is_zero()) continue;
            lmul_im += s * Matrix::kron(h.left_mult(h.basis_vector(p)),
                                        a.left_mult(a.basis_vector(q)));
        }
    Matrix cond2 = lmul_im * c.coaction();
    for (std::size_t i = 0; i < n; ++i) {
        const Scalar& u = h.unit()[i];
        if (u.is_zero()) continue;
        for (std::size_t k = 0; k < m; ++k) cond2.at(i * m + k, k) -= u;
    }

    return Subspace::from_rows(m, kernel_basis(Matrix::vstack(cond1, cond2)));
}

namespace {

UnimodularReport decide_on_subspace(const ComoduleAlgebra& c, Subspace w, std::string path,
                                    const PitOptions& opts) {
    const StructureAlgebra& a = c.algebra();
    UnimodularReport report;
    report.path = std::move(path);
    report.frobenius_form_name = c.frobenius_name();
    report.frobenius_form = c.frobenius().lambda;
    report.solution_space = std::move(w);

    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < report.solution_space.dim(); ++i)
        gens.push_back(a.left_mult(report.solution_space.basis_vector(i)));
    PitCertificate cert = invertible_in_subspace(gens, opts);
    report.pit = cert;
    switch (cert.kind) {
        case PitCertificate::Kind::witness: {
            Vector g(a.dim(), a.order());
            for (std::size_t k = 0; k < gens.size(); ++k)
                g += (*cert.witness)[k] * report.solution_space.basis_vector(k);
            report.witness = g;
            report.verdict = UnimodularReport::Verdict::yes;
            break;
        }
        case PitCertificate::Kind::certified_zero:
            report.verdict = UnimodularReport::Verdict::no;
            break;
        case PitCertificate::Kind::probable_zero:
            report.verdict = UnimodularReport::Verdict::probabilistic_no;
            break;
    }

    if (report.witness) {
        // witness postconditions, checked exactly
        const Vector& g = *report.witness;
        auto ginv = a.invert(g);
        if (!ginv) throw InternalConsistencyError("unimodular witness is not invertible");
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vector lhs = a.multiply(g, a.basis_vector(i));
            Vector rhs = a.multiply(c.nu_tilde() * a.basis_vector(i), g);
            if (lhs != rhs)
                throw InternalConsistencyError("witness fails the conjugation condition");
        }
        Vector lhs = tensor_multiply(c.hopf().algebra(), a, c.im_element(), c.coaction_of(g));
        if (lhs != c.hopf().algebra().unit().tensor(g))
            throw InternalConsistencyError("witness fails the coaction condition");
    }
    return report;
}

}  // namespace

UnimodularReport decide_unimodular(const ComoduleAlgebra& c, const PitOptions& opts) {
    UnimodularReport report = decide_on_subspace(c, unimodular_subspace(c), "general", opts);
    // verdict independence across alternate attached forms
    for (std::size_t i = 1; i < c.forms().size(); ++i) {
        ComoduleAlgebra alt = c.with_form(c.forms()[i]);
        UnimodularReport other = decide_on_subspace(alt, unimodular_subspace(alt), "general", opts);
        if (other.negative() != report.negative())
            throw InternalConsistencyError("verdict depends on the Frobenius form: " +
                                           report.verdict_str() + " vs " + other.verdict_str() +
                                           " (form " + c.forms()[i].name + ")");
    }
    return report;
}

UnimodularReport decide_unimodular_grouplike(const ComoduleAlgebra& c,
                                             const GrouplikeCointegral& gc,
                                             const PitOptions& opts) {
    if (c.frobenius().lambda != gc.lambda)
        throw std::invalid_argument("grouplike path requires the cointegral as Frobenius form");
    const StructureAlgebra& a = c.algebra();
    const StructureAlgebra& h = c.hopf().algebra();
    std::size_t m = a.dim(), n = h.dim();

    Matrix cond1(m * m, m, c.order());
    for (std::size_t i = 0; i < m; ++i) {
        Matrix d = a.right_mult(a.basis_vector(i)) - a.left_mult(c.nu_tilde() * a.basis_vector(i));
        for (std::size_t r = 0; r < m; ++r) cond1.set_row(i * m + r, d.row(r));
    }

    // delta(w) = g_H^-1 g_A^2 (x) w
    auto ga2 = h.multiply(gc.grouplike, gc.grouplike);
    Vector g = h.multiply(c.hopf().grouplike_inv(), ga2);
    Matrix cond2 = c.coaction();
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i].is_zero()) continue;
        for (std::size_t k = 0; k < m; ++k) cond2.at(i * m + k, k) -= g[i];
    }

    Subspace w = Subspace::from_rows(m, kernel_basis(Matrix::vstack(cond1, cond2)));
    UnimodularReport report = decide_on_subspace(c, std::move(w), "grouplike", opts);

    UnimodularReport general = decide_unimodular(c, opts);
    if (general.negative() != report.negative())
        throw InternalConsistencyError("grouplike path disagrees with the general path");
    return report;
}

std::vector<UnimodularReport> survey(const std::vector<SurveyEntry>& instances,
                                     const PitOptions& opts) {
    std::vector<UnimodularReport> out;
    out.reserve(instances.size());
    for (const auto& entry : instances) {
        UnimodularReport report;
        try {
            const auto& gc = entry.instance.grouplike_cointegral();
            if (gc && gc->nondegenerate && entry.instance.frobenius().lambda == gc->lambda)
                report = decide_unimodular_grouplike(entry.instance, *gc, opts);
            else
                report = decide_unimodular(entry.instance, opts);
        } catch (const std::exception& e) {
            report.label = entry.label + " [error: " + e.what() + "]";
            out.push_back(std::move(report));
            continue;
        }
        report.label = entry.label;
        out.push_back(std::move(report));
    }
    return out;
}

}  // namespace unimod
