#pragma once

#include "unimod/hopf.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unimod {

/// Raw comodule-algebra data: the coaction delta: A -> H (x) A is an
/// (n*m) x m matrix under the global tensor ordering.
struct ComodulePresentation {
    StructureAlgebra algebra;
    Matrix coaction;
};

AxiomReport verify_comodule_algebra(const HopfData& hopf, const ComodulePresentation& p);

/// A grouplike cointegral (g, lambda): a_(-1) lambda(a_(0)) = lambda(a) g.
struct GrouplikeCointegral {
    Vector grouplike;  // g in H
    Vector lambda;     // covector on A
    bool nondegenerate = false;
};

struct NamedForm {
    std::string name;
    Vector lambda;
};

/// Exact left H-comodule algebra with a fixed Frobenius system and the
/// derived twist data: the Serre twist nu', the composite twist
/// nu~ = nu o nu', and the element Im of H (x) A driving the unimodularity
/// criterion.
class ComoduleAlgebra {
public:
    ComoduleAlgebra(HopfPtr hopf, ComodulePresentation p,
                    std::vector<NamedForm> forms = {},
                    std::vector<Vector> grouplike_candidates = {},
                    std::uint64_t seed = kDefaultPitSeed);

    const HopfData& hopf() const { return *hopf_; }
    HopfPtr hopf_ptr() const { return hopf_; }
    const StructureAlgebra& algebra() const { return p_.algebra; }
    const Matrix& coaction() const { return p_.coaction; }
    const ComodulePresentation& presentation() const { return p_; }
    std::size_t dim() const { return p_.algebra.dim(); }
    unsigned order() const { return p_.algebra.order(); }

    const FrobeniusSystem& frobenius() const { return frob_; }
    const std::string& frobenius_name() const { return frob_name_; }
    const std::vector<NamedForm>& forms() const { return forms_; }
    const std::optional<GrouplikeCointegral>& grouplike_cointegral() const { return gc_; }
    const std::vector<Vector>& grouplike_candidates() const { return candidates_; }

    const Matrix& serre_twist() const { return serre_twist_; }  // nu'
    const Matrix& nu_tilde() const { return nu_tilde_; }        // nu~ = nu o nu'
    const Vector& im_element() const { return im_; }            // Im in H (x) A

    Vector coaction_of(const Vector& a) const { return p_.coaction * a; }

    /// (id (x) lambda) delta(a): the H-leg of delta(a) weighted by lambda.
    Vector h_leg(const Vector& a, const Vector& lambda) const;

    /// Rebuilds this comodule algebra over another attached form (by name).
    ComoduleAlgebra with_form(const std::string& name) const;
    /// Rebuilds with an explicit form.
    ComoduleAlgebra with_form(const NamedForm& form) const;

    /// Twist data recomputed for an arbitrary Frobenius system (used for
    /// dual-basis and form independence checks).
    Matrix serre_twist_for(const FrobeniusSystem& fs) const;
    Matrix nu_tilde_for(const FrobeniusSystem& fs) const;
    Vector im_element_for(const FrobeniusSystem& fs) const;

private:
    HopfPtr hopf_;
    ComodulePresentation p_;
    std::vector<NamedForm> forms_;
    std::vector<Vector> candidates_;
    FrobeniusSystem frob_;
    std::string frob_name_;
    std::optional<GrouplikeCointegral> gc_;
    Matrix serre_twist_, nu_tilde_;
    Vector im_;
};

/// Solves the cointegral condition for each candidate grouplike in turn and
/// returns the first pair whose form is nondegenerate.  "none" is a
/// legitimate outcome.
std::optional<GrouplikeCointegral> find_grouplike_cointegral(
    const HopfData& hopf, const ComodulePresentation& p, const std::vector<Vector>& candidates,
    std::uint64_t seed = kDefaultPitSeed);

/// Checks Im == g_A^-2 g_H (x) 1_A for a comodule algebra whose Frobenius
/// form is the given grouplike cointegral.
bool verify_im_simplification(const ComoduleAlgebra& c, const GrouplikeCointegral& gc);

}  // namespace unimod
