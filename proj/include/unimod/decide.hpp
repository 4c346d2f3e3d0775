#pragma once

#include "unimod/comodule.hpp"

#include <string>
#include <vector>

namespace unimod {

/// Outcome of the unimodularity decision with its certificate: a witness
/// element for yes, the solution space (and PIT record, when used) for no.
struct UnimodularReport {
    enum class Verdict { yes, no, probabilistic_no };
    Verdict verdict = Verdict::no;
    std::optional<Vector> witness;  // unimodular element of A
    Subspace solution_space;        // W
    std::string path;               // "general" or "grouplike"
    std::string frobenius_form_name;
    Vector frobenius_form;
    std::optional<PitCertificate> pit;
    std::string label;  // instance tag, set by survey

    bool negative() const { return verdict != Verdict::yes; }
    std::string verdict_str() const;
};

/// W = { w : w a = nu~(a) w for all a }  intersect  { w : Im delta(w) = 1_H (x) w }.
Subspace unimodular_subspace(const ComoduleAlgebra& c);

/// Existence of an invertible element of W decides unimodularity; the
/// verdict is re-checked against every alternate attached Frobenius form.
UnimodularReport decide_unimodular(const ComoduleAlgebra& c, const PitOptions& opts = {});

/// Simplified criterion when the Frobenius form is a grouplike cointegral:
/// w a = nu~(a) w and delta(w) = g_H^-1 g_A^2 (x) w.  Must agree with the
/// general path.
UnimodularReport decide_unimodular_grouplike(const ComoduleAlgebra& c,
                                             const GrouplikeCointegral& gc,
                                             const PitOptions& opts = {});

struct SurveyEntry {
    std::string label;
    ComoduleAlgebra instance;
};

/// One report per instance, in input order; per-instance errors are captured
/// in the row's label rather than propagated.
std::vector<UnimodularReport> survey(const std::vector<SurveyEntry>& instances,
                                     const PitOptions& opts = {});

}  // namespace unimod
