#pragma once

#include "unimod/algebra.hpp"

#include <memory>

namespace unimod {

/// Raw Hopf-algebra data before validation.  comult is the n^2 x n matrix
/// whose column j holds Delta(b_j) in H (x) H coordinates under the global
/// ordering (i,k) -> i*n+k.
struct HopfPresentation {
    StructureAlgebra algebra;
    Matrix comult;
    Vector counit;
    Matrix antipode;
};

/// Itemized Hopf-axiom check (coassociativity, counit law, Delta and eps
/// algebra maps, antipode axiom, antipode invertibility).
AxiomReport verify_hopf(const HopfPresentation& p);

class HopfData {
public:
    /// Validates the axioms and computes all invariants eagerly; throws
    /// std::invalid_argument with the report on bad input.
    explicit HopfData(HopfPresentation p);

    const StructureAlgebra& algebra() const { return p_.algebra; }
    const HopfPresentation& presentation() const { return p_; }
    const Matrix& comult() const { return p_.comult; }
    const Vector& counit() const { return p_.counit; }
    const Matrix& antipode() const { return p_.antipode; }
    const Matrix& antipode_inv() const { return s_inv_; }
    std::size_t dim() const { return p_.algebra.dim(); }
    unsigned order() const { return p_.algebra.order(); }

    /// S^e for any integer e (negative powers via the inverse).
    Matrix antipode_power(long e) const;

    const Vector& integral() const { return integral_; }          // Lambda
    const Vector& cointegral() const { return cointegral_; }      // lambda_H
    const Vector& alpha() const { return alpha_; }                // distinguished character
    const Vector& grouplike() const { return grouplike_; }        // g_H
    const Vector& grouplike_inv() const { return grouplike_inv_; }
    const Matrix& nakayama() const { return nakayama_; }          // nu_H
    const Matrix& nakayama_inv() const { return nakayama_inv_; }

    bool unimodular() const;       // alpha == counit
    bool dual_unimodular() const;  // g_H == 1

    /// Delta applied to an arbitrary element (n^2 coordinates).
    Vector comult_of(const Vector& v) const { return p_.comult * v; }
    Scalar counit_of(const Vector& v) const { return p_.counit.dot(v); }

    /// alpha(S(h)) as a covector; convenience for twists.
    Vector alpha_s() const;

    bool is_grouplike(const Vector& g) const;

    /// S^4(h) = g_H [alpha(h1) h2 alpha(S(h3))] g_H^-1 on every basis element.
    bool radford_s4_holds() const;

private:
    void compute_integral();
    void compute_cointegral();
    void compute_nakayama();

    HopfPresentation p_;
    Matrix s_inv_;
    Vector integral_, cointegral_, alpha_, grouplike_, grouplike_inv_;
    Matrix nakayama_, nakayama_inv_;
};

using HopfPtr = std::shared_ptr<const HopfData>;

Matrix radford_iso(const HopfData& h, const class FinModule& x);

}  // namespace unimod
