#pragma once

#include "unimod/comodule.hpp"

namespace unimod {

/// Finite-dimensional left module over a StructureAlgebra, as one action
/// matrix per basis element.
struct FinModule {
    StructureAlgebra over;
    std::vector<Matrix> action;

    std::size_t dim() const { return action.empty() ? 0 : action[0].rows(); }
    /// Action matrix of an arbitrary algebra element.
    Matrix act(const Vector& a) const;
};

AxiomReport verify_module(const FinModule& m);

FinModule regular_module(const StructureAlgebra& alg);
/// One-dimensional module along an algebra map chi (verified multiplicative
/// and unital).
FinModule one_dimensional_module(const StructureAlgebra& alg, const Vector& chi);
FinModule trivial_module(const HopfData& h);

/// Action precomposed with a verified algebra automorphism.
FinModule twist_module(const FinModule& m, const Matrix& sigma);

/// X |> M over A: a . (x (x) m) = a_(-1) x (x) a_(0) m.
FinModule tensor_action(const ComoduleAlgebra& c, const FinModule& x, const FinModule& m);

/// M <| X over B = H with the regular right coaction Delta.
FinModule right_tensor_action(const HopfData& h, const FinModule& m, const FinModule& x);

/// H-module tensor product X (x) Y along Delta.
FinModule hopf_tensor_module(const HopfData& h, const FinModule& x, const FinModule& y);

enum class DualVariant { left, right, double_left, double_right };

/// Dual modules: (h.f)(x) = f(S(h)x) for the left dual, S^-1 for the right,
/// and S^(+/-2) through phi_X for the double duals.
FinModule dual_module(const HopfData& h, const FinModule& x, DualVariant variant);

/// Hom_A(M, N) as a subspace of flattened v_N x v_M matrices.
Subspace hom_space(const FinModule& m, const FinModule& n);
Matrix hom_element(const Subspace& hom, std::size_t rows, std::size_t cols, std::size_t i);

std::optional<Matrix> modules_isomorphic(const FinModule& m, const FinModule& n,
                                         const PitOptions& opts = {});

/// Coordinates of v in the rref row basis of s; nullopt if v is outside s.
std::optional<Vector> coordinates_in(const Subspace& s, const Vector& v);

/// Sum of Kronecker terms P_i (x) Q_i; keeps big maps unmaterialized.
struct KronSum {
    std::vector<std::pair<Matrix, Matrix>> terms;
    std::size_t rows() const;
    std::size_t cols() const;
    Vector apply(const Vector& v) const;
    Matrix to_matrix() const;
};

/// The twisted module structure of the Nakayama functor and its inverse.
KronSum fnl_terms(const ComoduleAlgebra& c, const FinModule& x, const FinModule& m);
Matrix fnl_matrix(const ComoduleAlgebra& c, const FinModule& x, const FinModule& m);
Matrix ofnl_matrix(const ComoduleAlgebra& c, const FinModule& x, const FinModule& m);

/// A^* (x)_A M realized as an explicit cokernel with a stored section.
struct Cokernel {
    std::size_t full_dim = 0;
    Matrix rows;  // rref of the relation span
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free_cols;

    std::size_t dim() const { return free_cols.size(); }
    Vector reduce_full(Vector v) const;  // eliminate pivot coordinates
    Vector project(const Vector& v) const;
    Vector lift(const Vector& q) const;
};
Cokernel make_cokernel(std::size_t ambient, const std::vector<Vector>& relations);

/// A-module checks for alpha_M: A^* (x)_A M -> nu M and its inverse beta_M.
AxiomReport verify_alpha_beta(const ComoduleAlgebra& c, const FinModule& m);

/// Coend projection maps i_{M,N}: A-linearity, dinaturality over the full
/// hom-space spanning set (against N and the regular module), and the
/// right-inverse property of omega.
AxiomReport verify_coend_projection(const ComoduleAlgebra& c, const FinModule& m,
                                    const FinModule& n);

/// fnl/ofnl: mutual inverses, A-linearity, and the tensor coherence
/// fnl_{X (x) Y, M} = (id (x) fnl_{Y,M}) o fnl_{X, Y |> M} with Y = X.
AxiomReport verify_fnl(const ComoduleAlgebra& c, const FinModule& x, const FinModule& m);

/// fnr/ofnr for B = H with the regular right coaction, plus the composite
/// g_X = fnl o flip o ofnr: formula g_X(c (x) phi x) = phi(g_H^-1 x) (x) c
/// and H-linearity.
AxiomReport verify_fnr_and_radford(const HopfPtr& h, const FinModule& x);

/// The Serre-twist module structure fsl: invertible A-module map equal to
/// (R_X^-1 (x) id) o fnl.
AxiomReport verify_fsl(const ComoduleAlgebra& c, const FinModule& x, const FinModule& m);

/// Intertwiner check for the Radford isomorphism on X (equivalent to S^4).
AxiomReport verify_radford_iso(const HopfData& h, const FinModule& x);

/// Both one-dimensional modules of the distinguished pair: D with action
/// alpha(S(h)) and N(1) with action alpha(h); N(1) is checked to be the
/// Nakayama twist of the trivial module.
std::pair<FinModule, FinModule> distinguished_object(const HopfData& h);

}  // namespace unimod
