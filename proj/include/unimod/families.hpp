#pragma once

#include "unimod/comodule.hpp"

namespace unimod {

/// The N^2-dimensional Taft algebra over Q(zeta_N), PBW basis x^r g^s
/// ordered lexicographically in (r, s); relations x^N = 0, g^N = 1,
/// g x = omega x g with omega = zeta_N.
HopfPtr taft(unsigned n);

/// Group algebra of the group given by a Cayley table (table[i][j] = index
/// of g_i g_j).  The table is verified to be a group.
HopfPtr group_algebra(const std::vector<std::vector<unsigned>>& cayley,
                      std::vector<std::string> names = {});

std::vector<std::vector<unsigned>> cyclic_cayley(unsigned n);
std::vector<std::vector<unsigned>> product_cayley(const std::vector<std::vector<unsigned>>& a,
                                                  const std::vector<std::vector<unsigned>>& b);
std::vector<std::vector<unsigned>> s3_cayley();

/// A_0(d) = k[G]/(G^d - 1) over taft(N) with delta(G) = g^(N/d) (x) G, the
/// Frobenius form lambda(G^r) = delta_{0,r}, and its grouplike cointegral.
ComoduleAlgebra a0(unsigned n, unsigned d);
ComoduleAlgebra a0(HopfPtr taft_n, unsigned d);

/// A_1(d, xi) generated by G, X with G^d = 1, X^N = xi, G X = omega^(N/d) X G;
/// basis X^r G^s; coaction delta(G) = g^(N/d) (x) G, delta(X) = x (x) 1 + g (x) X.
ComoduleAlgebra a1(unsigned n, unsigned d, const Scalar& xi);
ComoduleAlgebra a1(HopfPtr taft_n, unsigned d, const Scalar& xi);

/// A = k with delta(1) = 1_H (x) 1.
ComoduleAlgebra trivial_comodule(HopfPtr hopf);

/// A = H with delta = Delta and lambda_A = lambda_H.
ComoduleAlgebra regular_comodule(HopfPtr hopf);

}  // namespace unimod
