#pragma once

#include "olacat/kl.hpp"
#include "olacat/partitions.hpp"
#include "olacat/weights.hpp"

#include <map>

// Slow, independent recomputations used to cross-check the fast paths.
namespace olacat::oracle {

// Coefficient of s_nu in s_lambda * s_mu by monomial expansion; |nu| <= 10.
Count naive_lr(const Partition& lambda, const Partition& mu, const Partition& nu);
// KL polynomial from R-polynomials and the inversion formula; m <= 6.
KLPolynomial naive_kl(const Perm& x, const Perm& w);
// Literal enumeration of multisets of coloured roots; |psi(nu)| <= 3, r <= 3.
Count naive_sym_mult(const EligibleWeight& nu, int r);
// Every weight of psi-degree -d with its multiplicity, by the same enumeration; d <= 3, r <= 3.
std::map<EligibleWeight, Count> naive_sym_layer(int n, int r, int d);
// Search for a decomposition of lambda - mu into positive roots; at most 8 roots.
bool naive_dominance(const EligibleWeight& lambda, const EligibleWeight& mu);

}  // namespace olacat::oracle
