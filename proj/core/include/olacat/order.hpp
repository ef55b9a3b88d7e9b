#pragma once

#include "olacat/weights.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace olacat {

enum class EdgeKind { DotReflection, PsiNegativeRoot };
std::string to_string(EdgeKind k);

struct PosetEdge {
  EligibleWeight lower;
  EligibleWeight upper;
  EdgeKind kind;
  Root root;  // reflected root, or the root added to `upper`
};

struct OrderOptions {
  std::size_t max_nodes = 200000;
  // Optional cap on the number of steps explored from the upper weight.
  std::optional<int> depth_cap;
  // Truncation rank r; roots are taken from the rank-(r+1) box. Defaults to the
  // largest eligibility rank of the inputs.
  std::optional<int> rank;
};

// All lower neighbours of lambda: reflections in positive finite roots of the
// rank-(r+1) factor that lower lambda, and lambda + nu for psi-negative roots nu.
std::vector<PosetEdge> triangle_down(const EligibleWeight& lambda, int r);

bool leq_order(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts = {});
std::set<EligibleWeight> interval(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts = {});
// Covering relations inside the interval.
std::vector<PosetEdge> hasse(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts = {});
// Number of edges in the longest chain from lambda down to mu; empty if incomparable.
std::optional<int> longest_chain(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts = {});
// psi(lambda - mu) + (lambda - mu, rho_{r+1}).
Coeff chain_length_bound(const EligibleWeight& mu, const EligibleWeight& lambda, int r);
// A potential that drops by at least one along every edge, so it does bound chains.
Coeff potential_chain_bound(const EligibleWeight& mu, const EligibleWeight& lambda, int r);
// mu = s.(lambda + nu) <= lambda for some finite-Weyl s and some nu of the symmetric algebra.
bool leq_order_direct(const EligibleWeight& mu, const EligibleWeight& lambda, int r);

struct BlockTag {
  std::vector<Coeff> levels;
  Coeff finite_sum = 0;

  std::string to_string() const;
  friend bool operator==(const BlockTag&, const BlockTag&) = default;
  friend auto operator<=>(const BlockTag&, const BlockTag&) = default;
};

BlockTag block_class(const EligibleWeight& lambda);

// lambda = w_1, ..., w_m = mu with consecutive weights differing by a root of psi-degree -1.
std::vector<EligibleWeight> linkage_chain(const EligibleWeight& lambda, const EligibleWeight& mu);

}  // namespace olacat
