#pragma once

#include "olacat/partitions.hpp"
#include "olacat/weights.hpp"

#include <map>
#include <optional>
#include <vector>

namespace olacat {

struct WeightedRoot {
  Root root;
  int degree;              // -psi(root) >= 1
  std::int64_t multiplicity;  // 2^degree - 1
};

// psi-negative roots with both indices in the rank-r box, each with its multiplicity.
class WeightedRootSpace {
 public:
  WeightedRootSpace(int n, int r);
  int n() const noexcept { return n_; }
  int rank() const noexcept { return r_; }
  const std::vector<WeightedRoot>& entries() const noexcept { return entries_; }

 private:
  int n_;
  int r_;
  std::vector<WeightedRoot> entries_;
};

// 2^|psi(a)| - 1 for psi(a) <= -1, else 0.
std::int64_t r_multiplicity(const Root& a);

// Weight multiplicity of nu in the symmetric algebra on the rank-r root space.
// nu must have zero level and be r-eligible.
Count sym_weight_mult(const EligibleWeight& nu, int r);
// -psi(nu) when nu occurs with positive multiplicity, otherwise empty.
std::optional<int> sym_support_degree(const EligibleWeight& nu);
// Every weight of psi-degree -d in the rank-r symmetric algebra, with multiplicities.
std::map<EligibleWeight, Count> sym_layer(int n, int r, int d);

}  // namespace olacat
