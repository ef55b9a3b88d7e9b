#pragma once

#include "olacat/kl.hpp"
#include "olacat/partitions.hpp"
#include "olacat/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace olacat {

struct PartitionTuple {
  std::vector<Partition> parts;

  PartitionTuple() = default;
  explicit PartitionTuple(std::vector<Partition> p) : parts(std::move(p)) {}
  PartitionTuple(std::initializer_list<Partition> p) : parts(p) {}
  static PartitionTuple empty(int n) { return PartitionTuple(std::vector<Partition>(static_cast<std::size_t>(n))); }

  int size() const noexcept { return static_cast<int>(parts.size()); }
  const Partition& operator[](int k) const { return parts.at(static_cast<std::size_t>(k)); }
  // "[[2,1],[]]"; a bare partition "[1]" reads as a 1-tuple.
  std::string to_string() const;
  static PartitionTuple parse(std::string_view text);

  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
  friend auto operator<=>(const PartitionTuple& a, const PartitionTuple& b) { return a.parts <=> b.parts; }
};

using TuplePair = std::pair<PartitionTuple, PartitionTuple>;
using TupleTable = std::map<TuplePair, Count>;

struct MultiplicityTable {
  EligibleWeight base;
  std::map<EligibleWeight, Count> entries;
  int rank_used = 0;
  bool stabilized = false;
};

struct FlagLayer {
  EligibleWeight weight;
  Count multiplicity;
  HalfInteger psi_degree;
};

struct StandardResult {
  Count value;
  int rank_used = 0;
  bool stabilized = false;
};

struct SocleLayer {
  int index;  // 1-based
  TupleTable entries;
};

struct OlaOptions {
  KLOptions kl;
  // How many times the truncation rank may be raised while looking for a stable value.
  int max_extra_rank = 3;
};

// [A(lambda) : L(mu)] summed over the symmetric-algebra weights at rank R,
// enumerating the finite-Weyl orbit of mu between mu and lambda.
Count standard_multiplicity_at_rank(const EligibleWeight& lambda, const EligibleWeight& mu, int R,
                                    const OlaOptions& opts = {});
// The same sum organised by psi-layers: all nu of the right degree first, then m(lambda+nu, mu).
Count standard_multiplicity_by_layers(const EligibleWeight& lambda, const EligibleWeight& mu, int R,
                                      const OlaOptions& opts = {});
// Starts at max eligibility rank + 1 (or `rank` if larger) and raises it until two
// consecutive ranks agree.
StandardResult standard_simple_multiplicity_detailed(const EligibleWeight& lambda, const EligibleWeight& mu,
                                                     const OlaOptions& opts = {}, std::optional<int> rank = {});
Count standard_simple_multiplicity(const EligibleWeight& lambda, const EligibleWeight& mu, const OlaOptions& opts = {});

// Dual-Verma flag of the degree-p layer at rank r. Empty when p > psi(lambda).
std::vector<FlagLayer> standard_psi_layer(const EligibleWeight& lambda, HalfInteger p, int r);

// [M_r(lambda) : L(mu)]; empty ("not covered") when mu is not r-eligible.
std::optional<Count> parabolic_verma_multiplicity(const EligibleWeight& lambda, const EligibleWeight& mu, int r,
                                                  const KLOptions& opts = {});

// mu -> (I(lambda) : A(mu)) = m(mu, lambda) over the orbit of lambda above lambda.
MultiplicityTable injective_standard_flag(const EligibleWeight& lambda, const OlaOptions& opts = {});
MultiplicityTable injective_standard_flag_at_rank(const EligibleWeight& lambda, int R, const OlaOptions& opts = {});

std::vector<SocleLayer> socle_layers_tensor_injective(const PartitionTuple& lambda, const PartitionTuple& mu);
TupleTable la_dual_decomposition(const PartitionTuple& lambda, const PartitionTuple& mu);

// Finite-Weyl orbit of `source` inside the rank-R box, restricted to lower <= gamma <= upper
// in dominance (either bound optional).
std::vector<EligibleWeight> orbit_between(const EligibleWeight& source, int R, const EligibleWeight* lower,
                                          const EligibleWeight* upper);

}  // namespace olacat
