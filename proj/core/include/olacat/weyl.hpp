#pragma once

#include "olacat/weights.hpp"

#include <map>
#include <optional>

namespace olacat {

// A permutation of the index set fixing all but finitely many points.
class WeylElement {
 public:
  WeylElement() = default;
  // Throws DomainError unless `images` is a bijection of its key set.
  static WeylElement from_images(const std::map<WeightIndex, WeightIndex>& images);
  static WeylElement transposition(WeightIndex p, WeightIndex q);

  WeightIndex operator()(WeightIndex p) const;
  WeylElement inverse() const;
  // (a * b)(p) = a(b(p)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  const std::map<WeightIndex, WeightIndex>& moved() const noexcept { return moved_; }
  bool is_identity() const noexcept { return moved_.empty(); }
  int support_rank() const noexcept;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::map<WeightIndex, WeightIndex> moved_;
};

std::string to_string(const WeylElement& s);

WeylElement reflection(const Root& a);

EligibleWeight act(const WeylElement& s, const EligibleWeight& lambda);
// s(lambda + rho) - rho.
EligibleWeight dot(const WeylElement& s, const EligibleWeight& lambda);

// Some s with dot(s, lambda) == mu. Prefers permutations that preserve psi-classes,
// so a finite-Weyl witness is returned whenever one exists.
std::optional<WeylElement> linked(const EligibleWeight& lambda, const EligibleWeight& mu);
bool in_finite_weyl(const WeylElement& s);
// mu is linked to lambda by the finite Weyl group and lambda dominates mu.
bool leq_fin(const EligibleWeight& mu, const EligibleWeight& lambda);
// Same finite-Weyl dot orbit (no dominance condition).
bool finite_linked(const EligibleWeight& lambda, const EligibleWeight& mu);

}  // namespace olacat
