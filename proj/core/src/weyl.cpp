#include "olacat/weyl.hpp"

#include "olacat/errors.hpp"

#include <algorithm>
#include <set>

namespace olacat {

WeylElement WeylElement::from_images(const std::map<WeightIndex, WeightIndex>& images) {
  std::set<WeightIndex> keys, values;
  for (const auto& [p, q] : images) {
    keys.insert(p);
    values.insert(q);
  }
  if (keys != values) throw DomainError("Weyl element must permute its support");
  WeylElement s;
  for (const auto& [p, q] : images)
    if (p != q) s.moved_.emplace(p, q);
  return s;
}

WeylElement WeylElement::transposition(WeightIndex p, WeightIndex q) {
  WeylElement s;
  if (p != q) {
    s.moved_.emplace(p, q);
    s.moved_.emplace(q, p);
  }
  return s;
}

WeightIndex WeylElement::operator()(WeightIndex p) const {
  auto it = moved_.find(p);
  return it == moved_.end() ? p : it->second;
}

WeylElement WeylElement::inverse() const {
  WeylElement s;
  for (const auto& [p, q] : moved_) s.moved_.emplace(q, p);
  return s;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  // The union of both supports is stable under a and b.
  std::map<WeightIndex, WeightIndex> images;
  for (const auto& [p, _] : a.moved_) images[p] = a(b(p));
  for (const auto& [p, _] : b.moved_) images[p] = a(b(p));
  return WeylElement::from_images(images);
}

int WeylElement::support_rank() const noexcept {
  int r = 0;
  for (const auto& [p, q] : moved_) r = std::max(r, std::abs(p.i));
  return r;
}

std::string to_string(const WeylElement& s) {
  if (s.is_identity()) return "id";
  std::string out;
  std::set<WeightIndex> seen;
  for (const auto& [start, _] : s.moved()) {
    if (seen.count(start)) continue;
    out += "(";
    WeightIndex p = start;
    bool first = true;
    do {
      if (!first) out += " ";
      first = false;
      out += to_string(p);
      seen.insert(p);
      p = s(p);
    } while (p != start);
    out += ")";
  }
  return out;
}

WeylElement reflection(const Root& a) {
  if (a.p == a.q) throw DomainError("a root needs two distinct indices");
  return WeylElement::transposition(a.p, a.q);
}

EligibleWeight act(const WeylElement& s, const EligibleWeight& lambda) {
  EligibleWeight out = lambda;
  WeylElement inv = s.inverse();
  for (const auto& [p, _] : s.moved()) {
    validate_index(p, lambda.n());
    out.set_coefficient(p, lambda.coefficient(inv(p)));
  }
  return out;
}

EligibleWeight dot(const WeylElement& s, const EligibleWeight& lambda) {
  EligibleWeight out = lambda;
  WeylElement inv = s.inverse();
  RhoShifted shifted(lambda);
  for (const auto& [p, _] : s.moved()) {
    validate_index(p, lambda.n());
    out.set_coefficient(p, checked_add(shifted(inv(p)), p.i));
  }
  return out;
}

std::optional<WeylElement> linked(const EligibleWeight& lambda, const EligibleWeight& mu) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  if (lambda.levels() != mu.levels()) return std::nullopt;
  const int r = std::max(lambda.eligibility_rank(), mu.eligibility_rank());
  const auto box = box_positions(lambda.n(), r);
  RhoShifted sl(lambda), sm(mu);

  // Value -> unused source positions of lambda.
  std::map<Coeff, std::vector<WeightIndex>> pool;
  for (auto p : box) pool[sl(p)].push_back(p);
  std::map<WeightIndex, WeightIndex> preimage;  // target p -> source q with sl(q) == sm(p)
  std::set<WeightIndex> used;

  auto take = [&](WeightIndex p, auto&& accept) -> bool {
    auto it = pool.find(sm(p));
    if (it == pool.end()) return false;
    for (auto q : it->second)
      if (!used.count(q) && accept(q)) {
        used.insert(q);
        preimage[p] = q;
        return true;
      }
    return false;
  };
  for (auto p : box) take(p, [&](WeightIndex q) { return q == p; });
  for (auto p : box)
    if (!preimage.count(p)) take(p, [&](WeightIndex q) { return psi_class(q) == psi_class(p); });
  for (auto p : box)
    if (!preimage.count(p) && !take(p, [](WeightIndex) { return true; })) return std::nullopt;

  // sigma(q) = p.
  std::map<WeightIndex, WeightIndex> images;
  for (const auto& [p, q] : preimage) images[q] = p;
  return WeylElement::from_images(images);
}

bool in_finite_weyl(const WeylElement& s) {
  return std::all_of(s.moved().begin(), s.moved().end(),
                     [](const auto& kv) { return psi_class(kv.first) == psi_class(kv.second); });
}

bool finite_linked(const EligibleWeight& lambda, const EligibleWeight& mu) {
  auto s = linked(lambda, mu);
  return s && in_finite_weyl(*s);
}

bool leq_fin(const EligibleWeight& mu, const EligibleWeight& lambda) {
  return dominance_geq(lambda, mu) && finite_linked(lambda, mu);
}

}  // namespace olacat
