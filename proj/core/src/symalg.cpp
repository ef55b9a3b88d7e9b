#include "olacat/symalg.hpp"

#include "olacat/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace olacat {

namespace {

Count multichoose(std::int64_t colors, std::int64_t t) {
  // C(colors + t - 1, t)
  Count out = 1;
  for (std::int64_t j = 1; j <= t; ++j) {
    out *= colors + j - 1;
    out /= j;
  }
  return out;
}

struct Box {
  std::vector<WeightIndex> pos;
  std::map<WeightIndex, int> index;
  std::vector<int> cls;

  Box(int n, int r) : pos(box_positions(n, r)) {
    for (std::size_t j = 0; j < pos.size(); ++j) {
      index[pos[j]] = static_cast<int>(j);
      cls.push_back(psi_class(pos[j]));
    }
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e37);
    return h;
  }
};

struct DenseRoot {
  int a, b;  // box indices: +1 at a, -1 at b
  int degree;
  std::int64_t mult;
};

std::vector<DenseRoot> dense_roots(const WeightedRootSpace& space, const Box& box) {
  std::vector<DenseRoot> out;
  for (const auto& e : space.entries())
    out.push_back({box.index.at(e.root.p), box.index.at(e.root.q), e.degree, e.multiplicity});
  // Finish with each position as early as possible so leftovers are caught quickly.
  std::stable_sort(out.begin(), out.end(), [](const DenseRoot& x, const DenseRoot& y) {
    return std::min(x.a, x.b) < std::min(y.a, y.b);
  });
  return out;
}

class WeightCounter {
 public:
  WeightCounter(std::vector<DenseRoot> roots, std::size_t width) : roots_(std::move(roots)) {
    touched_.assign(roots_.size() + 1, std::vector<bool>(width, false));
    for (std::size_t i = roots_.size(); i-- > 0;) {
      touched_[i] = touched_[i + 1];
      touched_[i][static_cast<std::size_t>(roots_[i].a)] = true;
      touched_[i][static_cast<std::size_t>(roots_[i].b)] = true;
    }
  }

  Count count(std::vector<int> rem, int degree) { return rec(0, rem, degree); }

 private:
  Count rec(std::size_t idx, std::vector<int>& rem, int degree) {
    int positive = 0;
    bool zero = true;
    for (std::size_t j = 0; j < rem.size(); ++j) {
      if (rem[j] == 0) continue;
      zero = false;
      if (!touched_[idx][j]) return 0;
      if (rem[j] > 0) positive += rem[j];
    }
    if (zero) return degree == 0 ? 1 : 0;
    if (positive > degree || idx == roots_.size()) return 0;

    auto& memo = memo_[idx];
    if (auto it = memo.find(rem); it != memo.end()) return it->second;

    const auto& rt = roots_[idx];
    Count total = 0;
    std::vector<int> work = rem;
    for (int t = 0; t * rt.degree <= degree; ++t) {
      total += multichoose(rt.mult, t) * rec(idx + 1, work, degree - t * rt.degree);
      work[static_cast<std::size_t>(rt.a)] -= 1;
      work[static_cast<std::size_t>(rt.b)] += 1;
    }
    memo.emplace(rem, total);
    return total;
  }

  std::vector<DenseRoot> roots_;
  std::vector<std::vector<bool>> touched_;
  std::unordered_map<std::size_t, std::unordered_map<std::vector<int>, Count, VecHash>> memo_;
};

}  // namespace

WeightedRootSpace::WeightedRootSpace(int n, int r) : n_(n), r_(r) {
  if (n < 1) throw DomainError("block count must be at least 1");
  if (r < 0) throw DomainError("rank must be nonnegative");
  const auto box = box_positions(n, r);
  for (auto a : box)
    for (auto b : box) {
      Root root{a, b};
      int g = -psi(root);
      if (g >= 1) entries_.push_back({root, g, r_multiplicity(root)});
    }
}

std::int64_t r_multiplicity(const Root& a) {
  int p = psi(a);
  if (p >= 0) return 0;
  return (std::int64_t{1} << (-p)) - 1;
}

Count sym_weight_mult(const EligibleWeight& nu, int r) {
  if (!nu.has_zero_level()) throw DomainError("symmetric-algebra weights have zero level");
  if (nu.eligibility_rank() > r)
    throw DomainError("weight is not " + std::to_string(r) + "-eligible");
  if (nu.finite_part().empty()) return 1;
  if (nu.finite_sum() != 0) return 0;
  const HalfInteger ps = psi(nu);
  if (ps.twice() >= 0) return 0;
  const Coeff degree = -ps.to_integer();
  if (degree > 1000) throw ResourceError("psi-degree " + std::to_string(degree) + " too large");

  Box box(nu.n(), r);
  std::vector<int> dense(box.pos.size(), 0);
  for (const auto& [p, v] : nu.finite_part()) {
    if (v > 1000 || v < -1000) throw ResourceError("coefficient too large for enumeration");
    dense[static_cast<std::size_t>(box.index.at(p))] = static_cast<int>(v);
  }
  WeightCounter counter(dense_roots(WeightedRootSpace(nu.n(), r), box), box.pos.size());
  return counter.count(dense, static_cast<int>(degree));
}

std::optional<int> sym_support_degree(const EligibleWeight& nu) {
  if (!nu.has_zero_level()) throw DomainError("symmetric-algebra weights have zero level");
  // Any decomposition through indices outside the box shortens to one inside it.
  const int r = std::max(1, nu.eligibility_rank());
  if (sym_weight_mult(nu, r) == 0) return std::nullopt;
  return static_cast<int>(-psi(nu).to_integer());
}

std::map<EligibleWeight, Count> sym_layer(int n, int r, int d) {
  std::map<EligibleWeight, Count> out;
  if (d < 0) return out;
  if (d == 0) {
    out.emplace(EligibleWeight(n), 1);
    return out;
  }
  Box box(n, r);
  WeightedRootSpace space(n, r);
  // State: dense weight -> count; its degree is recovered from psi-classes.
  std::unordered_map<std::vector<int>, Count, VecHash> states;
  states.emplace(std::vector<int>(box.pos.size(), 0), 1);
  auto degree_of = [&](const std::vector<int>& v) {
    int g = 0;
    for (std::size_t j = 0; j < v.size(); ++j) g += v[j] * box.cls[j];
    return g;
  };
  for (const auto& e : space.entries()) {
    const int a = box.index.at(e.root.p), b = box.index.at(e.root.q);
    std::unordered_map<std::vector<int>, Count, VecHash> next;
    for (const auto& [v, c] : states) {
      const int used = degree_of(v);
      std::vector<int> w = v;
      for (int t = 0; used + t * e.degree <= d; ++t) {
        next[w] += c * multichoose(e.multiplicity, t);
        w[static_cast<std::size_t>(a)] += 1;
        w[static_cast<std::size_t>(b)] -= 1;
      }
    }
    states = std::move(next);
    if (states.size() > 5000000) throw ResourceError("symmetric-algebra layer too large");
  }
  for (const auto& [v, c] : states) {
    if (degree_of(v) != d || c == 0) continue;
    EligibleWeight w(n);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) w.set_finite(box.pos[j], v[j]);
    out.emplace(std::move(w), c);
  }
  return out;
}

}  // namespace olacat
