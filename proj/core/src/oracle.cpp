#include "olacat/oracle.hpp"

#include "olacat/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace olacat::oracle {

namespace {

using Mono = std::vector<int>;
using Poly = std::map<Mono, Count>;

// s_shape in `vars` variables, filling the diagram column by column.
Poly schur(const std::vector<int>& shape, int vars) {
  Poly out;
  std::vector<std::pair<int, int>> cells;  // (row, col), column-major
  const int width = shape.empty() ? 0 : shape[0];
  for (int c = 0; c < width; ++c)
    for (int r = 0; r < static_cast<int>(shape.size()) && shape[static_cast<std::size_t>(r)] > c; ++r) cells.push_back({r, c});
  std::map<std::pair<int, int>, int> fill;
  Mono m(static_cast<std::size_t>(vars), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) {
      out[m] += 1;
      return;
    }
    auto [r, c] = cells[i];
    int lo = 1;
    if (r > 0) lo = fill[{r - 1, c}] + 1;
    if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
    for (int v = lo; v <= vars; ++v) {
      fill[{r, c}] = v;
      ++m[static_cast<std::size_t>(v - 1)];
      go(i + 1);
      --m[static_cast<std::size_t>(v - 1)];
    }
  };
  go(0);
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  return out;
}

}  // namespace

Count naive_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() > 10) throw ResourceError("naive_lr is limited to |nu| <= 10");
  if (lambda.size() + mu.size() != nu.size()) return 0;
  const int vars = std::max(1, nu.size());
  Poly prod = multiply(schur(lambda.parts(), vars), schur(mu.parts(), vars));
  // Repeatedly strip the lexicographically largest monomial, which is a leading Schur term.
  for (;;) {
    while (!prod.empty() && prod.rbegin()->second == 0) prod.erase(std::prev(prod.end()));
    if (prod.empty()) return 0;
    const Mono lead = prod.rbegin()->first;
    const Count c = prod.rbegin()->second;
    std::vector<int> shape(lead.begin(), lead.end());
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape == nu.parts()) return c;
    for (const auto& [m, k] : schur(shape, vars)) prod[m] -= c * k;
  }
}

namespace {

using PermV = std::vector<int>;
using QPoly = std::vector<std::int64_t>;

int inv_count(const PermV& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

// Ehresmann: sorted prefixes compare entrywise.
bool bruhat(const PermV& x, const PermV& w) {
  for (std::size_t i = 1; i <= x.size(); ++i) {
    PermV a(x.begin(), x.begin() + static_cast<long>(i)), b(w.begin(), w.begin() + static_cast<long>(i));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < i; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

PermV swap_values(PermV w, int s) {
  for (int& v : w) {
    if (v == s)
      v = s + 1;
    else if (v == s + 1)
      v = s;
  }
  return w;
}

bool is_left_descent(const PermV& w, int s) {
  auto ps = std::find(w.begin(), w.end(), s), pt = std::find(w.begin(), w.end(), s + 1);
  return ps > pt;
}

QPoly add(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

class NaiveKL {
 public:
  explicit NaiveKL(int m) : m_(m) {
    PermV w(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    do all_.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
  }

  QPoly R(const PermV& x, const PermV& w) {
    if (!bruhat(x, w)) return {};
    if (x == w) return {1};
    auto key = std::make_pair(x, w);
    if (auto it = r_.find(key); it != r_.end()) return it->second;
    int s = 1;
    while (!is_left_descent(w, s)) ++s;
    const PermV sw = swap_values(w, s), sx = swap_values(x, s);
    QPoly out;
    if (is_left_descent(x, s))
      out = R(sx, sw);
    else
      out = add(mul({-1, 1}, R(x, sw)), mul({0, 1}, R(sx, sw)));
    r_[key] = out;
    return out;
  }

  // q^{l(w)-l(x)} P(1/q) - P(q) = sum_{x < y <= w} R_{x,y} P_{y,w}: the low half of the
  // right side determines P.
  QPoly P(const PermV& x, const PermV& w) {
    if (!bruhat(x, w)) return {};
    if (x == w) return {1};
    auto key = std::make_pair(x, w);
    if (auto it = p_.find(key); it != p_.end()) return it->second;
    QPoly rhs;
    for (const auto& y : all_) {
      if (y == x || !bruhat(x, y) || !bruhat(y, w)) continue;
      rhs = add(rhs, mul(R(x, y), P(y, w)));
    }
    const int d = inv_count(w) - inv_count(x);
    QPoly out;
    for (int i = 0; 2 * i < d; ++i) out.push_back(i < static_cast<int>(rhs.size()) ? -rhs[static_cast<std::size_t>(i)] : 0);
    while (!out.empty() && out.back() == 0) out.pop_back();
    p_[key] = out;
    return out;
  }

 private:
  int m_;
  std::vector<PermV> all_;
  std::map<std::pair<PermV, PermV>, QPoly> r_, p_;
};

}  // namespace

KLPolynomial naive_kl(const Perm& x, const Perm& w) {
  if (x.size() != w.size()) throw DomainError("permutations of different sizes");
  if (x.size() > 6) throw ResourceError("naive_kl is limited to S_6");
  NaiveKL engine(x.size());
  return KLPolynomial{engine.P(x.one_line(), w.one_line())};
}

std::map<EligibleWeight, Count> naive_sym_layer(int n, int r, int d) {
  if (r > 3) throw ResourceError("naive_sym_layer is limited to r <= 3");
  if (d > 3) throw ResourceError("naive_sym_layer is limited to degree <= 3");
  // One entry per (root, colour).
  struct Item {
    WeightIndex a, b;
    int cost;
  };
  std::vector<Item> items;
  std::vector<WeightIndex> box;
  for (int k = 1; k <= n; ++k)
    for (int i = -r; i <= r; ++i)
      if (i != 0) box.push_back({i, k});
  auto cls = [](WeightIndex q) { return q.i > 0 ? q.k - 1 : q.k; };
  for (auto a : box)
    for (auto b : box) {
      int g = cls(a) - cls(b);
      if (g < 1) continue;
      for (int colour = 0; colour < (1 << g) - 1; ++colour) items.push_back({a, b, g});
    }

  std::map<EligibleWeight, Count> out;
  EligibleWeight acc(n);
  std::function<void(std::size_t, int)> go = [&](std::size_t start, int left) {
    if (left == 0) {
      out[acc] += 1;
      return;
    }
    for (std::size_t i = start; i < items.size(); ++i) {
      if (items[i].cost > left) continue;
      acc.add_finite(items[i].a, 1);
      acc.add_finite(items[i].b, -1);
      go(i, left - items[i].cost);
      acc.add_finite(items[i].a, -1);
      acc.add_finite(items[i].b, 1);
    }
  };
  if (d >= 0) go(0, d);
  return out;
}

Count naive_sym_mult(const EligibleWeight& nu, int r) {
  if (!nu.has_zero_level()) throw DomainError("symmetric-algebra weights have zero level");
  if (nu.eligibility_rank() > r) throw DomainError("weight is not r-eligible");
  const HalfInteger p = psi(nu);
  if (p.twice() > 6 || p.twice() < -6) throw ResourceError("naive_sym_mult is limited to |psi| <= 3");
  if (!p.is_integer() || p.twice() > 0) return 0;
  auto layer = naive_sym_layer(nu.n(), r, static_cast<int>(-p.to_integer()));
  auto it = layer.find(nu);
  return it == layer.end() ? Count(0) : it->second;
}

bool naive_dominance(const EligibleWeight& lambda, const EligibleWeight& mu) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  if (lambda.levels() != mu.levels()) return false;
  std::map<WeightIndex, Coeff> d;
  Coeff height = 0;
  for (const auto& [p, v] : lambda.finite_part()) d[p] += v;
  for (const auto& [p, v] : mu.finite_part()) d[p] -= v;
  for (auto it = d.begin(); it != d.end();) it = it->second == 0 ? d.erase(it) : std::next(it);
  for (const auto& [p, v] : d)
    if (v > 0) height += v;
  if (height > 8) throw ResourceError("naive_dominance is limited to 8 roots");

  // The least index in the support must be the start of some root.
  std::function<bool(int)> solve = [&](int left) -> bool {
    if (d.empty()) return true;
    if (left == 0) return false;
    auto first = d.begin();
    if (first->second < 0) return false;
    const WeightIndex p = first->first;
    std::vector<WeightIndex> targets;
    for (const auto& [q, v] : d)
      if (p < q) targets.push_back(q);
    for (auto q : targets) {
      auto bump = [&](WeightIndex x, Coeff by) {
        d[x] += by;
        if (d[x] == 0) d.erase(x);
      };
      bump(p, -1);
      bump(q, 1);
      bool ok = solve(left - 1);
      bump(p, 1);
      bump(q, -1);
      if (ok) return true;
    }
    return false;
  };
  return solve(static_cast<int>(height));
}

}  // namespace olacat::oracle
