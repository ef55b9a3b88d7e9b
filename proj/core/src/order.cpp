#include "olacat/order.hpp"

#include "olacat/errors.hpp"
#include "olacat/symalg.hpp"
#include "olacat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace olacat {

std::string to_string(EdgeKind k) { return k == EdgeKind::DotReflection ? "dot-reflection" : "psi-negative-root"; }

std::vector<PosetEdge> triangle_down(const EligibleWeight& lambda, int r) {
  const int R = r + 1;
  if (r < 0) throw DomainError("rank must be nonnegative");
  if (lambda.eligibility_rank() > R) throw DomainError("weight lies outside the rank-" + std::to_string(R) + " box");
  const int n = lambda.n();
  std::vector<PosetEdge> out;
  RhoShifted s(lambda);
  for (int c = 0; c <= n; ++c) {
    const auto cls = class_positions(c, n, R);
    for (std::size_t x = 0; x < cls.size(); ++x)
      for (std::size_t y = x + 1; y < cls.size(); ++y)
        if (s(cls[x]) > s(cls[y])) {
          Root a{cls[x], cls[y]};
          out.push_back({dot(reflection(a), lambda), lambda, EdgeKind::DotReflection, a});
        }
  }
  const auto box = box_positions(n, R);
  for (auto a : box)
    for (auto b : box)
      if (psi_class(a) > psi_class(b)) {
        Root nu{a, b};
        out.push_back({lambda + nu.weight(n), lambda, EdgeKind::PsiNegativeRoot, nu});
      }
  return out;
}

namespace {

struct Search {
  std::map<EligibleWeight, int> depth;
  std::map<EligibleWeight, std::vector<PosetEdge>> down_edges;  // upper -> edges to kept lower weights
};

int resolve_rank(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts) {
  int r = std::max(mu.eligibility_rank(), lambda.eligibility_rank());
  if (opts.rank) r = std::max(r, *opts.rank);
  return r;
}

bool comparable_shape(const EligibleWeight& mu, const EligibleWeight& lambda) {
  if (mu.n() != lambda.n()) throw DomainError("block count mismatch");
  return block_class(mu) == block_class(lambda) && dominance_geq(lambda, mu);
}

// Downward search from lambda keeping only weights that still dominate mu.
Search search_down(const EligibleWeight& mu, const EligibleWeight& lambda, int r, const OrderOptions& opts,
                   bool stop_at_mu) {
  Search st;
  const HalfInteger floor_psi = psi(mu);
  std::deque<EligibleWeight> queue{lambda};
  st.depth[lambda] = 0;
  while (!queue.empty()) {
    EligibleWeight cur = std::move(queue.front());
    queue.pop_front();
    const int d = st.depth[cur];
    if (opts.depth_cap && d >= *opts.depth_cap) continue;
    auto& kept = st.down_edges[cur];
    for (auto& e : triangle_down(cur, r)) {
      if (psi(e.lower) < floor_psi || !dominance_geq(e.lower, mu)) continue;
      auto [it, fresh] = st.depth.emplace(e.lower, d + 1);
      if (fresh) {
        if (st.depth.size() > opts.max_nodes)
          throw ResourceError("order search exceeded " + std::to_string(opts.max_nodes) + " weights");
        if (stop_at_mu && e.lower == mu) return st;
        queue.push_back(e.lower);
      }
      kept.push_back(std::move(e));
    }
  }
  return st;
}

}  // namespace

bool leq_order(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts) {
  if (mu == lambda) return true;
  if (!comparable_shape(mu, lambda)) return false;
  const auto st = search_down(mu, lambda, resolve_rank(mu, lambda, opts), opts, true);
  return st.depth.count(mu) > 0;
}

namespace {

struct IntervalGraph {
  std::set<EligibleWeight> nodes;
  std::map<EligibleWeight, std::vector<PosetEdge>> edges;  // upper -> edges inside the interval
};

IntervalGraph interval_graph(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts) {
  IntervalGraph g;
  if (mu == lambda) {
    g.nodes.insert(lambda);
    return g;
  }
  if (!comparable_shape(mu, lambda)) return g;
  auto st = search_down(mu, lambda, resolve_rank(mu, lambda, opts), opts, false);
  if (!st.depth.count(mu)) return g;
  // Keep the weights from which mu is reachable.
  std::map<EligibleWeight, std::vector<EligibleWeight>> up;
  for (const auto& [u, es] : st.down_edges)
    for (const auto& e : es) up[e.lower].push_back(u);
  std::deque<EligibleWeight> queue{mu};
  g.nodes.insert(mu);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& u : up[cur])
      if (g.nodes.insert(u).second) queue.push_back(u);
  }
  for (const auto& [u, es] : st.down_edges) {
    if (!g.nodes.count(u)) continue;
    for (const auto& e : es)
      if (g.nodes.count(e.lower)) g.edges[u].push_back(e);
  }
  return g;
}

}  // namespace

std::set<EligibleWeight> interval(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts) {
  return interval_graph(mu, lambda, opts).nodes;
}

std::vector<PosetEdge> hasse(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts) {
  auto g = interval_graph(mu, lambda, opts);
  // below[u]: everything strictly below u inside the interval.
  std::map<EligibleWeight, std::set<EligibleWeight>> below;
  std::function<const std::set<EligibleWeight>&(const EligibleWeight&)> reach =
      [&](const EligibleWeight& u) -> const std::set<EligibleWeight>& {
    if (auto it = below.find(u); it != below.end()) return it->second;
    std::set<EligibleWeight> acc;
    for (const auto& e : g.edges[u]) {
      acc.insert(e.lower);
      const auto& sub = reach(e.lower);
      acc.insert(sub.begin(), sub.end());
    }
    return below.emplace(u, std::move(acc)).first->second;
  };
  std::vector<PosetEdge> out;
  for (const auto& u : g.nodes) {
    std::set<EligibleWeight> seen;
    for (const auto& e : g.edges[u]) {
      if (!seen.insert(e.lower).second) continue;
      bool covered = true;
      for (const auto& f : g.edges[u])
        if (f.lower != e.lower && reach(f.lower).count(e.lower)) {
          covered = false;
          break;
        }
      if (covered) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const PosetEdge& a, const PosetEdge& b) {
    return std::tie(a.upper, a.lower) > std::tie(b.upper, b.lower);
  });
  return out;
}

std::optional<int> longest_chain(const EligibleWeight& mu, const EligibleWeight& lambda, const OrderOptions& opts) {
  auto g = interval_graph(mu, lambda, opts);
  if (g.nodes.empty()) return std::nullopt;
  std::map<EligibleWeight, int> best;  // longest path from node down to mu
  std::function<int(const EligibleWeight&)> rec = [&](const EligibleWeight& u) -> int {
    if (u == mu) return 0;
    if (auto it = best.find(u); it != best.end()) return it->second;
    int b = -1;
    for (const auto& e : g.edges[u]) {
      int sub = rec(e.lower);
      if (sub >= 0) b = std::max(b, sub + 1);
    }
    best[u] = b;
    return b;
  };
  return rec(lambda);
}

Coeff chain_length_bound(const EligibleWeight& mu, const EligibleWeight& lambda, int r) {
  const EligibleWeight d = lambda - mu;
  Coeff out = psi(d).to_integer();
  for (const auto& [p, v] : d.finite_part()) out = checked_add(out, checked_mul(v, rho_r_pairing(p, d.n(), r + 1)));
  return out;
}

Coeff potential_chain_bound(const EligibleWeight& mu, const EligibleWeight& lambda, int r) {
  const int R = r + 1;
  const EligibleWeight d = lambda - mu;
  // A psi-negative step can raise the rho-pairing by at most 4R - 2.
  Coeff out = checked_mul(4 * R - 1, psi(d).to_integer());
  for (const auto& [p, v] : d.finite_part()) out = checked_add(out, checked_mul(v, rho_r_pairing(p, d.n(), R)));
  return out;
}

bool leq_order_direct(const EligibleWeight& mu, const EligibleWeight& lambda, int r) {
  if (mu == lambda) return true;
  if (!comparable_shape(mu, lambda)) return false;
  const HalfInteger gap = psi(lambda) - psi(mu);
  if (!gap.is_integer() || gap.twice() < 0) return false;
  for (const auto& [nu, s] : sym_layer(lambda.n(), r + 1, static_cast<int>(gap.to_integer())))
    if (finite_linked(lambda + nu, mu)) return true;
  return false;
}

std::string BlockTag::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(levels[k]);
  }
  return s + ";" + std::to_string(finite_sum) + ")";
}

BlockTag block_class(const EligibleWeight& lambda) { return {lambda.levels(), lambda.finite_sum()}; }

std::vector<EligibleWeight> linkage_chain(const EligibleWeight& lambda, const EligibleWeight& mu) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  if (block_class(lambda) != block_class(mu)) throw DomainError("weights lie in different blocks");
  const int n = lambda.n();
  auto hub = [](int c) { return c == 0 ? WeightIndex{1, 1} : WeightIndex{-1, c}; };

  std::map<Root, Coeff> steps;  // root of psi-degree -1 -> signed count
  auto down_path = [&](WeightIndex p, WeightIndex q, Coeff sign) {
    // e_p - e_q with class(p) > class(q), through one hub per intermediate class.
    WeightIndex cur = p;
    for (int c = psi_class(p) - 1; c > psi_class(q); --c) {
      steps[{cur, hub(c)}] += sign;
      cur = hub(c);
    }
    steps[{cur, q}] += sign;
  };
  auto add_difference = [&](WeightIndex p, WeightIndex q) {
    const int cp = psi_class(p), cq = psi_class(q);
    if (cp > cq)
      down_path(p, q, 1);
    else if (cp < cq)
      down_path(q, p, -1);
    else if (cp >= 1) {
      down_path(p, hub(cp - 1), 1);
      down_path(q, hub(cp - 1), -1);
    } else {
      down_path(hub(1), q, 1);
      down_path(hub(1), p, -1);
    }
  };

  const EligibleWeight diff = mu - lambda;
  std::vector<WeightIndex> plus, minus;
  for (const auto& [p, v] : diff.finite_part())
    for (Coeff j = 0; j < (v > 0 ? v : -v); ++j) (v > 0 ? plus : minus).push_back(p);
  for (std::size_t j = 0; j < plus.size(); ++j) add_difference(plus[j], minus[j]);

  std::vector<EligibleWeight> chain{lambda};
  EligibleWeight cur = lambda;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& [root, count] : steps) {
      if ((pass == 0) != (count > 0) || count == 0) continue;
      const EligibleWeight step = root.weight(n);
      for (Coeff j = 0; j < (count > 0 ? count : -count); ++j) {
        cur += count > 0 ? step : -step;
        chain.push_back(cur);
      }
    }
  if (cur != mu) throw Error("linkage chain construction failed");
  return chain;
}

}  // namespace olacat
