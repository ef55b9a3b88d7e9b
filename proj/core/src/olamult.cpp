#include "olacat/olamult.hpp"

#include "olacat/errors.hpp"
#include "olacat/symalg.hpp"
#include "olacat/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace olacat {

std::string PartitionTuple::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i].to_string();
  }
  return s + "]";
}

PartitionTuple PartitionTuple::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  std::size_t after = pos + 1;
  while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
  if (after < text.size() && text[after] != '[') return PartitionTuple{Partition::parse(text)};
  pos = after;
  PartitionTuple out;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip();
      std::size_t start = pos;
      auto close = text.find(']', pos);
      if (close == std::string_view::npos) throw ParseError("expected ']'", text.size());
      try {
        out.parts.push_back(Partition::parse(text.substr(start, close + 1 - start)));
      } catch (const ParseError& e) {
        throw ParseError("bad partition in tuple", start + e.position());
      }
      pos = close + 1;
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ']'", pos);
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return out;
}

std::vector<EligibleWeight> orbit_between(const EligibleWeight& source, int R, const EligibleWeight* lower,
                                          const EligibleWeight* upper) {
  const int n = source.n();
  if (source.eligibility_rank() > R || (lower && lower->eligibility_rank() > R) ||
      (upper && upper->eligibility_rank() > R))
    throw DomainError("orbit enumeration below the eligibility rank");
  std::vector<EligibleWeight> out;
  if ((lower && lower->levels() != source.levels()) || (upper && upper->levels() != source.levels())) return out;

  const auto pos = box_positions(n, R);
  RhoShifted shifted(source);
  std::vector<std::map<Coeff, int>> pools(static_cast<std::size_t>(n) + 1);
  for (auto p : pos) ++pools[static_cast<std::size_t>(psi_class(p))][shifted(p)];

  EligibleWeight cur = source;
  std::function<void(std::size_t, Coeff, Coeff)> rec = [&](std::size_t j, Coeff above_lower, Coeff below_upper) {
    if (j == pos.size()) {
      if (above_lower == 0 && below_upper == 0) out.push_back(cur);
      return;
    }
    const auto p = pos[j];
    auto& pool = pools[static_cast<std::size_t>(psi_class(p))];
    for (auto& [v, cnt] : pool) {
      if (cnt == 0) continue;
      const Coeff coef = v + p.i;
      Coeff a = above_lower, b = below_upper;
      if (lower) {
        a += coef - lower->coefficient(p);
        if (a < 0) continue;
      }
      if (upper) {
        b += upper->coefficient(p) - coef;
        if (b < 0) continue;
      }
      --cnt;
      cur.set_coefficient(p, coef);
      rec(j + 1, a, b);
      ++cnt;
    }
    cur.set_coefficient(p, source.coefficient(p));
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Both weights in one block with psi(mu) <= psi(lambda); returns the psi gap, or -1.
Coeff psi_gap(const EligibleWeight& lambda, const EligibleWeight& mu) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  if (lambda.levels() != mu.levels() || lambda.finite_sum() != mu.finite_sum()) return -1;
  HalfInteger gap = psi(lambda) - psi(mu);
  if (!gap.is_integer() || gap.twice() < 0) return -1;
  return gap.to_integer();
}

}  // namespace

Count standard_multiplicity_at_rank(const EligibleWeight& lambda, const EligibleWeight& mu, int R,
                                    const OlaOptions& opts) {
  if (psi_gap(lambda, mu) < 0) return 0;
  if (!dominance_geq(lambda, mu)) return 0;
  Count total = 0;
  for (const auto& gamma : orbit_between(mu, R, &mu, &lambda)) {
    Count s = sym_weight_mult(gamma - lambda, R);
    if (s == 0) continue;
    total += s * verma_multiplicity(gamma, mu, opts.kl);
  }
  return total;
}

Count standard_multiplicity_by_layers(const EligibleWeight& lambda, const EligibleWeight& mu, int R,
                                      const OlaOptions& opts) {
  const Coeff d = psi_gap(lambda, mu);
  if (d < 0) return 0;
  if (R < lambda.eligibility_rank() || R < mu.eligibility_rank())
    throw DomainError("rank below the eligibility rank of the inputs");
  Count total = 0;
  for (const auto& [nu, s] : sym_layer(lambda.n(), R, static_cast<int>(d)))
    total += s * verma_multiplicity(lambda + nu, mu, opts.kl);
  return total;
}

StandardResult standard_simple_multiplicity_detailed(const EligibleWeight& lambda, const EligibleWeight& mu,
                                                     const OlaOptions& opts, std::optional<int> rank) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  int R = std::max(lambda.eligibility_rank(), mu.eligibility_rank()) + 1;
  if (rank) R = std::max(R, *rank);
  if (psi_gap(lambda, mu) < 0 || !dominance_geq(lambda, mu)) return {0, R, true};
  Count here = standard_multiplicity_at_rank(lambda, mu, R, opts);
  Count next = standard_multiplicity_at_rank(lambda, mu, R + 1, opts);
  for (int step = 0; here != next && step < opts.max_extra_rank; ++step) {
    ++R;
    here = next;
    next = standard_multiplicity_at_rank(lambda, mu, R + 1, opts);
  }
  if (here == next) return {here, R, true};
  return {next, R + 1, false};
}

Count standard_simple_multiplicity(const EligibleWeight& lambda, const EligibleWeight& mu, const OlaOptions& opts) {
  return standard_simple_multiplicity_detailed(lambda, mu, opts).value;
}

std::vector<FlagLayer> standard_psi_layer(const EligibleWeight& lambda, HalfInteger p, int r) {
  if (r < 0) throw DomainError("rank must be nonnegative");
  if (!lambda.is_eligible(r)) throw DomainError("weight is not " + std::to_string(r) + "-eligible");
  std::vector<FlagLayer> out;
  const HalfInteger gap = psi(lambda) - p;
  if (gap.twice() < 0 || !gap.is_integer()) return out;
  for (auto& [nu, s] : sym_layer(lambda.n(), r, static_cast<int>(gap.to_integer())))
    out.push_back({lambda + nu, s, p});
  std::sort(out.begin(), out.end(), [](const FlagLayer& a, const FlagLayer& b) { return a.weight < b.weight; });
  return out;
}

std::optional<Count> parabolic_verma_multiplicity(const EligibleWeight& lambda, const EligibleWeight& mu, int r,
                                                  const KLOptions& opts) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  if (!lambda.is_eligible(r)) throw DomainError("weight is not " + std::to_string(r) + "-eligible");
  if (!mu.is_eligible(r)) return std::nullopt;
  // Both are r-eligible, so finite-Weyl linkage already happens inside the rank-(r+1) factor.
  if (!finite_linked(lambda, mu)) return Count(0);
  return verma_multiplicity(lambda, mu, opts);
}

MultiplicityTable injective_standard_flag_at_rank(const EligibleWeight& lambda, int R, const OlaOptions& opts) {
  MultiplicityTable t{lambda, {}, R, false};
  for (const auto& gamma : orbit_between(lambda, R, &lambda, nullptr)) {
    Count m = verma_multiplicity(gamma, lambda, opts.kl);
    if (m != 0) t.entries.emplace(gamma, m);
  }
  return t;
}

MultiplicityTable injective_standard_flag(const EligibleWeight& lambda, const OlaOptions& opts) {
  const int R = verma_stable_rank(lambda, lambda);
  MultiplicityTable t = injective_standard_flag_at_rank(lambda, R, opts);
  t.stabilized = injective_standard_flag_at_rank(lambda, R + 1, opts).entries == t.entries;
  return t;
}

namespace {

struct Piece {
  Partition alpha, beta;
  int removed;
  Count coeff;
};

// (alpha, beta) -> sum_gamma c^lambda_{alpha,gamma} c^mu_{beta,gamma} for one tensor factor.
std::vector<Piece> factor_pieces(const Partition& lambda, const Partition& mu) {
  std::vector<Piece> out;
  for (const auto& alpha : partitions_inside(lambda)) {
    const int t = lambda.size() - alpha.size();
    if (t > mu.size()) continue;
    for (const auto& beta : partitions_inside(mu)) {
      if (mu.size() - beta.size() != t) continue;
      Count c = 0;
      for (const auto& gamma : partitions_of(t)) {
        Count a = lr_coefficient(alpha, gamma, lambda);
        if (a == 0) continue;
        c += a * lr_coefficient(beta, gamma, mu);
      }
      if (c != 0) out.push_back({alpha, beta, t, c});
    }
  }
  return out;
}

}  // namespace

std::vector<SocleLayer> socle_layers_tensor_injective(const PartitionTuple& lambda, const PartitionTuple& mu) {
  if (lambda.size() != mu.size()) throw DomainError("partition tuples of different lengths");
  const int n = lambda.size();
  std::vector<std::vector<Piece>> factors;
  for (int k = 0; k < n; ++k) factors.push_back(factor_pieces(lambda[k], mu[k]));

  std::map<int, TupleTable> layers;
  PartitionTuple a = PartitionTuple::empty(n), b = PartitionTuple::empty(n);
  std::function<void(int, int, Count)> rec = [&](int k, int removed, Count c) {
    if (k == n) {
      layers[removed + 1][{a, b}] += c;
      return;
    }
    for (const auto& pc : factors[static_cast<std::size_t>(k)]) {
      a.parts[static_cast<std::size_t>(k)] = pc.alpha;
      b.parts[static_cast<std::size_t>(k)] = pc.beta;
      rec(k + 1, removed + pc.removed, c * pc.coeff);
    }
  };
  rec(0, 0, 1);

  std::vector<SocleLayer> out;
  const int top = layers.empty() ? 0 : layers.rbegin()->first;
  for (int i = 1; i <= top; ++i) out.push_back({i, layers[i]});
  return out;
}

TupleTable la_dual_decomposition(const PartitionTuple& lambda, const PartitionTuple& mu) {
  TupleTable out;
  for (auto& layer : socle_layers_tensor_injective(lambda, mu))
    for (auto& [key, c] : layer.entries) out[key] += c;
  return out;
}

}  // namespace olacat
