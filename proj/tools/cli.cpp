#include "cli.hpp"

#include "olacat/errors.hpp"
#include "olacat/kl.hpp"
#include "olacat/olamult.hpp"
#include "olacat/oracle.hpp"
#include "olacat/order.hpp"
#include "olacat/symalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <set>

namespace olacat::cli {

namespace {

using nlohmann::json;

struct JobConfig {
  int n = 1;
  std::optional<int> rank;
  std::string format = "json";
  int kl_max = kDefaultKLBound;
  std::size_t max_nodes = 200000;
  std::optional<int> bfs_depth;
  int height_budget = 6;
};

struct Output {
  json query;
  json n;
  json rank_used;
  bool stabilized = true;
  json result;
  std::string dot;  // only for order interval/hasse
};

json count_json(const Count& c) {
  if (c <= std::numeric_limits<std::int64_t>::max() && c >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(c);
  return c.str();
}

json half_json(HalfInteger h) { return h.to_string(); }

EligibleWeight weight_arg(const std::string& text, int n) { return parse_weight(text, n); }

void check_height(const EligibleWeight& upper, const EligibleWeight& lower, const JobConfig& cfg) {
  const HalfInteger h = psi(upper) - psi(lower);
  if (h.twice() > 2 * static_cast<Coeff>(cfg.height_budget))
    throw ResourceError("psi height " + h.to_string() + " exceeds --height-budget " + std::to_string(cfg.height_budget));
}

OrderOptions order_options(const JobConfig& cfg, const EligibleWeight& a, const EligibleWeight& b) {
  OrderOptions o;
  o.max_nodes = cfg.max_nodes;
  o.depth_cap = cfg.bfs_depth;
  o.rank = std::max({a.eligibility_rank(), b.eligibility_rank(), cfg.rank.value_or(0)});
  return o;
}

std::string dot_graph(const std::set<EligibleWeight>& nodes, const std::vector<PosetEdge>& edges) {
  std::map<EligibleWeight, std::size_t> id;
  std::string s = "digraph interval {\n  rankdir=BT;\n";
  for (const auto& w : nodes) {
    const std::size_t k = id.size();
    id.emplace(w, k);
    s += "  n" + std::to_string(k) + " [label=\"" + render_weight(w) + "\"];\n";
  }
  for (const auto& e : edges)
    s += "  n" + std::to_string(id.at(e.lower)) + " -> n" + std::to_string(id.at(e.upper)) + " [label=\"" +
         to_string(e.kind) + "\"];\n";
  s += "}\n";
  return s;
}

json edges_json(const std::vector<PosetEdge>& edges) {
  json a = json::array();
  for (const auto& e : edges)
    a.push_back({{"lower", render_weight(e.lower)},
                 {"upper", render_weight(e.upper)},
                 {"kind", to_string(e.kind)},
                 {"root", to_string(e.root)}});
  return a;
}

json table_json(const std::map<EligibleWeight, Count>& t) {
  json a = json::array();
  for (const auto& [w, c] : t) a.push_back({{"weight", render_weight(w)}, {"multiplicity", count_json(c)}});
  return a;
}

json tuple_table_json(const TupleTable& t) {
  json a = json::array();
  for (const auto& [k, c] : t)
    a.push_back({{"lambda", k.first.to_string()}, {"mu", k.second.to_string()}, {"multiplicity", count_json(c)}});
  return a;
}

// Scalars bare, single-field objects as their value, everything else one entry per line.
void write_text(const json& v, std::ostream& out) {
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (v.is_object() && v.size() == 1 && !v.begin()->is_structured()) {
    out << scalar(*v.begin()) << "\n";
  } else if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_array()) {
        out << k << ":\n";
        for (const auto& e : x) {
          out << " ";
          if (e.is_object())
            for (const auto& [ek, ev] : e.items()) out << " " << ek << "=" << (ev.is_structured() ? ev.dump() : scalar(ev));
          else
            out << " " << scalar(e);
          out << "\n";
        }
      } else {
        out << k << ": " << (x.is_structured() ? x.dump() : scalar(x)) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) write_text(e, out);
  } else {
    out << scalar(v) << "\n";
  }
}

// ---- certification suites

SuiteResult certify_lr() {
  SuiteResult s{"lr", 0, 0};
  for (int total = 0; total <= 5; ++total)
    for (int a = 0; a <= total; ++a)
      for (const auto& lam : partitions_of(a))
        for (const auto& mu : partitions_of(total - a))
          for (const auto& nu : partitions_of(total)) {
            ++s.checked;
            if (lr_coefficient(lam, mu, nu) != oracle::naive_lr(lam, mu, nu)) ++s.mismatches;
          }
  return s;
}

SuiteResult certify_kl(int kl_max) {
  SuiteResult s{"kl", 0, 0};
  std::vector<int> v{1, 2, 3, 4};
  std::vector<Perm> group;
  do group.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  for (const auto& x : group)
    for (const auto& w : group) {
      ++s.checked;
      if (kl_polynomial(x, w, kl_max) != oracle::naive_kl(x, w)) ++s.mismatches;
    }
  return s;
}

SuiteResult certify_symalg() {
  SuiteResult s{"symalg", 0, 0};
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; r <= 2; ++r)
      for (int d = 0; d <= 2; ++d) {
        ++s.checked;
        if (sym_layer(n, r, d) != oracle::naive_sym_layer(n, r, d)) ++s.mismatches;
      }
  return s;
}

SuiteResult certify_dominance() {
  SuiteResult s{"dominance", 0, 0};
  const auto box = box_positions(1, 2);
  std::vector<EligibleWeight> weights;
  std::vector<int> c(box.size(), -1);
  for (;;) {
    int sum = 0;
    for (int x : c) sum += x;
    if (sum == 0) {
      EligibleWeight w(1);
      for (std::size_t i = 0; i < box.size(); ++i) w.add_finite(box[i], c[i]);
      weights.push_back(w);
    }
    std::size_t i = 0;
    while (i < c.size() && c[i] == 1) c[i++] = -1;
    if (i == c.size()) break;
    ++c[i];
  }
  const EligibleWeight zero(1);
  for (const auto& w : weights)
    for (const auto& [a, b] : {std::pair{zero, w}, std::pair{w, zero}}) {
      ++s.checked;
      if (dominance_geq(a, b) != oracle::naive_dominance(a, b)) ++s.mismatches;
    }
  return s;
}

// ---- subcommand bodies

Output do_mult_standard(const JobConfig& cfg, const std::string& l, const std::string& m) {
  auto lambda = weight_arg(l, cfg.n), mu = weight_arg(m, cfg.n);
  check_height(lambda, mu, cfg);
  OlaOptions opts;
  opts.kl.max_m = cfg.kl_max;
  auto r = standard_simple_multiplicity_detailed(lambda, mu, opts, cfg.rank);
  return {{{"command", "mult standard"}, {"lambda", render_weight(lambda)}, {"mu", render_weight(mu)}},
          cfg.n, r.rank_used, r.stabilized, {{"multiplicity", count_json(r.value)}}, {}};
}

Output do_mult_verma(const JobConfig& cfg, const std::string& l, const std::string& m) {
  auto lambda = weight_arg(l, cfg.n), mu = weight_arg(m, cfg.n);
  KLOptions kl{cfg.kl_max};
  const int R = std::max(verma_stable_rank(lambda, mu), cfg.rank.value_or(0));
  Count v = verma_multiplicity_at_rank(lambda, mu, R, kl);
  const bool stable = verma_multiplicity_at_rank(lambda, mu, R + 1, kl) == v;
  return {{{"command", "mult verma"}, {"lambda", render_weight(lambda)}, {"mu", render_weight(mu)}},
          cfg.n, R, stable, {{"multiplicity", count_json(v)}}, {}};
}

Output do_mult_parabolic(const JobConfig& cfg, const std::string& l, const std::string& m) {
  auto lambda = weight_arg(l, cfg.n), mu = weight_arg(m, cfg.n);
  KLOptions kl{cfg.kl_max};
  // The parabolic module itself depends on r, so an explicit --rank is taken as given.
  const int r = cfg.rank.value_or(std::max(lambda.eligibility_rank(), mu.eligibility_rank()) + 1);
  auto v = parabolic_verma_multiplicity(lambda, mu, r, kl);
  auto next = parabolic_verma_multiplicity(lambda, mu, r + 1, kl);
  json result = {{"multiplicity", v ? count_json(*v) : json(nullptr)}, {"covered", v.has_value()}};
  return {{{"command", "mult parabolic"}, {"lambda", render_weight(lambda)}, {"mu", render_weight(mu)}},
          cfg.n, r, v == next, result, {}};
}

Output do_flag_injective(const JobConfig& cfg, const std::string& l) {
  auto lambda = weight_arg(l, cfg.n);
  OlaOptions opts;
  opts.kl.max_m = cfg.kl_max;
  MultiplicityTable t = injective_standard_flag(lambda, opts);
  if (cfg.rank && *cfg.rank > t.rank_used) {
    t = injective_standard_flag_at_rank(lambda, *cfg.rank, opts);
    t.stabilized = injective_standard_flag_at_rank(lambda, *cfg.rank + 1, opts).entries == t.entries;
  }
  return {{{"command", "flag injective"}, {"lambda", render_weight(lambda)}},
          cfg.n, t.rank_used, t.stabilized, {{"entries", table_json(t.entries)}}, {}};
}

Output do_flag_psi(const JobConfig& cfg, const std::string& l, const std::string& degree) {
  auto lambda = weight_arg(l, cfg.n);
  const HalfInteger p = HalfInteger::parse(degree);
  if ((psi(lambda) - p).twice() > 2 * static_cast<Coeff>(cfg.height_budget))
    throw ResourceError("psi height exceeds --height-budget " + std::to_string(cfg.height_budget));
  const int r = std::max(lambda.eligibility_rank() + 1, cfg.rank.value_or(0));
  auto layer = standard_psi_layer(lambda, p, r);
  auto next = standard_psi_layer(lambda, p, r + 1);
  auto as_map = [](const std::vector<FlagLayer>& v) {
    std::map<EligibleWeight, Count> m;
    for (const auto& f : v) m[f.weight] = f.multiplicity;
    return m;
  };
  json a = json::array();
  for (const auto& f : layer)
    a.push_back({{"weight", render_weight(f.weight)}, {"multiplicity", count_json(f.multiplicity)}, {"psi", half_json(f.psi_degree)}});
  return {{{"command", "flag psi"}, {"lambda", render_weight(lambda)}, {"degree", p.to_string()}},
          cfg.n, r, as_map(layer) == as_map(next), {{"entries", a}}, {}};
}

int tuple_block_count(const JobConfig& cfg, bool n_given, const PartitionTuple& a, const PartitionTuple& b) {
  if (a.size() != b.size()) throw DomainError("partition tuples of different lengths");
  if (n_given && a.size() != cfg.n) throw DomainError("partition tuples have " + std::to_string(a.size()) +
                                                      " entries but --n is " + std::to_string(cfg.n));
  return a.size();
}

Output do_socle(const JobConfig& cfg, bool n_given, const std::string& l, const std::string& m) {
  auto lambda = PartitionTuple::parse(l), mu = PartitionTuple::parse(m);
  const int n = tuple_block_count(cfg, n_given, lambda, mu);
  json a = json::array();
  for (const auto& layer : socle_layers_tensor_injective(lambda, mu))
    a.push_back({{"layer", layer.index}, {"entries", tuple_table_json(layer.entries)}});
  return {{{"command", "socle"}, {"lambda", lambda.to_string()}, {"mu", mu.to_string()}},
          n, nullptr, true, {{"layers", a}}, {}};
}

Output do_ladual(const JobConfig& cfg, bool n_given, const std::string& l, const std::string& m) {
  auto lambda = PartitionTuple::parse(l), mu = PartitionTuple::parse(m);
  const int n = tuple_block_count(cfg, n_given, lambda, mu);
  return {{{"command", "ladual"}, {"lambda", lambda.to_string()}, {"mu", mu.to_string()}},
          n, nullptr, true, {{"entries", tuple_table_json(la_dual_decomposition(lambda, mu))}}, {}};
}

std::set<std::pair<EligibleWeight, EligibleWeight>> edge_pairs(const std::vector<PosetEdge>& edges) {
  std::set<std::pair<EligibleWeight, EligibleWeight>> s;
  for (const auto& e : edges) s.emplace(e.lower, e.upper);
  return s;
}

Output do_order(const JobConfig& cfg, const std::string& what, const std::string& lo, const std::string& up) {
  auto lower = weight_arg(lo, cfg.n), upper = weight_arg(up, cfg.n);
  check_height(upper, lower, cfg);
  OrderOptions o = order_options(cfg, lower, upper);
  OrderOptions next = o;
  next.rank = *o.rank + 1;
  Output out{{{"command", "order " + what}, {"lower", render_weight(lower)}, {"upper", render_weight(upper)}},
             cfg.n, *o.rank, true, nullptr, {}};
  if (what == "check") {
    const bool v = leq_order(lower, upper, o);
    out.stabilized = v == leq_order(lower, upper, next);
    out.result = {{"leq", v}};
  } else if (what == "interval") {
    auto iv = interval(lower, upper, o);
    out.stabilized = iv == interval(lower, upper, next);
    json a = json::array();
    for (const auto& w : iv) a.push_back(render_weight(w));
    out.result = {{"weights", a}};
    out.dot = dot_graph(iv, hasse(lower, upper, o));
  } else {
    auto edges = hasse(lower, upper, o);
    out.stabilized = edge_pairs(edges) == edge_pairs(hasse(lower, upper, next));
    out.result = {{"edges", edges_json(edges)}};
    out.dot = dot_graph(interval(lower, upper, o), edges);
  }
  return out;
}

Output do_block(const JobConfig& cfg, const std::string& w) {
  auto lambda = weight_arg(w, cfg.n);
  BlockTag tag = block_class(lambda);
  return {{{"command", "block"}, {"weight", render_weight(lambda)}},
          cfg.n,
          nullptr,
          true,
          {{"tag", tag.to_string()}, {"levels", tag.levels}, {"finite_sum", tag.finite_sum}},
          {}};
}

Output do_kl(const JobConfig& cfg, const std::string& xs, const std::string& ws, int m) {
  Perm x = Perm::parse(xs, m), w = Perm::parse(ws, m);
  if (x.size() != w.size()) throw DomainError("permutations of different sizes");
  auto p = kl_polynomial(x, w, cfg.kl_max);
  return {{{"command", "kl"}, {"x", x.to_string()}, {"w", w.to_string()}},
          nullptr,
          nullptr,
          true,
          {{"polynomial", p.to_string()}, {"coefficients", p.coeffs}, {"at_one", p.at_one()}, {"bruhat_leq", bruhat_leq(x, w)}},
          {}};
}

Output do_lr(const std::string& l, const std::string& m, const std::string& nu) {
  auto a = Partition::parse(l), b = Partition::parse(m), c = Partition::parse(nu);
  return {{{"command", "lr"}, {"lambda", a.to_string()}, {"mu", b.to_string()}, {"nu", c.to_string()}},
          nullptr, nullptr, true, {{"coefficient", count_json(lr_coefficient(a, b, c))}}, {}};
}

Output do_certify(const JobConfig& cfg, bool& ok) {
  json a = json::array();
  ok = true;
  for (const auto& s : run_certification(cfg.kl_max)) {
    ok = ok && s.mismatches == 0;
    a.push_back({{"name", s.name}, {"checked", s.checked}, {"mismatches", s.mismatches}});
  }
  return {{{"command", "certify"}}, nullptr, nullptr, true, {{"suites", a}, {"ok", ok}}, {}};
}

void emit(const Output& o, const JobConfig& cfg, std::ostream& out) {
  if (cfg.format == "dot") {
    if (o.dot.empty()) throw DomainError("dot output is only available for order interval and order hasse");
    out << o.dot;
    return;
  }
  if (cfg.format == "text") {
    write_text(o.result, out);
    return;
  }
  json j = {{"query", o.query}, {"n", o.n}, {"rank_used", o.rank_used}, {"stabilized", o.stabilized}, {"result", o.result}};
  out << j.dump(2) << "\n";
}

}  // namespace

std::vector<SuiteResult> run_certification(int kl_max) {
  return {certify_lr(), certify_kl(kl_max), certify_symalg(), certify_dominance()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial invariants of eligible-weight categories of gl(infinity)-modules", "olacat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", "olacat 0.1.0");

  JobConfig cfg;
  auto* n_opt = app.add_option("--n", cfg.n, "Number of blocks")->check(CLI::PositiveNumber);
  app.add_option("--rank", cfg.rank, "Truncation rank (may only raise the automatic choice)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--kl-max", cfg.kl_max, "Largest symmetric group for KL computations")->check(CLI::Range(1, 12));
  app.add_option("--max-nodes", cfg.max_nodes, "Node cap for order searches")->check(CLI::PositiveNumber);
  app.add_option("--bfs-depth", cfg.bfs_depth, "Step cap for order searches")->check(CLI::PositiveNumber);
  app.add_option("--height-budget", cfg.height_budget, "Largest psi height between inputs")->check(CLI::PositiveNumber);

  std::string lambda, mu, nu, weight, degree, x, w, lower, upper;
  int perm_size = 0;
  bool dot_flag = false;

  auto* mult = app.add_subcommand("mult", "Composition multiplicities");
  mult->require_subcommand(1);
  std::vector<CLI::App*> mult_kinds;
  for (const char* kind : {"standard", "verma", "parabolic"}) {
    auto* s = mult->add_subcommand(kind, std::string(kind) + " module multiplicity");
    s->add_option("--lambda", lambda, "Highest weight")->required();
    s->add_option("--mu", mu, "Weight of the simple module")->required();
    mult_kinds.push_back(s);
  }

  auto* flag = app.add_subcommand("flag", "Standard filtrations");
  flag->require_subcommand(1);
  auto* injective = flag->add_subcommand("injective", "Standard flag of the injective hull");
  injective->add_option("--lambda", lambda)->required();
  auto* psi_cmd = flag->add_subcommand("psi", "One psi-layer of a standard module");
  psi_cmd->add_option("--lambda", lambda)->required();
  psi_cmd->add_option("--degree", degree, "psi-degree, an integer or half-integer")->required();

  auto* socle = app.add_subcommand("socle", "Socle layers of a tensor injective");
  socle->add_option("--lambda", lambda)->required();
  socle->add_option("--mu", mu)->required();
  auto* ladual = app.add_subcommand("ladual", "Large-annihilator dual decomposition");
  ladual->add_option("--lambda", lambda)->required();
  ladual->add_option("--mu", mu)->required();

  auto* order = app.add_subcommand("order", "Order relation, intervals and covering relations");
  order->require_subcommand(1);
  std::vector<CLI::App*> order_kinds;
  for (const char* kind : {"check", "interval", "hasse"}) {
    auto* s = order->add_subcommand(kind);
    s->add_option("--lower", lower)->required();
    s->add_option("--upper", upper)->required();
    s->add_flag("--dot", dot_flag, "Same as --format dot");
    order_kinds.push_back(s);
  }

  auto* block = app.add_subcommand("block", "Block tag of a weight");
  block->add_option("--weight", weight)->required();

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial");
  kl->add_option("--x", x)->required();
  kl->add_option("--w", w)->required();
  kl->add_option("--m", perm_size, "Group size for words such as s1s2")->check(CLI::PositiveNumber);

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr->add_option("--lambda", lambda)->required();
  lr->add_option("--mu", mu)->required();
  lr->add_option("--nu", nu)->required();

  auto* certify = app.add_subcommand("certify", "Check fast paths against brute force");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (dot_flag) cfg.format = "dot";

  try {
    Output o;
    int status = kOk;
    if (mult_kinds[0]->parsed())
      o = do_mult_standard(cfg, lambda, mu);
    else if (mult_kinds[1]->parsed())
      o = do_mult_verma(cfg, lambda, mu);
    else if (mult_kinds[2]->parsed())
      o = do_mult_parabolic(cfg, lambda, mu);
    else if (injective->parsed())
      o = do_flag_injective(cfg, lambda);
    else if (psi_cmd->parsed())
      o = do_flag_psi(cfg, lambda, degree);
    else if (socle->parsed())
      o = do_socle(cfg, n_opt->count() > 0, lambda, mu);
    else if (ladual->parsed())
      o = do_ladual(cfg, n_opt->count() > 0, lambda, mu);
    else if (order_kinds[0]->parsed())
      o = do_order(cfg, "check", lower, upper);
    else if (order_kinds[1]->parsed())
      o = do_order(cfg, "interval", lower, upper);
    else if (order_kinds[2]->parsed())
      o = do_order(cfg, "hasse", lower, upper);
    else if (block->parsed())
      o = do_block(cfg, weight);
    else if (kl->parsed())
      o = do_kl(cfg, x, w, perm_size);
    else if (lr->parsed())
      o = do_lr(lambda, mu, nu);
    else if (certify->parsed()) {
      bool ok = true;
      o = do_certify(cfg, ok);
      if (!ok) status = kFailure;
    }
    emit(o, cfg, out);
    return status;
  } catch (const ResourceError& e) {
    err << "olacat: resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const ParseError& e) {
    err << "olacat: parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "olacat: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "olacat: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace olacat::cli
