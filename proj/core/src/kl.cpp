#include "olacat/kl.hpp"

#include "olacat/errors.hpp"
#include "olacat/weyl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace olacat {

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
      throw DomainError("not a permutation: " + to_string());
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

Perm Perm::from_word(const std::vector<int>& word, int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  // Left multiplication by s_i swaps the values i and i+1; apply from the right end.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    if (i < 1 || i >= m) throw DomainError("simple reflection s" + std::to_string(i) + " not in S_" + std::to_string(m));
    for (int& v : w) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }
  return Perm(std::move(w));
}

Perm Perm::parse(std::string_view text, int m) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty permutation", 0);
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("expected ']'", s.size());
    std::vector<int> w;
    std::size_t pos = 1;
    if (s.size() > 2) {
      for (;;) {
        std::size_t start = pos;
        int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          v = v * 10 + (s[pos] - '0');
          if (v > 1000) throw ParseError("entry too large", start);
          ++pos;
        }
        if (pos == start) throw ParseError("expected an integer", pos);
        w.push_back(v);
        if (s[pos] == ',') {
          ++pos;
          continue;
        }
        if (s[pos] == ']' && pos + 1 == s.size()) break;
        throw ParseError("expected ',' or ']'", pos);
      }
    }
    if (m > 0 && static_cast<int>(w.size()) != m) throw DomainError("permutation has the wrong size");
    return Perm(std::move(w));
  }
  if (std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    std::vector<int> w;
    for (char c : s) w.push_back(c - '0');
    if (m > 0 && static_cast<int>(w.size()) != m) throw DomainError("permutation has the wrong size");
    return Perm(std::move(w));
  }
  if (m <= 0) throw DomainError("a reduced word needs the group size");
  if (s == "e" || s == "id") return identity(m);
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '*') {
      ++pos;
      continue;
    }
    if (s[pos] != 's') throw ParseError("expected 's'", pos);
    ++pos;
    if (pos < s.size() && s[pos] == '_') ++pos;
    std::size_t start = pos;
    int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000) throw ParseError("index too large", start);
      ++pos;
      // Single-digit indices may be written without separators, as in s2s1s3.
      if (m <= 10) break;
    }
    if (pos == start) throw ParseError("expected an index", pos);
    word.push_back(v);
  }
  return from_word(word, m);
}

int Perm::length() const noexcept {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Perm Perm::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw DomainError("permutations of different sizes");
  std::vector<int> w(b.w_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = a(b.w_[i]);
  return Perm(std::move(w));
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s + "]";
}

std::int64_t KLPolynomial::at_one() const noexcept { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }

void KLPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string KLPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    auto a = c < 0 ? -c : c;
    if (i == 0)
      out += std::to_string(a);
    else {
      if (a != 1) out += std::to_string(a) + "*";
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

// Permutations of at most 8 letters packed as 4-bit 0-based entries.
using Code = std::uint32_t;
using Letters = std::array<int, 8>;

Letters unpack(Code c, int m) {
  Letters a{};
  for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i)] = static_cast<int>((c >> (4 * i)) & 0xF);
  return a;
}

Code pack(const Letters& a, int m) {
  Code c = 0;
  for (int i = 0; i < m; ++i) c |= static_cast<Code>(a[static_cast<std::size_t>(i)]) << (4 * i);
  return c;
}

using Poly = std::vector<std::int64_t>;

void add_shifted(Poly& acc, const Poly& p, std::int64_t scale, int shift) {
  if (p.empty() || scale == 0) return;
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + static_cast<std::size_t>(shift)] += scale * p[i];
}

class Engine {
 public:
  explicit Engine(int m) : m_(m) {
    Letters a{};
    std::iota(a.begin(), a.begin() + m, 0);
    std::vector<int> v(a.begin(), a.begin() + m);
    do {
      Letters b{};
      std::copy(v.begin(), v.end(), b.begin());
      Code c = pack(b, m);
      int len = inversions(b);
      if (static_cast<int>(by_length_.size()) <= len) by_length_.resize(static_cast<std::size_t>(len) + 1);
      by_length_[static_cast<std::size_t>(len)].push_back(c);
    } while (std::next_permutation(v.begin(), v.end()));
  }

  Poly P(Code x, Code w) {
    if (x == w) return {1};
    if (!bruhat(x, w)) return {};
    // Raise x along descents of w that x lacks; P is unchanged.
    for (bool changed = true; changed;) {
      changed = false;
      for (int s = 0; s + 1 < m_; ++s) {
        if (left_desc(w, s) && !left_desc(x, s)) {
          x = left_mul(s, x);
          changed = true;
        }
        if (right_desc(w, s) && !right_desc(x, s)) {
          x = right_mul(x, s);
          changed = true;
        }
      }
    }
    if (x == w) return {1};
    const std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | w;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int s = 0;
    while (!left_desc(w, s)) ++s;
    const Code v = left_mul(s, w);
    const int lw = length(w);
    // sx < x here, so P = P_{sx,v} + q P_{x,v} - correction.
    Poly out = P(left_mul(s, x), v);
    add_shifted(out, P(x, v), 1, 1);
    for (const auto& [z, mu] : mu_list(v)) {
      if (!left_desc(z, s) || !bruhat(x, z)) continue;
      add_shifted(out, P(x, z), -mu, (lw - length(z)) / 2);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    memo_.emplace(key, out);
    return out;
  }

  int length(Code c) const { return inversions(unpack(c, m_)); }

  bool bruhat(Code x, Code w) const {
    if (x == w) return true;
    Letters a = unpack(x, m_), b = unpack(w, m_);
    unsigned ma = 0, mb = 0;
    for (int i = 0; i + 1 < m_; ++i) {
      ma |= 1u << a[static_cast<std::size_t>(i)];
      mb |= 1u << b[static_cast<std::size_t>(i)];
      int ca = 0, cb = 0;
      for (int k = m_ - 1; k >= 0; --k) {
        ca += (ma >> k) & 1;
        cb += (mb >> k) & 1;
        if (ca > cb) return false;
      }
    }
    return true;
  }

 private:
  static int inversions(const Letters& a) {
    int inv = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (a[i] > a[j]) ++inv;
    return inv;
  }

  int pos_of(Code c, int value) const {
    for (int i = 0; i < m_; ++i)
      if (static_cast<int>((c >> (4 * i)) & 0xF) == value) return i;
    return -1;
  }
  int at(Code c, int i) const { return static_cast<int>((c >> (4 * i)) & 0xF); }
  // s_{s+1} x < x: value s+1 sits left of value s.
  bool left_desc(Code c, int s) const { return pos_of(c, s) > pos_of(c, s + 1); }
  bool right_desc(Code c, int s) const { return at(c, s) > at(c, s + 1); }
  Code left_mul(int s, Code c) const {
    Letters a = unpack(c, m_);
    for (int i = 0; i < m_; ++i) {
      auto& v = a[static_cast<std::size_t>(i)];
      if (v == s)
        v = s + 1;
      else if (v == s + 1)
        v = s;
    }
    return pack(a, m_);
  }
  Code right_mul(Code c, int s) const {
    Letters a = unpack(c, m_);
    std::swap(a[static_cast<std::size_t>(s)], a[static_cast<std::size_t>(s + 1)]);
    return pack(a, m_);
  }

  // Pairs (z, mu(z,v)) with z < v and mu nonzero.
  const std::vector<std::pair<Code, std::int64_t>>& mu_list(Code v) {
    if (auto it = mu_.find(v); it != mu_.end()) return it->second;
    std::vector<std::pair<Code, std::int64_t>> out;
    const int lv = length(v);
    for (int lz = lv - 1; lz >= 0; lz -= 2) {
      const int top = (lv - lz - 1) / 2;
      for (Code z : by_length_[static_cast<std::size_t>(lz)]) {
        if (!bruhat(z, v)) continue;
        Poly p = P(z, v);
        if (static_cast<int>(p.size()) > top && p[static_cast<std::size_t>(top)] != 0)
          out.emplace_back(z, p[static_cast<std::size_t>(top)]);
      }
    }
    return mu_.emplace(v, std::move(out)).first->second;
  }

  int m_;
  std::vector<std::vector<Code>> by_length_;
  std::unordered_map<std::uint64_t, Poly> memo_;
  std::unordered_map<Code, std::vector<std::pair<Code, std::int64_t>>> mu_;
};

std::mutex& engines_mutex() {
  static std::mutex m;
  return m;
}

Engine& engine(int m) {
  static std::map<int, std::unique_ptr<Engine>> engines;
  auto& e = engines[m];
  if (!e) e = std::make_unique<Engine>(m);
  return *e;
}

Code to_code(const Perm& p) {
  Letters a{};
  for (int i = 0; i < p.size(); ++i) a[static_cast<std::size_t>(i)] = p(i + 1) - 1;
  return pack(a, p.size());
}

}  // namespace

bool bruhat_leq(const Perm& x, const Perm& w) {
  if (x.size() != w.size()) throw DomainError("permutations of different sizes");
  // Tableau criterion on prefix counts.
  const int m = x.size();
  for (int i = 1; i < m; ++i)
    for (int k = 1; k <= m; ++k) {
      int cx = 0, cw = 0;
      for (int j = 1; j <= i; ++j) {
        cx += x(j) >= k;
        cw += w(j) >= k;
      }
      if (cx > cw) return false;
    }
  return true;
}

KLPolynomial kl_polynomial(const Perm& x, const Perm& w, int max_m) {
  if (x.size() != w.size()) throw DomainError("permutations of different sizes");
  const int m = x.size();
  if (m > max_m || m > 8)
    throw ResourceError("symmetric group S_" + std::to_string(m) + " exceeds the KL bound " +
                        std::to_string(std::min(max_m, 8)));
  if (m <= 1) return KLPolynomial::one();
  std::lock_guard lock(engines_mutex());
  KLPolynomial out{engine(m).P(to_code(x), to_code(w))};
  out.normalize();
  return out;
}

std::int64_t class_multiplicity(std::vector<Coeff> a, std::vector<Coeff> b, const KLOptions& opts) {
  if (a.size() != b.size()) throw DomainError("coordinate vectors of different lengths");
  {
    auto sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return 0;
  }
  // Peel off common extreme entries: they span a parabolic factor on which both are trivial.
  for (bool changed = true; changed && !a.empty();) {
    changed = false;
    if (a.front() == b.front() && std::count(a.begin(), a.end(), a.front()) == 1 &&
        a.front() == *std::max_element(a.begin(), a.end())) {
      a.erase(a.begin());
      b.erase(b.begin());
      changed = true;
    } else if (a.back() == b.back() && std::count(a.begin(), a.end(), a.back()) == 1 &&
               a.back() == *std::min_element(a.begin(), a.end())) {
      a.pop_back();
      b.pop_back();
      changed = true;
    }
  }
  const int m = static_cast<int>(a.size());
  if (m <= 1) return 1;
  if (m > opts.max_m || m > 8)
    throw ResourceError("finite factor needs S_" + std::to_string(m) + ", above the KL bound " +
                        std::to_string(std::min(opts.max_m, 8)));

  std::vector<Coeff> d = a;
  std::sort(d.begin(), d.end(), std::greater<>());
  std::map<Coeff, std::vector<int>> pa, pb;  // value -> 1-based positions
  for (int i = 0; i < m; ++i) {
    pa[a[static_cast<std::size_t>(i)]].push_back(i + 1);
    pb[b[static_cast<std::size_t>(i)]].push_back(i + 1);
  }
  std::vector<int> y, z;
  std::map<Coeff, std::size_t> ua, ub;
  for (Coeff v : d) {
    auto& la = pa[v];
    auto& lb = pb[v];
    y.push_back(la[ua[v]++]);
    // Equal values in decreasing position order: the longest coset representative.
    z.push_back(lb[lb.size() - 1 - ub[v]++]);
  }
  return kl_polynomial(Perm(y), Perm(z), opts.max_m).at_one();
}

namespace {

std::vector<Coeff> class_coords(const EligibleWeight& w, int c, int R) {
  RhoShifted s(w);
  std::vector<Coeff> out;
  for (auto p : class_positions(c, w.n(), R)) out.push_back(s(p));
  return out;
}

bool tails_sorted(const EligibleWeight& w, int R) {
  RhoShifted s(w);
  const int n = w.n();
  for (int c = 0; c <= n; ++c) {
    auto v = class_coords(w, c, R);
    if (v.empty()) continue;
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    if (c >= 1 && s({-(R + 1), c}) <= *hi) return false;
    if (c <= n - 1 && s({R + 1, c + 1}) >= *lo) return false;
  }
  return true;
}

}  // namespace

int verma_stable_rank(const EligibleWeight& lambda, const EligibleWeight& mu) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  int R = std::max({1, lambda.eligibility_rank(), mu.eligibility_rank()});
  while (!(tails_sorted(lambda, R) && tails_sorted(mu, R))) {
    ++R;
    if (R > 100000) throw ResourceError("no stable rank below 100000");
  }
  return R;
}

Count verma_multiplicity_at_rank(const EligibleWeight& lambda, const EligibleWeight& mu, int R, const KLOptions& opts) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  if (R < lambda.eligibility_rank() || R < mu.eligibility_rank())
    throw DomainError("rank " + std::to_string(R) + " is below the eligibility rank of the inputs");
  if (lambda.levels() != mu.levels()) return 0;
  Count out = 1;
  for (int c = 0; c <= lambda.n() && out != 0; ++c)
    out *= class_multiplicity(class_coords(lambda, c, R), class_coords(mu, c, R), opts);
  return out;
}

Count verma_multiplicity(const EligibleWeight& lambda, const EligibleWeight& mu, const KLOptions& opts) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  if (lambda.levels() != mu.levels()) return 0;
  // Cheap rejection before searching for a stable rank.
  if (!finite_linked(lambda, mu)) return 0;
  return verma_multiplicity_at_rank(lambda, mu, verma_stable_rank(lambda, mu), opts);
}

}  // namespace olacat
