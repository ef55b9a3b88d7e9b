#include "olacat/partitions.hpp"

#include "olacat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace olacat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.row(i) > row(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(row(0)), 0);
  for (int r : parts_)
    for (int j = 0; j < r; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  std::vector<int> parts;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip();
      std::size_t start = pos;
      long long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000000) throw ParseError("partition part too large", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected a nonnegative integer", pos);
      parts.push_back(static_cast<int>(v));
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
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw ParseError("parts must be weakly decreasing", 0);
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_inside(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int i) {
    int bound = outer.row(i);
    if (i > 0) bound = std::min(bound, cur.back());
    out.emplace_back(cur);
    for (int p = 1; p <= bound; ++p) {
      cur.push_back(p);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Counts LR tableaux of shape nu/lambda with content mu, filling in reading order
// (rows top to bottom, each row right to left).
class LRCounter {
 public:
  LRCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lam_(lambda), mu_(mu), nu_(nu) {
    for (int r = 0; r < nu.length(); ++r)
      for (int c = nu.row(r) - 1; c >= lambda.row(r); --c) cells_.push_back({r, c});
    grid_.assign(static_cast<std::size_t>(nu.length()), std::vector<int>(static_cast<std::size_t>(nu.row(0)), 0));
    used_.assign(static_cast<std::size_t>(mu.length()) + 1, 0);
  }

  Count run() {
    count_ = 0;
    rec(0);
    return count_;
  }

 private:
  struct Cell {
    int r, c;
  };

  void rec(std::size_t idx) {
    if (idx == cells_.size()) {
      ++count_;
      return;
    }
    auto [r, c] = cells_[idx];
    int hi = std::min(mu_.length(), r + 1);
    if (c + 1 < nu_.row(r)) hi = std::min(hi, at(r, c + 1));
    int lo = 1;
    if (r > 0 && c >= lam_.row(r - 1)) lo = at(r - 1, c) + 1;
    for (int v = lo; v <= hi; ++v) {
      auto uv = static_cast<std::size_t>(v);
      if (used_[uv] >= mu_.row(v - 1)) continue;
      if (v > 1 && used_[uv] >= used_[uv - 1]) continue;
      ++used_[uv];
      at(r, c) = v;
      rec(idx + 1);
      at(r, c) = 0;
      --used_[uv];
    }
  }

  int& at(int r, int c) { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  const Partition& lam_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> used_;
  Count count_;
};

}  // namespace

Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  return LRCounter(lambda, mu, nu).run();
}

Count multi_lr(const Partition& gamma, const std::vector<Partition>& alphas) {
  int total = 0;
  for (const auto& a : alphas) total += a.size();
  if (total != gamma.size()) return 0;
  if (alphas.empty()) return gamma.empty() ? 1 : 0;
  if (alphas.size() == 1) return alphas[0] == gamma ? 1 : 0;
  if (alphas.size() == 2) return lr_coefficient(alphas[0], alphas[1], gamma);
  // c^gamma_{a1..am} = sum_beta c^beta_{a1..a(m-1)} c^gamma_{beta,am}
  std::vector<Partition> head(alphas.begin(), alphas.end() - 1);
  const Partition& last = alphas.back();
  Count sum = 0;
  for (const auto& beta : partitions_inside(gamma)) {
    if (beta.size() != gamma.size() - last.size()) continue;
    Count tail = lr_coefficient(beta, last, gamma);
    if (tail == 0) continue;
    sum += tail * multi_lr(beta, head);
  }
  return sum;
}

Polynomial Polynomial::constant(int variables, const Count& c) {
  Polynomial p(variables);
  p.add_term(Exponent(static_cast<std::size_t>(variables), 0), c);
  return p;
}

Polynomial Polynomial::monomial(Exponent exponent, const Count& c) {
  Polynomial p(static_cast<int>(exponent.size()));
  p.add_term(exponent, c);
  return p;
}

Count Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Count(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Polynomial::add_term(const Exponent& e, const Count& c) {
  if (static_cast<int>(e.size()) != vars_) throw DomainError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.vars_ != vars_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.vars_ != vars_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw DomainError("variable count mismatch");
  Polynomial out(a.vars_);
  Polynomial::Exponent e(static_cast<std::size_t>(a.vars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::truncated(int degree) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) <= degree) out.terms_.emplace(e, c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Count a = c < 0 ? Count(-c) : c;
    bool unit = true;
    for (int x : e) unit = unit && x == 0;
    if (a != 1 || unit) os << a;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Polynomial schur_poly(const Partition& lambda, int k) {
  Polynomial out(k);
  if (lambda.length() > k) return out;
  const int rows = lambda.length();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda.row(r)), 0);
  Polynomial::Exponent e(static_cast<std::size_t>(k), 0);
  const Partition conj = lambda.conjugate();
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      out.add_term(e, 1);
      return;
    }
    if (c == lambda.row(r)) {
      rec(r + 1, 0);
      return;
    }
    auto& row = t[static_cast<std::size_t>(r)];
    int lo = c > 0 ? row[static_cast<std::size_t>(c - 1)] : 1;
    if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    // Room for the rows below in this column.
    int hi = k - (conj.row(c) - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      row[static_cast<std::size_t>(c)] = v;
      ++e[static_cast<std::size_t>(v - 1)];
      rec(r, c + 1);
      --e[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace olacat
