#include "olacat/weights.hpp"

#include "olacat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace olacat {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("coefficient overflow");
  return r;
}

std::string to_string(WeightIndex p) { return "e[" + std::to_string(p.i) + "," + std::to_string(p.k) + "]"; }

void validate_index(WeightIndex p, int n) {
  if (p.i == 0) throw DomainError("index error: i must be nonzero in " + to_string(p));
  if (p.k < 1 || p.k > n) throw DomainError("index error: block " + std::to_string(p.k) + " outside 1.." + std::to_string(n));
}

std::vector<WeightIndex> class_positions(int c, int n, int R) {
  std::vector<WeightIndex> out;
  if (c < 0 || c > n) return out;
  if (c >= 1)
    for (int i = -R; i <= -1; ++i) out.push_back({i, c});
  if (c <= n - 1)
    for (int i = 1; i <= R; ++i) out.push_back({i, c + 1});
  return out;
}

std::vector<WeightIndex> box_positions(int n, int R) {
  std::vector<WeightIndex> out;
  for (int c = 0; c <= n; ++c) {
    auto part = class_positions(c, n, R);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Coeff HalfInteger::to_integer() const {
  if (!is_integer()) throw DomainError("value " + to_string() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInteger HalfInteger::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& t, std::size_t offset) -> Coeff {
    std::size_t used = 0;
    Coeff v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer", offset);
    }
    if (used != t.size()) throw ParseError("unexpected character", offset + used);
    return v;
  };
  if (slash == std::string::npos) return from_integer(parse_int(s, 0));
  Coeff num = parse_int(s.substr(0, slash), 0);
  Coeff den = parse_int(s.substr(slash + 1), slash + 1);
  if (den == 1) return from_integer(num);
  if (den != 2) throw ParseError("denominator must be 1 or 2", slash + 1);
  return from_twice(num);
}

EligibleWeight::EligibleWeight(int n) : n_(n), levels_(static_cast<std::size_t>(n > 0 ? n : 0), 0) {
  if (n < 1) throw DomainError("block count must be at least 1");
}

EligibleWeight EligibleWeight::omega(int k, int n) {
  EligibleWeight w(n);
  w.set_level(k, 1);
  return w;
}

EligibleWeight EligibleWeight::epsilon(WeightIndex p, int n) {
  EligibleWeight w(n);
  w.set_finite(p, 1);
  return w;
}

Coeff EligibleWeight::level(int k) const {
  if (k < 1 || k > n_) throw DomainError("index error: block " + std::to_string(k) + " outside 1.." + std::to_string(n_));
  return levels_[static_cast<std::size_t>(k - 1)];
}

Coeff EligibleWeight::finite(WeightIndex p) const {
  auto it = finite_.find(p);
  return it == finite_.end() ? 0 : it->second;
}

Coeff EligibleWeight::coefficient(WeightIndex p) const { return checked_add(level(p.k), finite(p)); }

Coeff EligibleWeight::finite_sum() const {
  Coeff s = 0;
  for (const auto& [p, v] : finite_) s = checked_add(s, v);
  return s;
}

void EligibleWeight::set_level(int k, Coeff v) {
  level(k);
  levels_[static_cast<std::size_t>(k - 1)] = v;
}

void EligibleWeight::set_finite(WeightIndex p, Coeff v) {
  validate_index(p, n_);
  if (v == 0)
    finite_.erase(p);
  else
    finite_[p] = v;
}

int EligibleWeight::eligibility_rank() const noexcept {
  int r = 0;
  for (const auto& [p, v] : finite_) r = std::max(r, std::abs(p.i));
  return r;
}

bool EligibleWeight::is_zero() const noexcept { return finite_.empty() && has_zero_level(); }

bool EligibleWeight::has_zero_level() const noexcept {
  return std::all_of(levels_.begin(), levels_.end(), [](Coeff c) { return c == 0; });
}

void EligibleWeight::check_n(const EligibleWeight& o) const {
  if (o.n_ != n_) throw DomainError("block count mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
}

EligibleWeight& EligibleWeight::operator+=(const EligibleWeight& o) {
  check_n(o);
  for (std::size_t k = 0; k < levels_.size(); ++k) levels_[k] = checked_add(levels_[k], o.levels_[k]);
  for (const auto& [p, v] : o.finite_) add_finite(p, v);
  return *this;
}

EligibleWeight& EligibleWeight::operator-=(const EligibleWeight& o) { return *this += -o; }

EligibleWeight EligibleWeight::operator-() const { return -1 * *this; }

EligibleWeight operator*(Coeff c, const EligibleWeight& w) {
  EligibleWeight out(w.n_);
  for (std::size_t k = 0; k < w.levels_.size(); ++k) out.levels_[k] = checked_mul(c, w.levels_[k]);
  if (c != 0)
    for (const auto& [p, v] : w.finite_) out.finite_[p] = checked_mul(c, v);
  return out;
}

EligibleWeight Root::weight(int n) const {
  if (p == q) throw DomainError("a root needs two distinct indices");
  EligibleWeight w(n);
  w.set_finite(p, 1);
  w.set_finite(q, -1);
  return w;
}

std::string to_string(const Root& a) { return render_weight(a.weight(std::max(a.p.k, a.q.k))); }

namespace {

class WeightParser {
 public:
  WeightParser(std::string_view text, int n) : s_(text), n_(n), w_(n) {}

  EligibleWeight run() {
    skip();
    // The lone "0".
    if (pos_ < s_.size() && s_[pos_] == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (pos_ == s_.size()) return w_;
      pos_ = save;
    }
    if (pos_ == s_.size()) throw ParseError("empty weight", pos_);
    int sign = 1;
    if (peek('+') || peek('-')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign);
    for (;;) {
      skip();
      if (pos_ == s_.size()) break;
      if (!(peek('+') || peek('-'))) throw ParseError("expected '+' or '-'", pos_);
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
      term(sign);
    }
    return w_;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  Coeff number(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
      skip();
    }
    std::size_t digits = pos_;
    Coeff v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::numeric_limits<Coeff>::max() / 4 - 9) / 10) throw ParseError("integer out of range", start);
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("expected an integer", pos_);
    return neg ? -v : v;
  }

  void term(int sign) {
    skip();
    Coeff c = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      c = number(false);
      if (peek('*')) ++pos_;
    }
    c *= sign;
    skip();
    if (pos_ >= s_.size()) throw ParseError("expected 'w[' or 'e['", pos_);
    std::size_t at = pos_;
    char head = s_[pos_];
    if (head == 'w') {
      ++pos_;
      expect('[');
      Coeff k = number(false);
      expect(']');
      if (k < 1 || k > n_)
        throw DomainError("index error: block " + std::to_string(k) + " outside 1.." + std::to_string(n_) +
                          " at position " + std::to_string(at));
      w_.add_level(static_cast<int>(k), c);
    } else if (head == 'e') {
      ++pos_;
      expect('[');
      Coeff i = number(true);
      expect(',');
      Coeff k = number(false);
      expect(']');
      if (i == 0) throw DomainError("index error: i must be nonzero at position " + std::to_string(at));
      if (k < 1 || k > n_)
        throw DomainError("index error: block " + std::to_string(k) + " outside 1.." + std::to_string(n_) +
                          " at position " + std::to_string(at));
      if (i > 1000000 || i < -1000000) throw DomainError("index error: |i| too large at position " + std::to_string(at));
      w_.add_finite({static_cast<int>(i), static_cast<int>(k)}, c);
    } else {
      throw ParseError("expected 'w[' or 'e['", pos_);
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;
  EligibleWeight w_;
};

void render_term(std::string& out, Coeff c, const std::string& atom) {
  if (out.empty()) {
    if (c == -1)
      out += "-";
    else if (c != 1)
      out += std::to_string(c) + "*";
  } else {
    out += c < 0 ? " - " : " + ";
    Coeff a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + "*";
  }
  out += atom;
}

}  // namespace

EligibleWeight parse_weight(std::string_view text, int n) {
  if (n < 1) throw DomainError("block count must be at least 1");
  return WeightParser(text, n).run();
}

std::string render_weight(const EligibleWeight& w) {
  std::string out;
  for (int k = 1; k <= w.n(); ++k)
    if (w.level(k) != 0) render_term(out, w.level(k), "w[" + std::to_string(k) + "]");
  for (const auto& [p, v] : w.finite_part()) render_term(out, v, to_string(p));
  return out.empty() ? "0" : out;
}

Coeff pairing(const EligibleWeight& lambda, WeightIndex p) {
  validate_index(p, lambda.n());
  return lambda.coefficient(p);
}

HalfInteger psi(WeightIndex p, int n) { return HalfInteger::from_twice(n + 1 - 2 * p.k + (p.i > 0 ? 1 : -1)); }

HalfInteger psi(const EligibleWeight& xi) {
  Coeff twice = 0;
  for (const auto& [p, v] : xi.finite_part()) twice = checked_add(twice, checked_mul(v, psi(p, xi.n()).twice()));
  return HalfInteger::from_twice(twice);
}

int psi(const Root& a) { return psi_class(a.q) - psi_class(a.p); }

std::vector<Coeff> phi(const EligibleWeight& xi) {
  std::vector<Coeff> out(xi.levels());
  for (const auto& [p, v] : xi.finite_part()) {
    auto& slot = out[static_cast<std::size_t>(p.k - 1)];
    slot = checked_add(slot, v);
  }
  return out;
}

Coeff rho_r_pairing(WeightIndex p, int n, int r) {
  if (std::abs(p.i) > r) return 0;
  const int c = psi_class(p);
  const int m = (c == 0 || c == n) ? r : 2 * r;
  int j;  // 1-based position inside the class
  if (p.i < 0)
    j = r + p.i + 1;
  else
    j = (c == 0 ? 0 : r) + p.i;
  return m + 1 - 2 * j;
}

Coeff theta(const Root& a, int r, int n) {
  validate_index(a.p, n);
  validate_index(a.q, n);
  Coeff rho_part = rho_r_pairing(a.p, n, r) - rho_r_pairing(a.q, n, r);
  Coeff gl_part = (n + 1 - 2 * a.p.k) - (n + 1 - 2 * a.q.k);
  return rho_part + gl_part;
}

bool dominance_geq(const EligibleWeight& lambda, const EligibleWeight& mu) {
  if (lambda.n() != mu.n()) throw DomainError("block count mismatch");
  if (lambda.levels() != mu.levels()) return false;
  EligibleWeight d = lambda - mu;
  Coeff running = 0;
  for (const auto& [p, v] : d.finite_part()) {
    running = checked_add(running, v);
    if (running < 0) return false;
  }
  return running == 0;
}

}  // namespace olacat
