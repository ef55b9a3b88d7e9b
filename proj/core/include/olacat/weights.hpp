#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace olacat {

using Coeff = std::int64_t;

// Overflow-checked arithmetic on coefficients; throws DomainError.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

// Position (i,k) with i a nonzero integer and k a block in 1..n.
struct WeightIndex {
  int i = 1;
  int k = 1;

  friend bool operator==(WeightIndex, WeightIndex) = default;
  // The order 1 < 2 < ... < -2 < -1 inside a block, blocks concatenated.
  friend std::strong_ordering operator<=>(WeightIndex a, WeightIndex b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    bool pa = a.i > 0, pb = b.i > 0;
    if (pa != pb) return pa ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.i <=> b.i;
  }
};

std::string to_string(WeightIndex p);
// Throws DomainError unless i != 0 and 1 <= k <= n.
void validate_index(WeightIndex p, int n);

// Indices with equal psi-value form a "class". Class c in 0..n;
// psi(e_p) = n/2 - class(p).
inline int psi_class(WeightIndex p) { return p.i > 0 ? p.k - 1 : p.k; }
// Positions of class c inside the box |i| <= R, in increasing order.
std::vector<WeightIndex> class_positions(int c, int n, int R);
// All positions with |i| <= R, in increasing order.
std::vector<WeightIndex> box_positions(int n, int R);

// Exact half-integer, stored doubled.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(Coeff twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger from_integer(Coeff v) { return from_twice(2 * v); }

  constexpr Coeff twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  // Throws DomainError when not integral.
  Coeff to_integer() const;
  double to_double() const noexcept { return static_cast<double>(twice_) / 2.0; }
  std::string to_string() const;
  static HalfInteger parse(std::string_view text);

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInteger operator-(HalfInteger a) { return from_twice(-a.twice_); }
  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  Coeff twice_ = 0;
};

// An integral eligible weight: level part sum_k a_k w^(k) plus a finitely
// supported correction sum b_p e_p. Zero corrections are never stored.
class EligibleWeight {
 public:
  explicit EligibleWeight(int n = 1);
  static EligibleWeight zero(int n) { return EligibleWeight(n); }
  static EligibleWeight omega(int k, int n);
  static EligibleWeight epsilon(WeightIndex p, int n);

  int n() const noexcept { return n_; }
  Coeff level(int k) const;
  const std::vector<Coeff>& levels() const noexcept { return levels_; }
  Coeff finite(WeightIndex p) const;
  const std::map<WeightIndex, Coeff>& finite_part() const noexcept { return finite_; }
  // Full coefficient level[k] + finite[p].
  Coeff coefficient(WeightIndex p) const;
  Coeff finite_sum() const;

  void set_level(int k, Coeff v);
  void add_level(int k, Coeff v) { set_level(k, checked_add(level(k), v)); }
  void set_finite(WeightIndex p, Coeff v);
  void add_finite(WeightIndex p, Coeff v) { set_finite(p, checked_add(finite(p), v)); }
  // Stores the finite correction so that coefficient(p) == v.
  void set_coefficient(WeightIndex p, Coeff v) { set_finite(p, checked_add(v, -level(p.k))); }

  // Least r with support(finite) inside |i| <= r.
  int eligibility_rank() const noexcept;
  bool is_eligible(int r) const noexcept { return eligibility_rank() <= r; }
  bool is_zero() const noexcept;
  bool has_zero_level() const noexcept;

  EligibleWeight& operator+=(const EligibleWeight& o);
  EligibleWeight& operator-=(const EligibleWeight& o);
  friend EligibleWeight operator+(EligibleWeight a, const EligibleWeight& b) { return a += b; }
  friend EligibleWeight operator-(EligibleWeight a, const EligibleWeight& b) { return a -= b; }
  EligibleWeight operator-() const;
  friend EligibleWeight operator*(Coeff c, const EligibleWeight& w);

  friend bool operator==(const EligibleWeight&, const EligibleWeight&) = default;
  friend auto operator<=>(const EligibleWeight&, const EligibleWeight&) = default;

 private:
  void check_n(const EligibleWeight& o) const;

  int n_;
  std::vector<Coeff> levels_;
  std::map<WeightIndex, Coeff> finite_;
};

// The root e_p - e_q.
struct Root {
  WeightIndex p;
  WeightIndex q;

  bool is_positive() const noexcept { return p < q; }
  Root negated() const noexcept { return {q, p}; }
  EligibleWeight weight(int n) const;

  friend bool operator==(Root, Root) = default;
  friend auto operator<=>(Root, Root) = default;
};

std::string to_string(const Root& a);

EligibleWeight parse_weight(std::string_view text, int n);
std::string render_weight(const EligibleWeight& w);

Coeff pairing(const EligibleWeight& lambda, WeightIndex p);

HalfInteger psi(WeightIndex p, int n);
HalfInteger psi(const EligibleWeight& xi);
// Integral on roots: class(q) - class(p).
int psi(const Root& a);
inline bool is_finite_root(const Root& a) { return psi(a) == 0; }

std::vector<Coeff> phi(const EligibleWeight& xi);

// (e_p, rho_r), rho_r the sum of positive roots of the rank-r finite factor.
// Zero outside the box |i| <= r.
Coeff rho_r_pairing(WeightIndex p, int n, int r);
Coeff theta(const Root& a, int r, int n);

// p -> pairing(lambda, p) - i.
class RhoShifted {
 public:
  explicit RhoShifted(EligibleWeight base) : base_(std::move(base)) {}
  Coeff operator()(WeightIndex p) const { return checked_add(base_.coefficient(p), -static_cast<Coeff>(p.i)); }
  Coeff background(WeightIndex p) const { return base_.level(p.k) - p.i; }
  const EligibleWeight& base() const noexcept { return base_; }

 private:
  EligibleWeight base_;
};

inline RhoShifted rho_shift(const EligibleWeight& lambda) { return RhoShifted(lambda); }

// lambda - mu is a nonnegative integer combination of positive roots.
bool dominance_geq(const EligibleWeight& lambda, const EligibleWeight& mu);

}  // namespace olacat
