#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace olacat {

using Count = boost::multiprecision::cpp_int;

class Partition {
 public:
  Partition() = default;
  // Throws DomainError on negative or increasing parts. Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  // Row length, 0 past the end.
  int row(int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  bool contains(const Partition& other) const noexcept;
  Partition conjugate() const;

  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of `n`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// All partitions fitting inside `outer`.
std::vector<Partition> partitions_inside(const Partition& outer);

Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// Iterated coefficient of s_gamma in the product of s_alpha over alphas.
Count multi_lr(const Partition& gamma, const std::vector<Partition>& alphas);

// Sparse polynomial in a fixed number of variables with exact coefficients.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(int variables = 0) : vars_(variables) {}
  static Polynomial constant(int variables, const Count& c);
  static Polynomial monomial(Exponent exponent, const Count& c = 1);

  int variables() const noexcept { return vars_; }
  const std::map<Exponent, Count>& terms() const noexcept { return terms_; }
  Count coefficient(const Exponent& e) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;

  void add_term(const Exponent& e, const Count& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  // Drops every term of total degree above `degree`.
  Polynomial truncated(int degree) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  std::string to_string() const;

 private:
  int vars_;
  std::map<Exponent, Count> terms_;
};

// s_lambda(x_1..x_k) via semistandard tableaux; zero when length(lambda) > k.
Polynomial schur_poly(const Partition& lambda, int k);

}  // namespace olacat
