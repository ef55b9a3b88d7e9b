#pragma once

#include "olacat/partitions.hpp"
#include "olacat/weights.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace olacat {

inline constexpr int kDefaultKLBound = 8;

// Permutation of 1..m in one-line notation.
class Perm {
 public:
  Perm() = default;
  // Throws DomainError if `one_line` is not a permutation of 1..m.
  explicit Perm(std::vector<int> one_line);
  static Perm identity(int m);
  // Product of simple transpositions s_i = (i, i+1), rightmost applied first.
  static Perm from_word(const std::vector<int>& word, int m);
  // "[2,1,3]", "213" (m <= 9) or a word such as "s2s1s3s2" (needs m > 0).
  static Perm parse(std::string_view text, int m = 0);

  int size() const noexcept { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const noexcept { return w_; }
  int length() const noexcept;
  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);

  std::string to_string() const;
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> w_;
};

bool bruhat_leq(const Perm& x, const Perm& w);

// Polynomial in q with integer coefficients, ascending powers.
struct KLPolynomial {
  std::vector<std::int64_t> coeffs;

  static KLPolynomial one() { return {{1}}; }
  bool is_zero() const noexcept { return coeffs.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t coefficient(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(i)] : 0;
  }
  std::int64_t at_one() const noexcept;
  void normalize();
  std::string to_string() const;
  friend bool operator==(const KLPolynomial&, const KLPolynomial&) = default;
};

// P_{x,w}; zero unless x <= w. Throws ResourceError if the group exceeds `max_m`.
KLPolynomial kl_polynomial(const Perm& x, const Perm& w, int max_m = kDefaultKLBound);

struct KLOptions {
  int max_m = kDefaultKLBound;
};

// m(lambda, mu) = [M(lambda) : L(mu)] for the Levi factor of finite roots,
// evaluated at a rank where both coordinate tails are already sorted.
Count verma_multiplicity(const EligibleWeight& lambda, const EligibleWeight& mu, const KLOptions& opts = {});
// Same quantity computed literally inside the rank-R truncation.
Count verma_multiplicity_at_rank(const EligibleWeight& lambda, const EligibleWeight& mu, int R,
                                 const KLOptions& opts = {});
// Least rank at which the outside coordinates of both weights sit below/above the box values.
int verma_stable_rank(const EligibleWeight& lambda, const EligibleWeight& mu);

// KL data for one psi-class: coordinates of lambda and mu (same multiset).
// Returns P_{y, z}(1) with dominant base and z longest in its coset.
std::int64_t class_multiplicity(std::vector<Coeff> a, std::vector<Coeff> b, const KLOptions& opts = {});

}  // namespace olacat
