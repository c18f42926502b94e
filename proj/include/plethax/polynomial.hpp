#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plethax/abacus.hpp"
#include "plethax/partition.hpp"

namespace plethax {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::vector<unsigned>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned x : e) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Graded reverse lexicographic order: higher total degree first, ties broken
/// in favour of the vector whose last nonzero difference is negative.
bool grevlex_greater(const Exponent& a, const Exponent& b);

/// Exact multivariate polynomial over ℤ in a fixed number of variables.
/// Zero coefficients are never stored.
class SparsePolynomial {
 public:
  using TermMap = std::unordered_map<Exponent, Integer, ExponentHash>;

  explicit SparsePolynomial(std::size_t n_vars = 0) : n_vars_(n_vars) {}

  static SparsePolynomial monomial(Exponent e, const Integer& coef = 1);
  static SparsePolynomial constant(std::size_t n_vars, const Integer& c);
  static SparsePolynomial from_monomial(const Monomial& m, std::size_t n_vars, const Integer& coef = 1);

  [[nodiscard]] std::size_t n_vars() const noexcept { return n_vars_; }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] Integer coefficient(const Exponent& e) const;

  /// Terms sorted by grevlex_greater.
  [[nodiscard]] std::vector<std::pair<Exponent, Integer>> sorted_terms() const;

  void add_term(const Exponent& e, const Integer& coef);

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Integer& scalar);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(SparsePolynomial a, const Integer& s) { return a *= s; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_vars(std::size_t n) const;

  std::size_t n_vars_ = 0;
  TermMap terms_;
};

SparsePolynomial add(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial sub(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial mul(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial scale(const SparsePolynomial& a, const Integer& s);
bool equals(const SparsePolynomial& a, const SparsePolynomial& b);

/// Σ_{β ∈ Com_N(m)} x^β.
SparsePolynomial h_poly(int m, std::size_t n_vars);
/// Σ_i x_i^r.
SparsePolynomial p_poly(int r, std::size_t n_vars);
/// g(x_1^r, …, x_N^r).
SparsePolynomial plethysm_pr(const SparsePolynomial& g, int r);

inline constexpr std::size_t default_symbolic_var_limit = 8;

/// det(x_i^{β_j}) expanded over all N! permutations. Throws BudgetExceeded
/// when N exceeds max_vars.
SparsePolynomial a_beta(std::span<const int> beta, std::size_t max_vars = default_symbolic_var_limit);

/// λ + δ(N) = (λ_1 + N − 1, λ_2 + N − 2, …, λ_N).
std::vector<int> shifted_exponents(const Partition& lambda, std::size_t n_vars);

// Arithmetic modulo the Mersenne prime 2^61 − 1.

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp);
/// Throws std::domain_error on 0.
std::uint64_t mod_inv(std::uint64_t a);
/// Least nonnegative residue of an integer.
std::uint64_t residue(const Integer& c);

/// A point of (ℤ/p)^N.
struct EvalPoint {
  std::vector<std::uint64_t> values;

  /// Coordinates uniform in [0, p).
  static EvalPoint random(std::size_t n_vars, std::mt19937_64& rng);
};

std::uint64_t evaluate(const SparsePolynomial& f, const EvalPoint& point);

/// det(x_i^{β_j}) at a point by Gaussian elimination mod p; O(N³).
std::uint64_t a_beta_eval(std::span<const int> beta, const EvalPoint& point);

/// (p_r ∘ h_m) at a point through h_k(y_1..y_j) = h_k(y_1..y_{j-1}) + y_j h_{k-1}(y_1..y_j)
/// with y_i = x_i^r; O(N m).
std::uint64_t pr_hm_eval(int r, int m, const EvalPoint& point);

/// s_λ = a_{λ+δ(N)} / a_{δ(N)} at a point. Throws std::domain_error when the
/// Vandermonde vanishes there.
std::uint64_t schur_eval(const Partition& lambda, const EvalPoint& point);

}  // namespace plethax
