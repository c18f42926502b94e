#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "plethax/partition.hpp"
#include "plethax/polynomial.hpp"
#include "plethax/process.hpp"

namespace plethax {

/// A finite integer combination Σ c_λ s_λ; zero coefficients are dropped.
/// Iteration is in lexicographically decreasing order of λ.
class SchurExpansion {
 public:
  using TermMap = std::map<Partition, Integer, std::greater<>>;

  SchurExpansion() = default;
  SchurExpansion(std::initializer_list<std::pair<Partition, int>> terms);

  void add(const Partition& lambda, const Integer& coef);
  [[nodiscard]] Integer coefficient(const Partition& lambda) const;
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  TermMap terms_;
};

/// s_μ · (p_r ∘ h_m) = Σ sgn_r(λ/μ) s_λ over r-decomposable λ/μ of size rm.
SchurExpansion pmn_expand(const Partition& mu, int r, int m);

struct PlethysmFactor {
  int r = 1;
  int m = 1;

  friend bool operator==(const PlethysmFactor&, const PlethysmFactor&) = default;
};

/// The factors p_{ρ_i} ∘ h_{ν_j} of p_ρ ∘ h_ν, lexicographic in (i, j).
std::vector<PlethysmFactor> plethysm_factors(const Partition& rho, const Partition& nu);

/// Applies pmn_expand once per factor, in the given order.
SchurExpansion pmn_expand_factors(const Partition& mu, std::span<const PlethysmFactor> factors);

/// s_μ · (p_ρ ∘ h_ν). Throws std::invalid_argument when ρ or ν is empty.
SchurExpansion pmn_expand_iterated(const Partition& mu, const Partition& rho, const Partition& nu);

/// |μ| + r m, the smallest variable count at which both sides are faithful.
std::size_t default_variable_count(const Partition& mu, int r, int m);

enum class OracleMode { symbolic, modular };

struct OracleReport {
  bool pass = false;
  OracleMode mode = OracleMode::symbolic;
  std::size_t n_vars = 0;
  std::uint64_t seed = 0;
  /// Terms compared (symbolic) or evaluation points (modular).
  std::size_t checks = 0;
  std::size_t expansion_terms = 0;
  /// First differing term or point; empty on success.
  std::string first_discrepancy;
};

inline constexpr std::size_t default_eval_points = 20;

/// Checks a_{μ+δ(N)} · (p_r ∘ h_m) = Σ_λ sgn_r(λ/μ) a_{λ+δ(N)}, exactly or at
/// seeded random points mod p. In modular mode the quotient form
/// s_μ · (p_r ∘ h_m) = Σ sgn_r(λ/μ) s_λ is also checked wherever a_{δ(N)} ≠ 0.
/// Throws std::invalid_argument when N < |μ| + r m.
OracleReport verify_against_oracle(const Partition& mu, int r, int m, std::size_t n_vars, OracleMode mode,
                                   std::uint64_t seed = 0, std::size_t points = default_eval_points);

struct ProcessReport {
  bool pass = false;
  std::size_t unsuccessful = 0;
  std::size_t successful = 0;
  std::size_t target_abaci = 0;
  std::string first_failure;
};

/// Runs the process on every pair of Abc_N(μ) × Com_N(m) and checks that ε
/// is a sign-reversing, weight-preserving involution on the unsuccessful
/// pairs and that ψ maps the successful ones bijectively onto the abaci of
/// the r-decomposable λ ⊇ μ (ℓ(λ) ≤ N) with sign(ψ) = sgn_r · sign(w).
/// Both halves are also summed as polynomials.
ProcessReport verify_process_identity(const Partition& mu, int r, int m, int n_beads,
                                      std::uint64_t budget = default_pair_budget);

}  // namespace plethax
