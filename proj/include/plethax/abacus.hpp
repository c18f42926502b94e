#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "plethax/partition.hpp"
#include "plethax/permutation.hpp"

namespace plethax {

/// A monomial x_1^{e_1} … x_N^{e_N}; zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;

  void multiply(int var, long long exponent);
  [[nodiscard]] long long exponent(int var) const;
  [[nodiscard]] const std::map<int, long long>& exponents() const noexcept { return exps_; }
  [[nodiscard]] long long degree() const;
  /// Dense exponent vector of length n_vars.
  [[nodiscard]] std::vector<unsigned> dense(std::size_t n_vars) const;
  /// "x1^6 x2^3 x4", or "1" for the empty monomial.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(Monomial a, const Monomial& b);

 private:
  std::map<int, long long> exps_;
};

/// Bead `bead` cannot r-move because `blocker` sits at `position`.
struct Collision {
  int bead = 0;
  int blocker = 0;
  std::size_t position = 0;

  friend bool operator==(const Collision&, const Collision&) = default;
};

/// A single runner with positions 0, 1, 2, … holding N beads labelled 1…N.
///
/// Slots past capacity() are empty. The sign of σ_w is computed once by
/// inversion counting on construction and then carried through moves and
/// swaps using the transposition / (u+1)-cycle rules.
class LabelledAbacus {
 public:
  /// `slots[i]` is the label at position i, 0 for empty. Throws
  /// std::invalid_argument unless the nonzero entries are exactly 1…N.
  explicit LabelledAbacus(std::vector<int> slots);

  /// Build from (position, label) pairs.
  static LabelledAbacus from_pairs(std::span<const std::pair<std::size_t, int>> pairs);

  [[nodiscard]] int n_beads() const noexcept { return static_cast<int>(positions_.size()); }
  [[nodiscard]] std::size_t capacity() const noexcept { return slots_.size(); }
  [[nodiscard]] int at(std::size_t pos) const noexcept { return pos < slots_.size() ? slots_[pos] : 0; }
  /// w^{-1}(B).
  [[nodiscard]] std::size_t position(int bead) const { return positions_.at(static_cast<std::size_t>(bead - 1)); }
  [[nodiscard]] const std::vector<int>& slots() const noexcept { return slots_; }
  /// ι_1 > ι_2 > … > ι_N.
  [[nodiscard]] std::vector<std::size_t> support() const;
  [[nodiscard]] int sign() const noexcept { return sign_; }

  friend bool operator==(const LabelledAbacus& a, const LabelledAbacus& b) { return a.slots_ == b.slots_; }
  friend auto operator<=>(const LabelledAbacus& a, const LabelledAbacus& b) { return a.slots_ <=> b.slots_; }

 private:
  friend std::variant<LabelledAbacus, Collision> r_move(const LabelledAbacus&, int, int);
  friend std::optional<LabelledAbacus> left_r_move(const LabelledAbacus&, int, int);
  friend LabelledAbacus swap_beads(const LabelledAbacus&, int, int);

  LabelledAbacus() = default;
  void relocate(int bead, std::size_t to);
  void trim();

  std::vector<int> slots_;
  std::vector<std::size_t> positions_;
  int sign_ = 1;
};

/// Bead j at position μ_j + N − j; σ_w is the identity.
LabelledAbacus canonical_abacus(const Partition& mu, int n_beads);

/// σ_w(t) is the label of the t-th rightmost bead.
Permutation sigma(const LabelledAbacus& w);

/// Carried sign of σ_w.
inline int sign(const LabelledAbacus& w) { return w.sign(); }

/// Sign of σ_w recomputed from scratch by inversion counting.
int inversion_sign(const LabelledAbacus& w);

Partition shape(const LabelledAbacus& w);

/// Π x_{w_i}^i over the support.
Monomial weight(const LabelledAbacus& w);

/// Moves bead B from y to y + r, or reports the bead occupying y + r.
std::variant<LabelledAbacus, Collision> r_move(const LabelledAbacus& w, int bead, int r);

/// Moves bead B from y to y − r; absent when y < r or y − r is occupied.
std::optional<LabelledAbacus> left_r_move(const LabelledAbacus& w, int bead, int r);

LabelledAbacus swap_beads(const LabelledAbacus& w, int b, int c);

/// Occupied positions strictly between i1 and i2; requires i1 < i2.
int beads_between(const LabelledAbacus& w, std::size_t i1, std::size_t i2);

/// σ_w(t).
int tth_rightmost(const LabelledAbacus& w, std::size_t t);

/// All N! labellings of the positions {λ_j + N − j}. Throws BudgetExceeded
/// when N > max_beads.
std::vector<LabelledAbacus> all_abaci(const Partition& lambda, int n_beads, int max_beads = 9);

/// Ascending position:label pairs, e.g. "1:4,3:2,4:5".
std::string to_pairs_string(const LabelledAbacus& w);
/// One token per position up to the last bead, e.g. ". 4 . 2 5 . 1 6 . . 3".
std::string to_dotted_string(const LabelledAbacus& w);

}  // namespace plethax
