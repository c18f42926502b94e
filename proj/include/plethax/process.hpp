#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "plethax/abacus.hpp"
#include "plethax/partition.hpp"

namespace plethax {

/// A length-N sequence of nonnegative integers, indexed by bead label 1…N.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> entries);
  Composition(std::initializer_list<int> entries) : Composition(std::vector<int>(entries)) {}

  [[nodiscard]] int operator[](int bead) const { return entries_.at(static_cast<std::size_t>(bead - 1)); }
  /// Adds delta to the entry of `bead`; throws if the entry would go negative.
  void add(int bead, int delta);

  [[nodiscard]] std::size_t length() const noexcept { return entries_.size(); }
  [[nodiscard]] int total() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return total() == 0; }
  [[nodiscard]] const std::vector<int>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> entries_;
};

/// Com_N(m) in lexicographically decreasing order.
std::vector<Composition> compositions(int n, int m);

/// C(m + N − 1, N − 1), saturating at UINT64_MAX.
std::uint64_t composition_count(int n, int m);

enum class StepAction { skip_empty, skip_exhausted, moved, collided };

std::string to_string(StepAction a);

/// One look at scan position `position`. Snapshots are the state after the
/// step and are shared between consecutive steps that leave it unchanged.
struct ProcessStep {
  std::size_t position = 0;
  int bead = 0;
  StepAction action = StepAction::skip_empty;
  std::shared_ptr<const LabelledAbacus> abacus;
  std::shared_ptr<const Composition> remaining;
};

/// A successful r-move. `top` is the rank of the moved bead in the abacus
/// after the move, which is the top row of the border strip it adds.
struct MoveRecord {
  int bead = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t top = 0;
  int beads_passed = 0;
};

struct Successful {
  LabelledAbacus final_abacus;
};

/// Bead `bead`, seen at `scan_position`, collided with `blocker` at
/// `collision_position`.
struct Unsuccessful {
  int bead = 0;
  int blocker = 0;
  std::size_t scan_position = 0;
  std::size_t collision_position = 0;
};

using ProcessOutcome = std::variant<Successful, Unsuccessful>;

struct ProcessTrace {
  LabelledAbacus initial;
  Composition beta;
  int r = 1;
  std::vector<ProcessStep> steps;
  std::vector<MoveRecord> moves;
  ProcessOutcome outcome;

  [[nodiscard]] bool successful() const noexcept { return std::holds_alternative<Successful>(outcome); }
};

enum class TraceDetail { full, moves_only };

/// Scans positions 0, 1, … of w. A bead B with remaining count α_B ≥ 1 is
/// r-moved (and α_B decremented) when the target slot is empty; the first
/// collision ends the process unsuccessfully, α = 0 ends it successfully.
ProcessTrace run_process(const LabelledAbacus& w, const Composition& beta, int r,
                         TraceDetail detail = TraceDetail::full);

/// The sign-reversing involution on unsuccessful pairs: swap the colliding
/// beads B and C and shift (w⁻¹(C) − w⁻¹(B)) / r from β_B to β_C.
/// Throws std::invalid_argument on a successful pair.
std::pair<LabelledAbacus, Composition> epsilon(const LabelledAbacus& w, const Composition& beta, int r);

/// The final abacus of a successful process. Throws std::invalid_argument on
/// an unsuccessful pair.
LabelledAbacus psi(const LabelledAbacus& w, const Composition& beta, int r);

struct ClassifiedPair {
  LabelledAbacus abacus;
  Composition beta;
  ProcessOutcome outcome;

  [[nodiscard]] bool successful() const noexcept { return std::holds_alternative<Successful>(outcome); }
};

inline constexpr std::uint64_t default_pair_budget = 10'000'000;

/// Every pair in Abc_N(μ) × Com_N(m), abaci in all_abaci order and
/// compositions in decreasing order. Throws BudgetExceeded when
/// N! · |Com_N(m)| > budget.
std::vector<ClassifiedPair> enumerate_pairs(const Partition& mu, int n_beads, int r, int m,
                                            std::uint64_t budget = default_pair_budget);

using AbacusSequence = std::vector<LabelledAbacus>;

/// The sequences (w⁰, …, wᵐ) from Abc_N(μ) to Abc_N(λ) made of r-moves from
/// strictly increasing positions. Built backwards from each element of
/// Abc_N(λ) by undoing the strips of the r-decomposition of λ/μ.
std::vector<AbacusSequence> k_set(const Partition& mu, const Partition& lambda, int n_beads, int r, int m,
                                  std::uint64_t budget = default_pair_budget);

}  // namespace plethax
