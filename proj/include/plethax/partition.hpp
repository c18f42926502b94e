#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plethax {

/// A weakly decreasing sequence of positive integers. Row indices are 1-based
/// and part(i) is 0 for i beyond the length.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument on negative entries or an increasing
  /// adjacent pair. Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] int part(std::size_t row) const noexcept {
    return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0;
  }
  [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
  [[nodiscard]] int size() const noexcept;
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }

  /// Cellwise containment of Young diagrams.
  [[nodiscard]] bool contains(const Partition& inner) const noexcept;

  /// Parts padded with zeros (or truncated) to exactly `n` entries.
  [[nodiscard]] std::vector<int> padded(std::size_t n) const;

  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition make_partition(std::span<const int> seq);

/// Every partition of n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

class SkewPartition {
 public:
  /// Throws std::invalid_argument unless inner ⊆ outer.
  SkewPartition(Partition outer, Partition inner);

  [[nodiscard]] const Partition& outer() const noexcept { return outer_; }
  [[nodiscard]] const Partition& inner() const noexcept { return inner_; }
  [[nodiscard]] int size() const noexcept { return outer_.size() - inner_.size(); }

  /// Cells (row, column) of the diagram, 1-based, row-major order.
  [[nodiscard]] std::vector<std::pair<int, int>> cells() const;

 private:
  Partition outer_;
  Partition inner_;
};

/// Least differing row, or 0 when outer == inner.
std::size_t top(const SkewPartition& s);
/// Greatest differing row, or 0 when outer == inner.
std::size_t bottom(const SkewPartition& s);

bool is_border_strip(const SkewPartition& s, int r);

/// (-1)^(bottom - top) of a border strip.
int strip_sign(const SkewPartition& s);

/// The unique μ such that λ/μ is an r-border strip with top t, if any.
std::optional<Partition> border_strip_with_top(const Partition& lambda, int r, std::size_t t);

/// One r-border strip that can be added to a partition.
struct StripAddition {
  Partition outer;
  std::size_t top = 0;
  std::size_t bottom = 0;
  int sign = 1;
};

/// All r-border strips ν/γ with ν ⊇ γ, ordered by increasing bottom row.
std::vector<StripAddition> border_strip_additions(const Partition& gamma, int r);

/// The chain γ^(0) ⊆ … ⊆ γ^(d) of an r-decomposable skew partition.
/// shapes has d+1 entries; tops, bottoms and strip_signs have d entries.
struct BorderStripChain {
  int r = 1;
  std::vector<Partition> shapes;
  std::vector<std::size_t> tops;
  std::vector<std::size_t> bottoms;
  std::vector<int> strip_signs;

  [[nodiscard]] std::size_t length() const noexcept { return tops.size(); }
  [[nodiscard]] int sign() const noexcept;
};

/// Peels strips from the outer shape, each time taking the strip whose top is
/// the top of what remains. Absent iff the skew shape is not r-decomposable.
std::optional<BorderStripChain> r_decompose(const SkewPartition& s, int r);

/// sgn_r: product of strip signs along the chain, 0 if not r-decomposable.
int sgn_r(const SkewPartition& s, int r);

struct SignedPartition {
  Partition shape;
  int sign = 1;

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

/// All λ ⊇ μ with |λ| = |μ| + r·m and λ/μ r-decomposable, paired with
/// sgn_r(λ/μ), in lexicographically decreasing order of λ.
std::vector<SignedPartition> enumerate_supersets(const Partition& mu, int r, int m);

}  // namespace plethax
