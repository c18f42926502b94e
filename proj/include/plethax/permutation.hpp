#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace plethax {

/// A permutation of {1, …, n}; entry k-1 holds the image of k.
using Permutation = std::vector<int>;

/// Thrown when an exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sign by inversion counting with a Fenwick tree.
int permutation_sign(std::span<const int> perm);

/// (a ∘ b)(k) = a(b(k)).
Permutation compose(std::span<const int> a, std::span<const int> b);
Permutation inverse(std::span<const int> perm);

/// Cycle notation with fixed points omitted, e.g. "(1 3)(2 6 4 5)"; "()" for
/// the identity. Each cycle starts at its least element.
std::string cycle_notation(std::span<const int> perm);

}  // namespace plethax
