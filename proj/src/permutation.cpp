#include "plethax/permutation.hpp"

#include <cstddef>

namespace plethax {

int permutation_sign(std::span<const int> perm) {
  const std::size_t n = perm.size();
  std::vector<int> tree(n + 1, 0);
  long long inversions = 0;
  // Scan right to left, counting smaller values already seen.
  for (std::size_t k = n; k-- > 0;) {
    for (int v = perm[k] - 1; v > 0; v -= v & -v) inversions += tree[static_cast<std::size_t>(v)];
    for (auto v = static_cast<std::size_t>(perm[k]); v <= n; v += v & (~v + 1)) ++tree[v];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Permutation compose(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
  Permutation out(a.size());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[static_cast<std::size_t>(b[k] - 1)];
  return out;
}

Permutation inverse(std::span<const int> perm) {
  Permutation out(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out[static_cast<std::size_t>(perm[k] - 1)] = static_cast<int>(k + 1);
  return out;
}

std::string cycle_notation(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start + 1)) continue;
    out += '(';
    std::size_t k = start;
    bool first = true;
    while (!seen[k]) {
      seen[k] = true;
      if (!first) out += ' ';
      out += std::to_string(k + 1);
      first = false;
      k = static_cast<std::size_t>(perm[k] - 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace plethax
