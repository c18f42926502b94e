#include "plethax/partition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace plethax {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition is not weakly decreasing: " + std::to_string(parts_[i]) +
                                  " < " + std::to_string(parts_[i + 1]));
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (std::size_t i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::vector<int> Partition::padded(std::size_t n) const {
  std::vector<int> out(n, 0);
  std::copy_n(parts_.begin(), std::min(n, parts_.size()), out.begin());
  return out;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition make_partition(std::span<const int> seq) { return Partition(std::vector<int>(seq.begin(), seq.end())); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

SkewPartition::SkewPartition(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("inner partition " + inner_.to_string() + " is not contained in " + outer_.to_string());
}

std::vector<std::pair<int, int>> SkewPartition::cells() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.emplace_back(static_cast<int>(i), j);
  return out;
}

std::size_t top(const SkewPartition& s) {
  for (std::size_t i = 1; i <= s.outer().length(); ++i)
    if (s.outer().part(i) != s.inner().part(i)) return i;
  return 0;
}

std::size_t bottom(const SkewPartition& s) {
  for (std::size_t i = s.outer().length(); i >= 1; --i)
    if (s.outer().part(i) != s.inner().part(i)) return i;
  return 0;
}

bool is_border_strip(const SkewPartition& s, int r) {
  if (r < 1 || s.size() != r) return false;
  const auto cells = s.cells();
  const std::set<std::pair<int, int>> cell_set(cells.begin(), cells.end());
  for (auto [i, j] : cells)
    if (cell_set.contains({i + 1, j + 1})) return false;

  std::set<std::pair<int, int>> seen{cells.front()};
  std::vector<std::pair<int, int>> stack{cells.front()};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
      if (cell_set.contains(nb) && seen.insert(nb).second) stack.push_back(nb);
  }
  return seen.size() == cells.size();
}

int strip_sign(const SkewPartition& s) { return (bottom(s) - top(s)) % 2 == 0 ? 1 : -1; }

std::optional<Partition> border_strip_with_top(const Partition& lambda, int r, std::size_t t) {
  if (r < 1 || t < 1 || t > lambda.length()) return std::nullopt;
  // Rows t..b-1 keep only the cells above row i+1 minus one; row b gives up
  // whatever is left, as long as it stays at or right of λ_{b+1}.
  int taken = 0;
  for (std::size_t b = t; b <= lambda.length(); ++b) {
    const int need = r - taken;
    if (need < 1) return std::nullopt;
    const int avail = lambda.part(b) - lambda.part(b + 1);
    if (need <= avail) {
      std::vector<int> mu = lambda.parts();
      for (std::size_t i = t; i < b; ++i) mu[i - 1] = lambda.part(i + 1) - 1;
      mu[b - 1] = lambda.part(b) - need;
      return Partition(std::move(mu));
    }
    taken += avail + 1;
  }
  return std::nullopt;
}

std::vector<StripAddition> border_strip_additions(const Partition& gamma, int r) {
  std::vector<StripAddition> out;
  if (r < 1) return out;
  const std::size_t max_bottom = gamma.length() + static_cast<std::size_t>(r);
  for (std::size_t b = 1; b <= max_bottom; ++b) {
    int added = 0;
    for (std::size_t t = b; t >= 1; --t) {
      const int need = r - added;
      if (need < 1) break;
      const int cap = t > 1 ? gamma.part(t - 1) - gamma.part(t) : std::numeric_limits<int>::max();
      if (need <= cap) {
        std::vector<int> nu = gamma.padded(std::max(b, gamma.length()));
        for (std::size_t i = t + 1; i <= b; ++i) nu[i - 1] = gamma.part(i - 1) + 1;
        nu[t - 1] = gamma.part(t) + need;
        out.push_back({Partition(std::move(nu)), t, b, (b - t) % 2 == 0 ? 1 : -1});
        break;
      }
      if (t == 1) break;
      added += cap + 1;
    }
  }
  return out;
}

int BorderStripChain::sign() const noexcept {
  int s = 1;
  for (int x : strip_signs) s *= x;
  return s;
}

std::optional<BorderStripChain> r_decompose(const SkewPartition& s, int r) {
  if (r < 1 || s.size() % r != 0) return std::nullopt;
  // Built in removal order (outermost strip first), reversed at the end.
  std::vector<Partition> shapes{s.outer()};
  std::vector<std::size_t> tops;
  std::vector<std::size_t> bottoms;
  Partition current = s.outer();
  while (current != s.inner()) {
    const std::size_t t = top(SkewPartition(current, s.inner()));
    auto next = border_strip_with_top(current, r, t);
    if (!next || !next->contains(s.inner())) return std::nullopt;
    const SkewPartition strip(current, *next);
    tops.push_back(t);
    bottoms.push_back(bottom(strip));
    current = std::move(*next);
    shapes.push_back(current);
  }
  BorderStripChain chain;
  chain.r = r;
  chain.shapes.assign(shapes.rbegin(), shapes.rend());
  chain.tops.assign(tops.rbegin(), tops.rend());
  chain.bottoms.assign(bottoms.rbegin(), bottoms.rend());
  for (std::size_t j = 0; j < chain.tops.size(); ++j)
    chain.strip_signs.push_back((chain.bottoms[j] - chain.tops[j]) % 2 == 0 ? 1 : -1);
  return chain;
}

int sgn_r(const SkewPartition& s, int r) {
  const auto chain = r_decompose(s, r);
  return chain ? chain->sign() : 0;
}

namespace {

void extend_supersets(const Partition& gamma, int r, int remaining, std::size_t max_top, int sign,
                      std::vector<SignedPartition>& out) {
  if (remaining == 0) {
    out.push_back({gamma, sign});
    return;
  }
  for (auto& add : border_strip_additions(gamma, r)) {
    if (add.top > max_top) continue;
    extend_supersets(add.outer, r, remaining - 1, add.top, sign * add.sign, out);
  }
}

}  // namespace

std::vector<SignedPartition> enumerate_supersets(const Partition& mu, int r, int m) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  std::vector<SignedPartition> out;
  // Tops are non-increasing along the chain from μ upward, so each strip added
  // may not start below the previous one.
  extend_supersets(mu, r, m, std::numeric_limits<std::size_t>::max(), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.shape > b.shape; });
#ifndef NDEBUG
  for (std::size_t i = 1; i < out.size(); ++i) assert(out[i - 1].shape != out[i].shape);
#endif
  return out;
}

}  // namespace plethax
