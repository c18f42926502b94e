#include "plethax/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plethax {

void Monomial::multiply(int var, long long exponent) {
  if (var < 1) throw std::invalid_argument("variable index must be positive");
  if (exponent == 0) return;
  auto& e = exps_[var];
  e += exponent;
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e == 0) exps_.erase(var);
}

long long Monomial::exponent(int var) const {
  auto it = exps_.find(var);
  return it == exps_.end() ? 0 : it->second;
}

long long Monomial::degree() const {
  long long d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

std::vector<unsigned> Monomial::dense(std::size_t n_vars) const {
  std::vector<unsigned> out(n_vars, 0);
  for (const auto& [v, e] : exps_) {
    if (static_cast<std::size_t>(v) > n_vars) throw std::out_of_range("monomial uses x" + std::to_string(v));
    out[static_cast<std::size_t>(v - 1)] = static_cast<unsigned>(e);
  }
  return out;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : exps_) {
    if (!s.empty()) s += ' ';
    s += "x" + std::to_string(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

Monomial operator*(Monomial a, const Monomial& b) {
  for (const auto& [v, e] : b.exps_) a.multiply(v, e);
  return a;
}

LabelledAbacus::LabelledAbacus(std::vector<int> slots) : slots_(std::move(slots)) {
  trim();
  const auto n = static_cast<std::size_t>(std::count_if(slots_.begin(), slots_.end(), [](int x) { return x != 0; }));
  positions_.assign(n, slots_.size());
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    const int label = slots_[i];
    if (label == 0) continue;
    if (label < 0 || static_cast<std::size_t>(label) > n)
      throw std::invalid_argument("bead label " + std::to_string(label) + " outside 1.." + std::to_string(n));
    auto& pos = positions_[static_cast<std::size_t>(label - 1)];
    if (pos != slots_.size()) throw std::invalid_argument("duplicate bead label " + std::to_string(label));
    pos = i;
  }
  sign_ = permutation_sign(sigma(*this));
}

LabelledAbacus LabelledAbacus::from_pairs(std::span<const std::pair<std::size_t, int>> pairs) {
  std::size_t cap = 0;
  for (const auto& [pos, label] : pairs) cap = std::max(cap, pos + 1);
  std::vector<int> slots(cap, 0);
  for (const auto& [pos, label] : pairs) {
    if (label <= 0) throw std::invalid_argument("bead labels must be positive");
    if (slots[pos] != 0) throw std::invalid_argument("duplicate position " + std::to_string(pos));
    slots[pos] = label;
  }
  return LabelledAbacus(std::move(slots));
}

std::vector<std::size_t> LabelledAbacus::support() const {
  std::vector<std::size_t> out;
  out.reserve(positions_.size());
  for (std::size_t i = slots_.size(); i-- > 0;)
    if (slots_[i] != 0) out.push_back(i);
  return out;
}

void LabelledAbacus::relocate(int bead, std::size_t to) {
  auto& from = positions_[static_cast<std::size_t>(bead - 1)];
  if (to >= slots_.size()) slots_.resize(to + 1, 0);
  slots_[from] = 0;
  slots_[to] = bead;
  from = to;
  trim();
}

void LabelledAbacus::trim() {
  while (!slots_.empty() && slots_.back() == 0) slots_.pop_back();
}

LabelledAbacus canonical_abacus(const Partition& mu, int n_beads) {
  if (n_beads < 1) throw std::invalid_argument("an abacus needs at least one bead");
  const auto n = static_cast<std::size_t>(n_beads);
  if (mu.length() > n)
    throw std::invalid_argument("partition " + mu.to_string() + " has more than " + std::to_string(n) + " parts");
  std::vector<int> slots(static_cast<std::size_t>(mu.part(1)) + n, 0);
  for (std::size_t j = 1; j <= n; ++j) slots[static_cast<std::size_t>(mu.part(j)) + n - j] = static_cast<int>(j);
  return LabelledAbacus(std::move(slots));
}

Permutation sigma(const LabelledAbacus& w) {
  Permutation out;
  out.reserve(static_cast<std::size_t>(w.n_beads()));
  for (std::size_t pos : w.support()) out.push_back(w.at(pos));
  return out;
}

int inversion_sign(const LabelledAbacus& w) { return permutation_sign(sigma(w)); }

Partition shape(const LabelledAbacus& w) {
  const auto supp = w.support();
  const auto n = supp.size();
  std::vector<int> parts(n);
  for (std::size_t t = 1; t <= n; ++t) parts[t - 1] = static_cast<int>(supp[t - 1] + t) - static_cast<int>(n);
  return Partition(std::move(parts));
}

Monomial weight(const LabelledAbacus& w) {
  Monomial m;
  for (std::size_t pos : w.support()) m.multiply(w.at(pos), static_cast<long long>(pos));
  return m;
}

namespace {

void check_bead(const LabelledAbacus& w, int bead) {
  if (bead < 1 || bead > w.n_beads())
    throw std::invalid_argument("no bead labelled " + std::to_string(bead));
}

}  // namespace

std::variant<LabelledAbacus, Collision> r_move(const LabelledAbacus& w, int bead, int r) {
  check_bead(w, bead);
  if (r < 1) throw std::invalid_argument("r must be positive");
  const std::size_t y = w.position(bead);
  const std::size_t target = y + static_cast<std::size_t>(r);
  if (const int blocker = w.at(target); blocker != 0) return Collision{bead, blocker, target};
  const int u = r > 1 ? beads_between(w, y, target) : 0;
  LabelledAbacus out = w;
  out.relocate(bead, target);
  if (u % 2 != 0) out.sign_ = -out.sign_;
  return out;
}

std::optional<LabelledAbacus> left_r_move(const LabelledAbacus& w, int bead, int r) {
  check_bead(w, bead);
  if (r < 1) throw std::invalid_argument("r must be positive");
  const std::size_t y = w.position(bead);
  if (y < static_cast<std::size_t>(r)) return std::nullopt;
  const std::size_t target = y - static_cast<std::size_t>(r);
  if (w.at(target) != 0) return std::nullopt;
  const int u = r > 1 ? beads_between(w, target, y) : 0;
  LabelledAbacus out = w;
  out.relocate(bead, target);
  if (u % 2 != 0) out.sign_ = -out.sign_;
  return out;
}

LabelledAbacus swap_beads(const LabelledAbacus& w, int b, int c) {
  check_bead(w, b);
  check_bead(w, c);
  if (b == c) throw std::invalid_argument("cannot swap a bead with itself");
  LabelledAbacus out = w;
  const std::size_t y = w.position(b);
  const std::size_t z = w.position(c);
  out.slots_[y] = c;
  out.slots_[z] = b;
  out.positions_[static_cast<std::size_t>(b - 1)] = z;
  out.positions_[static_cast<std::size_t>(c - 1)] = y;
  out.sign_ = -w.sign_;
  return out;
}

int beads_between(const LabelledAbacus& w, std::size_t i1, std::size_t i2) {
  if (i1 >= i2) throw std::invalid_argument("beads_between needs i1 < i2");
  int count = 0;
  for (std::size_t i = i1 + 1; i < i2; ++i) count += w.at(i) != 0;
  return count;
}

int tth_rightmost(const LabelledAbacus& w, std::size_t t) {
  if (t < 1 || t > static_cast<std::size_t>(w.n_beads()))
    throw std::invalid_argument("rank " + std::to_string(t) + " out of range");
  std::size_t seen = 0;
  for (std::size_t i = w.capacity(); i-- > 0;)
    if (w.at(i) != 0 && ++seen == t) return w.at(i);
  return 0;
}

std::vector<LabelledAbacus> all_abaci(const Partition& lambda, int n_beads, int max_beads) {
  if (n_beads > max_beads)
    throw BudgetExceeded("all_abaci with " + std::to_string(n_beads) + " beads exceeds the limit of " +
                         std::to_string(max_beads));
  const LabelledAbacus base = canonical_abacus(lambda, n_beads);
  const auto supp = base.support();
  std::vector<int> labels(supp.size());
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<LabelledAbacus> out;
  do {
    std::vector<int> slots(base.capacity(), 0);
    for (std::size_t t = 0; t < supp.size(); ++t) slots[supp[t]] = labels[t];
    out.emplace_back(std::move(slots));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::string to_pairs_string(const LabelledAbacus& w) {
  std::string s;
  for (std::size_t i = 0; i < w.capacity(); ++i) {
    if (w.at(i) == 0) continue;
    if (!s.empty()) s += ',';
    s += std::to_string(i) + ":" + std::to_string(w.at(i));
  }
  return s;
}

std::string to_dotted_string(const LabelledAbacus& w) {
  std::string s;
  for (std::size_t i = 0; i < w.capacity(); ++i) {
    if (i) s += ' ';
    s += w.at(i) == 0 ? std::string(".") : std::to_string(w.at(i));
  }
  return s;
}

}  // namespace plethax
