#include "plethax/process.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace plethax {

namespace {
__extension__ typedef unsigned __int128 Uint128;
}  // namespace

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("composition entries must be nonnegative");
}

void Composition::add(int bead, int delta) {
  auto& e = entries_.at(static_cast<std::size_t>(bead - 1));
  if (e + delta < 0) throw std::invalid_argument("composition entry would become negative");
  e += delta;
}

int Composition::total() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

std::vector<Composition> compositions(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("compositions need n, m >= 0");
  std::vector<Composition> out;
  if (n == 0) {
    if (m == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int remaining) {
    if (k + 1 == cur.size()) {
      cur[k] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[k] = v;
      rec(k + 1, remaining - v);
    }
  };
  rec(0, m);
  return out;
}

std::uint64_t composition_count(int n, int m) {
  if (n <= 0) return n == 0 && m == 0 ? 1 : 0;
  // C(m + n - 1, n - 1) built up as a product of exact partial binomials.
  Uint128 c = 1;
  const auto k = static_cast<unsigned>(n - 1);
  for (unsigned i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(m + static_cast<int>(i)) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

std::string to_string(StepAction a) {
  switch (a) {
    case StepAction::skip_empty: return "skip-empty";
    case StepAction::skip_exhausted: return "skip-exhausted";
    case StepAction::moved: return "moved";
    case StepAction::collided: return "collided";
  }
  return "?";
}

ProcessTrace run_process(const LabelledAbacus& w, const Composition& beta, int r, TraceDetail detail) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (beta.length() != static_cast<std::size_t>(w.n_beads()))
    throw std::invalid_argument("composition length " + std::to_string(beta.length()) + " does not match " +
                                std::to_string(w.n_beads()) + " beads");

  ProcessTrace trace{w, beta, r, {}, {}, Successful{w}};
  const bool full = detail == TraceDetail::full;
  LabelledAbacus v = w;
  Composition alpha = beta;
  auto v_snap = full ? std::make_shared<const LabelledAbacus>(v) : nullptr;
  auto alpha_snap = full ? std::make_shared<const Composition>(alpha) : nullptr;
  auto record = [&](std::size_t i, int bead, StepAction action) {
    if (full) trace.steps.push_back({i, bead, action, v_snap, alpha_snap});
  };

  if (alpha.is_zero()) return trace;

  // Beads still owed a move always sit at or right of i, so the scan ends
  // before running off the occupied part of the runner.
  for (std::size_t i = 0;; ++i) {
    if (i >= v.capacity()) throw std::logic_error("scan passed every bead with moves outstanding");
    const int bead = v.at(i);
    if (bead == 0) {
      record(i, bead, StepAction::skip_empty);
      continue;
    }
    if (alpha[bead] == 0) {
      record(i, bead, StepAction::skip_exhausted);
      continue;
    }
    auto moved = r_move(v, bead, r);
    if (auto* hit = std::get_if<Collision>(&moved)) {
      record(i, bead, StepAction::collided);
      trace.outcome = Unsuccessful{bead, hit->blocker, i, hit->position};
      return trace;
    }
    const int passed = beads_between(v, i, i + static_cast<std::size_t>(r));
    v = std::get<LabelledAbacus>(std::move(moved));
    alpha.add(bead, -1);
    const std::size_t to = i + static_cast<std::size_t>(r);
    std::size_t rank = 1;
    for (std::size_t p = to + 1; p < v.capacity(); ++p) rank += v.at(p) != 0;
    trace.moves.push_back({bead, i, to, rank, passed});
    if (full) {
      v_snap = std::make_shared<const LabelledAbacus>(v);
      alpha_snap = std::make_shared<const Composition>(alpha);
    }
    record(i, bead, StepAction::moved);
    if (alpha.is_zero()) {
      trace.outcome = Successful{v};
      return trace;
    }
  }
}

std::pair<LabelledAbacus, Composition> epsilon(const LabelledAbacus& w, const Composition& beta, int r) {
  const auto trace = run_process(w, beta, r, TraceDetail::moves_only);
  const auto* fail = std::get_if<Unsuccessful>(&trace.outcome);
  if (!fail) throw std::invalid_argument("epsilon is only defined on unsuccessful pairs");
  const std::size_t pos_b = w.position(fail->bead);
  const std::size_t pos_c = w.position(fail->blocker);
  if (pos_c <= pos_b || (pos_c - pos_b) % static_cast<std::size_t>(r) != 0)
    throw std::logic_error("colliding beads are not a positive multiple of r apart");
  const int shift = static_cast<int>((pos_c - pos_b) / static_cast<std::size_t>(r));
  Composition beta_prime = beta;
  beta_prime.add(fail->bead, -shift);
  beta_prime.add(fail->blocker, shift);
  return {swap_beads(w, fail->bead, fail->blocker), std::move(beta_prime)};
}

LabelledAbacus psi(const LabelledAbacus& w, const Composition& beta, int r) {
  auto trace = run_process(w, beta, r, TraceDetail::moves_only);
  auto* done = std::get_if<Successful>(&trace.outcome);
  if (!done) throw std::invalid_argument("psi is only defined on successful pairs");
  return std::move(done->final_abacus);
}

namespace {

std::uint64_t factorial_saturating(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k))
      return std::numeric_limits<std::uint64_t>::max();
    f *= static_cast<std::uint64_t>(k);
  }
  return f;
}

void check_budget(std::uint64_t work, std::uint64_t budget, const std::string& what) {
  if (work > budget)
    throw BudgetExceeded(what + " needs " + std::to_string(work) + " items, budget is " + std::to_string(budget));
}

}  // namespace

std::vector<ClassifiedPair> enumerate_pairs(const Partition& mu, int n_beads, int r, int m, std::uint64_t budget) {
  const std::uint64_t abaci = factorial_saturating(n_beads);
  const std::uint64_t comps = composition_count(n_beads, m);
  const std::uint64_t work = comps != 0 && abaci > std::numeric_limits<std::uint64_t>::max() / comps
                                 ? std::numeric_limits<std::uint64_t>::max()
                                 : abaci * comps;
  check_budget(work, budget, "pair enumeration");
  const auto ws = all_abaci(mu, n_beads, n_beads);
  const auto betas = compositions(n_beads, m);
  std::vector<ClassifiedPair> out;
  out.reserve(ws.size() * betas.size());
  for (const auto& w : ws)
    for (const auto& beta : betas) {
      auto trace = run_process(w, beta, r, TraceDetail::moves_only);
      out.push_back({w, beta, std::move(trace.outcome)});
    }
  return out;
}

std::vector<AbacusSequence> k_set(const Partition& mu, const Partition& lambda, int n_beads, int r, int m,
                                  std::uint64_t budget) {
  if (r < 1 || m < 0) throw std::invalid_argument("k_set needs r >= 1 and m >= 0");
  check_budget(factorial_saturating(n_beads), budget, "k_set");
  std::vector<AbacusSequence> out;
  if (lambda.length() > static_cast<std::size_t>(n_beads) || mu.length() > static_cast<std::size_t>(n_beads))
    return out;
  if (!lambda.contains(mu) || lambda.size() - mu.size() != r * m) return out;
  const auto chain = r_decompose(SkewPartition(lambda, mu), r);
  if (!chain) return out;

  for (const auto& target : all_abaci(lambda, n_beads, n_beads)) {
    AbacusSequence seq(static_cast<std::size_t>(m) + 1, target);
    for (std::size_t j = static_cast<std::size_t>(m); j >= 1; --j) {
      const int mover = tth_rightmost(seq[j], chain->tops[j - 1]);
      auto prev = left_r_move(seq[j], mover, r);
      if (!prev) throw std::logic_error("strip of the decomposition has no matching left move");
      seq[j - 1] = std::move(*prev);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace plethax
