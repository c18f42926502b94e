#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>

#include "oracles.hpp"
#include "plethax/process.hpp"
#include "printers.hpp"

using namespace plethax;

namespace {

LabelledAbacus six_bead_abacus() {
  const std::array<std::pair<std::size_t, int>, 6> p{{{1, 4}, {3, 2}, {4, 5}, {6, 1}, {7, 6}, {10, 3}}};
  return LabelledAbacus::from_pairs(p);
}

Monomial weight_r(const LabelledAbacus& w, const Composition& beta, int r) {
  Monomial m = weight(w);
  for (int b = 1; b <= static_cast<int>(beta.length()); ++b) m.multiply(b, static_cast<long long>(r) * beta[b]);
  return m;
}

}  // namespace

TEST(Composition, BasicsAndEnumeration) {
  Composition c{0, 2, 1};
  EXPECT_EQ(c[2], 2);
  EXPECT_EQ(c.total(), 3);
  EXPECT_EQ(c.to_string(), "(0,2,1)");
  c.add(2, -2);
  EXPECT_EQ(c[2], 0);
  EXPECT_THROW(c.add(1, -1), std::invalid_argument);
  EXPECT_THROW(Composition({1, -1}), std::invalid_argument);

  const auto all = compositions(3, 2);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), (Composition{2, 0, 0}));
  EXPECT_EQ(all.back(), (Composition{0, 0, 2}));
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
  EXPECT_EQ(composition_count(3, 2), 6u);
  EXPECT_EQ(composition_count(6, 3), 56u);
  EXPECT_EQ(compositions(6, 3).size(), 56u);
  EXPECT_EQ(compositions(2, 0).size(), 1u);
}

TEST(Process, SixBeadTraceFirstComposition) {
  const auto w = six_bead_abacus();
  const Composition beta{0, 2, 0, 0, 1, 0};
  const auto trace = run_process(w, beta, 5);
  ASSERT_TRUE(trace.successful());
  const auto& fin = std::get<Successful>(trace.outcome).final_abacus;
  EXPECT_EQ(to_pairs_string(fin), "1:4,6:1,7:6,9:5,10:3,13:2");
  ASSERT_EQ(trace.moves.size(), 3u);
  EXPECT_EQ(trace.moves[0].bead, 2);
  EXPECT_EQ(trace.moves[0].from, 3u);
  EXPECT_EQ(trace.moves[0].to, 8u);
  EXPECT_EQ(trace.moves[1].bead, 5);
  EXPECT_EQ(trace.moves[1].from, 4u);
  EXPECT_EQ(trace.moves[2].bead, 2);
  EXPECT_EQ(trace.moves[2].from, 8u);
  EXPECT_EQ(trace.moves[2].to, 13u);
  EXPECT_EQ(trace.moves[0].top, 2u);
  EXPECT_EQ(trace.moves[1].top, 2u);
  EXPECT_EQ(trace.moves[2].top, 1u);

  std::vector<Partition> shapes{shape(w)};
  for (const auto& s : trace.steps)
    if (s.action == StepAction::moved) shapes.push_back(shape(*s.abacus));
  EXPECT_EQ(shapes, (std::vector<Partition>{Partition{5, 3, 3, 2, 2, 1}, Partition{5, 4, 4, 4, 3, 1},
                                            Partition{5, 5, 5, 5, 5, 1}, Partition{8, 6, 6, 5, 5, 1}}));
  EXPECT_EQ(psi(w, beta, 5), fin);
  EXPECT_EQ(sign(fin), sgn_r(SkewPartition(shape(fin), shape(w)), 5) * sign(w));
  EXPECT_EQ(weight(fin), weight_r(w, beta, 5));
  EXPECT_THROW(epsilon(w, beta, 5), std::invalid_argument);
}

TEST(Process, SixBeadTraceSecondComposition) {
  const auto trace = run_process(six_bead_abacus(), Composition{0, 2, 1, 0, 0, 0}, 5);
  ASSERT_TRUE(trace.successful());
  EXPECT_EQ(to_pairs_string(std::get<Successful>(trace.outcome).final_abacus), "1:4,4:5,6:1,7:6,13:2,15:3");
  ASSERT_EQ(trace.moves.size(), 3u);
  EXPECT_EQ(trace.moves[0].bead, 2);
  EXPECT_EQ(trace.moves[1].bead, 2);
  EXPECT_EQ(trace.moves[2].bead, 3);
}

TEST(Process, SixBeadTraceUnsuccessful) {
  const auto w = six_bead_abacus();
  const Composition beta{0, 2, 0, 1, 0, 0};
  const auto trace = run_process(w, beta, 5);
  ASSERT_FALSE(trace.successful());
  const auto& u = std::get<Unsuccessful>(trace.outcome);
  EXPECT_EQ(u.bead, 4);
  EXPECT_EQ(u.blocker, 1);
  EXPECT_EQ(u.scan_position, 1u);
  EXPECT_EQ(u.collision_position, 6u);
  EXPECT_TRUE(trace.moves.empty());

  const auto [w2, beta2] = epsilon(w, beta, 5);
  EXPECT_EQ(to_pairs_string(w2), "1:1,3:2,4:5,6:4,7:6,10:3");
  EXPECT_EQ(beta2, (Composition{1, 2, 0, 0, 0, 0}));
  EXPECT_EQ(sign(w2), -sign(w));
  EXPECT_EQ(weight_r(w2, beta2, 5), weight_r(w, beta, 5));
  const auto [w3, beta3] = epsilon(w2, beta2, 5);
  EXPECT_EQ(w3, w);
  EXPECT_EQ(beta3, beta);
  EXPECT_THROW(psi(w, beta, 5), std::invalid_argument);
}

TEST(Process, SmallEpsilon) {
  const std::array<std::pair<std::size_t, int>, 2> p{{{0, 2}, {1, 1}}};
  const auto w = LabelledAbacus::from_pairs(p);
  const auto [w2, beta2] = epsilon(w, Composition{0, 1}, 1);
  EXPECT_EQ(to_pairs_string(w2), "0:1,1:2");
  EXPECT_EQ(beta2, (Composition{1, 0}));
}

TEST(Process, RejectsMismatchedInputs) {
  EXPECT_THROW(run_process(six_bead_abacus(), Composition{1, 0}, 5), std::invalid_argument);
  EXPECT_THROW(run_process(six_bead_abacus(), Composition{0, 0, 0, 0, 0, 1}, 0), std::invalid_argument);
}

TEST(Process, ZeroCompositionIsImmediatelySuccessful) {
  const auto w = six_bead_abacus();
  const auto trace = run_process(w, Composition(std::vector<int>(6, 0)), 3);
  ASSERT_TRUE(trace.successful());
  EXPECT_EQ(std::get<Successful>(trace.outcome).final_abacus, w);
  EXPECT_TRUE(trace.moves.empty());
}

// Trace invariants over every pair for small parameters: sources strictly
// increase, tops weakly decrease and equal the top of each added strip,
// determinism, and ε is a sign-reversing, weight-preserving involution.
TEST(Process, InvariantsOverAllPairs) {
  for (int n = 1; n <= 4; ++n)
    for (int size = 0; size <= 3; ++size)
      for (const auto& mu : partitions_of(size)) {
        if (mu.length() > static_cast<std::size_t>(n)) continue;
        for (int r = 1; r <= 3; ++r)
          for (int m = 1; m <= 3; ++m) {
            const auto pairs = enumerate_pairs(mu, n, r, m);
            std::uint64_t fact = 1;
            for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
            ASSERT_EQ(pairs.size(), fact * composition_count(n, m));
            for (const auto& pr : pairs) {
              const auto trace = run_process(pr.abacus, pr.beta, r);
              ASSERT_EQ(trace.successful(), pr.successful());
              Partition prev = shape(pr.abacus);
              for (std::size_t j = 0; j < trace.moves.size(); ++j) {
                const auto& mv = trace.moves[j];
                EXPECT_EQ(mv.to, mv.from + static_cast<std::size_t>(r));
                if (j > 0) {
                  EXPECT_GT(mv.from, trace.moves[j - 1].from);
                  EXPECT_LE(mv.top, trace.moves[j - 1].top);
                }
              }
              for (const auto& s : trace.steps) {
                if (s.action != StepAction::moved) continue;
                const Partition cur = shape(*s.abacus);
                const SkewPartition strip(cur, prev);
                EXPECT_TRUE(is_border_strip(strip, r));
                prev = cur;
              }
              if (pr.successful()) {
                const auto& fin = std::get<Successful>(pr.outcome).final_abacus;
                EXPECT_EQ(trace.moves.size(), static_cast<std::size_t>(m));
                EXPECT_EQ(sign(fin), sgn_r(SkewPartition(shape(fin), mu), r) * sign(pr.abacus));
                EXPECT_EQ(weight(fin), weight_r(pr.abacus, pr.beta, r));
              } else {
                const auto [w2, b2] = epsilon(pr.abacus, pr.beta, r);
                EXPECT_EQ(shape(w2), mu);
                EXPECT_EQ(b2.total(), m);
                EXPECT_EQ(sign(w2), -sign(pr.abacus));
                EXPECT_EQ(weight_r(w2, b2, r), weight_r(pr.abacus, pr.beta, r));
                EXPECT_FALSE(run_process(w2, b2, r).successful());
                const auto [w3, b3] = epsilon(w2, b2, r);
                EXPECT_EQ(w3, pr.abacus);
                EXPECT_EQ(b3, pr.beta);
              }
            }
          }
      }
}

TEST(Process, TopsMatchStripTops) {
  const auto w = six_bead_abacus();
  for (const auto& beta : compositions(6, 3)) {
    const auto trace = run_process(w, beta, 5);
    Partition prev = shape(w);
    std::size_t k = 0;
    for (const auto& s : trace.steps) {
      if (s.action != StepAction::moved) continue;
      const Partition cur = shape(*s.abacus);
      EXPECT_EQ(trace.moves[k].top, top(SkewPartition(cur, prev)));
      EXPECT_EQ(trace.moves[k].beads_passed,
                static_cast<int>(bottom(SkewPartition(cur, prev)) - top(SkewPartition(cur, prev))));
      prev = cur;
      ++k;
    }
    EXPECT_EQ(k, trace.moves.size());
  }
}

TEST(Process, Deterministic) {
  const auto w = six_bead_abacus();
  for (const auto& beta : compositions(6, 2)) {
    const auto a = run_process(w, beta, 2);
    const auto b = run_process(w, beta, 2);
    EXPECT_EQ(a.successful(), b.successful());
    EXPECT_EQ(a.steps.size(), b.steps.size());
    if (a.successful())
      EXPECT_EQ(std::get<Successful>(a.outcome).final_abacus, std::get<Successful>(b.outcome).final_abacus);
    const auto c = run_process(w, beta, 2, TraceDetail::moves_only);
    EXPECT_EQ(c.successful(), a.successful());
    EXPECT_EQ(c.moves.size(), a.moves.size());
  }
}

TEST(Process, EnumeratePairsBudget) {
  EXPECT_THROW(enumerate_pairs(Partition{}, 6, 2, 3, 1000), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_pairs(Partition{}, 3, 2, 2, 36));
}

// Reverse-built K-sets agree with an independent forward search, and have
// size N! exactly when λ/μ is r-decomposable.
TEST(KSet, MatchesForwardSearch) {
  for (int n = 1; n <= 4; ++n)
    for (int size = 0; size <= 3; ++size)
      for (const auto& mu : partitions_of(size)) {
        if (mu.length() > static_cast<std::size_t>(n)) continue;
        for (int r = 1; r <= 3; ++r)
          for (int m = 1; m <= 2; ++m)
            for (const auto& lambda : partitions_of(size + r * m)) {
              if (lambda.length() > static_cast<std::size_t>(n) || !lambda.contains(mu)) continue;
              const auto got = k_set(mu, lambda, n, r, m);
              const auto expected = oracle::k_set_forward(mu.parts(), lambda.parts(), n, r, m);
              std::set<std::vector<std::vector<int>>> a;
              for (const auto& seq : got) {
                std::vector<std::vector<int>> s;
                for (const auto& w : seq) s.push_back(w.slots());
                a.insert(s);
              }
              std::set<std::vector<std::vector<int>>> b(expected.begin(), expected.end());
              EXPECT_EQ(a, b) << mu.to_string() << " -> " << lambda.to_string() << " N=" << n << " r=" << r;
              std::size_t fact = 1;
              for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
              const bool decomposable = r_decompose(SkewPartition(lambda, mu), r).has_value();
              EXPECT_EQ(got.size(), decomposable ? fact : 0u);
              for (const auto& seq : got)
                EXPECT_EQ(sign(seq.back()), sgn_r(SkewPartition(lambda, mu), r) * sign(seq.front()));
            }
      }
}
