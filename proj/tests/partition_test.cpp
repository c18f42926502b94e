#include <gtest/gtest.h>

#include <array>
#include <set>

#include "oracles.hpp"
#include "plethax/partition.hpp"
#include "printers.hpp"

using namespace plethax;

namespace {

const Partition kMu{5, 3, 3, 2, 2, 1};
const Partition kGamma1{5, 4, 4, 4, 3, 1};
const Partition kGamma2{5, 5, 5, 5, 5, 1};
const Partition kLambda{8, 6, 6, 5, 5, 1};

oracle::Parts parts(const Partition& p) { return p.parts(); }

}  // namespace

TEST(Partition, NormalizesTrailingZeros) {
  const std::array<int, 8> seq{5, 3, 3, 2, 2, 1, 0, 0};
  EXPECT_EQ(make_partition(seq), kMu);
  EXPECT_EQ(make_partition(std::span<const int>{}), Partition{});
  EXPECT_TRUE(Partition{}.empty());
  EXPECT_EQ(kMu.size(), 16);
  EXPECT_EQ(kMu.length(), 6u);
  EXPECT_EQ(kMu.part(7), 0);
}

TEST(Partition, RejectsIncreasingPair) {
  const std::array<int, 3> seq{2, 3, 1};
  EXPECT_THROW(make_partition(seq), std::invalid_argument);
  EXPECT_THROW(Partition({1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Partition({-1}), std::invalid_argument);
}

TEST(Partition, PartitionsOfCountsAndOrder) {
  const std::array<std::size_t, 9> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    EXPECT_EQ(ps.size(), counts[static_cast<std::size_t>(n)]);
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
  }
}

TEST(SkewPartition, RejectsNonContainedInner) {
  EXPECT_THROW(SkewPartition(Partition{2, 1}, Partition{1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(SkewPartition(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST(SkewPartition, TopAndBottom) {
  const SkewPartition strip1(kGamma1, kMu);
  EXPECT_EQ(top(strip1), 2u);
  EXPECT_EQ(bottom(strip1), 5u);
  EXPECT_EQ(top(SkewPartition(kGamma2, kGamma1)), 2u);
  EXPECT_EQ(bottom(SkewPartition(kGamma2, kGamma1)), 5u);
  EXPECT_EQ(top(SkewPartition(kLambda, kGamma2)), 1u);
  EXPECT_EQ(bottom(SkewPartition(kLambda, kGamma2)), 3u);

  EXPECT_EQ(top(SkewPartition(kMu, kMu)), 0u);
  EXPECT_EQ(bottom(SkewPartition(kMu, kMu)), 0u);

  EXPECT_EQ(top(SkewPartition(Partition{3, 1}, Partition{1, 1})), 1u);
  EXPECT_EQ(bottom(SkewPartition(Partition{3, 1}, Partition{1, 1})), 1u);
}

TEST(BorderStrip, Predicate) {
  EXPECT_TRUE(is_border_strip(SkewPartition(kGamma1, kMu), 5));
  EXPECT_TRUE(is_border_strip(SkewPartition(Partition{1}, Partition{}), 1));
  EXPECT_FALSE(is_border_strip(SkewPartition(Partition{2, 2}, Partition{}), 4));
  EXPECT_FALSE(is_border_strip(SkewPartition(Partition{2, 2}, Partition{}), 3));
  EXPECT_FALSE(is_border_strip(SkewPartition(Partition{3, 1}, Partition{1}), 3));  // disconnected
  EXPECT_FALSE(is_border_strip(SkewPartition(kMu, kMu), 1));
}

TEST(BorderStrip, WithTop) {
  EXPECT_EQ(border_strip_with_top(kLambda, 5, 1), kGamma2);
  EXPECT_EQ(border_strip_with_top(Partition{1}, 1, 1), Partition{});
  // (2,2)/(1,1) is a vertical domino with top 1.
  EXPECT_EQ(border_strip_with_top(Partition{2, 2}, 2, 1), (Partition{1, 1}));
  EXPECT_FALSE(border_strip_with_top(Partition{2, 1, 1}, 2, 1).has_value());
  EXPECT_FALSE(border_strip_with_top(Partition{2, 2}, 2, 3).has_value());
  EXPECT_FALSE(border_strip_with_top(Partition{2, 2}, 5, 1).has_value());
}

// Every removable strip found by brute force is the unique one with its top.
TEST(BorderStrip, WithTopMatchesBruteForce) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int r = 1; r <= n; ++r)
        for (std::size_t t = 1; t <= lambda.length(); ++t) {
          std::set<oracle::Parts> found;
          for (const auto& mu : oracle::partitions_of(n - r)) {
            if (!oracle::contains(parts(lambda), mu) || !oracle::is_strip(parts(lambda), mu, r)) continue;
            if (oracle::strip_rows(parts(lambda), mu).first == static_cast<int>(t)) found.insert(mu);
          }
          ASSERT_LE(found.size(), 1u);
          const auto got = border_strip_with_top(lambda, r, t);
          if (found.empty()) {
            EXPECT_FALSE(got.has_value()) << lambda.to_string() << " r=" << r << " t=" << t;
          } else {
            ASSERT_TRUE(got.has_value()) << lambda.to_string() << " r=" << r << " t=" << t;
            EXPECT_EQ(got->parts(), *found.begin());
          }
        }
}

TEST(BorderStrip, AdditionsMatchBruteForce) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& gamma : partitions_of(n))
      for (int r = 1; r <= 4; ++r) {
        const auto expected = oracle::murnaghan_nakayama(parts(gamma), r);
        const auto adds = border_strip_additions(gamma, r);
        ASSERT_EQ(adds.size(), expected.size()) << gamma.to_string() << " r=" << r;
        for (const auto& a : adds) {
          ASSERT_TRUE(expected.contains(a.outer.parts())) << gamma.to_string() << " r=" << r << " -> " << a.outer.to_string();
          EXPECT_EQ(a.sign, expected.at(a.outer.parts()));
          const SkewPartition s(a.outer, gamma);
          EXPECT_EQ(a.top, top(s));
          EXPECT_EQ(a.bottom, bottom(s));
        }
      }
}

TEST(RDecompose, FiveStripChain) {
  const auto chain = r_decompose(SkewPartition(kLambda, kMu), 5);
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->shapes, (std::vector<Partition>{kMu, kGamma1, kGamma2, kLambda}));
  EXPECT_EQ(chain->tops, (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_EQ(chain->bottoms, (std::vector<std::size_t>{5, 5, 3}));
  EXPECT_EQ(chain->strip_signs, (std::vector<int>{-1, -1, 1}));
  EXPECT_EQ(sgn_r(SkewPartition(kLambda, kMu), 5), 1);
}

TEST(RDecompose, EdgeCases) {
  const auto empty = r_decompose(SkewPartition(kMu, kMu), 3);
  ASSERT_TRUE(empty.has_value());
  EXPECT_EQ(empty->length(), 0u);
  EXPECT_EQ(sgn_r(SkewPartition(kMu, kMu), 3), 1);

  const auto domino = r_decompose(SkewPartition(Partition{2, 2}, Partition{}), 2);
  ASSERT_TRUE(domino.has_value());
  EXPECT_EQ(domino->shapes, (std::vector<Partition>{Partition{}, Partition{1, 1}, Partition{2, 2}}));
  EXPECT_EQ(domino->tops, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(domino->strip_signs, (std::vector<int>{-1, -1}));

  EXPECT_EQ(sgn_r(SkewPartition(Partition{2, 1, 1}, Partition{}), 2), 0);
  EXPECT_FALSE(r_decompose(SkewPartition(Partition{3}, Partition{}), 2).has_value());
}

// Round trip: the strips of a chain are disjoint and cover the skew diagram.
TEST(RDecompose, StripsTileTheSkewShape) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& mu : partitions_of(k)) {
          if (!lambda.contains(mu)) continue;
          for (int r = 1; r <= 4; ++r) {
            const auto chain = r_decompose(SkewPartition(lambda, mu), r);
            if (!chain) continue;
            std::set<std::pair<int, int>> covered;
            for (std::size_t j = 0; j < chain->length(); ++j) {
              const SkewPartition strip(chain->shapes[j + 1], chain->shapes[j]);
              ASSERT_TRUE(is_border_strip(strip, r));
              EXPECT_GE(top(strip), 1u);
              EXPECT_LE(top(strip), bottom(strip));
              EXPECT_LE(bottom(strip), strip.outer().length());
              if (j > 0) EXPECT_GE(chain->tops[j - 1], chain->tops[j]);
              for (auto c : strip.cells()) EXPECT_TRUE(covered.insert(c).second);
            }
            const auto all = SkewPartition(lambda, mu).cells();
            EXPECT_EQ(covered, (std::set<std::pair<int, int>>(all.begin(), all.end())));
          }
        }
}

// Exhaustive chain search agrees with the greedy decomposition (|λ| ≤ 12).
TEST(RDecompose, UniqueAgainstExhaustiveSearch) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int r = 1; r <= 4; ++r)
        for (int d = 0; d * r <= n && d <= 3; ++d)
          for (const auto& mu : partitions_of(n - d * r)) {
            if (!lambda.contains(mu)) continue;
            const auto brute = oracle::count_chains(parts(mu), parts(lambda), r);
            const int s = sgn_r(SkewPartition(lambda, mu), r);
            ASSERT_LE(brute.chains, 1) << lambda.to_string() << "/" << mu.to_string() << " r=" << r;
            EXPECT_EQ(s, brute.chains ? brute.sign : 0) << lambda.to_string() << "/" << mu.to_string() << " r=" << r;
          }
}

TEST(SgnR, OneIsHorizontalStrip) {
  for (int n = 0; n <= 9; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& mu : partitions_of(k)) {
          if (!lambda.contains(mu)) continue;
          const int s = sgn_r(SkewPartition(lambda, mu), 1);
          EXPECT_TRUE(s == 0 || s == 1);
          EXPECT_EQ(s == 1, oracle::is_horizontal_strip(parts(lambda), parts(mu)));
        }
}

TEST(EnumerateSupersets, SmallCases) {
  EXPECT_EQ(enumerate_supersets(Partition{}, 2, 2),
            (std::vector<SignedPartition>{{Partition{4}, 1}, {Partition{3, 1}, -1}, {Partition{2, 2}, 1}}));
  EXPECT_EQ(enumerate_supersets(Partition{1}, 1, 1),
            (std::vector<SignedPartition>{{Partition{2}, 1}, {Partition{1, 1}, 1}}));
  EXPECT_EQ(enumerate_supersets(kMu, 3, 0), (std::vector<SignedPartition>{{kMu, 1}}));

  const auto fig1 = enumerate_supersets(kMu, 5, 3);
  const auto it = std::find_if(fig1.begin(), fig1.end(), [](const auto& sp) { return sp.shape == kLambda; });
  ASSERT_NE(it, fig1.end());
  EXPECT_EQ(it->sign, 1);
}

TEST(EnumerateSupersets, MatchesExhaustiveChainSearch) {
  for (int k = 0; k <= 4; ++k)
    for (const auto& mu : partitions_of(k))
      for (int r = 1; r <= 3; ++r)
        for (int m = 0; m <= 3 && k + r * m <= 10; ++m) {
          const auto got = enumerate_supersets(mu, r, m);
          const auto expected = oracle::decomposable_supersets(parts(mu), r, m);
          ASSERT_EQ(got.size(), expected.size()) << mu.to_string() << " r=" << r << " m=" << m;
          for (std::size_t i = 0; i < got.size(); ++i) {
            if (i) EXPECT_GT(got[i - 1].shape, got[i].shape);
            ASSERT_TRUE(expected.contains(got[i].shape.parts()));
            EXPECT_EQ(got[i].sign, expected.at(got[i].shape.parts()));
          }
        }
}

TEST(EnumerateSupersets, SingleStripIsMurnaghanNakayama) {
  for (int k = 0; k <= 5; ++k)
    for (const auto& mu : partitions_of(k))
      for (int r = 1; r <= 5; ++r) {
        const auto got = enumerate_supersets(mu, r, 1);
        const auto expected = oracle::murnaghan_nakayama(parts(mu), r);
        ASSERT_EQ(got.size(), expected.size());
        for (const auto& [lambda, s] : got) EXPECT_EQ(s, expected.at(lambda.parts()));
      }
}
