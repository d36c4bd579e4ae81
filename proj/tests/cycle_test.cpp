#include "dyck/cycle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dyck/error.hpp"
#include "oracles.hpp"

namespace dyck {
namespace {

CyclicSequence S(std::string_view text) { return parse_sequence(text); }

std::vector<int> as_ints(const CyclicSequence& seq) {
  std::vector<int> out;
  for (Step a : seq.terms()) out.push_back(value(a));
  return out;
}

CyclicSequence from_mask(std::uint32_t mask, int length) {
  std::vector<Step> terms;
  for (int i = 0; i < length; ++i) {
    terms.push_back((mask >> i) & 1u ? Step::Up : Step::Down);
  }
  return CyclicSequence(std::move(terms));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IndexOutOfRange;
}

TEST(ParseSequence, RoundTripAndErrors) {
  EXPECT_EQ(render_sequence(S("++-")), "++-");
  EXPECT_EQ(S("++-").sum(), 1);
  EXPECT_EQ(S("").length(), 0u);
  EXPECT_EQ(kind_of([] { S("+x-"); }), ErrorKind::InvalidCharacter);
}

TEST(PartialSums, Examples) {
  EXPECT_EQ(partial_sums(S("++-")), (std::vector<int>{0, 1, 2, 1}));
  EXPECT_EQ(partial_sums(S("-++")), (std::vector<int>{0, -1, 0, 1}));
  EXPECT_EQ(partial_sums(S("")), (std::vector<int>{0}));
}

TEST(Precedes, Examples) {
  EXPECT_TRUE(precedes(S("++-"), 3, 1));
  EXPECT_FALSE(precedes(S("++-"), 1, 3));
  EXPECT_TRUE(precedes(S("++-"), 0, 2));
  for (std::size_t p = 0; p <= 3; ++p) EXPECT_FALSE(precedes(S("++-"), p, p));
  EXPECT_EQ(kind_of([] { precedes(S("++-"), 4, 0); }),
            ErrorKind::IndexOutOfRange);
}

TEST(Precedes, StrictTotalOrderOnRandomSequences) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int length = static_cast<int>(gen() % 12);
    const auto seq = from_mask(static_cast<std::uint32_t>(gen()), length);
    const auto L = seq.length();
    for (std::size_t p = 0; p <= L; ++p) {
      for (std::size_t q = 0; q <= L; ++q) {
        if (p == q) continue;
        // Exactly one direction holds.
        ASSERT_NE(precedes(seq, p, q), precedes(seq, q, p));
        for (std::size_t r = 0; r <= L; ++r) {
          if (precedes(seq, p, q) && precedes(seq, q, r)) {
            ASSERT_TRUE(precedes(seq, p, r));
          }
        }
      }
    }
  }
}

TEST(RankOrder, Examples) {
  EXPECT_EQ(rank_order(S("++-")).ranks, (std::vector<std::size_t>{0, 3, 1, 2}));
  EXPECT_EQ(rank_order(S("+")).ranks, (std::vector<std::size_t>{0, 1}));
  // s = [0,-1,0,1]; the tie at s = 0 puts index 2 before index 0.
  EXPECT_EQ(rank_order(S("-++")).ranks, (std::vector<std::size_t>{1, 2, 0, 3}));
}

TEST(RankOrder, PermutationWithExactlyIPredecessors) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int length = static_cast<int>(gen() % 14);
    const auto seq = from_mask(static_cast<std::uint32_t>(gen()), length);
    const auto ranks = rank_order(seq).ranks;
    ASSERT_EQ(ranks.size(), seq.length() + 1);
    std::vector<bool> seen(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      ASSERT_FALSE(seen[ranks[i]]);
      seen[ranks[i]] = true;
      std::size_t below = 0;
      for (std::size_t m = 0; m < ranks.size(); ++m) {
        below += precedes(seq, m, ranks[i]) ? 1 : 0;
      }
      ASSERT_EQ(below, i);
    }
  }
}

TEST(ShiftedPartialSum, Examples) {
  EXPECT_EQ(shifted_partial_sum(S("++-"), 0, 2), 2);
  // Rotation at shift 1 is (+1,+1,-1); index 0 sits two terms into it.
  EXPECT_EQ(oracle::rotated_prefix({-1, 1, 1}, 1, 2), 2);
  EXPECT_EQ(shifted_partial_sum(S("-++"), 1, 0), 2);
  EXPECT_EQ(shifted_partial_sum(S("++-"), 3, 3), 0);
  EXPECT_EQ(kind_of([] { shifted_partial_sum(S("++-"), 0, 4); }),
            ErrorKind::IndexOutOfRange);
}

TEST(ShiftedPartialSum, MatchesDirectRotationUpToL12) {
  for (int length = 1; length <= 12; ++length) {
    for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
      const auto seq = from_mask(mask, length);
      const auto terms = as_ints(seq);
      const auto L = seq.length();
      for (std::size_t j = 0; j <= L; ++j) {
        for (std::size_t p = 0; p <= L; ++p) {
          // Offset of index p inside the rotation starting after index j.
          const std::size_t offset = p >= j ? p - j : p + L - j;
          ASSERT_EQ(shifted_partial_sum(seq, j, p),
                    oracle::rotated_prefix(terms, j % L, offset))
              << render_sequence(seq) << " j=" << j << " p=" << p;
        }
      }
    }
  }
}

TEST(DominatingShifts, Examples) {
  EXPECT_EQ(dominating_shifts(S("++-")), (std::vector<std::size_t>{0}));
  EXPECT_EQ(oracle::dominating_rotations({1, 1, -1, 1}),
            (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(dominating_shifts(S("++-+")), (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(kind_of([] { dominating_shifts(S("-+")); }),
            ErrorKind::NonPositiveSum);
  EXPECT_EQ(kind_of([] { dominating_shifts(S("")); }),
            ErrorKind::NonPositiveSum);
}

TEST(DominatingShifts, CycleLemmaExhaustiveUpToL13) {
  for (int length = 1; length <= 13; ++length) {
    for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
      const auto seq = from_mask(mask, length);
      if (seq.sum() < 1) continue;
      const auto shifts = dominating_shifts(seq);
      ASSERT_EQ(shifts.size(), static_cast<std::size_t>(seq.sum()));
      ASSERT_EQ(shifts, oracle::dominating_rotations(as_ints(seq)));
    }
  }
}

TEST(NonpositiveCountAtRank, Examples) {
  EXPECT_EQ(nonpositive_count_at_rank(S("+"), 0), 1u);
  EXPECT_EQ(nonpositive_count_at_rank(S("++-"), 0), 1u);
  EXPECT_EQ(nonpositive_count_at_rank(S("++-"), 2), 3u);
  EXPECT_EQ(kind_of([] { nonpositive_count_at_rank(S("++"), 0); }),
            ErrorKind::NonUnitSum);
  EXPECT_EQ(kind_of([] { nonpositive_count_at_rank(S("++-"), 4); }),
            ErrorKind::IndexOutOfRange);
}

TEST(NonpositiveCountAtRank, ExhaustiveUpToL13) {
  for (int length = 1; length <= 13; length += 2) {
    for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
      const auto seq = from_mask(mask, length);
      if (seq.sum() != 1) continue;
      for (std::size_t i = 0; i <= seq.length(); ++i) {
        ASSERT_EQ(nonpositive_count_at_rank(seq, i), i + 1);
      }
    }
  }
}

TEST(CanonicalRotation, Examples) {
  auto c = canonical_rotation(S("-++"));
  EXPECT_EQ(c.shift, 1u);
  EXPECT_EQ(render_sequence(c.rotation), "++-");
  c = canonical_rotation(S("+"));
  EXPECT_EQ(c.shift, 0u);
  EXPECT_EQ(render_sequence(c.rotation), "+");
  c = canonical_rotation(S("+-+"));
  EXPECT_EQ(c.shift, 2u);
  EXPECT_EQ(render_sequence(c.rotation), "++-");
  EXPECT_EQ(kind_of([] { canonical_rotation(S("+++")); }),
            ErrorKind::NonUnitSum);
}

TEST(CanonicalRotation, UniqueAndIdempotent) {
  for (int length = 1; length <= 13; length += 2) {
    for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
      const auto seq = from_mask(mask, length);
      if (seq.sum() != 1) continue;
      const auto c = canonical_rotation(seq);
      const auto oracle_shifts = oracle::dominating_rotations(as_ints(seq));
      ASSERT_EQ(oracle_shifts, (std::vector<std::size_t>{c.shift}));
      ASSERT_EQ(canonical_rotation(c.rotation).shift, 0u);
    }
  }
}

}  // namespace
}  // namespace dyck
