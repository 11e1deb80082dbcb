#include <gtest/gtest.h>

#include "tspread/enumeration.hpp"

using namespace tspread;

TEST(CardM, Values) {
  EXPECT_EQ(card_M(9, 2, 3), 21u);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(card_M(n, 1, 2), static_cast<Count>(n));
  EXPECT_EQ(card_M(5, 0, 2), 1u);
  EXPECT_EQ(card_M(5, 3, 3), 0u);  // needs n >= 7
}

TEST(EnumerateM, SmallListings) {
  EXPECT_EQ(enumerate_M(5, 2, 3), (std::vector<Monomial>{{1, 4}, {1, 5}, {2, 5}}));
  auto one = enumerate_M(5, 0, 2);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one.front().is_one());
  EXPECT_TRUE(enumerate_M(4, 2, 4).empty());
}

TEST(CardA, Values) {
  EXPECT_EQ(card_A(5, 2), 6u);
  EXPECT_EQ(card_A(6, 4), 84u);
  EXPECT_EQ(card_A(3, 4), 20u);
  EXPECT_EQ(card_A(0, 5), 1u);
}

TEST(EnumerateA, Listings) {
  EXPECT_EQ(enumerate_A(5, 2, Ambient{9, 3}),
            (std::vector<Monomial>{{1, 9}, {2, 9}, {3, 9}, {4, 9}, {5, 9}, {6, 9}}));
  auto a = enumerate_A(3, 4, Ambient{13, 2});
  ASSERT_EQ(a.size(), 20u);
  EXPECT_EQ(a.front(), (Monomial{1, 3, 5, 10}));
  EXPECT_EQ(a.back(), (Monomial{4, 6, 8, 10}));
  EXPECT_EQ(enumerate_A(4, 1, Ambient{9, 3}), (std::vector<Monomial>{{5}}));
  EXPECT_THROW(enumerate_A(6, 2, Ambient{9, 3}), DomainError);
}

TEST(MaxMinOfA, Tight) {
  const Ambient amb{25, 3};
  EXPECT_EQ(max_of_A(3, 7, amb), (Monomial{1, 4, 7, 10, 13, 16, 22}));
  EXPECT_EQ(min_of_A(3, 7, amb), (Monomial{4, 7, 10, 13, 16, 19, 22}));
}

TEST(SuccessorInA, Examples) {
  EXPECT_EQ(successor_in_A(Monomial{2, 6, 11, 14, 17}, 4, 5, Ambient{17, 3}), (Monomial{2, 7, 10, 13, 17}));
  EXPECT_EQ(successor_in_A(Monomial{1, 9}, 5, 2, Ambient{9, 3}), (Monomial{2, 9}));
  EXPECT_FALSE(successor_in_A(min_of_A(4, 5, Ambient{17, 3}), 4, 5, Ambient{17, 3}).has_value());
  EXPECT_THROW(successor_in_A(Monomial{1, 8}, 5, 2, Ambient{9, 3}), DomainError);
}

TEST(SuccessorInA, WalksTheWholeSet) {
  const Ambient amb{16, 3};
  auto all = enumerate_A(6, 4, amb);
  std::optional<Monomial> cur = max_of_A(6, 4, amb);
  for (std::size_t i = 0; i < all.size(); ++i) {
    ASSERT_TRUE(cur.has_value());
    EXPECT_EQ(*cur, all[i]);
    cur = successor_in_A(*cur, 6, 4, amb);
  }
  EXPECT_FALSE(cur.has_value());
}

TEST(RankInA, WorkedValue) {
  const Ambient amb{16, 3};
  EXPECT_EQ(rank_in_A(Monomial{4, 9, 13, 16}, 6, 4, amb), 73u);
  EXPECT_EQ(rank_in_A(max_of_A(6, 4, amb), 6, 4, amb), 1u);
  EXPECT_EQ(rank_in_A(min_of_A(6, 4, amb), 6, 4, amb), 84u);
  EXPECT_THROW(rank_in_A(Monomial{4, 9, 13, 15}, 6, 4, amb), DomainError);
}

TEST(RankInA, TermsOfTheWorkedValue) {
  // 28 + 21 + 15 (first index), 4 + 3 (second), 1 (third), plus the final 1.
  auto terms = rank_terms(Monomial{4, 9, 13, 16}, 6, 4, Ambient{16, 3});
  Count sum = 0;
  std::vector<Count> values;
  for (const auto& t : terms) {
    values.push_back(t.value());
    sum += t.value();
  }
  EXPECT_EQ(sum, 73u);
  EXPECT_EQ(values, (std::vector<Count>{28, 21, 15, 4, 3, 1, 1}));
}

TEST(UnrankInA, InvertsRank) {
  const Ambient amb{16, 3};
  for (Count r = 1; r <= 84; ++r) EXPECT_EQ(rank_in_A(unrank_in_A(r, 6, 4, amb), 6, 4, amb), r);
  EXPECT_THROW(unrank_in_A(0, 6, 4, amb), DomainError);
  EXPECT_THROW(unrank_in_A(85, 6, 4, amb), DomainError);
}

TEST(Segment, Cardinalities) {
  const Ambient amb{16, 3};
  auto seg = SlexSegment::make(6, 4, amb, Monomial{1, 4, 7, 16}, Monomial{4, 9, 13, 16});
  EXPECT_EQ(segment_card(seg), 73u);
  EXPECT_EQ(left_segment_card(seg), 72u);
  EXPECT_EQ(segment_members(seg).size(), 73u);
  auto single = SlexSegment::make(6, 4, amb, Monomial{4, 9, 13, 16}, Monomial{4, 9, 13, 16});
  EXPECT_EQ(segment_card(single), 1u);
  auto small = SlexSegment::make(5, 2, Ambient{13, 2}, Monomial{1, 8}, Monomial{3, 8});
  EXPECT_EQ(segment_card(small), 3u);
  EXPECT_THROW(SlexSegment::make(6, 4, amb, Monomial{4, 9, 13, 16}, Monomial{1, 4, 7, 16}), DomainError);
}

TEST(TakeSmallestSegment, Examples) {
  const Ambient amb{25, 3};
  auto s = take_smallest_segment(3, 7, amb, 2);
  EXPECT_EQ(s.first, (Monomial{3, 7, 10, 13, 16, 19, 22}));
  EXPECT_EQ(s.last, (Monomial{4, 7, 10, 13, 16, 19, 22}));
  auto one = take_smallest_segment(3, 7, amb, 1);
  EXPECT_EQ(one.first, one.last);
  EXPECT_THROW(take_smallest_segment(3, 7, amb, 0), DomainError);
  EXPECT_THROW(take_smallest_segment(3, 7, amb, card_A(3, 7) + 1), DomainError);
}

TEST(TakeSmallestSegment, ThreeBelowAGivenTop) {
  // The three elements of A^3(4,5) directly above x_3x_6x_11x_14x_17.
  const Ambient amb{25, 3};
  Monomial v{3, 6, 11, 14, 17};
  Count n = rank_in_A(v, 4, 5, amb);
  EXPECT_EQ(n, 61u);
  auto members = segment_members(SlexSegment::make(4, 5, amb, unrank_in_A(n - 2, 4, 5, amb), v));
  EXPECT_EQ(members, (std::vector<Monomial>{{3, 6, 10, 13, 17}, {3, 6, 10, 14, 17}, {3, 6, 11, 14, 17}}));
}

TEST(DecomposeByMin, Values) {
  auto five = decompose_by_min(5, 2);
  ASSERT_EQ(five.size(), 6u);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(five[i], (std::pair<int, Count>{i + 1, 1}));
  auto six = decompose_by_min(6, 4);
  EXPECT_EQ(six.front().second, 28u);
  Count sum = 0;
  for (const auto& [i, b] : six) sum += b;
  EXPECT_EQ(sum, card_A(6, 4));
  EXPECT_THROW(decompose_by_min(6, 1), DomainError);
}

TEST(DecomposeByMin, MatchesEnumeration) {
  const Ambient amb{16, 3};
  auto parts = decompose_by_min(6, 4);
  std::map<int, Count> counted;
  for (const auto& u : enumerate_A(6, 4, amb)) ++counted[u.min()];
  for (const auto& [i, b] : parts) EXPECT_EQ(counted[i], b) << "min " << i;
}

TEST(CellLimit, EnumerationFailsFastBeyondTheCap) {
  // 2^62 > any cell limit; enumeration must refuse rather than allocate.
  EXPECT_THROW(enumerate_A(31, 32, Ambient{200, 1}), ResourceLimitError);
}
