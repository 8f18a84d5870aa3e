#include <gtest/gtest.h>

#include <algorithm>

#include "kch/braid.hpp"
#include "kch/error.hpp"
#include "support.hpp"

using namespace kch;

TEST(Braid, Parse) {
  BraidWord t = BraidWord::parse("1 1 1", 2);
  EXPECT_EQ(t.strands, 2);
  EXPECT_EQ(t.letters, (std::vector<int>{1, 1, 1}));

  BraidWord e = BraidWord::parse("", 1);
  EXPECT_EQ(e.strands, 1);
  EXPECT_TRUE(e.letters.empty());

  BraidWord f = BraidWord::parse("1 -2 1 -2", 3);
  EXPECT_EQ(f.letters, (std::vector<int>{1, -2, 1, -2}));
  EXPECT_EQ(BraidWord::parse("1 -2 1 -2").strands, 3);
  EXPECT_EQ(BraidWord::parse("  ").strands, 1);
}

TEST(Braid, ParseErrorsCarryPositions) {
  try {
    BraidWord::parse("1 0 1");
    FAIL() << "zero letter accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    BraidWord::parse("1 1 2", 2);
    FAIL() << "letter too large accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(BraidWord::parse("1 x"), ParseError);
  EXPECT_THROW(BraidWord(2, {3}), StructuralError);
}

TEST(Braid, TrefoilClosure) {
  ClosureInfo c = closure(BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(c.component_count(), 1u);
  EXPECT_EQ(c.wr_total, 3);
  EXPECT_EQ(c.self_wr, std::vector<int>{3});
  EXPECT_EQ(c.d, (std::vector<int>{0, 1}));
  EXPECT_EQ(c.leftmost, std::vector<int>{0});
}

TEST(Braid, HopfClosure) {
  ClosureInfo c = closure(BraidWord(2, {1, 1}));
  EXPECT_EQ(c.component_count(), 2u);
  EXPECT_EQ(c.wr_total, 2);
  EXPECT_EQ(c.self_wr, (std::vector<int>{0, 0}));
  EXPECT_EQ(c.mixed_wr, 2);
  EXPECT_EQ(c.d, (std::vector<int>{0, 0}));
}

TEST(Braid, TrivialClosure) {
  ClosureInfo c = closure(BraidWord(1, {}));
  EXPECT_EQ(c.component_count(), 1u);
  EXPECT_EQ(c.wr_total, 0);
  EXPECT_EQ(c.d, std::vector<int>{0});
}

TEST(Braid, RecurrenceForD) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord b = test::random_word(rng, 1 + trial % 5, 0, 8);
    ClosureInfo c = closure(b);
    int total = 0;
    for (const auto& comp : c.components) total += static_cast<int>(comp.size());
    EXPECT_EQ(total, b.strands);
    int self = 0;
    for (int w : c.self_wr) self += w;
    EXPECT_EQ(c.wr_total, self + c.mixed_wr);
    for (int i = 0; i < b.strands; ++i) {
      const int comp = c.component_of[i];
      const int size = static_cast<int>(c.components[comp].size());
      EXPECT_GE(c.d[i], 0);
      EXPECT_LT(c.d[i], size);
      if (c.d[i] > 0) EXPECT_EQ(c.d[c.perm[i]], c.d[i] - 1);
      if (i == c.leftmost[comp]) {
        EXPECT_EQ(c.d[i], 0);
        if (size > 1) EXPECT_EQ(c.d[c.perm[i]], size - 1);
      }
    }
    for (std::size_t k = 0; k + 1 < c.leftmost.size(); ++k) EXPECT_LT(c.leftmost[k], c.leftmost[k + 1]);
  }
}

TEST(Braid, MarkovMovesAsWords) {
  BraidWord t(2, {1, 1, 1});
  EXPECT_EQ(conjugate(t, BraidWord(2, {1})).letters, (std::vector<int>{1, 1, 1, 1, -1}));
  BraidWord s = stabilize(t, 1);
  EXPECT_EQ(s.strands, 3);
  EXPECT_EQ(s.letters, (std::vector<int>{1, 1, 1, 2}));
  BraidWord u = stabilize(BraidWord(1, {}), -1);
  EXPECT_EQ(u.strands, 2);
  EXPECT_EQ(u.letters, std::vector<int>{-1});
  EXPECT_THROW(stabilize(t, 0), StructuralError);
}

TEST(Braid, ConjugationPreservesComponentData) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 3;
    BraidWord b = test::random_word(rng, n, 0, 6);
    BraidWord w = test::random_word(rng, n, 1, 3);
    ClosureInfo c1 = closure(b), c2 = closure(conjugate(b, w));
    ASSERT_EQ(c1.component_count(), c2.component_count());
    auto sizes = [](const ClosureInfo& c) {
      std::vector<std::size_t> s;
      for (const auto& comp : c.components) s.push_back(comp.size());
      std::sort(s.begin(), s.end());
      return s;
    };
    auto self = [](ClosureInfo c) {
      std::sort(c.self_wr.begin(), c.self_wr.end());
      return c.self_wr;
    };
    EXPECT_EQ(sizes(c1), sizes(c2));
    EXPECT_EQ(self(c1), self(c2));
    EXPECT_EQ(c1.wr_total, c2.wr_total);
  }
}

TEST(Braid, InverseAndConcat) {
  BraidWord b(3, {1, -2, 2});
  EXPECT_EQ(inverse(b).letters, (std::vector<int>{-2, 2, -1}));
  BraidWord c = concat(BraidWord(2, {1}), BraidWord(3, {2}));
  EXPECT_EQ(c.strands, 3);
  EXPECT_EQ(c.letters, (std::vector<int>{1, 2}));
  EXPECT_EQ(BraidWord::parse(b.to_string(), 3), b);
}
