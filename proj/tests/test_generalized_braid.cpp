#include <gtest/gtest.h>

#include "infbraid/equivalence.hpp"
#include "infbraid/generalized_braid.hpp"
#include "support/random_words.hpp"

using namespace infbraid;

TEST(GeneralizedBraid, DefaultsToStandardEndpoints) {
  GeneralizedBraid g(parse_word("B3: s0 s1"));
  EXPECT_TRUE(g.has_standard_endpoints());
  EXPECT_EQ(g.matching(), (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_FALSE(g.is_pure());
  EXPECT_TRUE(GeneralizedBraid(parse_word("B2: s0 s0")).is_pure());
}

TEST(GeneralizedBraid, MatchingIsBijectionOntoEndpoints) {
  testsupport::Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    auto w = testsupport::random_word(rng, 4, 8);
    GeneralizedBraid g(w, {1, 4, 6, 9});
    auto tau = g.matching();
    std::sort(tau.begin(), tau.end());
    EXPECT_EQ(tau, g.endpoints());
  }
}

TEST(GeneralizedBraid, RejectsBadEndpoints) {
  EXPECT_THROW(GeneralizedBraid(parse_word("B2:"), {0}), std::invalid_argument);
  EXPECT_THROW(GeneralizedBraid(parse_word("B2:"), {3, 1}), std::invalid_argument);
  EXPECT_THROW(GeneralizedBraid(parse_word("B2:"), {1, 1}), std::invalid_argument);
}

TEST(DeleteStrand, TopStrandOfTwoLetterWord) {
  auto g = delete_strand(parse_word("B3: s0 s1"), 2);
  EXPECT_EQ(g.word(), parse_word("B2: s0"));
  EXPECT_EQ(g.endpoints(), (std::vector<std::size_t>{0, 2}));
}

TEST(DeleteStrand, IdentityStaysIdentity) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      auto g = delete_strand(identity_word(n), i);
      EXPECT_EQ(g.word(), identity_word(n - 1));
    }
  }
}

TEST(DeleteStrand, Errors) {
  EXPECT_THROW(delete_strand(parse_word("B3: s0"), 3), std::out_of_range);
  EXPECT_THROW(delete_strand(parse_word("B1:"), 0), std::invalid_argument);
}

TEST(DeleteStrand, OrderOfDeletionsCommutes) {
  testsupport::Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    auto f = testsupport::random_word(rng, 4, testsupport::uniform(rng, 0, 12));
    std::size_t i = testsupport::uniform(rng, 0, 2);
    std::size_t j = testsupport::uniform(rng, i + 1, 3);
    auto a = delete_strand(delete_strand(f, i), j - 1);
    auto b = delete_strand(delete_strand(f, j), i);
    EXPECT_TRUE(equivalent(a, b)) << to_string(f) << " i=" << i << " j=" << j;
  }
}

TEST(DeleteStrand, WellDefinedOnClasses) {
  testsupport::Rng rng(33);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = testsupport::uniform(rng, 2, 5);
    auto f = testsupport::random_word(rng, n, testsupport::uniform(rng, 0, 10));
    auto g = testsupport::insert_relators(rng, f, 2);
    std::size_t i = testsupport::uniform(rng, 0, n - 1);
    EXPECT_TRUE(equivalent(delete_strand(f, i), delete_strand(g, i))) << to_string(f) << " / " << to_string(g);
  }
}

TEST(DeleteStrand, ExponentSumBookkeeping) {
  testsupport::Rng rng(34);
  for (int k = 0; k < 200; ++k) {
    auto f = testsupport::random_word(rng, 5, 12);
    const std::size_t i = 4;
    long involved = 0;
    std::size_t pos = i;
    for (const auto& l : f.letters()) {
      if (l.index == pos || l.index + 1 == pos) {
        involved += l.sign;
        pos = l.index == pos ? pos + 1 : pos - 1;
      }
    }
    EXPECT_EQ(exponent_sum(f) - exponent_sum(delete_strand(f, i).word()), involved);
  }
}

TEST(Relabel, IdentityAndShift) {
  GeneralizedBraid g(parse_word("B2: s0"));
  EXPECT_EQ(relabel(g, [](std::size_t e) { return e; }), g);
  auto shifted = relabel(g, [](std::size_t e) { return e + 5; });
  EXPECT_EQ(shifted.endpoints(), (std::vector<std::size_t>{5, 6}));
  EXPECT_EQ(shifted.word(), g.word());
}

TEST(Relabel, Functorial) {
  GeneralizedBraid g(parse_word("B3: s1 s0"), {0, 2, 3});
  auto a = [](std::size_t e) { return 2 * e + 1; };
  auto b = [](std::size_t e) { return e + 3; };
  EXPECT_EQ(relabel(relabel(g, a), b), relabel(g, [&](std::size_t e) { return b(a(e)); }));
}

TEST(Relabel, RejectsNonMonotone) {
  GeneralizedBraid g(parse_word("B2: s0"));
  EXPECT_THROW(relabel(g, [](std::size_t e) { return 5 - e; }), std::invalid_argument);
  EXPECT_THROW(relabel(g, [](std::size_t) { return std::size_t{1}; }), std::invalid_argument);
}

TEST(GeneralizedText, RoundTrip) {
  GeneralizedBraid g(parse_word("B2: s0"), {0, 2});
  EXPECT_EQ(to_string(g), "0,2 | B2: s0");
  EXPECT_EQ(parse_generalized("0,2 | B2: s0"), g);
  EXPECT_THROW(parse_generalized("0,2 B2: s0"), ParseError);
  EXPECT_THROW(parse_generalized("0 | B2: s0"), std::invalid_argument);
}

TEST(GeneralizedEquivalence, NeedsSameEndpoints) {
  GeneralizedBraid a(parse_word("B2: s0"), {0, 1});
  GeneralizedBraid b(parse_word("B2: s0"), {0, 2});
  EXPECT_FALSE(equivalent(a, b));
  EXPECT_TRUE(equivalent(GeneralizedBraid(parse_word("B3: s0 s1 s0")), GeneralizedBraid(parse_word("B3: s1 s0 s1"))));
}
