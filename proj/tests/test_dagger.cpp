#include <gtest/gtest.h>

#include "infbraid/dagger.hpp"
#include "infbraid/equivalence.hpp"
#include "support/random_words.hpp"

using namespace infbraid;

namespace {

FreeWord fw(const char* text) { return parse_free_word(text); }
BraidWord w(const char* text) { return parse_word(text); }

}  // namespace

TEST(ConjugateForm, ReadsConjugator) {
  auto c = conjugate_of_generator(fw("d0 d1 d0^-1"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->target, 1u);
  EXPECT_EQ(c->conjugator, fw("d0^-1"));
  EXPECT_FALSE(conjugate_of_generator(fw("d0 d0")));
  EXPECT_FALSE(conjugate_of_generator(fw("d0^-1")));
  EXPECT_FALSE(conjugate_of_generator(fw("d0 d1 d2")));
  EXPECT_FALSE(conjugate_of_generator(FreeWord{}));
}

TEST(InducedLevelMap, Identity) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto h = induced_level_map(identity_word(n));
    EXPECT_EQ(h, DaggerAutomorphism::identity(n));
    auto conjugators = h.conjugators();
    ASSERT_TRUE(conjugators);
    for (const auto& u : *conjugators) EXPECT_TRUE(u.empty());
  }
}

TEST(InducedLevelMap, SingleCrossing) {
  auto h = induced_level_map(GeneralizedBraid(w("B2: s0"), {0, 1}));
  EXPECT_EQ(*h.sigma(), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(h.conjugators()->at(0), fw("d0^-1"));
  EXPECT_TRUE(h.conjugators()->at(1).empty());
  EXPECT_EQ(h.image(0), fw("d0 d1 d0^-1"));
}

TEST(InducedLevelMap, RenamesThroughEndpoints) {
  auto h = induced_level_map(GeneralizedBraid(w("B2: s0"), {3, 7}));
  EXPECT_EQ(h.image(0), fw("d3 d7 d3^-1"));
  EXPECT_EQ(h.image(1), fw("d3"));
  EXPECT_EQ(*h.sigma(), (std::vector<std::size_t>{7, 3}));
  EXPECT_TRUE(check_dagger(h).passed());
}

TEST(InducedLevelMap, SigmaFollowsMatching) {
  testsupport::Rng rng(61);
  for (int k = 0; k < 200; ++k) {
    auto f = testsupport::random_word_upto(rng, 5, 12);
    GeneralizedBraid g(f);
    EXPECT_EQ(*induced_level_map(g).sigma(), g.matching());
  }
}

TEST(InducedLevelMap, Functorial) {
  testsupport::Rng rng(62);
  for (int k = 0; k < 200; ++k) {
    auto f = testsupport::random_word(rng, 3, 6);
    auto g = testsupport::random_word(rng, 3, 6);
    auto hf = induced_level_map(f).as_morphism();
    auto hg = induced_level_map(g).as_morphism();
    auto hfg = induced_level_map(compose(f, g));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(hfg.image(i), hg(hf.image(i)));
  }
}

TEST(InducedLevelMap, EquivalentWordsInduceSameMap) {
  testsupport::Rng rng(63);
  for (int k = 0; k < 200; ++k) {
    auto f = testsupport::random_word_upto(rng, 5, 10);
    auto g = testsupport::insert_relators(rng, f, 2);
    EXPECT_EQ(induced_level_map(f), induced_level_map(g));
  }
}

TEST(CheckDagger, Identity) {
  auto r = check_dagger(DaggerAutomorphism::identity(3));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.isomorphism, IsomorphismEvidence::reconstruction);
  ASSERT_TRUE(r.reconstructed);
  EXPECT_TRUE(r.reconstructed->empty());
}

TEST(CheckDagger, SquareIsNotConjugate) {
  DaggerAutomorphism h({0}, {fw("d0 d0")});
  auto r = check_dagger(h);
  EXPECT_FALSE(r.conjugate_form);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.problems.empty());
}

TEST(CheckDagger, SwapFailsProductCondition) {
  DaggerAutomorphism h({0, 1}, {fw("d1"), fw("d0")});
  auto r = check_dagger(h);
  EXPECT_TRUE(r.conjugate_form);
  EXPECT_TRUE(r.bijection);
  EXPECT_FALSE(r.product);
  EXPECT_FALSE(r.passed());
}

TEST(CheckDagger, NonBijectiveSigma) {
  DaggerAutomorphism h({0, 1}, {fw("d0"), fw("d0^-1 d0 d0")});
  EXPECT_FALSE(check_dagger(h).bijection);
  DaggerAutomorphism g({0, 1}, {fw("d0"), fw("d1 d0 d1^-1")});
  EXPECT_FALSE(check_dagger(g).bijection);
}

TEST(CheckDagger, BraidInducedMapsPass) {
  testsupport::Rng rng(64);
  for (int k = 0; k < 60; ++k) {
    std::size_t n = testsupport::uniform(rng, 2, 5);
    auto f = testsupport::random_word(rng, n, testsupport::uniform(rng, 0, 12));
    GeneralizedBraid g(f);
    auto h = induced_level_map(g);
    auto witness = inverse_witness(g);
    auto r = check_dagger(h, &witness);
    EXPECT_TRUE(r.passed()) << to_string(f);
    EXPECT_EQ(r.isomorphism, IsomorphismEvidence::witness);
  }
}

TEST(CheckDagger, WrongWitnessIsRefuted) {
  auto h = induced_level_map(w("B3: s0 s1"));
  auto witness = induced_level_map(w("B3: s0 s1")).as_morphism();
  auto r = check_dagger(h, &witness);
  EXPECT_EQ(r.isomorphism, IsomorphismEvidence::refuted);
  EXPECT_FALSE(r.passed());
}

TEST(CheckDagger, UnverifiedWithoutEvidence) {
  auto h = induced_level_map(w("B2: s0 s0 s0 s0 s0"));
  auto r = check_dagger(h, nullptr, 3);
  EXPECT_TRUE(r.structural());
  EXPECT_EQ(r.isomorphism, IsomorphismEvidence::unverified);
  EXPECT_FALSE(r.passed());
  EXPECT_STREQ(to_string(r.isomorphism), "unverified isomorphism");
}

TEST(Reconstruct, Examples) {
  auto id = reconstruct_braid(DaggerAutomorphism::identity(3), 4);
  ASSERT_TRUE(id);
  EXPECT_TRUE(id->empty());
  auto f = w("B3: s0 s1");
  auto r = reconstruct_braid(induced_level_map(f), 2);
  ASSERT_TRUE(r);
  EXPECT_TRUE(equivalent(*r, f));
}

TEST(Reconstruct, BoundedSearchLimitation) {
  auto h = induced_level_map(w("B3: s0 s0 s0 s0 s0 s0"));
  EXPECT_TRUE(check_dagger(h, nullptr, 6).passed());
  EXPECT_FALSE(reconstruct_braid(h, 4));
  auto found = reconstruct_braid(h, 6);
  ASSERT_TRUE(found);
  EXPECT_TRUE(equivalent(*found, w("B3: s0 s0 s0 s0 s0 s0")));
}

TEST(Reconstruct, RelabeledEndpoints) {
  auto g = GeneralizedBraid(w("B3: s1 s0^-1"), {2, 5, 9});
  auto r = reconstruct_braid(induced_level_map(g), 2);
  ASSERT_TRUE(r);
  EXPECT_TRUE(equivalent(*r, g.word()));
}

TEST(Diagram, IdentityLevels) {
  EXPECT_TRUE(check_diagram(DaggerAutomorphism::identity(4), DaggerAutomorphism::identity(2)));
}

TEST(Diagram, CoherentTowers) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto t = induced_tower(winding_tower(), 6);
    EXPECT_TRUE(check_tower_diagrams(t, false));
  }
  testsupport::Rng rng(65);
  for (int k = 0; k < 30; ++k) {
    auto f = testsupport::random_word_upto(rng, 4, 8);
    auto t = induced_tower(finitely_supported(f), 6);
    EXPECT_TRUE(check_tower_diagrams(t, false)) << to_string(f);
    for (const auto& h : t.levels) EXPECT_TRUE(check_dagger(h, nullptr, 8).structural());
  }
}

TEST(Diagram, MismatchedLevelFails) {
  auto upper = induced_level_map(w("B3: s0 s0"));
  auto lower = DaggerAutomorphism::identity(2);
  EXPECT_FALSE(check_diagram(upper, lower));
  EXPECT_TRUE(check_diagram(upper, induced_level_map(w("B2: s0 s0"))));
}

TEST(Diagram, PreconditionViolation) {
  EXPECT_THROW(check_diagram(DaggerAutomorphism::identity(2), DaggerAutomorphism::identity(3)),
               std::invalid_argument);
  DaggerAutomorphism far({5}, {fw("d5")});
  EXPECT_THROW(check_diagram(DaggerAutomorphism::identity(2), far), std::invalid_argument);
}

TEST(DaggerText, RoundTrip) {
  auto h = induced_level_map(GeneralizedBraid(w("B2: s0"), {0, 1}));
  EXPECT_EQ(to_dagger_text(h), "DAGGER m=2 E=0,1\n0 -> d0 d1 d0^-1\n1 -> d0\n");
  EXPECT_EQ(parse_dagger(to_dagger_text(h)), h);
  DaggerAutomorphism empty_image({0}, {FreeWord{}});
  EXPECT_EQ(to_dagger_text(empty_image), "DAGGER m=1 E=0\n0 ->\n");
  EXPECT_EQ(parse_dagger(to_dagger_text(empty_image)), empty_image);
  EXPECT_THROW(parse_dagger("DAGGER m=2 E=0,1\n0 -> d0\n"), std::invalid_argument);
  EXPECT_THROW(parse_dagger("DAGGR m=1 E=0\n0 -> d0\n"), ParseError);
  EXPECT_THROW(parse_dagger("DAGGER m=1 E=0\n0 => d0\n"), ParseError);
}
