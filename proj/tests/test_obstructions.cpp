#include <gtest/gtest.h>

#include <algorithm>

#include "ckforms/catalog.hpp"
#include "ckforms/errors.hpp"
#include "ckforms/grammar.hpp"
#include "ckforms/obstructions.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace ckforms;
using ckforms::testing::Gen;

namespace {

using ckforms::testing::flips_at;
using ckforms::testing::table_ranks;

Rational oracle_det(const ReductivePair& rp, const std::vector<int>& d) {
  const auto m = ckforms::testing::sign_action_on_V(rp, d);
  EXPECT_TRUE(m.has_value());
  return m ? determinant(*m) : Rational(0);
}

struct SeedCase {
  const char* pair;
  std::vector<int> diagonal;
};

}  // namespace

TEST(Rank, SmallExamples) {
  const RankData a = rank_data(parse_pair("SO(1,2)/SO(1,1)"));
  EXPECT_EQ(a, (RankData{1, 1, 1, 0}));
  EXPECT_EQ(rank_obstruction(a), RankVerdict::Obstruction);
  const RankData b = rank_data(parse_pair("SO(2,2)/SO(2,1)"));
  EXPECT_EQ(b, (RankData{2, 2, 1, 1}));
  EXPECT_EQ(rank_obstruction(b), RankVerdict::Equality);
  EXPECT_EQ(rank_obstruction(rank_data(parse_pair("SL_R(3)/SL_R(2)"))), RankVerdict::NoConclusion);
  EXPECT_EQ(rank_obstruction(rank_data(parse_pair("GROUP(SU(2,1))"))), RankVerdict::Equality);
}

TEST(Rank, CatalogAgainstTables) {
  for (const auto& e : builtin_catalog()) {
    const auto [rg, rk] = table_ranks(e.pair.g);
    const auto [rh, rl] = table_ranks(e.pair.h);
    const RankData rd = rank_data(e.pair);
    EXPECT_EQ(rd, (RankData{rg, rk, rh, rl})) << e.id;
    const bool fires = rg - rk < rh - rl;
    EXPECT_EQ(rank_obstruction(rd) == RankVerdict::Obstruction, fires) << e.id;
    EXPECT_EQ(rank_obstruction(rd) == RankVerdict::Equality, rg - rk == rh - rl) << e.id;
  }
  // p, q odd instances of the SO(p,q+r)/SO(p,q) family
  for (const char* t : {"SO(1,2)/SO(1,1)", "SO(1,4)/SO(1,3)", "SO(3,4)/SO(3,3)", "SO(3,2)/SO(3,1)"})
    EXPECT_EQ(rank_obstruction(rank_data(parse_pair(t))), RankVerdict::Obstruction) << t;
}

TEST(Sign, SeedPatternsAreReturned) {
  const SeedCase cases[] = {
      {"SL_R(3)/SL_R(2)", flips_at(3, {1, 2})},
      {"SL_R(4)/SL_R(2)", flips_at(4, {1, 2})},
      {"SL_R(6)/SL_R(4)", flips_at(6, {3, 4})},
      {"SO(1,2)/SO(1,1)", flips_at(3, {1, 2})},
      {"SO(3,2)/SO(3,1)", flips_at(5, {3, 4})},
      {"SO(3,4)/SO(3,2)", flips_at(7, {4, 5})},
  };
  for (const auto& c : cases) {
    const ReductivePair rp = embed_pair(parse_pair(c.pair));
    const SignSearchResult r = sign_element_search(rp);
    ASSERT_TRUE(r.element.has_value()) << c.pair;
    EXPECT_EQ(r.element->diagonal, c.diagonal) << c.pair;
    EXPECT_TRUE(r.element->from_seed) << c.pair;
    EXPECT_EQ(r.element->det_on_V, -1) << c.pair;
    EXPECT_EQ(oracle_det(rp, r.element->diagonal), -1) << c.pair;
    EXPECT_TRUE(verify_sign_element(rp, r.element->diagonal).ok()) << c.pair;
  }
}

TEST(Sign, ActionDetMatchesOracle) {
  Gen gen(31);
  for (const char* t : {"SL_R(4)/SL_R(2)", "SO(3,2)/SO(3,1)", "SO(2,2)/SO(2,1)", "SL_R(4)/SL_R(3)"}) {
    const ReductivePair rp = embed_pair(parse_pair(t));
    const SignStructure s = sign_structure(rp.spec.g);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::size_t> flips;
      for (std::size_t c = 0; c < s.classes.size(); ++c)
        if (gen.coin()) flips.push_back(c);
      if (!parity_ok(s, flips)) continue;
      const auto d = diagonal_of(s, flips);
      const auto det = sign_action_det(rp, d);
      const SignVerification v = verify_sign_element(rp, d);
      EXPECT_TRUE(v.in_K) << t;
      ASSERT_EQ(det.has_value(), v.preserves_V) << t;
      if (det) {
        EXPECT_EQ(*det, v.det) << t;
        EXPECT_EQ(*det, oracle_det(rp, d)) << t;
        EXPECT_TRUE(*det == 1 || *det == -1) << t;
      }
    }
  }
}

TEST(Sign, NegativeControlsExhaustive) {
  SignSearchOptions opts;
  opts.exhaustive = true;
  for (const char* t : {"SO(2,2)/SO(2,1)", "GROUP(SL_R(2))", "SO(4,2)/SO(4,1)", "SL_R(4)/SL_R(3)"}) {
    const SignSearchResult r = sign_element_search(embed_pair(parse_pair(t)), opts);
    EXPECT_FALSE(r.element.has_value()) << t;
    EXPECT_TRUE(r.exhaustive) << t;
    EXPECT_EQ(r.candidates_examined, r.candidates_total) << t;
    EXPECT_GT(r.candidates_in_K, 0u) << t;
  }
}

TEST(Sign, BudgetExceeded) {
  SignSearchOptions opts;
  opts.exhaustive = true;
  opts.candidate_cap = 3;
  try {
    sign_element_search(embed_pair(parse_pair("SO(2,2)/SO(2,1)")), opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchBudgetExceeded);
  }
}

TEST(Sign, ParityRules) {
  const SignStructure sl = sign_structure(parse_algebra_spec("SL_R(4)"));
  EXPECT_EQ(sl.classes.size(), 4u);
  EXPECT_TRUE(parity_ok(sl, {0, 1}));
  EXPECT_FALSE(parity_ok(sl, {0}));
  const SignStructure so = sign_structure(parse_algebra_spec("SO(2,3)"));
  // an even number of flips in each block keeps the element in SO(p) x SO(q)
  EXPECT_TRUE(parity_ok(so, {0, 1}));
  EXPECT_TRUE(parity_ok(so, {2, 3}));
  EXPECT_FALSE(parity_ok(so, {1, 2}));
  EXPECT_EQ(diagonal_of(so, {2, 4}), (std::vector<int>{1, 1, -1, 1, -1}));
}

TEST(Sign, VerifierRejectsWrongElements) {
  const ReductivePair rp = embed_pair(parse_pair("SO(3,2)/SO(3,1)"));
  // odd number of flips in the first block leaves SO(3) x SO(2)
  EXPECT_FALSE(verify_sign_element(rp, {-1, 1, 1, 1, 1}).in_K);
  EXPECT_FALSE(verify_sign_element(rp, {1, 1, 1, 1, 1}).ok());
}

TEST(Complexification, Examples) {
  const ComplexificationResult a = complexification_criterion(parse_pair("SO_C(4)/SO(2,2)"));
  EXPECT_TRUE(a.applicable);
  EXPECT_TRUE(a.even_nontrivial);
  const ComplexificationResult b = complexification_criterion(parse_pair("SO_C(8)/SO(7,1)"));
  EXPECT_TRUE(b.applicable);
  EXPECT_FALSE(b.even_nontrivial);
  EXPECT_TRUE(complexification_criterion(parse_pair("SL_C(3)/SU(2,1)")).even_nontrivial);
  EXPECT_TRUE(complexification_criterion(parse_pair("SP_C(2)/SP(1,1)")).even_nontrivial);
  try {
    complexification_criterion(parse_pair("SO(3,2)/SO(3,1)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAComplexificationPair);
  }
}

TEST(Homotopy, Rule) {
  for (const char* t : {"SL_R(4)/SO(2,2)", "SL_R(5)/SO(3,2)", "SL_H(4)/SP(2,2)", "SL_H(5)/SP(3,2)"})
    EXPECT_TRUE(homotopy_rule_applies(parse_pair(t))) << t;
  for (const char* t : {"SL_R(4)/SO(3,1)", "SL_R(3)/SO(3)", "SL_H(3)/SP(2,1)", "SL_R(4)/SL_R(2)"})
    EXPECT_FALSE(homotopy_rule_applies(parse_pair(t))) << t;
}

TEST(VerdictProperty, OrderIndependentAndMcNeverObstructs) {
  Gen gen(32);
  const EvidenceKind kinds[] = {EvidenceKind::Rank, EvidenceKind::Sign, EvidenceKind::Complexification,
                                EvidenceKind::Homotopy, EvidenceKind::MonteCarlo};
  const EvidenceEffect effects[] = {EvidenceEffect::Obstruction, EvidenceEffect::RankEquality,
                                    EvidenceEffect::Vanishing, EvidenceEffect::NonVanishing,
                                    EvidenceEffect::Neutral};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Evidence> ev;
    const int n = gen.integer(0, 6);
    for (int i = 0; i < n; ++i) ev.push_back({kinds[gen.integer(0, 4)], effects[gen.integer(0, 4)], ""});

    bool exact_obstruction = false, equality = false, vanishing = false;
    for (const auto& e : ev) {
      const bool obstructs = e.effect == EvidenceEffect::Obstruction;
      exact_obstruction |= obstructs && e.kind != EvidenceKind::MonteCarlo;
      equality |= e.effect == EvidenceEffect::RankEquality;
      vanishing |= e.effect == EvidenceEffect::Vanishing || (obstructs && e.kind == EvidenceKind::MonteCarlo);
    }
    const Classification want = exact_obstruction         ? Classification::NoCompactForms
                                : equality && !vanishing ? Classification::RationalVolume
                                                         : Classification::Unknown;
    for (int perm = 0; perm < 3; ++perm) {
      std::shuffle(ev.begin(), ev.end(), gen.rng);
      Verdict v;
      bool seen_obstruction = false;
      for (const auto& e : ev) {
        v.add_evidence(e);
        // monotone: once obstructed, always obstructed
        if (seen_obstruction) EXPECT_EQ(v.classification(), Classification::NoCompactForms);
        seen_obstruction = v.classification() == Classification::NoCompactForms;
      }
      EXPECT_EQ(v.classification(), want);
      EXPECT_EQ(v.reasons().size(), ev.size());
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(parse_pair("SO(3,2)/SO(3,1)")).classification(), Classification::NoCompactForms);
  EXPECT_EQ(classify(parse_pair("GROUP(SU(2,1))")).classification(), Classification::RationalVolume);
  const Verdict v = classify(parse_pair("SL_H(4)/SP(2,2)"));
  EXPECT_EQ(v.classification(), Classification::NoCompactForms);
  const bool homotopy = std::any_of(v.reasons().begin(), v.reasons().end(), [](const Evidence& e) {
    return e.kind == EvidenceKind::Homotopy && e.effect == EvidenceEffect::Obstruction;
  });
  EXPECT_TRUE(homotopy);
}

TEST(Classify, MonteCarloOnlyAddsEvidence) {
  ClassifyOptions opts;
  opts.run_mc = true;
  opts.mc.n_samples = 2000;
  // vanishing numerics on an otherwise open pair must not turn into an obstruction
  const Analysis a = analyze(parse_pair("SL_R(5)/SL_R(3)"), opts);
  EXPECT_NE(a.verdict.classification(), Classification::NoCompactForms);
  const Analysis b = analyze(parse_pair("SO(2,2)/SO(2,1)"), opts);
  ASSERT_TRUE(b.mc.has_value());
  EXPECT_EQ(b.mc->verdict, McVerdict::NonZero);
  EXPECT_EQ(b.verdict.classification(), Classification::RationalVolume);
}

TEST(Classify, Deterministic) {
  for (const char* t : {"SO(3,4)/SO(3,2)", "GROUP(SL_R(2))", "SO_C(6)/SOSTAR(6)"}) {
    const Analysis a = analyze(parse_pair(t)), b = analyze(parse_pair(t));
    EXPECT_EQ(a.verdict.classification(), b.verdict.classification());
    ASSERT_EQ(a.verdict.reasons().size(), b.verdict.reasons().size());
    for (std::size_t i = 0; i < a.verdict.reasons().size(); ++i)
      EXPECT_EQ(a.verdict.reasons()[i].detail, b.verdict.reasons()[i].detail);
    EXPECT_EQ(a.sign.candidates_examined, b.sign.candidates_examined);
  }
}

TEST(Classification, Names) {
  for (auto c : {Classification::NoCompactForms, Classification::RationalVolume, Classification::Unknown})
    EXPECT_EQ(parse_classification(classification_name(c)), c);
  EXPECT_FALSE(parse_classification("maybe").has_value());
}
