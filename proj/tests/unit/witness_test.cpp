#include <gtest/gtest.h>

#include "onerule/classify.hpp"
#include "onerule/error.hpp"
#include "onerule/witness.hpp"
#include "support/brute.hpp"

namespace onerule {
namespace {

using testing::random_string;
using testing::W;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidSystem;
}

TEST(M2Witness, NotBorderedExample) {
  const auto srs = OneRuleSrs::from_chars("ab", "ab", "bba");
  const WitnessDiamond d = m2_witness(srs);
  const Word w = W("aaaabbbb");
  EXPECT_EQ(d.x, W("ab") + w + W("ab"));
  EXPECT_EQ(d.mids, (std::vector<Word>{W("bba") + w + W("ab"), W("ab") + w + W("bba")}));
  EXPECT_EQ(d.y, W("bba") + w + W("bba"));
  EXPECT_EQ(d.out_positions, (std::vector<std::size_t>{0, 10}));
  EXPECT_EQ(d.in_positions, (std::vector<std::size_t>{11, 0}));
  EXPECT_TRUE(verify_diamond(srs, d));
}

TEST(M2Witness, SpecialSystem) {
  const auto srs = OneRuleSrs::from_chars("ab", "", "ab");
  const WitnessDiamond d = m2_witness(srs);
  EXPECT_EQ(d.k(), 2u);
  EXPECT_TRUE(verify_diamond(srs, d));
}

TEST(M2Witness, Preconditions) {
  EXPECT_EQ(code_of([] { m2_witness(OneRuleSrs::from_chars("a", "a", "aa")); }),
            ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { m2_witness(OneRuleSrs::from_chars("ab", "ab", "ab")); }),
            ErrorCode::PreconditionViolated);
}

TEST(BaseWitness, KEqualsThree) {
  const WitnessDiamond d = mk_witness_base(3);
  EXPECT_EQ(d.x, W("aabbaabb"));
  EXPECT_EQ(d.mids, (std::vector<Word>{W("abaabbaabb"), W("aabbabaabb"), W("aabbaabbab")}));
  EXPECT_EQ(d.y, W("aabbaabbaabb"));
  EXPECT_EQ(d.out_positions, (std::vector<std::size_t>{0, 4, 8}));
  EXPECT_EQ(d.in_positions, (std::vector<std::size_t>{1, 5, 9}));
  EXPECT_TRUE(verify_diamond(Rule{W(""), W("ab")}, d));
}

TEST(BaseWitness, KEqualsOne) {
  const WitnessDiamond d = mk_witness_base(1);
  EXPECT_EQ(d.x, W(""));
  EXPECT_EQ(d.mids, std::vector<Word>{W("ab")});
  EXPECT_EQ(d.y, W("aabb"));
  EXPECT_EQ(d.in_positions, std::vector<std::size_t>{1});
}

TEST(BaseWitness, MidsDistinctUpToTen) {
  for (std::size_t k = 1; k <= 10; ++k) {
    EXPECT_TRUE(verify_diamond(Rule{W(""), W("ab")}, mk_witness_base(k))) << k;
  }
}

TEST(LiftViaF, Examples) {
  const auto base = mk_witness_base(2);
  EXPECT_EQ(lift_via_f(W("ab"), base), base);
  const WitnessDiamond d = lift_via_f(W("abb"), base);
  EXPECT_EQ(d.x, W("aabbbb"));
  EXPECT_TRUE(verify_diamond(Rule{W(""), W("abb")}, d));
  EXPECT_EQ(code_of([&] { lift_via_f(W("bbb"), base); }), ErrorCode::PreconditionViolated);
}

TEST(LiftViaF, RenamesToChainLetters) {
  const Word v{Letter("b1"), Letter("b2")};
  const WitnessDiamond d = lift_via_f(v, mk_witness_base(3));
  Word block{Letter("b1"), Letter("b1"), Letter("b2"), Letter("b2")};
  EXPECT_EQ(d.x, block + block);
}

TEST(Pullback, DecodesThroughTheChain) {
  const auto srs = OneRuleSrs::from_chars("abc", "a", "abaca");
  const AdyanChain chain = adyan_chain(srs);
  const WitnessDiamond lifted = lift_via_f(chain.final_system.rhs(), mk_witness_base(2));
  const WitnessDiamond d = pullback(chain, lifted);
  EXPECT_EQ(d.y, W("ababacacababacaca"));
  EXPECT_EQ(d.mids[0], W("abacababacaca"));
  EXPECT_TRUE(verify_diamond(srs, d));

  const auto special = OneRuleSrs::from_chars("ab", "", "ab");
  EXPECT_EQ(pullback(adyan_chain(special), mk_witness_base(2)), mk_witness_base(2));
}

TEST(MkWitness, AabbFamily) {
  const auto srs = OneRuleSrs::from_chars("ab", "", "ab");
  EXPECT_EQ(mk_witness(srs, 5), mk_witness_base(5));
}

TEST(MkWitness, ThroughChainStaysInBordA) {
  const auto srs = OneRuleSrs::from_chars("abc", "a", "abaca");
  const WitnessDiamond d = mk_witness(srs, 3);
  EXPECT_TRUE(verify_diamond(srs, d));
  EXPECT_TRUE(is_bordered_with(d.x, W("a")));
  EXPECT_TRUE(is_bordered_with(d.y, W("a")));
  for (const Word& z : d.mids) EXPECT_TRUE(is_bordered_with(z, W("a")));
}

TEST(MkWitness, NormalizedSystemIsReversed) {
  const auto srs = OneRuleSrs::from_chars("ab", "ab", "");
  const WitnessDiamond d = mk_witness(srs, 3);
  EXPECT_TRUE(verify_diamond(srs, d));
  EXPECT_EQ(d.y, W("aabbaabb"));
}

TEST(MkWitness, Refusals) {
  const auto finite = OneRuleSrs::from_chars("ab", "ab", "bba");
  EXPECT_EQ(code_of([&] { mk_witness(finite, 3); }), ErrorCode::NotUnbounded);
  EXPECT_EQ(code_of([&] { mk_witness(finite, 0); }), ErrorCode::PreconditionViolated);
  const auto unary = OneRuleSrs::from_chars("a", "a", "aa");
  EXPECT_EQ(code_of([&] { mk_witness(unary, 2); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([&] { mk_witness(OneRuleSrs::from_chars("ab", "a", "a"), 1); }),
            ErrorCode::PreconditionViolated);
}

TEST(MkWitness, SmallK) {
  const auto unary = OneRuleSrs::from_chars("a", "a", "aa");
  const WitnessDiamond one = mk_witness(unary, 1);
  EXPECT_EQ(one.k(), 1u);
  EXPECT_TRUE(verify_diamond(unary, one));
  const auto finite = OneRuleSrs::from_chars("ab", "ab", "bba");
  EXPECT_TRUE(verify_diamond(finite, mk_witness(finite, 1)));
  EXPECT_TRUE(verify_diamond(finite, mk_witness(finite, 2)));
}

TEST(VerifyDiamond, ReportsFailures) {
  const Rule rule{W(""), W("ab")};
  WitnessDiamond dup = mk_witness_base(2);
  dup.mids[1] = dup.mids[0];
  const auto r1 = verify_diamond(rule, dup);
  EXPECT_FALSE(r1);
  EXPECT_FALSE(r1.failure.empty());

  WitnessDiamond wrong = mk_witness_base(2);
  wrong.in_positions[0] = 3;
  const auto r2 = verify_diamond(rule, wrong);
  EXPECT_FALSE(r2);
  EXPECT_NE(r2.failure.find("z0"), std::string::npos) << r2.failure;

  WitnessDiamond outside = mk_witness_base(1);
  EXPECT_FALSE(verify_diamond(OneRuleSrs::from_chars("abc", "c", "ab"), outside));
}

TEST(RealizingPosition, SmallestMatch) {
  const Rule rule{W(""), W("ab")};
  EXPECT_EQ(realizing_position(rule, W("ab"), W("abab")), 0u);
  EXPECT_EQ(realizing_position(rule, W("ab"), W("aabb")), 1u);
  EXPECT_EQ(realizing_position(rule, W("ab"), W("bbaa")), std::nullopt);
}

TEST(WitnessProperty, M2OnRandomSystems) {
  std::mt19937 rng(601);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string letters = trial % 2 ? "ab" : "abc";
    const std::string u = random_string(rng, letters, 0, 6);
    const std::string v = random_string(rng, letters, 0, 6);
    if (u == v) continue;
    const auto srs = OneRuleSrs::from_chars(letters, u, v);
    const auto report = verify_diamond(srs, m2_witness(srs));
    ASSERT_TRUE(report) << srs.str() << ": " << report.failure;
  }
}

TEST(WitnessProperty, UnboundedSystemsYieldWitnessesUpToEight) {
  std::mt19937 rng(602);
  int checked = 0;
  while (checked < 30) {
    const auto srs = OneRuleSrs::from_chars("abc", random_string(rng, "abc", 0, 2),
                                            random_string(rng, "abc", 1, 5));
    if (!classify(srs).max_k.is_unbounded()) continue;
    ++checked;
    for (std::size_t k = 3; k <= 8; k += 5) {
      const WitnessDiamond d = mk_witness(srs, k);
      ASSERT_EQ(d.k(), k);
      ASSERT_TRUE(verify_diamond(srs, d)) << srs.str();
      ASSERT_TRUE(std::is_sorted(d.out_positions.begin(), d.out_positions.end()));
    }
  }
}

}  // namespace
}  // namespace onerule
