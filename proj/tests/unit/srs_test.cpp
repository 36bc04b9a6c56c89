#include <gtest/gtest.h>

#include "onerule/error.hpp"
#include "onerule/oracle.hpp"
#include "onerule/srs.hpp"
#include "support/brute.hpp"

namespace onerule {
namespace {

using testing::brute_successors;
using testing::random_string;
using testing::S;
using testing::W;

Rule R(const std::string& u, const std::string& v) { return Rule{W(u), W(v)}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidSystem;
}

TEST(OneRuleSrs, RejectsLettersOutsideAlphabet) {
  EXPECT_EQ(code_of([] { OneRuleSrs::from_chars("a", "ab", "a"); }), ErrorCode::InvalidSystem);
  EXPECT_EQ(code_of([] { OneRuleSrs::from_chars("", "", ""); }), ErrorCode::InvalidSystem);
  EXPECT_NO_THROW(OneRuleSrs::from_chars("ab", "", "ab"));
}

TEST(ApplyAt, RewritesFactorAtPosition) {
  EXPECT_EQ(apply_at(R("ab", "bba"), W("abaabb"), 3), W("ababbab"));
  EXPECT_EQ(apply_at(R("", "ab"), W(""), 0), W("ab"));
}

TEST(ApplyAt, Errors) {
  EXPECT_EQ(code_of([] { apply_at(R("ab", "bba"), W("abaabb"), 1); }),
            ErrorCode::RuleNotApplicable);
  EXPECT_EQ(code_of([] { apply_at(R("ab", "bba"), W("abaabb"), 5); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { apply_at(R("abc", "a"), W("ab"), 0); }), ErrorCode::OutOfRange);
}

TEST(Successors, Examples) {
  // Expected lists from the brute-force position scan.
  EXPECT_EQ(brute_successors("ab", "bba", "abab"),
            (std::vector<std::pair<std::size_t, std::string>>{{0, "bbaab"}, {2, "abbba"}}));
  EXPECT_EQ(successors(R("ab", "bba"), W("abab")),
            (std::vector<Step>{{0, W("bbaab")}, {2, W("abbba")}}));
  // Positions 0 and 2 give equal words; both edges are kept.
  EXPECT_EQ(successors(R("", "ab"), W("ab")),
            (std::vector<Step>{{0, W("abab")}, {1, W("aabb")}, {2, W("abab")}}));
  EXPECT_TRUE(successors(R("ab", "bba"), W("bbb")).empty());
}

TEST(RunTrace, FollowsPositions) {
  const std::vector<std::size_t> positions{3, 2, 4};
  const auto trace = run_trace(R("ab", "bba"), W("abaabb"), positions);
  EXPECT_EQ(trace.words, (std::vector<Word>{W("abaabb"), W("ababbab"), W("abbbabab"),
                                           W("abbbbbaab")}));
  EXPECT_EQ(trace.positions, positions);
}

TEST(RunTrace, EmptyPositions) {
  const auto trace = run_trace(R("ab", "bba"), W("aab"), std::vector<std::size_t>{});
  EXPECT_EQ(trace.words, std::vector<Word>{W("aab")});
}

TEST(RunTrace, ReportsFailingStep) {
  try {
    run_trace(R("ab", "bba"), W("abaabb"), std::vector<std::size_t>{0, 0});
    FAIL();
  } catch (const TraceError& e) {
    EXPECT_EQ(e.step(), 1u);
    EXPECT_EQ(e.code(), ErrorCode::RuleNotApplicable);
  }
}

TEST(Converse, SwapsSides) {
  const auto s = OneRuleSrs::from_chars("ab", "ab", "bba");
  EXPECT_EQ(converse(s), OneRuleSrs::from_chars("ab", "bba", "ab"));
  EXPECT_EQ(converse(converse(s)), s);
  EXPECT_EQ(converse(R("", "ab")), R("ab", ""));
}

TEST(SrsProperty, SuccessorsMatchBruteForceAndLengthLaw) {
  std::mt19937 rng(201);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::string u = random_string(rng, "ab", 0, 3);
    const std::string v = random_string(rng, "ab", 0, 4);
    const std::string w = random_string(rng, "ab", 0, 10);
    const auto steps = successors(R(u, v), W(w));
    const auto expected = brute_successors(u, v, w);
    ASSERT_EQ(steps.size(), expected.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
      ASSERT_EQ(steps[i].position, expected[i].first);
      ASSERT_EQ(S(steps[i].target), expected[i].second);
      ASSERT_EQ(apply_at(R(u, v), W(w), steps[i].position), steps[i].target);
      ASSERT_EQ(steps[i].target.size() + u.size(), w.size() + v.size());
    }
  }
}

TEST(SrsProperty, ConverseReversesEveryEdge) {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rule rule = R(random_string(rng, "ab", 0, 3), random_string(rng, "ab", 0, 4));
    const Word w = W(random_string(rng, "ab", 0, 9));
    for (const Step& step : successors(rule, w)) {
      const auto back = successors(converse(rule), step.target);
      ASSERT_NE(std::find(back.begin(), back.end(), Step{step.position, w}), back.end());
    }
  }
}

TEST(SrsProperty, LengthChangingSystemsAreGradedLocally) {
  // Only systems with |u| != |v| are asserted here: every path from x to y
  // has length (|y| - |x|) / (|v| - |u|).
  std::mt19937 rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    std::string u = random_string(rng, "ab", 0, 2);
    std::string v = random_string(rng, "ab", 0, 3);
    if (u.size() == v.size()) continue;
    const auto srs = OneRuleSrs::from_chars("ab", u, v);
    for (const auto& [word, lengths] :
         path_lengths_from(srs, W(random_string(rng, "ab", 0, 6)), 3)) {
      ASSERT_EQ(lengths.size(), 1u) << srs.str() << " " << S(word);
    }
  }
}

}  // namespace
}  // namespace onerule
