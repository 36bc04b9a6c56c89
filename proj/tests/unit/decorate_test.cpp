#include <gtest/gtest.h>

#include "onerule/decorate.hpp"
#include "onerule/error.hpp"
#include "support/brute.hpp"

namespace onerule {
namespace {

using testing::random_string;
using testing::W;

Rule R(const std::string& u, const std::string& v) { return Rule{W(u), W(v)}; }

DecoratedTrace lift_positions(const Rule& rule, const std::string& start,
                              const std::vector<std::size_t>& positions) {
  return lift(rule, run_trace(rule, W(start), positions));
}

TEST(Decorate, ThreeStepExample) {
  const auto lifted = lift_positions(R("ab", "bba"), "abaabb", {3, 2, 4});
  EXPECT_EQ(lifted.words.back().str(), "a b b* b* b* b* a* a* b");
  EXPECT_EQ(first_decorated_position(lifted.words.back()), 2u);
}

TEST(Decorate, OneStepExample) {
  const auto lifted = lift_positions(R("ab", "bba"), "abaabb", {3});
  EXPECT_EQ(lifted.words.back().str(), "a b a b* b* a* b");
  EXPECT_EQ(first_decorated_position(lifted.words.back()), 3u);
}

TEST(Decorate, EmptyTraceIsUndecorated) {
  const auto lifted = lift_positions(R("ab", "bba"), "abaabb", {});
  ASSERT_EQ(lifted.words.size(), 1u);
  EXPECT_EQ(lifted.words[0], DecoratedWord::plain(W("abaabb")));
  EXPECT_EQ(first_decorated_position(lifted.words[0]), std::nullopt);
}

TEST(Decorate, Project) {
  const DecoratedWord w({{Letter("a"), false}, {Letter("b"), false}, {Letter("b"), true}});
  EXPECT_EQ(project(w), W("abb"));
  EXPECT_EQ(project(DecoratedWord{}), W(""));
  EXPECT_EQ(DecoratedWord{}.str(), "1");
}

TEST(Decorate, ApplyDecoratedMatchesProjection) {
  const DecoratedWord w({{Letter("a"), true}, {Letter("b"), false}});
  const DecoratedWord out = apply_decorated(R("ab", "bba"), w, 0);
  EXPECT_EQ(out.str(), "b* b* a*");
  EXPECT_THROW(apply_decorated(R("ab", "bba"), w, 1), Error);
}

TEST(Decorate, EmptyLhsInsertsDecoratedLetters) {
  const auto lifted = lift_positions(R("", "ab"), "ab", {1});
  EXPECT_EQ(lifted.words.back().str(), "a a* b* b");
}

// Random traces of a random rule: at most `steps` applicable positions picked
// uniformly among all redexes.
ReductionTrace random_trace(std::mt19937& rng, const Rule& rule, const Word& start,
                            std::size_t steps) {
  std::vector<std::size_t> positions;
  Word w = start;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto next = successors(rule, w);
    if (next.empty()) break;
    const auto& step = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
    positions.push_back(step.position);
    w = step.target;
  }
  return run_trace(rule, start, positions);
}

TEST(DecorateProperty, ProjectionAndFirstDecoratedPosition) {
  std::mt19937 rng(301);
  int checked = 0;
  while (checked < 500) {
    const std::string u = random_string(rng, "ab", 1, 4);
    std::string v = random_string(rng, "ab", 1, 5);
    if (v[0] == u[0]) v[0] = u[0] == 'a' ? 'b' : 'a';
    const Rule rule = R(u, v);
    const Word start = W(random_string(rng, "ab", 0, 3) + u + random_string(rng, "ab", 0, 4));
    const ReductionTrace trace = random_trace(rng, rule, start, 6);
    if (trace.positions.empty()) continue;
    ++checked;

    const DecoratedTrace lifted = lift(rule, trace);
    ASSERT_EQ(lifted.words.size(), trace.words.size());
    for (std::size_t j = 0; j < trace.words.size(); ++j) {
      ASSERT_EQ(project(lifted.words[j]), trace.words[j]);
    }
    const auto first = first_decorated_position(lifted.words.back());
    ASSERT_TRUE(first.has_value());
    const std::size_t i = *first;
    for (std::size_t p : trace.positions) ASSERT_GE(p, i);
    ASSERT_NE(std::find(trace.positions.begin(), trace.positions.end(), i),
              trace.positions.end());
    ASSERT_EQ(trace.words.front()[i], rule.lhs[0]);
    ASSERT_EQ(trace.words.back()[i], rule.rhs[0]);
  }
}

}  // namespace
}  // namespace onerule
