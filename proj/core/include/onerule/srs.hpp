#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "onerule/words.hpp"

namespace onerule {

struct Rule {
  Word lhs;
  Word rhs;

  std::string str() const { return lhs.str() + " -> " + rhs.str(); }
  friend bool operator==(const Rule&, const Rule&) = default;
};

// <A | u -> v>. The alphabet is non-empty and contains every rule letter.
class OneRuleSrs {
 public:
  // Throws Error(InvalidSystem) when the invariants do not hold.
  OneRuleSrs(Alphabet alphabet, Rule rule);

  // Convenience for tests and examples: single-character letters.
  static OneRuleSrs from_chars(std::string_view alphabet, std::string_view lhs,
                               std::string_view rhs);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Rule& rule() const noexcept { return rule_; }
  const Word& lhs() const noexcept { return rule_.lhs; }
  const Word& rhs() const noexcept { return rule_.rhs; }

  std::string str() const { return "<" + alphabet_.str() + " | " + rule_.str() + ">"; }

  friend bool operator==(const OneRuleSrs&, const OneRuleSrs&) = default;

 private:
  Alphabet alphabet_;
  Rule rule_;
};

// One edge of the reduction graph leaving a fixed word.
struct Step {
  std::size_t position;
  Word target;

  friend bool operator==(const Step&, const Step&) = default;
};

// A path x_1 -> ... -> x_n; words.size() == positions.size() + 1.
struct ReductionTrace {
  std::vector<std::size_t> positions;
  std::vector<Word> words;

  const Word& start() const { return words.front(); }
  const Word& finish() const { return words.back(); }
};

// x u y -> x v y with |x| = i. Throws Error(OutOfRange) when u does not fit
// at i and Error(RuleNotApplicable) when the factor at i is not u.
Word apply_at(const Rule& rule, const Word& w, std::size_t i);
inline Word apply_at(const OneRuleSrs& srs, const Word& w, std::size_t i) {
  return apply_at(srs.rule(), w, i);
}

// True iff u occurs in w at position i.
bool applicable_at(const Rule& rule, const Word& w, std::size_t i);

// Every out-edge of w, positions ascending. Parallel edges (equal targets
// from distinct positions) are kept.
std::vector<Step> successors(const Rule& rule, const Word& w);
inline std::vector<Step> successors(const OneRuleSrs& srs, const Word& w) {
  return successors(srs.rule(), w);
}

// Folds apply_at over `positions`; throws TraceError carrying the index of
// the first failing step.
ReductionTrace run_trace(const Rule& rule, const Word& start,
                         std::span<const std::size_t> positions);
inline ReductionTrace run_trace(const OneRuleSrs& srs, const Word& start,
                                std::span<const std::size_t> positions) {
  return run_trace(srs.rule(), start, positions);
}

Rule converse(const Rule& rule);
OneRuleSrs converse(const OneRuleSrs& srs);

}  // namespace onerule
