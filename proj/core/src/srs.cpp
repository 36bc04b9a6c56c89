#include "onerule/srs.hpp"

#include <algorithm>

#include "onerule/error.hpp"

namespace onerule {

OneRuleSrs::OneRuleSrs(Alphabet alphabet, Rule rule)
    : alphabet_(std::move(alphabet)), rule_(std::move(rule)) {
  if (alphabet_.empty()) {
    throw Error(ErrorCode::InvalidSystem, "alphabet must be non-empty");
  }
  for (const Word* side : {&rule_.lhs, &rule_.rhs}) {
    for (Letter a : *side) {
      if (!alphabet_.contains(a)) {
        throw Error(ErrorCode::InvalidSystem,
                    "letter '" + a.name() + "' of rule " + rule_.str() +
                        " is not in alphabet " + alphabet_.str());
      }
    }
  }
}

OneRuleSrs OneRuleSrs::from_chars(std::string_view alphabet, std::string_view lhs,
                                  std::string_view rhs) {
  return OneRuleSrs(Alphabet::from_chars(alphabet),
                    Rule{Word::from_chars(lhs), Word::from_chars(rhs)});
}

bool applicable_at(const Rule& rule, const Word& w, std::size_t i) {
  const Word& u = rule.lhs;
  return u.size() <= w.size() && i <= w.size() - u.size() &&
         std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(i));
}

Word apply_at(const Rule& rule, const Word& w, std::size_t i) {
  const Word& u = rule.lhs;
  if (u.size() > w.size() || i > w.size() - u.size()) {
    throw Error(ErrorCode::OutOfRange,
                "position " + std::to_string(i) + " out of range for " +
                    rule.str() + " in " + w.str());
  }
  if (!applicable_at(rule, w, i)) {
    throw Error(ErrorCode::RuleNotApplicable,
                "factor of " + w.str() + " at position " + std::to_string(i) +
                    " is not " + u.str());
  }
  std::vector<Letter> out;
  out.reserve(w.size() - u.size() + rule.rhs.size());
  const auto at = w.begin() + static_cast<std::ptrdiff_t>(i);
  out.insert(out.end(), w.begin(), at);
  out.insert(out.end(), rule.rhs.begin(), rule.rhs.end());
  out.insert(out.end(), at + static_cast<std::ptrdiff_t>(u.size()), w.end());
  return Word(std::move(out));
}

std::vector<Step> successors(const Rule& rule, const Word& w) {
  std::vector<Step> steps;
  if (rule.lhs.size() > w.size()) return steps;
  for (std::size_t i = 0; i + rule.lhs.size() <= w.size(); ++i) {
    if (applicable_at(rule, w, i)) steps.push_back({i, apply_at(rule, w, i)});
  }
  return steps;
}

ReductionTrace run_trace(const Rule& rule, const Word& start,
                         std::span<const std::size_t> positions) {
  ReductionTrace trace;
  trace.words.reserve(positions.size() + 1);
  trace.words.push_back(start);
  for (std::size_t step = 0; step < positions.size(); ++step) {
    try {
      trace.words.push_back(apply_at(rule, trace.words.back(), positions[step]));
    } catch (const Error& e) {
      throw TraceError(e.code(), step,
                       "step " + std::to_string(step) + ": " + e.what());
    }
    trace.positions.push_back(positions[step]);
  }
  return trace;
}

Rule converse(const Rule& rule) { return Rule{rule.rhs, rule.lhs}; }

OneRuleSrs converse(const OneRuleSrs& srs) {
  return OneRuleSrs(srs.alphabet(), converse(srs.rule()));
}

}  // namespace onerule
