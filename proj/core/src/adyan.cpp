#include "onerule/adyan.hpp"

#include "onerule/error.hpp"

namespace onerule {

LetterTable::LetterTable(std::string prefix, Alphabet reserved)
    : prefix_(std::move(prefix)), reserved_(std::move(reserved)) {}

Letter LetterTable::intern(const Word& gap) {
  if (auto found = find_letter(gap)) return *found;
  std::string name = prefix_ + std::to_string(entries_.size() + 1);
  while (reserved_.contains(Letter(name))) name += '\'';
  const Letter fresh(name);
  by_gap_.emplace(gap, entries_.size());
  by_letter_.emplace(fresh, entries_.size());
  entries_.push_back({fresh, gap});
  return fresh;
}

std::optional<Letter> LetterTable::find_letter(const Word& gap) const {
  const auto it = by_gap_.find(gap);
  if (it == by_gap_.end()) return std::nullopt;
  return entries_[it->second].letter;
}

std::optional<Word> LetterTable::find_gap(Letter letter) const {
  const auto it = by_letter_.find(letter);
  if (it == by_letter_.end()) return std::nullopt;
  return entries_[it->second].gap;
}

std::string stage_letter_prefix(std::size_t stage) {
  if (stage < 25) return std::string(1, static_cast<char>('b' + stage));
  return "s" + std::to_string(stage) + "_";
}

std::vector<Word> bord_decompose(const Word& t, const Word& x) {
  if (t.empty()) throw Error(ErrorCode::EmptyWord, "bord_decompose: empty T");
  if (!is_self_overlap_free(t)) {
    throw Error(ErrorCode::NotSelfOverlapFree, t.str() + " has a self-overlap");
  }
  if (!is_bordered_with(x, t)) {
    throw Error(ErrorCode::NotBordered, x.str() + " is not bordered with " + t.str());
  }
  const auto occ = occurrences(t, x);
  std::vector<Word> gaps;
  gaps.reserve(occ.size() - 1);
  for (std::size_t j = 0; j + 1 < occ.size(); ++j) {
    const std::size_t from = occ[j] + t.size();
    if (occ[j + 1] < from) {
      throw Error(ErrorCode::NotSelfOverlapFree,
                  "overlapping occurrences of " + t.str() + " in " + x.str());
    }
    gaps.push_back(x.factor(from, occ[j + 1] - from));
  }
  return gaps;
}

Word encode(const Word& t, LetterTable& table, const Word& x) {
  Word out;
  for (const Word& gap : bord_decompose(t, x)) out.push_back(table.intern(gap));
  return out;
}

Word decode(const Word& t, const LetterTable& table, const Word& c) {
  Word out = t;
  for (Letter b : c) {
    const auto gap = table.find_gap(b);
    if (!gap) {
      throw Error(ErrorCode::UnknownLetter,
                  "letter '" + b.name() + "' has no table entry");
    }
    out += *gap;
    out += t;
  }
  return out;
}

BorderedCore extract_bordered_core(const Word& t, const Word& x) {
  if (t.empty()) throw Error(ErrorCode::EmptyWord, "extract_bordered_core: empty T");
  const auto occ = occurrences(t, x);
  if (occ.empty()) {
    throw Error(ErrorCode::NoOccurrence, t.str() + " is not a factor of " + x.str());
  }
  const std::size_t first = occ.front();
  const std::size_t end = occ.back() + t.size();
  return {x.prefix(first), x.factor(first, end - first), x.factor(end, x.size() - end)};
}

AdyanStage adyan_step(const Rule& rule, std::size_t stage, const Alphabet& reserved) {
  const Word& u = rule.lhs;
  const Word& v = rule.rhs;
  if (u.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "adyan_step: empty left-hand side");
  }
  if (u == v) {
    throw Error(ErrorCode::PreconditionViolated, "adyan_step: u = v in " + rule.str());
  }
  if (!is_bordered_with(v, u)) {
    throw Error(ErrorCode::PreconditionViolated,
                "adyan_step: " + v.str() + " is not bordered with " + u.str());
  }

  AdyanStage result{shortest_overlap_or_self(u),
                    LetterTable(stage_letter_prefix(stage), reserved),
                    rule,
                    {},
                    {}};
  const Word& t = result.t;
  if (!is_self_overlap_free(t)) {
    throw Error(ErrorCode::VerificationFailed, "T = " + t.str() + " overlaps itself");
  }

  // lhs gaps are minted before rhs gaps.
  result.output = Rule{encode(t, result.table, u), encode(t, result.table, v)};
  for (const auto& entry : result.table.entries()) {
    if (is_factor(t, entry.gap)) {
      throw Error(ErrorCode::VerificationFailed,
                  "gap " + entry.gap.str() + " contains T = " + t.str());
    }
  }
  if (result.output.lhs.size() >= u.size() || result.output.rhs.size() >= v.size()) {
    throw Error(ErrorCode::VerificationFailed, "encoding did not shrink " + rule.str());
  }
  if (!is_bordered_with(result.output.rhs, result.output.lhs)) {
    throw Error(ErrorCode::VerificationFailed,
                "encoded rule " + result.output.str() + " lost its border");
  }
  result.output_alphabet = letters_of(result.output.lhs, result.output.rhs);
  return result;
}

AdyanChain adyan_chain(const OneRuleSrs& srs) {
  std::vector<AdyanStage> stages;
  Rule current = srs.rule();
  // Names stay unique across the whole chain, not only per stage.
  std::vector<Letter> reserved(srs.alphabet().begin(), srs.alphabet().end());
  while (!current.lhs.empty()) {
    stages.push_back(adyan_step(current, stages.size(), Alphabet(reserved)));
    current = stages.back().output;
    const Alphabet& minted = stages.back().output_alphabet;
    reserved.insert(reserved.end(), minted.begin(), minted.end());
  }
  if (stages.empty()) return {{}, srs};
  OneRuleSrs final_system(stages.back().output_alphabet, current);
  return {std::move(stages), std::move(final_system)};
}

AdyanChain adyan_chain(const Rule& rule) {
  return adyan_chain(OneRuleSrs(letters_of(rule.lhs, rule.rhs), rule));
}

}  // namespace onerule
