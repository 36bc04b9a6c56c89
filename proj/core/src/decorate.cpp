#include "onerule/decorate.hpp"

#include <algorithm>

#include "onerule/error.hpp"

namespace onerule {

DecoratedWord DecoratedWord::plain(const Word& w) {
  std::vector<Cell> cells;
  cells.reserve(w.size());
  for (Letter a : w) cells.push_back({a, false});
  return DecoratedWord(std::move(cells));
}

std::string DecoratedWord::str() const {
  if (cells_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i > 0) out += ' ';
    out += cells_[i].letter.name();
    if (cells_[i].decorated) out += '*';
  }
  return out;
}

Word project(const DecoratedWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (const Cell& c : w) letters.push_back(c.letter);
  return Word(std::move(letters));
}

DecoratedWord apply_decorated(const Rule& rule, const DecoratedWord& w, std::size_t i) {
  const Word& u = rule.lhs;
  if (u.size() > w.size() || i > w.size() - u.size()) {
    throw Error(ErrorCode::OutOfRange,
                "position " + std::to_string(i) + " out of range in " + w.str());
  }
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (w[i + j].letter != u[j]) {
      throw Error(ErrorCode::RuleNotApplicable,
                  "factor of " + w.str() + " at position " + std::to_string(i) +
                      " does not project to " + u.str());
    }
  }
  std::vector<Cell> cells(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  for (Letter a : rule.rhs) cells.push_back({a, true});
  cells.insert(cells.end(), w.begin() + static_cast<std::ptrdiff_t>(i + u.size()),
               w.end());
  return DecoratedWord(std::move(cells));
}

DecoratedTrace lift(const Rule& rule, const ReductionTrace& trace) {
  DecoratedTrace lifted;
  lifted.positions = trace.positions;
  lifted.words.reserve(trace.words.size());
  lifted.words.push_back(DecoratedWord::plain(trace.start()));
  for (std::size_t step = 0; step < trace.positions.size(); ++step) {
    try {
      lifted.words.push_back(
          apply_decorated(rule, lifted.words.back(), trace.positions[step]));
    } catch (const Error& e) {
      throw TraceError(e.code(), step,
                       "step " + std::to_string(step) + ": " + e.what());
    }
  }
  return lifted;
}

std::optional<std::size_t> first_decorated_position(const DecoratedWord& w) {
  const auto it =
      std::find_if(w.begin(), w.end(), [](const Cell& c) { return c.decorated; });
  if (it == w.end()) return std::nullopt;
  return static_cast<std::size_t>(it - w.begin());
}

}  // namespace onerule
