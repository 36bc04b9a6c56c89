#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "onerule/srs.hpp"

namespace onerule {

// A letter together with a flag recording whether some rewrite produced it.
struct Cell {
  Letter letter;
  bool decorated = false;

  friend bool operator==(const Cell&, const Cell&) = default;
};

class DecoratedWord {
 public:
  DecoratedWord() = default;
  explicit DecoratedWord(std::vector<Cell> cells) : cells_(std::move(cells)) {}
  // Every letter of w, undecorated.
  static DecoratedWord plain(const Word& w);

  std::size_t size() const noexcept { return cells_.size(); }
  const Cell& operator[](std::size_t i) const { return cells_[i]; }
  auto begin() const noexcept { return cells_.begin(); }
  auto end() const noexcept { return cells_.end(); }

  // Space-separated letters, decorated ones followed by '*'.
  std::string str() const;

  friend bool operator==(const DecoratedWord&, const DecoratedWord&) = default;

 private:
  std::vector<Cell> cells_;
};

struct DecoratedTrace {
  std::vector<std::size_t> positions;
  std::vector<DecoratedWord> words;
};

Word project(const DecoratedWord& w);

// One step of the decorated system: the |u| cells at position i, whose
// projection must spell u, become v with every letter decorated.
DecoratedWord apply_decorated(const Rule& rule, const DecoratedWord& w, std::size_t i);

// Lifts a reduction of <A | u -> v> into the decorated system, starting from
// the undecorated start word.
DecoratedTrace lift(const Rule& rule, const ReductionTrace& trace);
inline DecoratedTrace lift(const OneRuleSrs& srs, const ReductionTrace& trace) {
  return lift(srs.rule(), trace);
}

std::optional<std::size_t> first_decorated_position(const DecoratedWord& w);

}  // namespace onerule
