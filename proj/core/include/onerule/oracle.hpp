#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "onerule/srs.hpp"
#include "onerule/witness.hpp"

namespace onerule {

// Brute-force ground truth over a bounded part of the reduction graph.
// Nothing here consults the classifier or the witness constructions.

struct SearchBounds {
  // Every word over the alphabet with |x| <= max_word_len is a start word.
  std::size_t max_word_len = 0;
  // Cap on the number of enumerated start words.
  std::size_t max_start_words = std::numeric_limits<std::size_t>::max();
  // Start words examined after the enumeration, for targets too long to
  // reach exhaustively.
  std::vector<Word> extra_start_words;
};

// For each y reachable in two steps, the distinct words z with x -> z -> y.
// Entries where z = x, z = y or x = y are left out.
using DiamondMap = std::map<Word, std::set<Word>>;

DiamondMap diamonds_from(const OneRuleSrs& srs, const Word& x);

struct DiamondExample {
  Word x;
  Word y;
  std::vector<Word> mids;
};

struct WidthResult {
  std::size_t width = 0;
  std::optional<DiamondExample> example;
  std::size_t start_words = 0;
};

// Words over the alphabet, shortest first, then lexicographic in the
// alphabet's declared order. Stops early when `visit` returns false.
void for_each_word(const Alphabet& alphabet, std::size_t max_len, std::size_t max_count,
                   const std::function<bool(const Word&)>& visit);

// Largest mid-set over all start words in bounds; the example is the first
// start word (in enumeration order) attaining it.
WidthResult max_diamond_width(const OneRuleSrs& srs, const SearchBounds& bounds);

// First diamond of width >= k in enumeration order, as a verified witness
// using its k smallest mids and the smallest realizing positions.
std::optional<WitnessDiamond> search_mk(const OneRuleSrs& srs, std::size_t k,
                                        const SearchBounds& bounds);

// Lengths of all directed paths of at most `radius` steps from `start`,
// grouped by end vertex. A graded neighbourhood has one length per vertex.
std::map<Word, std::set<std::size_t>> path_lengths_from(const OneRuleSrs& srs,
                                                        const Word& start,
                                                        std::size_t radius);

}  // namespace onerule
