#include "onerule/oracle.hpp"

#include <algorithm>

#include "onerule/error.hpp"

namespace onerule {

namespace {

std::vector<Word> distinct_targets(const OneRuleSrs& srs, const Word& w) {
  std::vector<Word> targets;
  for (Step& step : successors(srs, w)) targets.push_back(std::move(step.target));
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return targets;
}

template <typename Visit>
void for_each_start(const OneRuleSrs& srs, const SearchBounds& bounds, Visit&& visit) {
  bool keep_going = true;
  for_each_word(srs.alphabet(), bounds.max_word_len, bounds.max_start_words,
                [&](const Word& x) { return keep_going = visit(x); });
  for (const Word& x : bounds.extra_start_words) {
    if (!keep_going) break;
    keep_going = visit(x);
  }
}

}  // namespace

DiamondMap diamonds_from(const OneRuleSrs& srs, const Word& x) {
  DiamondMap result;
  for (const Word& z : distinct_targets(srs, x)) {
    if (z == x) continue;
    for (const Word& y : distinct_targets(srs, z)) {
      if (y == x || y == z) continue;
      result[y].insert(z);
    }
  }
  return result;
}

void for_each_word(const Alphabet& alphabet, std::size_t max_len, std::size_t max_count,
                   const std::function<bool(const Word&)>& visit) {
  if (max_count == 0) return;
  std::size_t count = 0;
  if (!visit(Word{}) || ++count >= max_count || alphabet.empty()) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    // Odometer over letter indices; the last position varies fastest.
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      std::vector<Letter> letters;
      letters.reserve(len);
      for (std::size_t d : digits) letters.push_back(alphabet[d]);
      if (!visit(Word(std::move(letters))) || ++count >= max_count) return;
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == alphabet.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
}

WidthResult max_diamond_width(const OneRuleSrs& srs, const SearchBounds& bounds) {
  WidthResult result;
  for_each_start(srs, bounds, [&](const Word& x) {
    ++result.start_words;
    for (const auto& [y, mids] : diamonds_from(srs, x)) {
      if (mids.size() > result.width) {
        result.width = mids.size();
        result.example = DiamondExample{x, y, {mids.begin(), mids.end()}};
      }
    }
    return true;
  });
  return result;
}

std::optional<WitnessDiamond> search_mk(const OneRuleSrs& srs, std::size_t k,
                                        const SearchBounds& bounds) {
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "search_mk: k = 0");
  std::optional<WitnessDiamond> found;
  for_each_start(srs, bounds, [&](const Word& x) {
    for (const auto& [y, mids] : diamonds_from(srs, x)) {
      if (mids.size() < k) continue;
      WitnessDiamond d{x, {}, y, {}, {}};
      for (const Word& z : mids) {
        if (d.mids.size() == k) break;
        d.mids.push_back(z);
        d.out_positions.push_back(*realizing_position(srs.rule(), x, z));
        d.in_positions.push_back(*realizing_position(srs.rule(), z, y));
      }
      const auto report = verify_diamond(srs, d);
      if (!report) {
        throw Error(ErrorCode::VerificationFailed, "search_mk: " + report.failure);
      }
      found = std::move(d);
      return false;
    }
    return true;
  });
  return found;
}

std::map<Word, std::set<std::size_t>> path_lengths_from(const OneRuleSrs& srs,
                                                        const Word& start,
                                                        std::size_t radius) {
  std::map<Word, std::set<std::size_t>> lengths;
  // The layer at depth d holds every vertex ending some path of length d.
  std::set<Word> layer{start};
  lengths[start].insert(0);
  for (std::size_t depth = 1; depth <= radius; ++depth) {
    std::set<Word> next;
    for (const Word& w : layer) {
      for (Step& step : successors(srs, w)) {
        lengths[step.target].insert(depth);
        next.insert(std::move(step.target));
      }
    }
    layer = std::move(next);
  }
  return lengths;
}

}  // namespace onerule
