#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "onerule/srs.hpp"

namespace onerule {

// Correspondence between fresh letters and the T-free gap words they stand
// for. Letters are minted lazily, in first-seen order, and named
// <prefix><ordinal> ("b1", "b2", ...). A name that collides with a reserved
// letter gets primes appended until it is unique.
class LetterTable {
 public:
  struct Entry {
    Letter letter;
    Word gap;
  };

  explicit LetterTable(std::string prefix = "b", Alphabet reserved = {});

  // Fresh letter for `gap`, minting one if the gap is new.
  Letter intern(const Word& gap);

  std::optional<Letter> find_letter(const Word& gap) const;
  std::optional<Word> find_gap(Letter letter) const;

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::string prefix_;
  Alphabet reserved_;
  std::vector<Entry> entries_;
  std::map<Word, std::size_t> by_gap_;
  std::unordered_map<Letter, std::size_t> by_letter_;
};

// Prefix of the fresh letters minted at a chain stage: b, c, ..., z, then
// s25_, s26_, ...
std::string stage_letter_prefix(std::size_t stage);

// Splits x = T R_1 T R_2 ... R_m T and returns the gaps R_1..R_m (possibly
// empty words). T must be non-empty and self-overlap-free.
// Throws Error(NotSelfOverlapFree) or Error(NotBordered).
std::vector<Word> bord_decompose(const Word& t, const Word& x);

// phi_T(x): one table letter per gap of x.
Word encode(const Word& t, LetterTable& table, const Word& x);

// Inverse of encode. Throws Error(UnknownLetter) for letters without an entry.
Word decode(const Word& t, const LetterTable& table, const Word& c);

struct BorderedCore {
  Word before;  // x', contains no occurrence of T
  Word core;    // spans the first through the last occurrence of T
  Word after;   // x'', contains no occurrence of T
};

// x = x' core x''. Throws Error(NoOccurrence) when T is not a factor of x.
BorderedCore extract_bordered_core(const Word& t, const Word& x);

struct AdyanStage {
  Word t;
  LetterTable table;
  Rule input;
  Rule output;
  Alphabet output_alphabet;  // exactly the letters occurring in `output`
};

// One reduction step. Requires a non-empty lhs, lhs != rhs and rhs bordered
// with lhs; throws Error(PreconditionViolated) otherwise. Fresh letters use
// stage_letter_prefix(stage) and avoid the `reserved` letters.
AdyanStage adyan_step(const Rule& rule, std::size_t stage = 0,
                      const Alphabet& reserved = {});

struct AdyanChain {
  std::vector<AdyanStage> stages;
  OneRuleSrs final_system;  // lhs is empty
};

// Repeats adyan_step until the lhs is empty. An input whose lhs is already
// empty yields no stages and returns the system unchanged.
AdyanChain adyan_chain(const OneRuleSrs& srs);
AdyanChain adyan_chain(const Rule& rule);

}  // namespace onerule
