#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace onerule {

// An interned symbol. Two letters compare equal iff their names are equal;
// copies are a pointer wide, so words of letters stay cheap to hash and copy.
class Letter {
 public:
  explicit Letter(std::string_view name);

  const std::string& name() const noexcept { return *name_; }

  friend bool operator==(Letter a, Letter b) noexcept {
    return a.name_ == b.name_;
  }
  friend std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return *a.name_ <=> *b.name_;
  }

  std::size_t hash() const noexcept {
    return std::hash<const void*>{}(name_);
  }

 private:
  const std::string* name_;
};

// A finite sequence of letters. Positions are 0-based: the letter at
// position i is preceded by a prefix of length i.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  template <typename It>
  Word(It first, It last) : letters_(first, last) {}

  // Every character of `chars` becomes one single-character letter.
  static Word from_chars(std::string_view chars);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  // Factor of length `len` starting at `pos` (clamped to the word's end).
  Word factor(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return factor(0, len); }
  Word suffix(std::size_t len) const;

  void push_back(Letter a) { letters_.push_back(a); }
  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  Word power(std::size_t n) const;

  // "1" for the empty word; letters are concatenated when every name is a
  // single character and space-separated otherwise.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// An ordered set of letters; insertion order is kept, duplicates dropped.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters);
  static Alphabet from_chars(std::string_view chars);

  bool contains(Letter a) const noexcept;
  bool contains_all(const Word& w) const noexcept;
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  std::string str() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Letter> letters_;
};

// Letters of `w` in order of first occurrence.
Alphabet letters_of(const Word& w);
Alphabet letters_of(const Word& a, const Word& b);

bool is_prefix(const Word& u, const Word& v);
bool is_suffix(const Word& u, const Word& v);
bool is_factor(const Word& t, const Word& x);
// True iff u is both a prefix and a suffix of v.
bool is_bordered_with(const Word& v, const Word& u);

// All start positions of `t` in `x`, overlapping ones included, ascending.
// Throws Error(EmptyWord) for empty t.
std::vector<std::size_t> occurrences(const Word& t, const Word& x);

// Non-empty proper borders of u, shortest first.
std::vector<Word> self_overlaps(const Word& u);
bool is_self_overlap_free(const Word& u);

// The shortest self-overlap of u, or u itself when it has none.
// The result is always self-overlap-free. Throws Error(EmptyWord) for empty u.
Word shortest_overlap_or_self(const Word& u);

Word longest_common_prefix(const Word& u, const Word& v);

}  // namespace onerule

template <>
struct std::hash<onerule::Letter> {
  std::size_t operator()(onerule::Letter a) const noexcept { return a.hash(); }
};

template <>
struct std::hash<onerule::Word> : onerule::WordHash {};
