#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "onerule/adyan.hpp"
#include "onerule/srs.hpp"

namespace onerule {

// The largest k such that the diamond M_k embeds in the reduction graph:
// either a finite value in {0, 1, 2} or unbounded.
class MaxK {
 public:
  static MaxK finite(std::size_t k) { return MaxK(k); }
  static MaxK unbounded() { return MaxK(std::nullopt); }

  bool is_unbounded() const noexcept { return !value_; }
  // Only meaningful for finite values.
  std::size_t value() const { return value_.value(); }
  // True iff M_k embeds.
  bool admits(std::size_t k) const noexcept { return !value_ || k <= *value_; }

  std::string str() const { return value_ ? std::to_string(*value_) : "unbounded"; }

  friend bool operator==(const MaxK&, const MaxK&) = default;

 private:
  explicit MaxK(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

struct PowerOfLetter {
  Letter letter;
  std::size_t exponent;
};

// A word with at least two distinct letters: its first letter and the first
// letter that differs from it.
struct Mixed {
  Letter first;
  Letter other;
};

using SpecialForm = std::variant<PowerOfLetter, Mixed>;

enum class BorderFailure { PrefixFails, SuffixFails };

namespace cases {
struct Degenerate {};
struct UnaryAlphabet {};
struct NotBordered {
  BorderFailure side;
};
struct Bordered {
  AdyanChain chain;
  SpecialForm special_form;
};
}  // namespace cases

using CasePath = std::variant<cases::Degenerate, cases::UnaryAlphabet,
                              cases::NotBordered, cases::Bordered>;

struct Classification {
  OneRuleSrs system;
  // The converse was taken because |u| > |v|.
  bool normalized = false;
  MaxK max_k;
  CasePath case_path;

  // The system the case analysis ran on (the converse when normalized).
  OneRuleSrs working_system() const { return normalized ? converse(system) : system; }
};

// (b, n) when v = b^n. Throws Error(EmptyWord) for the empty word.
std::optional<PowerOfLetter> is_power_of_letter(const Word& v);
SpecialForm special_form(const Word& v);

Classification classify(const OneRuleSrs& srs);

std::string_view case_name(const CasePath& path);
std::string_view to_string(BorderFailure side);

// Multi-line human-readable account of which branch decided the answer.
std::string explain(const Classification& c);

}  // namespace onerule
