#include "onerule/words.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "onerule/error.hpp"

namespace onerule {

namespace {

// Node-based storage keeps element addresses stable across rehashing.
class Interner {
 public:
  const std::string* intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    return &*names_.emplace(name).first;
  }

 private:
  std::mutex mutex_;
  std::unordered_set<std::string> names_;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

// Classic failure function: result[i] is the length of the longest proper
// border of the first i + 1 letters.
std::vector<std::size_t> border_array(const Word& u) {
  std::vector<std::size_t> border(u.size(), 0);
  for (std::size_t i = 1; i < u.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && u[i] != u[k]) k = border[k - 1];
    if (u[i] == u[k]) ++k;
    border[i] = k;
  }
  return border;
}

}  // namespace

Letter::Letter(std::string_view name) : name_(interner().intern(name)) {}

Word Word::from_chars(std::string_view chars) {
  Word w;
  w.letters_.reserve(chars.size());
  for (char c : chars) w.letters_.emplace_back(std::string_view(&c, 1));
  return w;
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos >= letters_.size()) return {};
  len = std::min(len, letters_.size() - pos);
  return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
              letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

Word Word::suffix(std::size_t len) const {
  len = std::min(len, letters_.size());
  return factor(letters_.size() - len, len);
}

Word& Word::operator+=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word Word::power(std::size_t n) const {
  Word w;
  w.letters_.reserve(letters_.size() * n);
  for (std::size_t i = 0; i < n; ++i) w += *this;
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  const bool compact = std::all_of(letters_.begin(), letters_.end(),
                                   [](Letter a) { return a.name().size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += letters_[i].name();
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (Letter a : w) h ^= a.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Alphabet::Alphabet(std::vector<Letter> letters) {
  for (Letter a : letters) {
    if (!contains(a)) letters_.push_back(a);
  }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  const Word w = Word::from_chars(chars);
  return Alphabet(std::vector<Letter>(w.begin(), w.end()));
}

bool Alphabet::contains(Letter a) const noexcept {
  return std::find(letters_.begin(), letters_.end(), a) != letters_.end();
}

bool Alphabet::contains_all(const Word& w) const noexcept {
  return std::all_of(w.begin(), w.end(), [this](Letter a) { return contains(a); });
}

std::string Alphabet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += ", ";
    out += letters_[i].name();
  }
  return out + "}";
}

Alphabet letters_of(const Word& w) {
  return Alphabet(std::vector<Letter>(w.begin(), w.end()));
}

Alphabet letters_of(const Word& a, const Word& b) { return letters_of(a + b); }

bool is_prefix(const Word& u, const Word& v) {
  return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

bool is_suffix(const Word& u, const Word& v) {
  return u.size() <= v.size() &&
         std::equal(u.begin(), u.end(),
                    v.end() - static_cast<std::ptrdiff_t>(u.size()));
}

bool is_factor(const Word& t, const Word& x) {
  return t.empty() ||
         std::search(x.begin(), x.end(), t.begin(), t.end()) != x.end();
}

bool is_bordered_with(const Word& v, const Word& u) {
  return is_prefix(u, v) && is_suffix(u, v);
}

std::vector<std::size_t> occurrences(const Word& t, const Word& x) {
  if (t.empty()) throw Error(ErrorCode::EmptyWord, "occurrences: empty pattern");
  std::vector<std::size_t> result;
  if (t.size() > x.size()) return result;
  for (std::size_t i = 0; i + t.size() <= x.size(); ++i) {
    if (std::equal(t.begin(), t.end(), x.begin() + static_cast<std::ptrdiff_t>(i))) {
      result.push_back(i);
    }
  }
  return result;
}

std::vector<Word> self_overlaps(const Word& u) {
  std::vector<Word> result;
  if (u.size() < 2) return result;
  const auto border = border_array(u);
  for (std::size_t len = border.back(); len > 0; len = border[len - 1]) {
    result.push_back(u.prefix(len));
  }
  std::reverse(result.begin(), result.end());
  return result;
}

bool is_self_overlap_free(const Word& u) {
  return u.size() < 2 || border_array(u).back() == 0;
}

Word shortest_overlap_or_self(const Word& u) {
  if (u.empty()) {
    throw Error(ErrorCode::EmptyWord, "shortest_overlap_or_self: empty word");
  }
  auto overlaps = self_overlaps(u);
  return overlaps.empty() ? u : overlaps.front();
}

Word longest_common_prefix(const Word& u, const Word& v) {
  const auto mismatch = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
  return Word(u.begin(), mismatch.first);
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::RuleNotApplicable: return "RuleNotApplicable";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotBordered: return "NotBordered";
    case ErrorCode::NotSelfOverlapFree: return "NotSelfOverlapFree";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::NoOccurrence: return "NoOccurrence";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotUnbounded: return "NotUnbounded";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
  }
  return "Unknown";
}

}  // namespace onerule
