#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "onerule/adyan.hpp"
#include "onerule/srs.hpp"

namespace onerule {

// An explicit copy of M_k in a reduction graph: edges x -> mids[i] at
// out_positions[i] and mids[i] -> y at in_positions[i]. Mids are ordered by
// out-position.
struct WitnessDiamond {
  Word x;
  std::vector<Word> mids;
  Word y;
  std::vector<std::size_t> out_positions;
  std::vector<std::size_t> in_positions;

  std::size_t k() const noexcept { return mids.size(); }

  friend bool operator==(const WitnessDiamond&, const WitnessDiamond&) = default;
};

struct VerificationReport {
  bool ok = true;
  std::string failure;  // first violated condition, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

// Checks every edge with apply_at and pairwise distinctness of all k + 2
// vertices. The OneRuleSrs overload also checks that every vertex is a word
// over the system's alphabet.
VerificationReport verify_diamond(const Rule& rule, const WitnessDiamond& d);
VerificationReport verify_diamond(const OneRuleSrs& srs, const WitnessDiamond& d);

// The square uwu -> {vwu, uwv} -> vwv with w = a^l b^l.
// Throws Error(PreconditionViolated) if |A| < 2 or u = v.
WitnessDiamond m2_witness(const OneRuleSrs& srs);

// x = (aabb)^(k-1), mids[i] = (aabb)^i ab (aabb)^(k-i-1), y = (aabb)^k
// for <{a, b} | 1 -> ab>.
WitnessDiamond mk_witness_base(std::size_t k);

// Image of a base witness under the injective homomorphism a -> v[0],
// b -> v[1..]; the result lives in <letters(v) | 1 -> v>.
// Throws Error(PreconditionViolated) when v is a power of a single letter.
WitnessDiamond lift_via_f(const Word& v, const WitnessDiamond& base);

// Decodes a witness of the chain's final system back through every stage.
// Edge positions are recomputed as the smallest realizing position.
// Throws Error(VerificationFailed) if some decoded edge cannot be realized.
WitnessDiamond pullback(const AdyanChain& chain, const WitnessDiamond& d);

// A verified M_k witness in srs. Throws Error(NotUnbounded) when k >= 3 and
// the system's maximal k is finite, Error(PreconditionViolated) for k = 0 or
// when k <= 2 exceeds the maximum.
WitnessDiamond mk_witness(const OneRuleSrs& srs, std::size_t k);

// Smallest position p with apply_at(rule, from, p) == to.
std::optional<std::size_t> realizing_position(const Rule& rule, const Word& from,
                                              const Word& to);

}  // namespace onerule
