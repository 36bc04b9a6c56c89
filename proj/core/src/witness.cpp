#include "onerule/witness.hpp"

#include <algorithm>
#include <utility>

#include "onerule/classify.hpp"
#include "onerule/error.hpp"

namespace onerule {

namespace {

std::string edge_str(const Word& from, std::size_t position, const Word& to) {
  return from.str() + " -(" + std::to_string(position) + ")-> " + to.str();
}

WitnessDiamond reversed(const WitnessDiamond& d) {
  return {d.y, d.mids, d.x, d.in_positions, d.out_positions};
}

void sort_by_out_position(WitnessDiamond& d) {
  std::vector<std::size_t> order(d.mids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.out_positions[a] < d.out_positions[b];
  });
  WitnessDiamond sorted{d.x, {}, d.y, {}, {}};
  for (std::size_t i : order) {
    sorted.mids.push_back(d.mids[i]);
    sorted.out_positions.push_back(d.out_positions[i]);
    sorted.in_positions.push_back(d.in_positions[i]);
  }
  d = std::move(sorted);
}

void require_verified(const VerificationReport& report, std::string_view what) {
  if (!report) {
    throw Error(ErrorCode::VerificationFailed,
                std::string(what) + ": " + report.failure);
  }
}

}  // namespace

std::optional<std::size_t> realizing_position(const Rule& rule, const Word& from,
                                              const Word& to) {
  for (const Step& step : successors(rule, from)) {
    if (step.target == to) return step.position;
  }
  return std::nullopt;
}

VerificationReport verify_diamond(const Rule& rule, const WitnessDiamond& d) {
  const std::size_t k = d.mids.size();
  if (k == 0) return {false, "no middle vertices"};
  if (d.out_positions.size() != k || d.in_positions.size() != k) {
    return {false, "expected " + std::to_string(k) + " out- and in-positions"};
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::pair<const Word*, const Word*> edges[] = {{&d.x, &d.mids[i]},
                                                         {&d.mids[i], &d.y}};
    const std::string z = "z" + std::to_string(i);
    const std::string names[] = {"x -> " + z, z + " -> y"};
    const std::size_t positions[] = {d.out_positions[i], d.in_positions[i]};
    for (int e = 0; e < 2; ++e) {
      const auto& [from, to] = edges[e];
      const std::string label = names[e] + " (" + edge_str(*from, positions[e], *to) + ")";
      if (!applicable_at(rule, *from, positions[e])) {
        return {false, "edge " + label + ": rule not applicable"};
      }
      if (apply_at(rule, *from, positions[e]) != *to) {
        return {false, "edge " + label + ": rewrite yields " +
                           apply_at(rule, *from, positions[e]).str()};
      }
    }
  }
  std::vector<std::pair<std::string, const Word*>> vertices;
  vertices.emplace_back("x", &d.x);
  for (std::size_t i = 0; i < k; ++i) vertices.emplace_back("z" + std::to_string(i), &d.mids[i]);
  vertices.emplace_back("y", &d.y);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (*vertices[i].second == *vertices[j].second) {
        return {false, "vertices " + vertices[i].first + " and " + vertices[j].first +
                           " coincide (" + vertices[i].second->str() + ")"};
      }
    }
  }
  return {};
}

VerificationReport verify_diamond(const OneRuleSrs& srs, const WitnessDiamond& d) {
  const auto check_letters = [&](const Word& w) { return srs.alphabet().contains_all(w); };
  if (!check_letters(d.x) || !check_letters(d.y) ||
      !std::all_of(d.mids.begin(), d.mids.end(), check_letters)) {
    return {false, "a vertex uses letters outside " + srs.alphabet().str()};
  }
  return verify_diamond(srs.rule(), d);
}

WitnessDiamond m2_witness(const OneRuleSrs& srs) {
  const Word& u = srs.lhs();
  const Word& v = srs.rhs();
  if (srs.alphabet().size() < 2) {
    throw Error(ErrorCode::PreconditionViolated, "m2_witness: |A| < 2");
  }
  if (u == v) throw Error(ErrorCode::PreconditionViolated, "m2_witness: u = v");

  const std::size_t base_l = std::max(u.size(), v.size()) + 1;
  for (std::size_t l = base_l; l <= base_l + 7; ++l) {
    for (Letter a : srs.alphabet()) {
      for (Letter b : srs.alphabet()) {
        if (a == b) continue;
        const Word w = Word{a}.power(l) + Word{b}.power(l);
        const Word uw = u + w;
        const Word vw = v + w;
        if (uw + v == vw + u) continue;
        WitnessDiamond d{uw + u, {vw + u, uw + v}, vw + v, {0, uw.size()},
                         {vw.size(), 0}};
        if (verify_diamond(srs, d)) return d;
      }
    }
  }
  throw Error(ErrorCode::VerificationFailed,
              "m2_witness: no suitable w found for " + srs.str());
}

WitnessDiamond mk_witness_base(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "mk_witness_base: k = 0");
  const Word block = Word::from_chars("aabb");
  const Word ab = Word::from_chars("ab");
  WitnessDiamond d;
  d.x = block.power(k - 1);
  d.y = block.power(k);
  for (std::size_t i = 0; i < k; ++i) {
    d.mids.push_back(block.power(i) + ab + block.power(k - i - 1));
    d.out_positions.push_back(4 * i);
    d.in_positions.push_back(4 * i + 1);
  }
  return d;
}

WitnessDiamond lift_via_f(const Word& v, const WitnessDiamond& base) {
  if (v.empty() || is_power_of_letter(v)) {
    throw Error(ErrorCode::PreconditionViolated,
                "lift_via_f: " + v.str() + " must contain two distinct letters");
  }
  const Letter alpha("a");
  const Letter beta("b");
  const Word image_alpha{v.front()};
  const Word image_beta = v.suffix(v.size() - 1);

  const auto image = [&](Letter c) -> const Word& {
    if (c == alpha) return image_alpha;
    if (c == beta) return image_beta;
    throw Error(ErrorCode::PreconditionViolated,
                "lift_via_f: base letter '" + c.name() + "' is not a or b");
  };
  const auto f = [&](const Word& w) {
    Word out;
    for (Letter c : w) out += image(c);
    return out;
  };
  // Position i in a base word maps to |f(prefix of length i)|.
  const auto f_position = [&](const Word& w, std::size_t i) {
    std::size_t p = 0;
    for (std::size_t j = 0; j < i; ++j) p += image(w[j]).size();
    return p;
  };

  WitnessDiamond d;
  d.x = f(base.x);
  d.y = f(base.y);
  for (std::size_t i = 0; i < base.mids.size(); ++i) {
    d.mids.push_back(f(base.mids[i]));
    d.out_positions.push_back(f_position(base.x, base.out_positions[i]));
    d.in_positions.push_back(f_position(base.mids[i], base.in_positions[i]));
  }
  require_verified(verify_diamond(OneRuleSrs(letters_of(v), Rule{{}, v}), d),
                   "lift_via_f");
  return d;
}

WitnessDiamond pullback(const AdyanChain& chain, const WitnessDiamond& d) {
  WitnessDiamond current = d;
  for (auto stage = chain.stages.rbegin(); stage != chain.stages.rend(); ++stage) {
    const auto dec = [&](const Word& w) { return decode(stage->t, stage->table, w); };
    WitnessDiamond next;
    next.x = dec(current.x);
    next.y = dec(current.y);
    for (const Word& z : current.mids) next.mids.push_back(dec(z));
    for (std::size_t i = 0; i < next.mids.size(); ++i) {
      const auto out = realizing_position(stage->input, next.x, next.mids[i]);
      const auto in = realizing_position(stage->input, next.mids[i], next.y);
      if (!out || !in) {
        throw Error(ErrorCode::VerificationFailed,
                    "pullback: decoded edge through " + next.mids[i].str() +
                        " has no realizing position in " + stage->input.str());
      }
      next.out_positions.push_back(*out);
      next.in_positions.push_back(*in);
    }
    require_verified(verify_diamond(stage->input, next), "pullback");
    current = std::move(next);
  }
  return current;
}

WitnessDiamond mk_witness(const OneRuleSrs& srs, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "mk_witness: k = 0");
  const Classification c = classify(srs);
  if (!c.max_k.admits(k)) {
    throw Error(k >= 3 ? ErrorCode::NotUnbounded : ErrorCode::PreconditionViolated,
                "maximal k is " + c.max_k.str() + " for " + srs.str());
  }

  WitnessDiamond d;
  if (k <= 2 && srs.alphabet().size() >= 2) {
    d = m2_witness(srs);
    if (k == 1) d = {d.x, {d.mids[0]}, d.y, {d.out_positions[0]}, {d.in_positions[0]}};
  } else if (k == 1) {
    // uu -> vu -> vv
    const Word& u = srs.lhs();
    const Word& v = srs.rhs();
    d = {u + u, {v + u}, v + v, {0}, {v.size()}};
  } else {
    const auto& bordered = std::get<cases::Bordered>(c.case_path);
    const WitnessDiamond special =
        lift_via_f(bordered.chain.final_system.rhs(), mk_witness_base(k));
    d = pullback(bordered.chain, special);
    if (c.normalized) d = reversed(d);
  }
  sort_by_out_position(d);
  require_verified(verify_diamond(srs, d), "mk_witness");
  return d;
}

}  // namespace onerule
