#include "onerule/classify.hpp"

#include <sstream>

#include "onerule/error.hpp"

namespace onerule {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

MaxK max_k_for(const SpecialForm& form) {
  return std::holds_alternative<PowerOfLetter>(form) ? MaxK::finite(2)
                                                     : MaxK::unbounded();
}

}  // namespace

std::optional<PowerOfLetter> is_power_of_letter(const Word& v) {
  if (v.empty()) throw Error(ErrorCode::EmptyWord, "is_power_of_letter: empty word");
  for (Letter a : v) {
    if (a != v.front()) return std::nullopt;
  }
  return PowerOfLetter{v.front(), v.size()};
}

SpecialForm special_form(const Word& v) {
  if (auto power = is_power_of_letter(v)) return *power;
  for (Letter a : v) {
    if (a != v.front()) return Mixed{v.front(), a};
  }
  throw Error(ErrorCode::VerificationFailed, "unreachable: " + v.str());
}

Classification classify(const OneRuleSrs& srs) {
  if (srs.lhs() == srs.rhs()) {
    return {srs, false, MaxK::finite(0), cases::Degenerate{}};
  }
  if (srs.alphabet().size() == 1) {
    return {srs, false, MaxK::finite(1), cases::UnaryAlphabet{}};
  }

  const bool normalized = srs.lhs().size() > srs.rhs().size();
  const OneRuleSrs work = normalized ? converse(srs) : srs;
  const Word& u = work.lhs();
  const Word& v = work.rhs();

  if (u.empty()) {
    auto form = special_form(v);
    const MaxK k = max_k_for(form);
    return {srs, normalized, k, cases::Bordered{adyan_chain(work), form}};
  }
  if (!is_bordered_with(v, u)) {
    const auto side =
        is_prefix(u, v) ? BorderFailure::SuffixFails : BorderFailure::PrefixFails;
    return {srs, normalized, MaxK::finite(2), cases::NotBordered{side}};
  }
  // A word of length |v| bordered with v would equal v.
  if (u.size() >= v.size()) {
    throw Error(ErrorCode::VerificationFailed,
                "bordered rule with |u| >= |v|: " + work.rule().str());
  }

  auto chain = adyan_chain(work);
  auto form = special_form(chain.final_system.rhs());
  const MaxK k = max_k_for(form);
  return {srs, normalized, k, cases::Bordered{std::move(chain), form}};
}

std::string_view case_name(const CasePath& path) {
  return std::visit(overloaded{
                        [](const cases::Degenerate&) { return "degenerate"; },
                        [](const cases::UnaryAlphabet&) { return "unary-alphabet"; },
                        [](const cases::NotBordered&) { return "not-bordered"; },
                        [](const cases::Bordered&) { return "bordered"; },
                    },
                    path);
}

std::string_view to_string(BorderFailure side) {
  return side == BorderFailure::PrefixFails ? "prefix-fails" : "suffix-fails";
}

std::string explain(const Classification& c) {
  std::ostringstream out;
  out << "system: " << c.system.str() << '\n';
  if (c.normalized) {
    out << "|u| > |v|: working with the converse system "
        << c.working_system().str() << '\n';
  }
  const OneRuleSrs work = c.working_system();
  const Rule& rule = work.rule();
  std::visit(
      overloaded{
          [&](const cases::Degenerate&) {
            out << "u = v: every edge is a loop, so not even M_1 embeds\n";
          },
          [&](const cases::UnaryAlphabet&) {
            out << "|A| = 1: non-trivial components are paths, so only M_1 embeds\n";
          },
          [&](const cases::NotBordered& nb) {
            out << rule.rhs.str() << " is not bordered with " << rule.lhs.str() << " ("
                << (nb.side == BorderFailure::PrefixFails ? "u is not a prefix of v"
                                                          : "u is not a suffix of v")
                << "): M_2 embeds, M_3 does not\n";
          },
          [&](const cases::Bordered& b) {
            if (b.chain.stages.empty()) {
              out << "special system " << rule.str() << '\n';
            } else {
              out << rule.rhs.str() << " is bordered with " << rule.lhs.str()
                  << "; Adyan reduction in " << b.chain.stages.size() << " stage(s):\n";
              for (std::size_t i = 0; i < b.chain.stages.size(); ++i) {
                const AdyanStage& s = b.chain.stages[i];
                out << "  stage " << i + 1 << ": T = " << s.t.str() << ", "
                    << s.input.str() << "  =>  " << s.output.str() << "  [";
                for (std::size_t j = 0; j < s.table.entries().size(); ++j) {
                  const auto& e = s.table.entries()[j];
                  out << (j ? ", " : "") << e.letter.name() << " = " << e.gap.str();
                }
                out << "]\n";
              }
            }
            const Word& tilde_v = b.chain.final_system.rhs();
            std::visit(overloaded{
                           [&](const PowerOfLetter& p) {
                             out << "final special system 1 -> " << tilde_v.str()
                                 << " is a power of the single letter "
                                 << p.letter.name() << " (exponent " << p.exponent
                                 << "): M_2 embeds, M_3 does not\n";
                           },
                           [&](const Mixed& m) {
                             out << "final special system 1 -> " << tilde_v.str()
                                 << " uses distinct letters " << m.first.name()
                                 << " and " << m.other.name()
                                 << ": M_k embeds for every k\n";
                           },
                       },
                       b.special_form);
          },
      },
      c.case_path);
  out << "maximal k: " << c.max_k.str() << '\n';
  return out.str();
}

}  // namespace onerule
