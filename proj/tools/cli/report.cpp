#include "report.hpp"

#include <sstream>

namespace onerule::cli {

namespace {

ordered_json words_json(const std::vector<Word>& words) {
  ordered_json out = ordered_json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

ordered_json special_form_json(const SpecialForm& form) {
  if (const auto* p = std::get_if<PowerOfLetter>(&form)) {
    return {{"kind", "power-of-letter"}, {"letter", p->letter.name()}, {"exponent", p->exponent}};
  }
  const auto& m = std::get<Mixed>(form);
  return {{"kind", "mixed"}, {"letters", {m.first.name(), m.other.name()}}};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

ordered_json to_json(const Alphabet& alphabet) {
  ordered_json out = ordered_json::array();
  for (Letter a : alphabet) out.push_back(a.name());
  return out;
}

ordered_json to_json(const AdyanStage& stage) {
  ordered_json table = ordered_json::array();
  for (const auto& e : stage.table.entries()) {
    table.push_back({{"letter", e.letter.name()}, {"gap", e.gap.str()}});
  }
  return {{"T", stage.t.str()},
          {"inputRule", stage.input.str()},
          {"table", table},
          {"outputRule", stage.output.str()},
          {"outputAlphabet", to_json(stage.output_alphabet)}};
}

ordered_json to_json(const AdyanChain& chain) {
  ordered_json stages = ordered_json::array();
  for (const AdyanStage& s : chain.stages) stages.push_back(to_json(s));
  return stages;
}

ordered_json to_json(const Classification& c) {
  ordered_json out;
  out["rule"] = c.system.rule().str();
  out["alphabet"] = to_json(c.system.alphabet());
  out["normalized"] = c.normalized;
  if (c.max_k.is_unbounded()) {
    out["maxK"] = "unbounded";
  } else {
    out["maxK"] = {{"finite", c.max_k.value()}};
  }
  ordered_json path{{"case", std::string(case_name(c.case_path))}};
  if (const auto* nb = std::get_if<cases::NotBordered>(&c.case_path)) {
    path["side"] = std::string(to_string(nb->side));
  }
  const auto* bordered = std::get_if<cases::Bordered>(&c.case_path);
  if (bordered) {
    path["specialForm"] = special_form_json(bordered->special_form);
    path["finalRule"] = bordered->chain.final_system.rule().str();
    path["finalAlphabet"] = to_json(bordered->chain.final_system.alphabet());
  }
  out["casePath"] = path;
  if (bordered) out["adyanChain"] = to_json(bordered->chain);
  return out;
}

ordered_json to_json(const WitnessDiamond& d) {
  return {{"k", d.k()},
          {"x", d.x.str()},
          {"mids", words_json(d.mids)},
          {"y", d.y.str()},
          {"outPositions", d.out_positions},
          {"inPositions", d.in_positions}};
}

ordered_json to_json(const DiamondExample& e) {
  return {{"x", e.x.str()}, {"y", e.y.str()}, {"mids", words_json(e.mids)}};
}

std::string to_dot(const WitnessDiamond& d, const std::string& title) {
  const auto label = [](const Word& w) { return w.empty() ? std::string("ε") : w.str(); };
  std::ostringstream out;
  out << "digraph \"" << dot_escape(title) << "\" {\n  rankdir=LR;\n";
  out << "  x [label=\"" << dot_escape(label(d.x)) << "\"];\n";
  for (std::size_t i = 0; i < d.mids.size(); ++i) {
    out << "  z" << i << " [label=\"" << dot_escape(label(d.mids[i])) << "\"];\n";
  }
  out << "  y [label=\"" << dot_escape(label(d.y)) << "\"];\n";
  for (std::size_t i = 0; i < d.mids.size(); ++i) {
    out << "  x -> z" << i << " [label=\"" << d.out_positions[i] << "\"];\n";
    out << "  z" << i << " -> y [label=\"" << d.in_positions[i] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace onerule::cli
