#include "commands.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "onerule/classify.hpp"
#include "onerule/decorate.hpp"
#include "onerule/error.hpp"
#include "onerule/oracle.hpp"
#include "onerule/witness.hpp"
#include "report.hpp"
#include "rule_spec.hpp"

namespace onerule::cli {

namespace {

struct SystemArgs {
  std::string rule;
  std::string alphabet;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

void add_system_args(CLI::App* cmd, SystemArgs& args) {
  cmd->add_option("rule", args.rule, "rewrite rule, e.g. \"ab -> bba\" (1 is the empty word)")
      ->required();
  cmd->add_option("--alphabet,-a", args.alphabet,
                  "declared alphabet (default: the letters of the rule)");
}

OneRuleSrs load_system(const SystemArgs& args, Io io, const Word& extra = {}) {
  const Rule rule = parse_rule(args.rule);
  if (args.alphabet.empty()) {
    Alphabet alphabet = default_alphabet(rule, extra);
    io.err << "note: no --alphabet given, using " << alphabet.str()
           << "; the |A| = 1 case depends on the declared alphabet\n";
    if (alphabet.empty()) {
      throw Error(ErrorCode::InvalidSystem, "rule has no letters; pass --alphabet");
    }
    return OneRuleSrs(std::move(alphabet), rule);
  }
  return OneRuleSrs(parse_alphabet(args.alphabet), rule);
}

int refuse(Io io, std::string_view reason, const std::string& message,
           ordered_json extra = ordered_json::object()) {
  ordered_json out{{"refused", true}, {"reason", reason}, {"message", message}};
  out.update(extra);
  io.out << out.dump(2) << '\n';
  io.err << "refused: " << message << '\n';
  return kRefused;
}

std::vector<std::size_t> parse_positions(const std::string& text) {
  std::vector<std::size_t> positions;
  std::size_t column = 0;
  while (column < text.size()) {
    std::size_t end = text.find(',', column);
    if (end == std::string::npos) end = text.size();
    std::string_view item(text.data() + column, end - column);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError(column + 1, "expected a non-negative position");
    }
    positions.push_back(value);
    column = end + 1;
  }
  return positions;
}

int cmd_classify(const SystemArgs& args, const std::string& format, Io io) {
  const Classification c = classify(load_system(args, io));
  if (format == "text") {
    io.out << explain(c);
  } else {
    io.out << to_json(c).dump(2) << '\n';
  }
  return kAnswered;
}

int cmd_witness(const SystemArgs& args, std::size_t k, const std::string& format, Io io) {
  const OneRuleSrs srs = load_system(args, io);
  WitnessDiamond d;
  try {
    d = mk_witness(srs, k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotUnbounded && e.code() != ErrorCode::PreconditionViolated) {
      throw;
    }
    const Classification c = classify(srs);
    return refuse(io, to_string(e.code()), "maximal k is " + c.max_k.str(),
                  {{"maxK", c.max_k.str()}});
  }
  const auto report = verify_diamond(srs, d);
  if (!report) return refuse(io, "VerificationFailed", report.failure);
  if (format == "dot") {
    io.out << to_dot(d, srs.rule().str());
  } else {
    ordered_json out{{"rule", srs.rule().str()}, {"alphabet", to_json(srs.alphabet())}};
    out.update(to_json(d));
    out["verified"] = true;
    io.out << out.dump(2) << '\n';
  }
  return kAnswered;
}

int cmd_explore(const SystemArgs& args, std::size_t max_len, std::optional<std::size_t> k,
                std::size_t max_start_words, const std::string& format, Io io) {
  const OneRuleSrs srs = load_system(args, io);
  SearchBounds bounds;
  bounds.max_word_len = max_len;
  bounds.max_start_words = max_start_words;
  if (max_len < srs.lhs().size()) {
    io.err << "note: --max-len is shorter than the left-hand side; no edges are reachable\n";
  }
  const WidthResult width = max_diamond_width(srs, bounds);
  std::optional<WitnessDiamond> found;
  if (k) found = search_mk(srs, *k, bounds);

  if (format == "dot") {
    if (found) {
      io.out << to_dot(*found, srs.rule().str());
    } else if (width.example) {
      const DiamondExample& e = *width.example;
      WitnessDiamond d{e.x, e.mids, e.y, {}, {}};
      for (const Word& z : e.mids) {
        d.out_positions.push_back(*realizing_position(srs.rule(), e.x, z));
        d.in_positions.push_back(*realizing_position(srs.rule(), z, e.y));
      }
      io.out << to_dot(d, srs.rule().str());
    } else {
      io.out << "// no diamond within bounds\n";
    }
    return kAnswered;
  }

  ordered_json out{{"rule", srs.rule().str()}, {"alphabet", to_json(srs.alphabet())}};
  out["bounds"] = {{"maxWordLen", max_len},
                   {"startWordsExamined", width.start_words}};
  if (max_start_words != std::numeric_limits<std::size_t>::max()) {
    out["bounds"]["maxStartWords"] = max_start_words;
  }
  out["width"] = width.width;
  if (width.example) out["example"] = to_json(*width.example);
  if (k) {
    out["k"] = *k;
    if (found) {
      ordered_json w = to_json(*found);
      w["verified"] = true;
      out["witness"] = w;
    } else {
      out["witness"] = nullptr;
      out["witnessStatus"] = "none within bounds";
    }
  }
  io.out << out.dump(2) << '\n';
  return kAnswered;
}

int cmd_trace(const SystemArgs& args, const std::string& start_text,
              const std::string& positions_text, bool decorate, Io io) {
  const Word start = parse_word(start_text);
  const OneRuleSrs srs = load_system(args, io, start);
  if (!srs.alphabet().contains_all(start)) {
    throw Error(ErrorCode::InvalidSystem,
                "start word " + start.str() + " uses letters outside " + srs.alphabet().str());
  }
  const auto positions = parse_positions(positions_text);
  ReductionTrace trace;
  try {
    trace = run_trace(srs, start, positions);
  } catch (const TraceError& e) {
    io.err << "error: " << e.what() << '\n';
    io.out << "inapplicable step " << e.step() << " (position " << positions[e.step()]
           << ")\n";
    return kRefused;
  }
  if (!decorate) {
    io.out << trace.words[0].str() << '\n';
    for (std::size_t i = 0; i < trace.positions.size(); ++i) {
      io.out << "  -(" << trace.positions[i] << ")-> " << trace.words[i + 1].str() << '\n';
    }
    return kAnswered;
  }
  const DecoratedTrace lifted = lift(srs, trace);
  io.out << lifted.words[0].str() << '\n';
  for (std::size_t i = 0; i < lifted.positions.size(); ++i) {
    io.out << "  -(" << lifted.positions[i] << ")-> " << lifted.words[i + 1].str() << '\n';
  }
  const auto first = first_decorated_position(lifted.words.back());
  io.out << "first decorated position: " << (first ? std::to_string(*first) : "none")
         << '\n';
  return kAnswered;
}

int cmd_adyan(const SystemArgs& args, Io io) {
  const OneRuleSrs srs = load_system(args, io);
  if (srs.lhs() == srs.rhs()) {
    return refuse(io, "Degenerate", "u = v: no Adyan reduction applies");
  }
  const bool normalized = srs.lhs().size() > srs.rhs().size();
  const OneRuleSrs work = normalized ? converse(srs) : srs;
  if (!is_bordered_with(work.rhs(), work.lhs())) {
    const bool prefix_ok = is_prefix(work.lhs(), work.rhs());
    const BorderFailure side =
        prefix_ok ? BorderFailure::SuffixFails : BorderFailure::PrefixFails;
    return refuse(io, "NotBordered",
                  work.rhs().str() + " is not bordered with " + work.lhs().str() + " (" +
                      std::string(to_string(side)) + ")",
                  {{"side", to_string(side)}});
  }
  const AdyanChain chain = adyan_chain(work);
  ordered_json out{{"rule", srs.rule().str()},
                   {"alphabet", to_json(srs.alphabet())},
                   {"normalized", normalized},
                   {"workingRule", work.rule().str()},
                   {"stages", to_json(chain)},
                   {"final", chain.final_system.rule().str()},
                   {"finalAlphabet", to_json(chain.final_system.alphabet())}};
  io.out << out.dump(2) << '\n';
  return kAnswered;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Io io{out, err};
  CLI::App app{"Maximal diamond subgraphs M_k in reduction graphs of one-rule rewriting systems",
               "onerule"};
  app.require_subcommand(1);

  SystemArgs system;
  std::string format = "json";
  std::size_t k = 0;
  std::size_t max_len = 0;
  std::size_t max_start_words = std::numeric_limits<std::size_t>::max();
  std::string start;
  std::string positions;
  bool decorate = false;

  auto* classify_cmd = app.add_subcommand("classify", "decide the maximal k");
  add_system_args(classify_cmd, system);
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* witness_cmd = app.add_subcommand("witness", "build and verify an M_k subgraph");
  add_system_args(witness_cmd, system);
  witness_cmd->add_option("--k,-k", k)->required()->check(CLI::PositiveNumber);
  witness_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  auto* explore_cmd = app.add_subcommand("explore", "brute-force search of the reduction graph");
  add_system_args(explore_cmd, system);
  explore_cmd->add_option("--max-len", max_len, "longest start word")->required();
  auto* explore_k = explore_cmd->add_option("--k,-k", k, "also search for an M_k")
                        ->check(CLI::PositiveNumber);
  explore_cmd->add_option("--max-start-words", max_start_words);
  explore_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  auto* trace_cmd = app.add_subcommand("trace", "run a reduction given by positions");
  add_system_args(trace_cmd, system);
  trace_cmd->add_option("--start", start, "start word (1 for the empty word)")->required();
  trace_cmd->add_option("--positions", positions, "comma-separated rewrite positions");
  trace_cmd->add_flag("--decorate", decorate, "show decorated words");

  auto* adyan_cmd = app.add_subcommand("adyan", "print the Adyan reduction chain");
  add_system_args(adyan_cmd, system);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAnswered : kInputError;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(system, format, io);
    if (witness_cmd->parsed()) return cmd_witness(system, k, format, io);
    if (explore_cmd->parsed()) {
      std::optional<std::size_t> search_k;
      if (explore_k->count() > 0) search_k = k;
      return cmd_explore(system, max_len, search_k, max_start_words, format, io);
    }
    if (trace_cmd->parsed()) return cmd_trace(system, start, positions, decorate, io);
    if (adyan_cmd->parsed()) return cmd_adyan(system, io);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidSystem) {
      err << "input error: " << e.what() << '\n';
      return kInputError;
    }
    return refuse(io, to_string(e.code()), e.what());
  }
  return kInputError;
}

}  // namespace onerule::cli
