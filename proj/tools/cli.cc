// Copyright 2026 The qbfgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbfgames/errors.h"
#include "qbfgames/formula.h"
#include "qbfgames/instances.h"
#include "qbfgames/position_io.h"
#include "qbfgames/reductions.h"
#include "qbfgames/ruleset.h"
#include "qbfgames/solver.h"

namespace qbfgames::cli {
namespace {

using nlohmann::json;

std::string_view Side(Player p) {
  return p == Player::kP1 ? "Even/True" : "Odd/False";
}

std::string WinnerLine(Player p) {
  return "winner: " + std::string(PlayerTag(p)) + " (" + std::string(Side(p)) +
         ")";
}

std::string JoinMoves(const std::vector<Move>& moves) {
  std::string s;
  for (const Move& m : moves) {
    if (!s.empty()) s += ' ';
    s += MoveText(m);
  }
  return s;
}

json MovesJson(const std::vector<Move>& moves) {
  json arr = json::array();
  for (const Move& m : moves) arr.push_back(MoveText(m));
  return arr;
}

void WriteOutput(const std::string& text, const std::string& path,
                 std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInputError("cannot write '" + path + "'");
  file << text;
}

std::optional<Player> MoverFlag(int mover) {
  if (mover == 1) return Player::kP1;
  if (mover == 2) return Player::kP2;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string path;
  bool naive = false;
  bool simulate = false;
  bool pv = false;
  bool json = false;
  std::uint64_t budget = SolveOptions{}.node_budget;
  unsigned threads = 1;
  std::size_t naive_bound = kDefaultNaiveBound;
  std::string ruleset;
  int mover = 0;
};

int RunSolve(const SolveArgs& args, std::ostream& out) {
  Position p = ParsePosition(ReadFile(args.path));
  if (!args.ruleset.empty()) {
    auto config = ParseRulesetName(args.ruleset);
    if (!config) throw InvalidInputError("unknown ruleset '" + args.ruleset + "'");
    p = p.WithConfig(*config);
  }
  if (auto mover = MoverFlag(args.mover)) p = p.WithMover(*mover);

  Outcome outcome;
  std::string method;
  if (args.naive) {
    outcome = SolveNaive(p, args.naive_bound);
    method = "naive";
  } else if (args.simulate) {
    outcome = SimulateLocalByPlayer(p).outcome;
    method = "simulate";
  } else {
    SolveOptions options;
    options.node_budget = args.budget;
    options.threads = std::max(1u, args.threads);
    options.principal_variation = args.pv;
    outcome = Solve(p, options);
    method = "memo";
  }

  if (args.json) {
    json j{{"ruleset", RulesetName(p.config())},
           {"vars", p.num_vars()},
           {"method", method},
           {"winner", std::string(PlayerTag(outcome.winner))},
           {"nodes", outcome.nodes}};
    if (args.pv && !args.naive) j["pv"] = MovesJson(outcome.principal_variation);
    out << j.dump() << '\n';
    return kOk;
  }
  out << "ruleset: " << RulesetName(p.config()) << '\n';
  out << WinnerLine(outcome.winner) << '\n';
  out << "nodes: " << outcome.nodes << '\n';
  if (args.pv && !args.naive) {
    out << "pv: " << JoinMoves(outcome.principal_variation) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// replay

int RunReplay(const std::string& path, bool as_json, std::ostream& out) {
  GameTrace trace = ParseTrace(ReadFile(path));
  ReplayReport report = Replay(trace);

  json steps = json::array();
  if (!as_json) {
    out << "ruleset: " << RulesetName(trace.initial.config()) << '\n';
    out << "start: " << ToText(trace.initial.SimplifiedFormula()) << '\n';
  }
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const ReplayStep& s = report.steps[i];
    if (as_json) {
      json step{{"move", MoveText(s.move)},
                {"mover", std::string(PlayerTag(s.mover))},
                {"formula", ToText(s.simplified)}};
      if (s.snapshot_mismatch) {
        step["expected"] = ToText(*trace.expected_snapshots[i]);
      }
      steps.push_back(step);
      continue;
    }
    out << (i + 1) << ". " << PlayerTag(s.mover) << ' ' << MoveText(s.move)
        << "  " << ToText(s.simplified) << '\n';
    if (s.snapshot_mismatch) {
      out << "   expected: " << ToText(*trace.expected_snapshots[i]) << '\n';
    }
  }

  int code = kOk;
  std::string illegal;
  if (!report.ok()) {
    const std::size_t i = *report.illegal_index;
    illegal = "illegal move " + std::to_string(i + 1) + " (" +
              MoveText(trace.moves[i]) + "): " +
              std::string(ReasonText(*report.illegal_reason));
    code = kIllegalMove;
  } else if (!report.snapshots_match()) {
    code = kSnapshotMismatch;
  }

  if (as_json) {
    json j{{"ruleset", RulesetName(trace.initial.config())},
           {"steps", steps},
           {"legal", report.ok()},
           {"snapshots_match", report.snapshots_match()}};
    j["winner"] = report.winner ? json(std::string(PlayerTag(*report.winner)))
                                : json(nullptr);
    if (!illegal.empty()) j["error"] = illegal;
    out << j.dump() << '\n';
    return code;
  }
  if (!illegal.empty()) {
    out << illegal << '\n';
    return code;
  }
  if (report.winner) {
    out << WinnerLine(*report.winner) << '\n';
  } else {
    out << "winner: none (game not finished)\n";
  }
  if (code == kSnapshotMismatch) out << "snapshot mismatch\n";
  return code;
}

// ---------------------------------------------------------------------------
// reduce

Position ReadFormulaInstance(const std::string& path) {
  Position p = ParsePosition(ReadFile(path));
  if (p.assignment().assigned_count() != 0) {
    throw InvalidInputError("reduction input must have no assigned variables");
  }
  return p;
}

int RunReduce(const std::string& kind, const std::string& path, int mover,
              const std::string& output, std::ostream& out) {
  const Player first = MoverFlag(mover).value_or(Player::kP1);
  Position result = [&] {
    if (kind == "snort") return SnortToPosition(ParseGraph(ReadFile(path)), first);
    if (kind == "p2c") return P2cToPosition(ParseGraph(ReadFile(path)));
    Position in = ReadFormulaInstance(path);
    if (kind == "qbf") {
      return QbfCnfToEitherLocalSame(CnfFromFormula(in.formula(), in.num_vars()));
    }
    return PositiveCnfToByPlayerAnywhereDifferent(
        PositiveCnfFromFormula(in.formula(), in.num_vars()), first);
  }();
  WriteOutput(FormatPosition(result), output, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string kind;
  std::size_t exhaustive = 4;   // graphs: every graph up to this many vertices
  std::size_t count = 500;      // random instances
  std::size_t vertices = 5;     // random graph size
  double edge_p = 0.5;
  std::size_t max_vars = 6;
  std::size_t max_clauses = 8;
  std::size_t width = 3;
  std::uint64_t seed = 1;
  std::uint64_t budget = SolveOptions{}.node_budget;
  bool json = false;
};

int RunVerify(const VerifyArgs& args, std::ostream& out) {
  SolveOptions options;
  options.node_budget = args.budget;
  Random rng(args.seed);

  std::size_t checked = 0;
  std::size_t agreed = 0;
  std::string counterexample;
  std::string detail;

  auto record = [&](Player source, Player reduced, const std::string& instance) {
    ++checked;
    if (source == reduced) {
      ++agreed;
    } else if (counterexample.empty()) {
      counterexample = instance;
      detail = "source winner " + std::string(PlayerTag(source)) +
               ", reduced winner " + std::string(PlayerTag(reduced));
    }
  };

  if (args.kind == "snort" || args.kind == "p2c") {
    const bool snort = args.kind == "snort";
    auto check = [&](const Graph& g) {
      DualSolve d = snort ? CheckSnort(g, Player::kP1, options) : CheckP2c(g, options);
      record(d.source_winner, d.reduced_winner, FormatGraph(g));
    };
    for (std::size_t n = 1; n <= args.exhaustive; ++n) {
      for (const Graph& g : AllGraphs(n)) check(g);
    }
    for (std::size_t i = 0; i < args.count; ++i) {
      check(RandomGraph(args.vertices, args.edge_p, rng));
    }
  } else if (args.kind == "qbf") {
    if (args.max_vars < args.width || args.max_clauses == 0) {
      throw InvalidInputError("need max-vars >= width and max-clauses >= 1");
    }
    for (std::size_t i = 0; i < args.count; ++i) {
      const std::size_t n = rng.Between(args.width, args.max_vars);
      Cnf cnf = RandomCnf(n, rng.Between(1, args.max_clauses), args.width, rng);
      DualSolve d = CheckQbfCnf(cnf, options);
      record(d.source_winner, d.reduced_winner,
             FormatPosition(Position(CnfToFormula(cnf), n, kQbfRuleset)));
    }
  } else if (args.kind == "poscnf" || args.kind == "toy-poscnf") {
    if (args.max_vars == 0 || args.max_clauses == 0) {
      throw InvalidInputError("need max-vars >= 1 and max-clauses >= 1");
    }
    for (std::size_t i = 0; i < args.count; ++i) {
      const std::size_t n = rng.Between(1, args.max_vars);
      const std::size_t width = std::min({args.width, n, std::size_t{3}});
      PositiveCnfInstance inst =
          RandomPositiveCnf(n, rng.Between(1, args.max_clauses), width, rng);
      const std::string text =
          FormatPosition(PositiveCnfToByPlayerAnywhereDifferent(inst));
      if (args.kind == "poscnf") {
        DualSolve d = CheckPositiveEmbedding(inst, Player::kP1, options);
        record(d.source_winner, d.reduced_winner, text);
      } else {
        ToyEquivalenceReport r = ToyPositiveEquivalenceCheck(inst, Player::kP1, options);
        record(r.positive_winner, r.toy_winner, text);
      }
    }
  } else {
    throw InvalidInputError("unknown verify kind '" + args.kind + "'");
  }

  const bool pass = agreed == checked;
  if (args.json) {
    json j{{"kind", args.kind}, {"checked", checked}, {"agreed", agreed},
           {"pass", pass}};
    if (!pass) {
      j["counterexample"] = counterexample;
      j["detail"] = detail;
    }
    out << j.dump() << '\n';
  } else {
    out << "verify " << args.kind << ": " << agreed << "/" << checked
        << " agree\n";
    if (!pass) {
      out << "counterexample (" << detail << "):\n" << counterexample;
    }
    out << "result: " << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kOk : kDisagreement;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kind;
  std::size_t size = 7;
  std::size_t clauses = 4;
  std::size_t width = 3;
  double edge_p = 0.5;
  std::uint64_t seed = 1;
  std::string output;
};

int RunGen(const GenArgs& args, std::ostream& out) {
  Random rng(args.seed);
  std::string text;
  if (args.kind == "formula") {
    Cnf cnf = RandomCnf(args.size, args.clauses, args.width, rng);
    text = FormatPosition(Position(CnfToFormula(cnf), args.size, kQbfRuleset));
  } else if (args.kind == "poscnf") {
    PositiveCnfInstance inst =
        RandomPositiveCnf(args.size, args.clauses, args.width, rng);
    text = FormatPosition(PositiveCnfToByPlayerAnywhereDifferent(inst));
  } else if (args.kind == "graph") {
    text = FormatGraph(RandomGraph(args.size, args.edge_p, rng));
  } else {
    throw InvalidInputError("unknown gen kind '" + args.kind + "'");
  }
  WriteOutput(text, args.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// play

std::optional<Move> ParseHumanMove(const std::string& line) {
  std::istringstream words(line);
  std::vector<std::string> tokens;
  for (std::string t; words >> t;) tokens.push_back(t);
  if (!tokens.empty() && tokens[0] == "move") tokens.erase(tokens.begin());
  if (tokens.size() == 1) {
    // "x3=T"
    std::size_t eq = tokens[0].find('=');
    if (eq == std::string::npos) return std::nullopt;
    tokens = {tokens[0].substr(0, eq), tokens[0].substr(eq + 1)};
  }
  if (tokens.size() != 2) return std::nullopt;
  std::string var = tokens[0];
  if (!var.empty() && var[0] == 'x') var.erase(0, 1);
  if (var.empty() || !std::all_of(var.begin(), var.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    return std::nullopt;
  }
  std::string value = tokens[1];
  std::transform(value.begin(), value.end(), value.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  bool b;
  if (value == "t" || value == "true" || value == "1") {
    b = true;
  } else if (value == "f" || value == "false" || value == "0") {
    b = false;
  } else {
    return std::nullopt;
  }
  unsigned long index = std::stoul(var);
  return Move{static_cast<Var>(index), b};
}

int RunPlay(const std::string& path, int human_side, std::uint64_t budget,
            std::istream& in, std::ostream& out) {
  Position p = ParsePosition(ReadFile(path));
  const Player human = human_side == 2 ? Player::kP2 : Player::kP1;
  SolveOptions options;
  options.node_budget = budget;

  out << "ruleset: " << RulesetName(p.config()) << ", you are "
      << PlayerTag(human) << " (" << Side(human) << ")\n";
  for (;;) {
    out << "formula: " << ToText(p.SimplifiedFormula()) << '\n';
    if (IsTerminal(p)) {
      const Player w = Winner(p);
      if (p.config().goal == Goal::kSame) {
        out << (p.Mover() == human ? "you have no legal moves; you lose\n"
                                   : "the solver has no legal moves; you win\n");
      } else {
        out << (w == human ? "you win\n" : "you lose\n");
      }
      out << WinnerLine(w) << '\n';
      return kOk;
    }
    if (p.Mover() == human) {
      out << "your move (x<i> <T|F>): " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << "\ninput closed\n";
        return kOk;
      }
      if (line == "quit" || line == "q") return kOk;
      std::optional<Move> m = ParseHumanMove(line);
      if (!m) {
        out << "could not read a move; type e.g. x3 T\n";
        continue;
      }
      if (auto reason = CheckMove(p, *m)) {
        out << "illegal: " << ReasonText(*reason) << '\n';
        continue;
      }
      p = p.Extended(*m);
    } else {
      Outcome o = Solve(p, options);
      const Move m = o.principal_variation.front();
      out << "solver plays " << MoveText(m)
          << (o.winner == p.Mover() ? " (winning)" : "") << '\n';
      p = p.Extended(m);
    }
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve, replay and reduce Boolean formula games", "qbfgame"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve a position file exactly");
  solve->add_option("position", solve_args.path, "Position file")->required();
  solve->add_flag("--naive", solve_args.naive, "Use the unmemoized oracle");
  solve->add_flag("--simulate", solve_args.simulate,
                  "Play out a by-player-local game (linear time)");
  solve->add_flag("--pv", solve_args.pv, "Print a principal variation");
  solve->add_flag("--json", solve_args.json, "Structured output");
  solve->add_option("--budget", solve_args.budget, "Node budget");
  solve->add_option("--threads", solve_args.threads, "Search threads");
  solve->add_option("--naive-bound", solve_args.naive_bound,
                    "Largest variable count accepted by --naive");
  solve->add_option("--ruleset", solve_args.ruleset,
                    "Override the ruleset, e.g. either-anywhere-same");
  solve->add_option("--mover", solve_args.mover, "Override the mover (1 or 2)")
      ->check(CLI::IsMember({1, 2}));

  std::string replay_path;
  bool replay_json = false;
  auto* replay = app.add_subcommand("replay", "Replay a trace file");
  replay->add_option("trace", replay_path, "Trace file")->required();
  replay->add_flag("--json", replay_json, "Structured output");

  std::string reduce_kind;
  std::string reduce_path;
  std::string reduce_output;
  int reduce_mover = 0;
  auto* reduce = app.add_subcommand("reduce", "Build a formula position from a source instance");
  reduce->add_option("kind", reduce_kind, "snort, p2c, qbf or poscnf")
      ->required()
      ->check(CLI::IsMember({"snort", "p2c", "qbf", "poscnf"}));
  reduce->add_option("input", reduce_path,
                     "Graph file (snort, p2c) or position file (qbf, poscnf)")
      ->required();
  reduce->add_option("-o,--output", reduce_output, "Output path (default stdout)");
  reduce->add_option("--mover", reduce_mover,
                     "First mover for snort and poscnf (1 or 2)")
      ->check(CLI::IsMember({1, 2}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Dual-solve a reduction on many small instances");
  verify->add_option("kind", verify_args.kind, "snort, p2c, qbf, poscnf or toy-poscnf")
      ->required()
      ->check(CLI::IsMember({"snort", "p2c", "qbf", "poscnf", "toy-poscnf"}));
  verify->add_option("--exhaustive", verify_args.exhaustive,
                     "Graph kinds: check every graph up to this many vertices");
  verify->add_option("--count", verify_args.count, "Random instances");
  verify->add_option("--vertices", verify_args.vertices, "Random graph size");
  verify->add_option("--p", verify_args.edge_p, "Random graph edge probability");
  verify->add_option("--max-vars", verify_args.max_vars, "Formula kinds: largest n");
  verify->add_option("--max-clauses", verify_args.max_clauses, "Formula kinds: largest c");
  verify->add_option("--width", verify_args.width, "Clause width");
  verify->add_option("--seed", verify_args.seed, "Random seed");
  verify->add_option("--budget", verify_args.budget, "Node budget per solve");
  verify->add_flag("--json", verify_args.json, "Structured output");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("kind", gen_args.kind, "formula, poscnf or graph")
      ->required()
      ->check(CLI::IsMember({"formula", "poscnf", "graph"}));
  gen->add_option("-n,--size", gen_args.size, "Variables, or vertices for graphs");
  gen->add_option("-c,--clauses", gen_args.clauses, "Clauses");
  gen->add_option("-w,--width", gen_args.width, "Clause width");
  gen->add_option("-p,--p", gen_args.edge_p, "Edge probability");
  gen->add_option("--seed", gen_args.seed, "Random seed");
  gen->add_option("-o,--output", gen_args.output, "Output path (default stdout)");

  std::string play_path;
  int play_human = 1;
  std::uint64_t play_budget = SolveOptions{}.node_budget;
  auto* play = app.add_subcommand("play", "Play against the solver in the terminal");
  play->add_option("position", play_path, "Position file")->required();
  play->add_option("--human", play_human, "Your side (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  play->add_option("--budget", play_budget, "Solver node budget");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qbfgame: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*solve) return RunSolve(solve_args, out);
    if (*replay) return RunReplay(replay_path, replay_json, out);
    if (*reduce) {
      return RunReduce(reduce_kind, reduce_path, reduce_mover, reduce_output, out);
    }
    if (*verify) return RunVerify(verify_args, out);
    if (*gen) return RunGen(gen_args, out);
    if (*play) return RunPlay(play_path, play_human, play_budget, in, out);
  } catch (const ResourceLimitError& e) {
    err << "qbfgame: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "qbfgame: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace qbfgames::cli
