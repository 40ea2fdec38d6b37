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

#include "qbfgames/position_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qbfgames {
namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<std::string> SplitWords(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::vector<Line> SignificantLines(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    lines.push_back({number, raw});
  }
  return lines;
}

std::optional<std::size_t> ParseIndex(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<bool> ParseTruth(std::string_view s) {
  if (s == "T") return true;
  if (s == "F") return false;
  return std::nullopt;
}

// Formula parse errors carry positions relative to the formula text.
Formula ParseFormulaAt(const std::string& text, std::size_t num_vars,
                       std::size_t first_line) {
  try {
    return ParseFormula(text, num_vars);
  } catch (const VariableRangeError& e) {
    throw VariableRangeError(e.message(), first_line + e.line() - 1, e.column());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), first_line + e.line() - 1, e.column());
  }
}

bool IsTraceLine(const std::string& text) {
  auto words = SplitWords(text);
  return !words.empty() && (words[0] == "move" || words[0] == "expect");
}

struct ParsedFile {
  Position position;
  std::size_t next_line;  // index into lines after the formula
};

ParsedFile ParseHeaderAndFormula(const std::vector<Line>& lines) {
  std::size_t i = 0;
  auto expect_line = [&](std::string_view keyword) -> std::vector<std::string> {
    if (i >= lines.size()) {
      throw ParseError("missing '" + std::string(keyword) + "' line",
                       lines.empty() ? 1 : lines.back().number + 1, 1);
    }
    auto words = SplitWords(lines[i].text);
    if (words.empty() || words[0] != keyword) {
      throw ParseError("expected '" + std::string(keyword) + "' line",
                       lines[i].number, 1);
    }
    return words;
  };

  auto words = expect_line("ruleset");
  if (words.size() != 4) {
    throw ParseError("ruleset line needs three toggles", lines[i].number, 1);
  }
  auto config = ParseRulesetName(words[1] + "-" + words[2] + "-" + words[3]);
  if (!config) {
    throw ParseError("unknown ruleset '" + words[1] + " " + words[2] + " " +
                         words[3] + "'",
                     lines[i].number, 1);
  }
  ++i;

  words = expect_line("vars");
  std::optional<std::size_t> n =
      words.size() == 2 ? ParseIndex(words[1]) : std::nullopt;
  if (!n) throw ParseError("malformed vars line", lines[i].number, 1);
  ++i;

  words = expect_line("assigned");
  Assignment assignment(*n);
  for (std::size_t w = 1; w < words.size(); ++w) {
    const std::string& item = words[w];
    std::size_t eq = item.find('=');
    std::optional<std::size_t> var =
        eq == std::string::npos ? std::nullopt
                                : ParseIndex(std::string_view(item).substr(0, eq));
    std::optional<bool> value =
        eq == std::string::npos ? std::nullopt : ParseTruth(item.substr(eq + 1));
    if (!var || !value) {
      throw ParseError("malformed assignment '" + item + "'", lines[i].number,
                       1);
    }
    if (*var >= *n) {
      throw VariableRangeError("assigned variable x" + std::to_string(*var) +
                                   " is out of range",
                               lines[i].number, 1);
    }
    if (assignment.IsAssigned(static_cast<Var>(*var))) {
      throw ParseError("variable x" + std::to_string(*var) + " assigned twice",
                       lines[i].number, 1);
    }
    assignment.Assign(static_cast<Var>(*var), *value);
  }
  if (config->locality == Locality::kLocal &&
      assignment.LowestUnassigned() < assignment.assigned_count()) {
    throw ParseError("local rulesets require a prefix x0..x(k-1) assigned",
                     lines[i].number, 1);
  }
  ++i;

  std::optional<Player> mover;
  if (i < lines.size()) {
    words = SplitWords(lines[i].text);
    if (!words.empty() && words[0] == "mover") {
      if (words.size() != 2 || (words[1] != "1" && words[1] != "2")) {
        throw ParseError("mover must be 1 or 2", lines[i].number, 1);
      }
      mover = words[1] == "1" ? Player::kP1 : Player::kP2;
      ++i;
    }
  }

  if (i >= lines.size() || IsTraceLine(lines[i].text)) {
    throw ParseError("missing formula",
                     i < lines.size() ? lines[i].number
                                      : (lines.empty() ? 1 : lines.back().number + 1),
                     1);
  }
  const std::size_t formula_start = i;
  std::string formula_text;
  // Blank and comment lines inside the formula were dropped, so line numbers
  // inside multi-line formulas are only exact for contiguous text.
  while (i < lines.size() && !IsTraceLine(lines[i].text)) {
    formula_text += lines[i].text;
    formula_text += '\n';
    ++i;
  }
  Formula formula =
      ParseFormulaAt(formula_text, *n, lines[formula_start].number);

  Position position(std::move(formula), std::move(assignment), *config);
  if (mover) position = position.WithMover(*mover);
  return {std::move(position), i};
}

}  // namespace

Position ParsePosition(std::string_view text) {
  std::vector<Line> lines = SignificantLines(text);
  ParsedFile parsed = ParseHeaderAndFormula(lines);
  if (parsed.next_line < lines.size()) {
    throw ParseError("unexpected move line in a position file",
                     lines[parsed.next_line].number, 1);
  }
  return parsed.position;
}

GameTrace ParseTrace(std::string_view text) {
  std::vector<Line> lines = SignificantLines(text);
  ParsedFile parsed = ParseHeaderAndFormula(lines);
  GameTrace trace{parsed.position, {}, {}};
  const std::size_t n = parsed.position.num_vars();
  bool any_expect = false;
  for (std::size_t i = parsed.next_line; i < lines.size(); ++i) {
    auto words = SplitWords(lines[i].text);
    if (words[0] == "move") {
      std::optional<std::size_t> var;
      if (words.size() == 3 && words[1].size() > 1 && words[1][0] == 'x') {
        var = ParseIndex(std::string_view(words[1]).substr(1));
      }
      std::optional<bool> value =
          words.size() == 3 ? ParseTruth(words[2]) : std::nullopt;
      if (!var || !value) {
        throw ParseError("malformed move line", lines[i].number, 1);
      }
      if (*var >= n) {
        throw VariableRangeError("move variable out of range", lines[i].number,
                                 1);
      }
      trace.moves.push_back(Move{static_cast<Var>(*var), *value});
      trace.expected_snapshots.emplace_back();
    } else {
      if (trace.moves.empty()) {
        throw ParseError("'expect' before any move", lines[i].number, 1);
      }
      std::size_t at = lines[i].text.find("expect") + 6;
      trace.expected_snapshots.back() =
          ParseFormulaAt(lines[i].text.substr(at), n, lines[i].number);
      any_expect = true;
    }
  }
  if (!any_expect) trace.expected_snapshots.clear();
  return trace;
}

std::string FormatPosition(const Position& p) {
  const RulesetConfig& c = p.config();
  std::ostringstream out;
  out << "ruleset " << (c.choice == BooleanChoice::kEither ? "either" : "by-player")
      << ' ' << (c.locality == Locality::kLocal ? "local" : "anywhere") << ' '
      << (c.goal == Goal::kSame ? "same" : "different") << '\n';
  out << "vars " << p.num_vars() << '\n';
  out << "assigned";
  const Assignment& a = p.assignment();
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (!a.IsAssigned(static_cast<Var>(v))) continue;
    out << ' ' << v << '=' << (a.ValueOf(static_cast<Var>(v)) ? 'T' : 'F');
  }
  out << '\n';
  if (p.mover_flipped()) {
    out << "mover " << (p.Mover() == Player::kP1 ? 1 : 2) << '\n';
  }
  out << ToText(p.formula()) << '\n';
  return out.str();
}

std::string FormatTrace(const GameTrace& trace) {
  std::string out = FormatPosition(trace.initial);
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    out += "move x" + std::to_string(m.var) + (m.value ? " T\n" : " F\n");
    if (i < trace.expected_snapshots.size() && trace.expected_snapshots[i]) {
      out += "expect " + ToText(*trace.expected_snapshots[i]) + "\n";
    }
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace qbfgames
