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

// Line-oriented position and trace files.
//
//   ruleset <either|by-player> <local|anywhere> <same|different>
//   vars <n>
//   assigned <i>=<T|F> ...        (list may be empty)
//   mover <1|2>                   (optional; default follows parity)
//   <formula, possibly spanning several lines>
//
// A trace file continues with one "move x<i> <T|F>" line per move. Each move
// may be followed by an "expect <formula>" line giving the simplified formula
// the move should produce. Blank lines and lines starting with '#' are
// ignored.

#ifndef QBFGAMES_POSITION_IO_H_
#define QBFGAMES_POSITION_IO_H_

#include <string>
#include <string_view>

#include "qbfgames/ruleset.h"

namespace qbfgames {

// Throws ParseError (with 1-based file line numbers).
Position ParsePosition(std::string_view text);
GameTrace ParseTrace(std::string_view text);

std::string FormatPosition(const Position& p);
std::string FormatTrace(const GameTrace& trace);

// Reads a whole file; throws InvalidInputError if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace qbfgames

#endif  // QBFGAMES_POSITION_IO_H_
