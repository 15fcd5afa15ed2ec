// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>

#include "mhfa/machine.hpp"
#include "mhfa/pcfa.hpp"
#include "mhfa/semilinear.hpp"
#include "mhfa/turing.hpp"

namespace mhfa::text {

using ParsedMachine = std::variant<MultiHeadAutomaton, pcfa::System, tm::TuringMachine>;

// Line-oriented machine files; '#' starts a comment, tokens are
// whitespace-separated. The header names the machine and its kind; the
// reserved tokens '<', '>', '@' and the pcfa query tokens q1..qk cannot be
// declared as alphabet symbols. Throws ParseError with a 1-based line.
ParsedMachine parseMachineFile(const std::string& contents);

std::string renderMachine(const MultiHeadAutomaton& m);
std::string renderSystem(const pcfa::System& sys);
std::string renderTm(const tm::TuringMachine& machine);
std::string render(const ParsedMachine& parsed);

// Lines "linear base v1 .. vn ; periods p11 .. p1n | p21 .. p2n | ...";
// the periods clause may be absent.
slin::SemilinearSet parseSemilinearFile(const std::string& contents);
std::string renderSemilinear(const slin::SemilinearSet& s);

// Command-line word syntax: tokens split on whitespace when present,
// otherwise one symbol per character.
Word parseWord(const Alphabet& alphabet, const std::string& text);
std::string renderWord(const Alphabet& alphabet, const Word& w);

} // namespace mhfa::text
