// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mhfa/alphabet.hpp"
#include "mhfa/machine.hpp"

namespace mhfa::tm {

// Deterministic single-tape machine. Symbols index into tapeSymbols;
// states index into stateNames. Input symbols are a subset of the tape
// alphabet that excludes the blank, and no rule ever writes the blank.
struct TuringMachine {
    std::string name = "tm";
    std::vector<std::string> tapeSymbols;
    Symbol blank = 0;
    std::vector<Symbol> inputSymbols;
    std::vector<std::string> stateNames;
    State initial = 0;
    std::set<State> accepting;

    struct Rule {
        State next;
        Symbol write;
        int move; // -1, 0, +1
    };
    std::map<std::pair<State, Symbol>, Rule> rules;

    Symbol tapeSymbol(const std::string& n) const;
    State state(const std::string& n) const;
    bool isInput(Symbol s) const;
};

// Structural conformance: blank outside the input alphabet, no rule writes
// the blank, rule endpoints in range. Empty result means conforming.
std::vector<std::string> conformanceDiagnostics(const TuringMachine& tm);

// Tape support with the state embedded: left * state * right. The scanned
// symbol is right.front() when present and the blank otherwise (the head
// rests on untouched tape just past the support).
struct ConfigWord {
    std::vector<Symbol> left;
    State state = 0;
    std::vector<Symbol> right;

    bool operator==(const ConfigWord& o) const {
        return left == o.left && state == o.state && right == o.right;
    }
    std::size_t length() const { return left.size() + 1 + right.size(); }
};

enum class StepKind { Stepped, Halted, LeftEdge };

struct StepResult {
    StepKind kind = StepKind::Halted;
    ConfigWord next;
};

// Applies one rule. A right move past the support appends one blank cell
// so the state symbol always keeps a scanned cell to its right; a left
// move at the left edge of the support is a conformance violation.
StepResult step(const TuringMachine& tm, const ConfigWord& conf);

ConfigWord initialConfigWord(const TuringMachine& tm, const std::vector<Symbol>& input);

enum class RunKind { Accepted, Rejected, BoundExceeded, NonConforming };

struct RunResult {
    RunKind kind = RunKind::Rejected;
    std::vector<ConfigWord> history;
    std::string note; // set for NonConforming
};

// Simulates from the initial configuration; Accepted means halting in an
// accepting state. Accepting runs must take an odd number of moves, at
// least three; violations surface as NonConforming.
RunResult run(const TuringMachine& tm, const std::vector<Symbol>& input, int maxSteps);

// Alphabet of computation-history words: "$" first, then the tape
// symbols, then the state symbols, in declaration order.
Alphabet valcAlphabet(const TuringMachine& tm);

Word configToWord(const TuringMachine& tm, const Alphabet& va, const ConfigWord& c);

// $ w1 $ w2 $ ... $ w2n $ over the history alphabet.
Word valcString(const TuringMachine& tm, const std::vector<ConfigWord>& history);

// Direct parse-and-check membership oracle: leading/trailing separator, an
// even number >= 4 of configuration blocks, the first of the form
// initial-state * input-symbols, every adjacent pair related by step, and
// the last block carrying an accepting state. No automaton involved.
bool referenceValcMember(const TuringMachine& tm, const Word& w);

// Constructive enumeration of every history word of length <= maxLen:
// simulate each input and cut the run at every even-length prefix (>= 4
// configurations) that ends in an accepting-state block.
std::vector<Word> valcWordsUpTo(const TuringMachine& tm, int maxLen);

// Two-state machine accepting only the empty word in three stationary
// moves; its history set is a single 12-symbol word.
TuringMachine fixtureTm();

// Three-state machine accepting only "a", exercising right moves with
// support growth and an interior left move.
TuringMachine fixtureTmLr();

} // namespace mhfa::tm
