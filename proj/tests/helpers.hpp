// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mhfa/engine.hpp"
#include "mhfa/machine.hpp"

namespace mhfa::testing {

// One-head right-mover accepting a*: loops on 'a', halts on the right
// endmarker in its (accepting) single state.
inline MultiHeadAutomaton aStar() {
    MultiHeadAutomaton m;
    m.name = "astar";
    Symbol a = m.alphabet.add("a");
    State s0 = m.addState("s0");
    m.initial = s0;
    m.accepting[s0] = true;
    m.addTransition(s0, {a}, s0, {1});
    return m;
}

// One-head machine for a+ (at least one 'a').
inline MultiHeadAutomaton aPlus() {
    MultiHeadAutomaton m;
    m.name = "aplus";
    Symbol a = m.alphabet.add("a");
    State s0 = m.addState("s0");
    State s1 = m.addState("s1");
    m.initial = s0;
    m.accepting[s1] = true;
    m.addTransition(s0, {a}, s1, {1});
    m.addTransition(s1, {a}, s1, {1});
    return m;
}

inline Word word(const MultiHeadAutomaton& m, const std::string& chars) {
    return m.alphabet.wordFromChars(chars);
}

inline std::vector<std::string> chars(const MultiHeadAutomaton& m,
                                      const std::vector<Word>& words) {
    std::vector<std::string> out;
    for (const auto& w : words)
        out.push_back(m.alphabet.wordToChars(w));
    return out;
}

} // namespace mhfa::testing
