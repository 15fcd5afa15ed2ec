// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "mhfa/machine.hpp"

namespace mhfa {

// Observed head positions as a function of (input length, head, time).
// Assembled while exploring every computation branch on every input of a
// given length; a machine is data-independent exactly when these samples
// never conflict.
struct TrajectoryTable {
    // (length, time) -> positions of all heads, plus the input that first
    // produced the entry.
    std::map<std::pair<int, int>, std::pair<std::vector<std::uint16_t>, Word>> samples;

    std::optional<std::vector<std::uint16_t>> positions(int len, int time) const {
        auto it = samples.find({len, time});
        if (it == samples.end())
            return std::nullopt;
        return it->second.first;
    }
};

struct IndependenceViolation {
    Word inputA;
    Word inputB;
    int head = 0; // 1-based
    int time = 0;
};

struct IndependenceReport {
    bool independent = true;
    TrajectoryTable table;
    std::optional<IndependenceViolation> violation;
};

// Empirical check up to the given input length and step budget: every
// branch of every computation on every input of one length must put every
// head in the same place at the same time.
IndependenceReport checkDataIndependent(const MultiHeadAutomaton& m, int maxLen, int maxSteps);

// Power-set construction for a data-independent nondeterministic machine.
// States of the result are reachable sets of source states; each transition
// carries the move vector the member states agree on. Disagreement means
// the data-independence precondition was insufficiently witnessed and
// raises ObliviousnessViolation. The result is deterministic and accepts
// the same language.
MultiHeadAutomaton determinizeOblivious(const MultiHeadAutomaton& m, int maxLen);

// True when the transition mapping factors through the two-valued
// abstraction {input symbol or left endmarker, right endmarker} on every
// head other than the designated one (1-based).
bool validatePartiallyBlind(const MultiHeadAutomaton& m, int designatedHead);

} // namespace mhfa
