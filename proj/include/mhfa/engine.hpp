// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "mhfa/machine.hpp"

namespace mhfa {

// One application of the successor relation. The empty result means the
// transition function is undefined at the scanned tuple (the machine halts).
std::vector<Config> step(const MultiHeadAutomaton& m, const Word& input, const Config& c);

// Dispatches through the coincidence partition of the current positions.
// The machine must have the sensing flavor.
std::vector<Config> sensingStep(const MultiHeadAutomaton& m, const Word& input, const Config& c);

// Halting acceptance decided by breadth-first reachability over the finite
// configuration graph.
bool accepts(const MultiHeadAutomaton& m, const Word& input);

// The unique maximal run of a deterministic machine, truncated on the first
// repeated configuration or after maxSteps transitions.
RunTrace runDeterministic(const MultiHeadAutomaton& m, const Word& input, std::size_t maxSteps);

// Per head, the number of strict movement-direction changes along the trace.
std::vector<int> countReversals(const MultiHeadAutomaton& m, const RunTrace& trace);

// All accepted words of length <= maxLen in length-lexicographic order
// (symbol order = declaration order). One-way machines are enumerated by
// prefix-incremental search; two-way machines fall back to the brute scan.
std::vector<Word> enumerate(const MultiHeadAutomaton& m, int maxLen);

// Reference path: try every word and call accepts. Kept as the independent
// route for cross-checking the incremental enumerator.
std::vector<Word> enumerateBruteForce(const MultiHeadAutomaton& m, int maxLen);

// First length-lex word accepted by exactly one machine; nullopt when the
// languages agree up to maxLen. Alphabets must match exactly.
std::optional<Word> equivalentUpTo(const MultiHeadAutomaton& a, const MultiHeadAutomaton& b,
                                   int maxLen);

} // namespace mhfa
