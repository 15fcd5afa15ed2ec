// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "mhfa/machine.hpp"

namespace mhfa::slin {

using NVector = std::vector<long>; // non-negative entries

struct LinearSet {
    NVector base;
    std::vector<NVector> periods; // zero vectors stripped on construction

    LinearSet() = default;
    LinearSet(NVector base_, std::vector<NVector> periods_);
    std::size_t dimension() const { return base.size(); }
};

struct SemilinearSet {
    std::vector<LinearSet> parts; // all of one dimension

    std::size_t dimension() const { return parts.empty() ? 0 : parts.front().dimension(); }
};

// Occurrence counts of each alphabet symbol, in declaration order.
NVector parikh(const Word& w, const Alphabet& alphabet);

// Exhaustive coefficient search; sound because every stored period has a
// positive coordinate, so no coefficient can exceed the largest component
// of the target.
bool linearMember(const NVector& v, const LinearSet& ls);
bool semilinearMember(const NVector& v, const SemilinearSet& s);

// Independent route for cross-checks: all members of weight (component
// sum) <= maxWeight, generated by breadth-first closure.
std::vector<NVector> linearMembersUpToWeight(const LinearSet& ls, long maxWeight);

// Parikh image of the accepted words up to maxLen, deduplicated and
// sorted lexicographically.
std::vector<NVector> parikhImage(const MultiHeadAutomaton& m, int maxLen);

struct SemilinearComparison {
    bool consistent = true;
    std::optional<NVector> counterexample;
    enum class Side { MachineOnly, SetOnly } side = Side::MachineOnly;
};

// Image vectors must lie in s; members of s with weight <= maxLen must be
// realized by accepted words. First discrepancy reported.
SemilinearComparison compareSemilinear(const MultiHeadAutomaton& m, const SemilinearSet& s,
                                       int maxLen);

struct BoundednessReport {
    bool bounded = true;
    std::optional<Word> counterexample;
};

// Every accepted word up to maxLen must fit a1* a2* ... an* for the given
// symbol order; an empty order means the machine's declared order.
BoundednessReport isBoundedUpTo(const MultiHeadAutomaton& m,
                                const std::vector<Symbol>& order, int maxLen);

} // namespace mhfa::slin
