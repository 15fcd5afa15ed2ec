// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "mhfa/machine.hpp"
#include "mhfa/turing.hpp"

namespace mhfa::build {

// ---- reference predicates (membership oracles, no automata involved) ----

// w1$...$w2n with blocks over {a,b} and w_i = w_{2n+1-i} for i <= n.
bool lnMember(int n, std::string_view w);

// a b a^2 b a^3 b ... a^m b for some m >= 1.
bool l2Member(std::string_view w);

struct Predicates {
    std::map<std::string, std::function<bool(std::string_view)>> byName;
};

// mirror, markedPalindrome, copy, lrc, fibonacciBlocks(n), l1.
Predicates referencePredicates();
bool fibonacciBlocksMember(int blocks, std::string_view w);

// ---- machine builders ----

// One-way deterministic two-head acceptor for the increasing-a-block
// language { a b a^2 b ... a^m b | m >= 1 }.
MultiHeadAutomaton buildL2Acceptor();

// One-way deterministic k-head acceptor for L_n with n = k(k-1)/2:
// trailing heads park on the left-half blocks while a lead head sweeps the
// matching right-half blocks, round by round.
MultiHeadAutomaton buildLnAcceptor(int k);

// One-way deterministic two-head acceptor of the computation-history
// language of tm: the second head runs one configuration ahead and every
// adjacent pair is compared symbolwise, with the bounded window around the
// state symbol checked against the transition table.
MultiHeadAutomaton buildValcAcceptor(const tm::TuringMachine& machine);

// One-way deterministic (k+1)-head acceptor for the paired-track language
// with n = k(k-1)/2 + 1 blocks per half: upper tracks over {a,b}, lower
// tracks computation histories of tm, halves mirror-equal. Heads 1 and k+1
// verify the left-half lower tracks, then the k leading heads run the
// round schedule, and head k+1 closes the middle pair.
MultiHeadAutomaton buildLnmAcceptor(int k, const tm::TuringMachine& machine);

// Oracle for the language buildLnmAcceptor accepts: 2n pair-track blocks,
// every block's lower track a computation history, halves mirror-equal as
// full pair words.
bool lnmMember(int k, const tm::TuringMachine& machine, const Alphabet& pairAlphabet,
               const Word& w);

// The pair alphabet buildLnmAcceptor works over: "$" first, then tokens
// "u:v" for u in {a,b} and v a history-track symbol of tm.
Alphabet lnmAlphabet(const tm::TuringMachine& machine);

} // namespace mhfa::build
