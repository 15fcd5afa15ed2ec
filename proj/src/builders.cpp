// SPDX-License-Identifier: Apache-2.0
#include "mhfa/builders.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "mhfa/errors.hpp"

namespace mhfa::build {

// ---------------------------------------------------------------------
// reference predicates
// ---------------------------------------------------------------------

namespace {

std::vector<std::string_view> splitOn(std::string_view w, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= w.size(); ++i) {
        if (i == w.size() || w[i] == sep) {
            parts.push_back(w.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

bool overAB(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == 'a' || c == 'b'; });
}

} // namespace

bool lnMember(int n, std::string_view w) {
    if (n < 1)
        throw UsageError("lnMember requires n >= 1");
    auto parts = splitOn(w, '$');
    if (parts.size() != static_cast<std::size_t>(2 * n))
        return false;
    for (auto p : parts)
        if (!overAB(p))
            return false;
    for (int i = 0; i < n; ++i)
        if (parts[i] != parts[2 * n - 1 - i])
            return false;
    return true;
}

bool l2Member(std::string_view w) {
    std::size_t i = 0;
    int expect = 1;
    while (i < w.size()) {
        for (int j = 0; j < expect; ++j, ++i)
            if (i >= w.size() || w[i] != 'a')
                return false;
        if (i >= w.size() || w[i] != 'b')
            return false;
        ++i;
        ++expect;
    }
    return expect > 1; // at least the first block
}

bool fibonacciBlocksMember(int blocks, std::string_view w) {
    if (blocks < 1)
        throw UsageError("fibonacciBlocksMember requires at least one block");
    auto parts = splitOn(w, '$');
    if (parts.size() != static_cast<std::size_t>(blocks))
        return false;
    for (auto p : parts)
        if (!std::all_of(p.begin(), p.end(), [](char c) { return c == 'a'; }))
            return false;
    // F(1) = F(2) = 1
    std::vector<long> fib{1, 1};
    while (static_cast<int>(fib.size()) < blocks + 1)
        fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    long i = static_cast<long>(parts[0].size()); // block 1 has i * F(2) = i symbols
    if (i < 1)
        return false;
    for (int j = 0; j < blocks; ++j)
        if (static_cast<long>(parts[j].size()) != i * fib[j + 1])
            return false;
    return true;
}

Predicates referencePredicates() {
    Predicates p;
    p.byName["mirror"] = [](std::string_view w) {
        return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
    };
    p.byName["markedPalindrome"] = [](std::string_view w) {
        auto parts = splitOn(w, '$');
        if (parts.size() != 2 || parts[0].empty())
            return false;
        if (!overAB(parts[0]) || !overAB(parts[1]))
            return false;
        return std::equal(parts[0].begin(), parts[0].end(), parts[1].rbegin(),
                          parts[1].rend()) &&
               parts[0].size() == parts[1].size();
    };
    p.byName["copy"] = [](std::string_view w) {
        auto parts = splitOn(w, '$');
        return parts.size() == 2 && !parts[0].empty() && overAB(parts[0]) &&
               parts[0] == parts[1];
    };
    p.byName["lrc"] = [](std::string_view w) {
        // u c^x v $ u v with u, v over {a,b}
        auto parts = splitOn(w, '$');
        if (parts.size() != 2)
            return false;
        std::string_view left = parts[0], right = parts[1];
        if (!overAB(right))
            return false;
        for (std::size_t ul = 0; ul <= right.size(); ++ul) {
            std::string_view u = right.substr(0, ul), v = right.substr(ul);
            if (left.size() < u.size() + v.size())
                continue;
            if (left.substr(0, u.size()) != u)
                continue;
            if (left.substr(left.size() - v.size()) != v)
                continue;
            std::string_view mid = left.substr(u.size(), left.size() - u.size() - v.size());
            if (std::all_of(mid.begin(), mid.end(), [](char c) { return c == 'c'; }))
                return true;
        }
        return false;
    };
    p.byName["l1"] = [](std::string_view w) {
        if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return c == 'a'; }))
            return false;
        std::size_t n = w.size();
        return n >= 2 && (n & (n - 1)) == 0;
    };
    return p;
}

// ---------------------------------------------------------------------
// explicit-table construction helper
// ---------------------------------------------------------------------

namespace {

using SymSet = std::vector<Symbol>;
using Guard = std::vector<SymSet>; // one set per head

class Sketch {
  public:
    Sketch(std::string name, Alphabet alphabet, int heads) {
        m_.name = std::move(name);
        m_.alphabet = std::move(alphabet);
        m_.heads = heads;
        m_.direction = Direction::OneWay;
    }

    State fresh(const std::string& hint) {
        return m_.addState(hint + "." + std::to_string(counter_++));
    }

    // Expands the per-head symbol sets into explicit transitions. Throws
    // when a key is already taken: every built machine is deterministic by
    // construction.
    void arc(State from, const Guard& guard, State to, const std::vector<int>& moves) {
        assert(static_cast<int>(guard.size()) == m_.heads);
        std::vector<std::size_t> idx(m_.heads, 0);
        std::vector<Symbol> tuple(m_.heads);
        for (const auto& set : guard)
            if (set.empty())
                return; // unsatisfiable guard
        Target t;
        t.next = to;
        for (int i = 0; i < m_.heads; ++i)
            t.moves[i] = static_cast<std::int8_t>(moves[i]);
        while (true) {
            for (int i = 0; i < m_.heads; ++i)
                tuple[i] = guard[i][idx[i]];
            TransitionKey key{from, packSymbols(tuple), 0};
            auto [it, inserted] = m_.transitions.emplace(key, std::vector<Target>{t});
            if (!inserted)
                throw std::logic_error("builder emitted overlapping transitions in state " +
                                       m_.stateNames[from]);
            int i = m_.heads - 1;
            while (i >= 0 && idx[i] + 1 == guard[i].size()) {
                idx[i] = 0;
                --i;
            }
            if (i < 0)
                break;
            ++idx[i];
        }
    }

    MultiHeadAutomaton take(State initial, State acceptState) {
        m_.initial = initial;
        m_.accepting.assign(m_.stateNames.size(), false);
        m_.accepting[acceptState] = true;
        return std::move(m_);
    }

    int heads() const { return m_.heads; }

  private:
    MultiHeadAutomaton m_;
    int counter_ = 0;
};

Guard idleGuard(const std::vector<SymSet>& ctx) { return ctx; }

// Head position bookkeeping while a schedule is being emitted.
struct HeadPlace {
    enum Kind { AtBlockStart, OnSeparatorAfter, AtWordEnd } kind = AtBlockStart;
    int block = 1;
};

// Move one head right until it stands on the first cell of targetBlock,
// crossing separators as needed. content/sep describe the symbols it may
// walk over; ctx gives the other heads' possible symbols.
State emitMoveToBlock(Sketch& sk, std::vector<SymSet>& ctx, std::vector<HeadPlace>& at,
                      State cur, int h, int targetBlock, const SymSet& content,
                      const SymSet& sep, const std::string& hint) {
    int k = sk.heads();
    HeadPlace& place = at[h];
    assert(place.kind != HeadPlace::AtWordEnd);
    int from = place.block;
    if (place.kind == HeadPlace::OnSeparatorAfter) {
        // step off the separator onto the next block start
        State nxt = sk.fresh(hint + "_on");
        Guard g = idleGuard(ctx);
        g[h] = sep;
        std::vector<int> moves(k, 0);
        moves[h] = 1;
        sk.arc(cur, g, nxt, moves);
        cur = nxt;
        place.kind = HeadPlace::AtBlockStart;
        place.block = from + 1;
        from = place.block;
    }
    assert(targetBlock >= from);
    for (int b = from; b < targetBlock; ++b) {
        // skip the rest of block b, then cross its separator
        State skipState = cur;
        Guard stay = idleGuard(ctx);
        stay[h] = content;
        std::vector<int> moves(k, 0);
        moves[h] = 1;
        sk.arc(skipState, stay, skipState, moves);
        State nxt = sk.fresh(hint + "_x" + std::to_string(b));
        Guard cross = idleGuard(ctx);
        cross[h] = sep;
        sk.arc(skipState, cross, nxt, moves);
        cur = nxt;
    }
    place.kind = HeadPlace::AtBlockStart;
    place.block = targetBlock;
    return cur;
}

// Lockstep equality of the trail head's block against the lead head's
// block. Ends with both heads on their block-ending symbol; exitTo, when
// valid, receives the exit arc directly.
State emitCompare(Sketch& sk, std::vector<SymSet>& ctx, std::vector<HeadPlace>& at, State cur,
                  int trail, int lead, const SymSet& content, const SymSet& sep,
                  const SymSet& leadEnd, const std::string& hint,
                  State exitTo = static_cast<State>(-1)) {
    int k = sk.heads();
    std::vector<int> both(k, 0);
    both[trail] = 1;
    both[lead] = 1;
    for (Symbol s : content) {
        Guard g = idleGuard(ctx);
        g[trail] = {s};
        g[lead] = {s};
        sk.arc(cur, g, cur, both);
    }
    State exit = exitTo != static_cast<State>(-1) ? exitTo : sk.fresh(hint + "_done");
    Guard g = idleGuard(ctx);
    g[trail] = sep;
    g[lead] = leadEnd;
    sk.arc(cur, g, exit, std::vector<int>(k, 0));
    at[trail].kind = HeadPlace::OnSeparatorAfter;
    at[lead].kind =
        (leadEnd.size() == 1 && leadEnd[0] == kRightEnd) ? HeadPlace::AtWordEnd
                                                         : HeadPlace::OnSeparatorAfter;
    at[lead].block = at[lead].block; // block index already tracked by caller
    return exit;
}

} // namespace

// ---------------------------------------------------------------------
// increasing a-block acceptor
// ---------------------------------------------------------------------

MultiHeadAutomaton buildL2Acceptor() {
    Alphabet al;
    Symbol a = al.add("a");
    Symbol b = al.add("b");
    Sketch sk("l2", al, 2);
    State q0 = sk.fresh("first_a");
    State q1 = sk.fresh("first_b");
    State ls = sk.fresh("pair_start");
    State lm = sk.fresh("pair_as");
    State lb = sk.fresh("pair_b");
    State acc = sk.fresh("accept");

    // first block must be exactly "ab"; head 2 walks it, head 1 waits
    sk.arc(q0, {{a}, {a}}, q1, {0, 1});
    sk.arc(q1, {{a}, {b}}, ls, {0, 1});
    // block pair comparison with the +1 offset; accept when head 2 leaves
    // the last block exactly at the end of the input
    sk.arc(ls, {{a}, {kRightEnd}}, acc, {0, 0});
    sk.arc(ls, {{a}, {a}}, lm, {1, 1});
    sk.arc(lm, {{a}, {a}}, lm, {1, 1});
    sk.arc(lm, {{b}, {a}}, lb, {0, 1});
    sk.arc(lb, {{b}, {b}}, ls, {1, 1});
    return sk.take(q0, acc);
}

// ---------------------------------------------------------------------
// round-schedule acceptor for L_n, n = k(k-1)/2
// ---------------------------------------------------------------------

MultiHeadAutomaton buildLnAcceptor(int k) {
    if (k < 2)
        throw UsageError("buildLnAcceptor requires k >= 2");
    if (k > kMaxHeads)
        throw UsageError("buildLnAcceptor supports at most " + std::to_string(kMaxHeads) +
                         " heads");
    int n = k * (k - 1) / 2;
    int total = 2 * n;

    Alphabet al;
    Symbol a = al.add("a");
    Symbol b = al.add("b");
    Symbol sepSym = al.add("$");
    Sketch sk("ln" + std::to_string(n), al, k);

    SymSet content{a, b};
    SymSet sep{sepSym};
    SymSet leadFinal{kRightEnd};
    SymSet coarse{a, b, sepSym, kRightEnd};
    std::vector<SymSet> ctx(k, coarse);
    std::vector<HeadPlace> at(k);

    State cur = sk.fresh("start");
    State init = cur;
    State acc = sk.fresh("accept");

    for (int r = 1; r <= k - 1; ++r) {
        int sr = 1;
        for (int j = 1; j < r; ++j)
            sr += k - j;
        int lead = r - 1;
        int numPairs = k - r;
        int leadStart = 2 * n + 2 - sr - k + r;
        cur = emitMoveToBlock(sk, ctx, at, cur, lead, leadStart, content, sep,
                              "r" + std::to_string(r) + "_lead");
        for (int p = r; p <= k - 1; ++p)
            cur = emitMoveToBlock(sk, ctx, at, cur, p, sr + (p - r), content, sep,
                                  "r" + std::to_string(r) + "_park" + std::to_string(p));
        for (int i = 0; i < numPairs; ++i) {
            int trailHead = k - 1 - i;
            int leadBlock = leadStart + i;
            if (i > 0)
                cur = emitMoveToBlock(sk, ctx, at, cur, lead, leadBlock, content, sep,
                                      "r" + std::to_string(r) + "_gap" + std::to_string(i));
            bool lastOfWord = leadBlock == total;
            bool lastOverall = (r == k - 1) && (i == numPairs - 1);
            at[lead].block = leadBlock;
            cur = emitCompare(sk, ctx, at, cur, trailHead, lead, content, sep,
                              lastOfWord ? leadFinal : sep,
                              "r" + std::to_string(r) + "_cmp" + std::to_string(i),
                              lastOverall ? acc : static_cast<State>(-1));
        }
    }
    return sk.take(init, acc);
}

// ---------------------------------------------------------------------
// computation-history comparator
// ---------------------------------------------------------------------

namespace {

// Emits the two-head history verifier: head h1 walks block i while head h2
// walks block i+1, comparing symbolwise with the bounded window around the
// state symbol checked against the machine's rules. Works on any alphabet
// through `carriers`: carriers[v] lists the full symbols whose history
// track reads v (track ids: 0 = separator, then tape symbols, then
// states). endSet marks what follows the final separator.
class HistoryVerifier {
  public:
    HistoryVerifier(Sketch& sk, const tm::TuringMachine& machine, int h1, int h2,
                    std::vector<std::vector<Symbol>> carriers, SymSet endSet,
                    std::vector<SymSet> ctx, std::string pfx)
        : sk_(sk), tm_(machine), h1_(h1), h2_(h2), carriers_(std::move(carriers)),
          endSet_(std::move(endSet)), ctx_(std::move(ctx)), pfx_(std::move(pfx)) {
        nT_ = static_cast<int>(tm_.tapeSymbols.size());
        nS_ = static_cast<int>(tm_.stateNames.size());
    }

    // Returns the verifier's entry state; both heads must stand on the
    // leading separator when it is entered. On success, acceptance is
    // wired to `success`; with catchup set, h1 is first walked onto the
    // end symbol so both heads leave the verifier aligned.
    State emit(State success, bool catchup) {
        success_ = success;
        catchup_ = catchup;
        State entry = sk_.fresh(pfx_ + "lead_sep");
        State scanState = sk_.fresh(pfx_ + "w1_state");
        State scanInput = sk_.fresh(pfx_ + "w1_input");
        arcT(entry, trackSep(), trackSep(), both(), scanState);
        arcT(scanState, trackState(tm_.initial), trackState(tm_.initial), onlyH2(), scanInput);
        for (Symbol in : tm_.inputSymbols)
            arcT(scanInput, trackState(tm_.initial), trackTape(in), onlyH2(), scanInput);
        arcT(scanInput, trackState(tm_.initial), trackSep(), onlyH2(),
             entryState(true, false, tm_.accepting.count(tm_.initial) > 0));
        return entry;
    }

  private:
    Sketch& sk_;
    const tm::TuringMachine& tm_;
    int h1_, h2_;
    std::vector<std::vector<Symbol>> carriers_;
    SymSet endSet_;
    std::vector<SymSet> ctx_;
    std::string pfx_;
    int nT_ = 0, nS_ = 0;
    State success_ = 0;
    bool catchup_ = false;

    // memoized parameterized states
    std::map<std::tuple<bool, bool, bool>, State> entry_;
    std::map<std::pair<bool, bool>, State> plainA_;
    std::map<std::tuple<bool, bool, bool>, State> suffixC_, maybeExt_, h1Done_;
    std::map<std::tuple<State, State, bool, bool>, State> stay_;
    std::map<std::tuple<State, Symbol, bool, bool>, State> right_;
    std::map<std::tuple<Symbol, State, bool, bool>, State> leftHold_;
    std::map<std::tuple<State, State, bool, bool>, State> leftBody_;
    std::map<std::tuple<bool, bool, bool>, State> rightEdge_;
    State catchupState_ = static_cast<State>(-1);

    int trackSep() const { return 0; }
    int trackTape(Symbol t) const { return 1 + t; }
    int trackState(State s) const { return 1 + nT_ + static_cast<int>(s); }

    std::vector<int> both() const {
        std::vector<int> m(sk_.heads(), 0);
        m[h1_] = 1;
        m[h2_] = 1;
        return m;
    }
    std::vector<int> onlyH2() const {
        std::vector<int> m(sk_.heads(), 0);
        m[h2_] = 1;
        return m;
    }
    std::vector<int> onlyH1() const {
        std::vector<int> m(sk_.heads(), 0);
        m[h1_] = 1;
        return m;
    }

    void arcT(State from, int track1, int track2, const std::vector<int>& moves, State to) {
        Guard g = ctx_;
        g[h1_] = carriers_[track1];
        g[h2_] = carriers_[track2];
        sk_.arc(from, g, to, moves);
    }

    void arcEnd(State from, const SymSet& h1set, const std::vector<int>& moves, State to) {
        Guard g = ctx_;
        g[h1_] = h1set;
        g[h2_] = endSet_;
        sk_.arc(from, g, to, moves);
    }

    SymSet contentCarriers() const {
        SymSet set;
        for (int v = 1; v < 1 + nT_ + nS_; ++v)
            for (Symbol s : carriers_[v])
                set.push_back(s);
        return set;
    }

    static std::pair<bool, bool> nextFlags(bool even, bool ge4) {
        return {!even, ge4 || !even};
    }

    const tm::TuringMachine::Rule* rule(State s, Symbol scan) const {
        auto it = tm_.rules.find({s, scan});
        return it == tm_.rules.end() ? nullptr : &it->second;
    }
    bool acceptingState(State s) const { return tm_.accepting.count(s) > 0; }

    State entryState(bool even, bool ge4, bool lastAccepting) {
        auto key = std::make_tuple(even, ge4, lastAccepting);
        if (auto it = entry_.find(key); it != entry_.end())
            return it->second;
        State st = sk_.fresh(pfx_ + "entry");
        entry_.emplace(key, st);
        emitDispatch(st, even, ge4);
        // On the way in, the flags describe the block h2 is about to walk;
        // when h2 meets the end marker instead, the finished count is one
        // less, so an even history of length >= 4 shows up as an odd index
        // past 4.
        if (!even && ge4 && lastAccepting) {
            // the block just finished was the accepting final configuration
            if (!catchup_) {
                arcEnd(st, contentCarriers(), std::vector<int>(sk_.heads(), 0), success_);
            } else {
                arcEnd(st, contentCarriers(), onlyH1(), catchup());
            }
        }
        return st;
    }

    State catchup() {
        if (catchupState_ != static_cast<State>(-1))
            return catchupState_;
        State cu = sk_.fresh(pfx_ + "catchup");
        catchupState_ = cu;
        Guard g = ctx_;
        g[h1_] = contentCarriers();
        g[h2_] = endSet_;
        sk_.arc(cu, g, cu, onlyH1());
        Guard done = ctx_;
        done[h1_] = carriers_[trackSep()];
        done[h2_] = endSet_;
        sk_.arc(cu, done, success_, onlyH1());
        return cu;
    }

    State plainA(bool even, bool ge4) {
        auto key = std::make_pair(even, ge4);
        if (auto it = plainA_.find(key); it != plainA_.end())
            return it->second;
        State st = sk_.fresh(pfx_ + "prefix");
        plainA_.emplace(key, st);
        emitDispatch(st, even, ge4);
        return st;
    }

    // the shared block-start / prefix arcs of one pair comparison
    void emitDispatch(State st, bool even, bool ge4) {
        for (Symbol t = 0; t < nT_; ++t)
            arcT(st, trackTape(t), trackTape(t), both(), plainA(even, ge4));
        for (State s = 0; s < static_cast<State>(nS_); ++s) {
            for (State s2 = 0; s2 < static_cast<State>(nS_); ++s2)
                if (State w = stayWindow(s, s2, even, ge4); w != static_cast<State>(-1))
                    arcT(st, trackState(s), trackState(s2), both(), w);
            for (Symbol x = 0; x < nT_; ++x)
                if (State w = rightWindow(s, x, even, ge4); w != static_cast<State>(-1))
                    arcT(st, trackState(s), trackTape(x), both(), w);
        }
        for (Symbol ta = 0; ta < nT_; ++ta)
            for (State s2 = 0; s2 < static_cast<State>(nS_); ++s2)
                if (State w = leftHold(ta, s2, even, ge4); w != static_cast<State>(-1))
                    arcT(st, trackTape(ta), trackState(s2), both(), w);
    }

    // window for a stay move: h1 saw state s, h2 saw state s2
    State stayWindow(State s, State s2, bool even, bool ge4) {
        auto key = std::make_tuple(s, s2, even, ge4);
        if (auto it = stay_.find(key); it != stay_.end())
            return it->second;
        bool any = false;
        for (Symbol t = 0; t < nT_ + 1; ++t) {
            Symbol scan = t < nT_ ? t : tm_.blank;
            const auto* r = rule(s, scan);
            if (r && r->next == s2 && r->move == 0 && (t < nT_ || scan == tm_.blank))
                any = true;
        }
        if (!any) {
            stay_.emplace(key, static_cast<State>(-1));
            return static_cast<State>(-1);
        }
        State st = sk_.fresh(pfx_ + "stay");
        stay_.emplace(key, st);
        bool fin = acceptingState(s2);
        for (Symbol t = 0; t < nT_; ++t) {
            const auto* r = rule(s, t);
            if (r && r->next == s2 && r->move == 0)
                arcT(st, trackTape(t), trackTape(r->write), both(), suffixC(even, ge4, fin));
        }
        // state symbol was last in block i: the scanned cell is blank tape
        if (const auto* r = rule(s, tm_.blank); r && r->next == s2 && r->move == 0)
            arcT(st, trackSep(), trackTape(r->write), onlyH2(), h1Done(even, ge4, fin));
        return st;
    }

    // window for a right move: h1 saw state s, h2 saw written symbol x
    State rightWindow(State s, Symbol x, bool even, bool ge4) {
        auto key = std::make_tuple(s, x, even, ge4);
        if (auto it = right_.find(key); it != right_.end())
            return it->second;
        bool any = false;
        for (Symbol t = 0; t <= nT_; ++t) {
            Symbol scan = t < nT_ ? t : tm_.blank;
            const auto* r = rule(s, scan);
            if (r && r->write == x && r->move == 1)
                any = true;
        }
        if (!any) {
            right_.emplace(key, static_cast<State>(-1));
            return static_cast<State>(-1);
        }
        State st = sk_.fresh(pfx_ + "right");
        right_.emplace(key, st);
        for (Symbol t = 0; t < nT_; ++t) {
            const auto* r = rule(s, t);
            if (r && r->write == x && r->move == 1)
                arcT(st, trackTape(t), trackState(r->next), both(),
                     maybeExt(even, ge4, acceptingState(r->next)));
        }
        if (const auto* r = rule(s, tm_.blank); r && r->write == x && r->move == 1)
            arcT(st, trackSep(), trackState(r->next), onlyH2(),
                 rightEdge(even, ge4, acceptingState(r->next)));
        return st;
    }

    // h2 showed the new state one cell early: a left move; remember the
    // symbol h1 read and the state h2 showed
    State leftHold(Symbol ta, State s2, bool even, bool ge4) {
        auto key = std::make_tuple(ta, s2, even, ge4);
        if (auto it = leftHold_.find(key); it != leftHold_.end())
            return it->second;
        std::vector<State> sources;
        for (State s = 0; s < static_cast<State>(nS_); ++s)
            if (leftBody(s, s2, even, ge4) != static_cast<State>(-1))
                sources.push_back(s);
        if (sources.empty()) {
            leftHold_.emplace(key, static_cast<State>(-1));
            return static_cast<State>(-1);
        }
        State st = sk_.fresh(pfx_ + "left");
        leftHold_.emplace(key, st);
        for (State s : sources)
            arcT(st, trackState(s), trackTape(ta), both(), leftBody(s, s2, even, ge4));
        return st;
    }

    State leftBody(State s, State s2, bool even, bool ge4) {
        auto key = std::make_tuple(s, s2, even, ge4);
        if (auto it = leftBody_.find(key); it != leftBody_.end())
            return it->second;
        bool any = false;
        for (Symbol t = 0; t <= nT_; ++t) {
            Symbol scan = t < nT_ ? t : tm_.blank;
            const auto* r = rule(s, scan);
            if (r && r->next == s2 && r->move == -1)
                any = true;
        }
        if (!any) {
            leftBody_.emplace(key, static_cast<State>(-1));
            return static_cast<State>(-1);
        }
        State st = sk_.fresh(pfx_ + "leftw");
        leftBody_.emplace(key, st);
        bool fin = acceptingState(s2);
        for (Symbol t = 0; t < nT_; ++t) {
            const auto* r = rule(s, t);
            if (r && r->next == s2 && r->move == -1)
                arcT(st, trackTape(t), trackTape(r->write), both(), suffixC(even, ge4, fin));
        }
        if (const auto* r = rule(s, tm_.blank); r && r->next == s2 && r->move == -1)
            arcT(st, trackSep(), trackTape(r->write), onlyH2(), h1Done(even, ge4, fin));
        return st;
    }

    // equal suffixes after the window
    State suffixC(bool even, bool ge4, bool fin) {
        auto key = std::make_tuple(even, ge4, fin);
        if (auto it = suffixC_.find(key); it != suffixC_.end())
            return it->second;
        State st = sk_.fresh(pfx_ + "suffix");
        suffixC_.emplace(key, st);
        for (Symbol t = 0; t < nT_; ++t)
            arcT(st, trackTape(t), trackTape(t), both(), st);
        auto [e2, g2] = nextFlags(even, ge4);
        arcT(st, trackSep(), trackSep(), both(), entryState(e2, g2, fin));
        return st;
    }

    // straight after a right-move window: a support extension (one new
    // blank cell) is legal only if block i ends right here
    State maybeExt(bool even, bool ge4, bool fin) {
        auto key = std::make_tuple(even, ge4, fin);
        if (auto it = maybeExt_.find(key); it != maybeExt_.end())
            return it->second;
        State st = sk_.fresh(pfx_ + "mext");
        maybeExt_.emplace(key, st);
        for (Symbol t = 0; t < nT_; ++t)
            arcT(st, trackTape(t), trackTape(t), both(), suffixC(even, ge4, fin));
        arcT(st, trackSep(), trackTape(tm_.blank), onlyH2(), h1Done(even, ge4, fin));
        return st;
    }

    // right move whose scanned cell was the blank past the support:
    // block i+1 continues with the new state, the blank, then ends
    State rightEdge(bool even, bool ge4, bool fin) {
        auto key = std::make_tuple(even, ge4, fin);
        if (auto it = rightEdge_.find(key); it != rightEdge_.end())
            return it->second;
        State st = sk_.fresh(pfx_ + "redge");
        rightEdge_.emplace(key, st);
        arcT(st, trackSep(), trackTape(tm_.blank), onlyH2(), h1Done(even, ge4, fin));
        return st;
    }

    // h1 already stands on its separator; h2 still owes its own
    State h1Done(bool even, bool ge4, bool fin) {
        auto key = std::make_tuple(even, ge4, fin);
        if (auto it = h1Done_.find(key); it != h1Done_.end())
            return it->second;
        State st = sk_.fresh(pfx_ + "h1done");
        h1Done_.emplace(key, st);
        auto [e2, g2] = nextFlags(even, ge4);
        arcT(st, trackSep(), trackSep(), both(), entryState(e2, g2, fin));
        return st;
    }
};

std::vector<std::vector<Symbol>> identityCarriers(const tm::TuringMachine& machine) {
    std::size_t n = 1 + machine.tapeSymbols.size() + machine.stateNames.size();
    std::vector<std::vector<Symbol>> carriers(n);
    for (std::size_t v = 0; v < n; ++v)
        carriers[v] = {static_cast<Symbol>(v)};
    return carriers;
}

} // namespace

MultiHeadAutomaton buildValcAcceptor(const tm::TuringMachine& machine) {
    {
        auto diags = tm::conformanceDiagnostics(machine);
        if (!diags.empty())
            throw ValidationError("turing machine not conforming: " + diags.front());
    }
    Alphabet al = tm::valcAlphabet(machine);
    Sketch sk(machine.name + "-valc", al, 2);
    State acc = sk.fresh("accept");
    std::vector<SymSet> ctx(2); // fully overwritten by the verifier
    HistoryVerifier verifier(sk, machine, 0, 1, identityCarriers(machine), {kRightEnd}, ctx,
                             "v_");
    State entry = verifier.emit(acc, false);
    return sk.take(entry, acc);
}

// ---------------------------------------------------------------------
// paired-track acceptor
// ---------------------------------------------------------------------

namespace {

int pairTrackCount(const tm::TuringMachine& machine) {
    return 1 + static_cast<int>(machine.tapeSymbols.size() + machine.stateNames.size());
}

// pair symbol layout: id 0 is the bare block separator, then "a:v","b:v"
// per history-track symbol v (track 0 = the in-block history separator)
std::pair<int, int> pairParts(Symbol s) { // (upper, track)
    return {(s - 1) % 2, (s - 1) / 2};
}

} // namespace

Alphabet lnmAlphabet(const tm::TuringMachine& machine) {
    Alphabet va = tm::valcAlphabet(machine);
    Alphabet al;
    al.add("$");
    for (std::size_t v = 0; v < va.size(); ++v) {
        al.add("a:" + va.name(static_cast<Symbol>(v)));
        al.add("b:" + va.name(static_cast<Symbol>(v)));
    }
    return al;
}

MultiHeadAutomaton buildLnmAcceptor(int k, const tm::TuringMachine& machine) {
    if (k < 2)
        throw UsageError("buildLnmAcceptor requires k >= 2");
    if (k + 1 > kMaxHeads)
        throw UsageError("buildLnmAcceptor supports at most " + std::to_string(kMaxHeads - 1) +
                         " leading heads");
    {
        auto diags = tm::conformanceDiagnostics(machine);
        if (!diags.empty())
            throw ValidationError("turing machine not conforming: " + diags.front());
    }
    int n = k * (k - 1) / 2 + 1;
    int total = 2 * n;
    int heads = k + 1;

    Alphabet al = lnmAlphabet(machine);
    Symbol bare = 0;
    int tracks = pairTrackCount(machine);
    std::vector<std::vector<Symbol>> carry(tracks);
    for (int v = 0; v < tracks; ++v)
        carry[v] = {static_cast<Symbol>(1 + 2 * v), static_cast<Symbol>(2 + 2 * v)};

    Sketch sk(machine.name + "-lnm" + std::to_string(n), al, heads);

    SymSet allPairs;
    for (int v = 0; v < tracks; ++v)
        for (Symbol s : carry[v])
            allPairs.push_back(s);
    SymSet sep{bare};
    SymSet coarse = allPairs;
    coarse.push_back(bare);
    coarse.push_back(kRightEnd);

    std::vector<SymSet> ctx(heads, coarse);
    std::vector<HeadPlace> at(heads);
    State acc = sk.fresh("accept");
    State init = static_cast<State>(-1);
    State cur = static_cast<State>(-1);

    // phase 1: heads 0 and k verify the left-half lower tracks
    for (int blockIdx = 1; blockIdx <= n; ++blockIdx) {
        HistoryVerifier verifier(sk, machine, 0, k, carry, sep, ctx,
                                 "b" + std::to_string(blockIdx) + "_");
        State done = sk.fresh("b" + std::to_string(blockIdx) + "_next");
        State entry = verifier.emit(done, true);
        if (blockIdx == 1) {
            // the heads start on the first block's leading separator, so
            // the first verifier's entry doubles as the machine start
            init = entry;
        } else {
            // both heads stand on the bare separator after the previous
            // block; step them together onto this block's first symbol
            Guard g = ctx;
            g[0] = sep;
            g[k] = sep;
            std::vector<int> mv(heads, 0);
            mv[0] = 1;
            mv[k] = 1;
            sk.arc(cur, g, entry, mv);
        }
        cur = done; // both heads on the bare separator after blockIdx
        at[0] = {HeadPlace::OnSeparatorAfter, blockIdx};
        at[k] = {HeadPlace::OnSeparatorAfter, blockIdx};
    }
    // step both verification heads into block n+1
    {
        Guard g = ctx;
        g[0] = sep;
        g[k] = sep;
        std::vector<int> mv(heads, 0);
        mv[0] = 1;
        mv[k] = 1;
        State nxt = sk.fresh("at_n1");
        sk.arc(cur, g, nxt, mv);
        cur = nxt;
        at[0] = {HeadPlace::AtBlockStart, n + 1};
        at[k] = {HeadPlace::AtBlockStart, n + 1};
    }

    // phase 2: the k leading heads run the round schedule on full pair words
    for (int r = 1; r <= k - 1; ++r) {
        int sr = 1;
        for (int j = 1; j < r; ++j)
            sr += k - j;
        int lead = r - 1;
        int numPairs = k - r;
        int leadStart = 2 * n + 2 - sr - k + r;
        cur = emitMoveToBlock(sk, ctx, at, cur, lead, leadStart, allPairs, sep,
                              "p2r" + std::to_string(r) + "_lead");
        for (int p = r; p <= k - 1; ++p)
            cur = emitMoveToBlock(sk, ctx, at, cur, p, sr + (p - r), allPairs, sep,
                                  "p2r" + std::to_string(r) + "_park" + std::to_string(p));
        for (int i = 0; i < numPairs; ++i) {
            int trailHead = k - 1 - i;
            int leadBlock = leadStart + i;
            if (i > 0)
                cur = emitMoveToBlock(sk, ctx, at, cur, lead, leadBlock, allPairs, sep,
                                      "p2r" + std::to_string(r) + "_gap" + std::to_string(i));
            bool lastOfWord = leadBlock == total;
            at[lead].block = leadBlock;
            cur = emitCompare(sk, ctx, at, cur, trailHead, lead, allPairs, sep,
                              lastOfWord ? SymSet{kRightEnd} : sep,
                              "p2r" + std::to_string(r) + "_cmp" + std::to_string(i));
        }
    }

    // phase 3: the last round's trail head meets head k on the middle pair
    {
        int trailHead = k - 1; // ended on the separator after block n-1
        cur = emitMoveToBlock(sk, ctx, at, cur, trailHead, n, allPairs, sep, "p3_trail");
        at[k].block = n + 1;
        cur = emitCompare(sk, ctx, at, cur, trailHead, k, allPairs, sep, sep, "p3_cmp", acc);
    }
    return sk.take(init, acc);
}

bool lnmMember(int k, const tm::TuringMachine& machine, const Alphabet& pairAlphabet,
               const Word& w) {
    int n = k * (k - 1) / 2 + 1;
    // split on the bare separator (symbol 0)
    std::vector<Word> blocks;
    Word curBlock;
    for (Symbol s : w) {
        if (s == 0) {
            blocks.push_back(curBlock);
            curBlock.clear();
        } else {
            if (!pairAlphabet.contains(s))
                return false;
            curBlock.push_back(s);
        }
    }
    blocks.push_back(curBlock);
    if (blocks.size() != static_cast<std::size_t>(2 * n))
        return false;
    for (int i = 0; i < n; ++i)
        if (blocks[i] != blocks[2 * n - 1 - i])
            return false;
    for (const auto& block : blocks) {
        Word lower;
        for (Symbol s : block) {
            auto [upper, track] = pairParts(s);
            (void)upper;
            lower.push_back(static_cast<Symbol>(track));
        }
        if (!tm::referenceValcMember(machine, lower))
            return false;
    }
    return true;
}

} // namespace mhfa::build
