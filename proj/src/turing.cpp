// SPDX-License-Identifier: Apache-2.0
#include "mhfa/turing.hpp"

#include <algorithm>

#include "mhfa/errors.hpp"

namespace mhfa::tm {

Symbol TuringMachine::tapeSymbol(const std::string& n) const {
    for (std::size_t i = 0; i < tapeSymbols.size(); ++i)
        if (tapeSymbols[i] == n)
            return static_cast<Symbol>(i);
    throw UsageError("unknown tape symbol '" + n + "'");
}

State TuringMachine::state(const std::string& n) const {
    for (std::size_t i = 0; i < stateNames.size(); ++i)
        if (stateNames[i] == n)
            return static_cast<State>(i);
    throw UsageError("unknown state '" + n + "'");
}

bool TuringMachine::isInput(Symbol s) const {
    return std::find(inputSymbols.begin(), inputSymbols.end(), s) != inputSymbols.end();
}

std::vector<std::string> conformanceDiagnostics(const TuringMachine& tm) {
    std::vector<std::string> diags;
    if (tm.stateNames.empty())
        diags.push_back("machine has no states");
    if (tm.tapeSymbols.empty())
        diags.push_back("machine has no tape symbols");
    if (tm.blank >= tm.tapeSymbols.size())
        diags.push_back("blank symbol out of range");
    if (tm.initial >= tm.stateNames.size())
        diags.push_back("initial state out of range");
    for (Symbol s : tm.inputSymbols) {
        if (s >= tm.tapeSymbols.size())
            diags.push_back("input symbol out of range");
        else if (s == tm.blank)
            diags.push_back("blank symbol declared as an input symbol");
    }
    for (State f : tm.accepting)
        if (f >= tm.stateNames.size())
            diags.push_back("accepting state out of range");
    for (const auto& [key, rule] : tm.rules) {
        auto [from, read] = key;
        std::string tag = "rule (" +
                          (from < tm.stateNames.size() ? tm.stateNames[from] : "?") + ", " +
                          (read < tm.tapeSymbols.size() ? tm.tapeSymbols[read] : "?") + ")";
        if (from >= tm.stateNames.size() || read >= tm.tapeSymbols.size())
            diags.push_back(tag + ": endpoint out of range");
        if (rule.next >= tm.stateNames.size())
            diags.push_back(tag + ": target state out of range");
        if (rule.write >= tm.tapeSymbols.size())
            diags.push_back(tag + ": written symbol out of range");
        else if (rule.write == tm.blank)
            diags.push_back(tag + ": writes the blank");
        if (rule.move < -1 || rule.move > 1)
            diags.push_back(tag + ": move not in {-1,0,1}");
    }
    std::sort(diags.begin(), diags.end());
    return diags;
}

StepResult step(const TuringMachine& tm, const ConfigWord& conf) {
    StepResult res;
    Symbol scanned = conf.right.empty() ? tm.blank : conf.right.front();
    auto it = tm.rules.find({conf.state, scanned});
    if (it == tm.rules.end()) {
        res.kind = StepKind::Halted;
        return res;
    }
    const auto& rule = it->second;
    ConfigWord next;
    next.state = rule.next;
    std::vector<Symbol> rest(conf.right.begin() + (conf.right.empty() ? 0 : 1),
                             conf.right.end());
    switch (rule.move) {
    case 0:
        next.left = conf.left;
        next.right.push_back(rule.write);
        next.right.insert(next.right.end(), rest.begin(), rest.end());
        break;
    case -1: {
        if (conf.left.empty()) {
            res.kind = StepKind::LeftEdge;
            return res;
        }
        next.left.assign(conf.left.begin(), conf.left.end() - 1);
        next.right.push_back(conf.left.back());
        next.right.push_back(rule.write);
        next.right.insert(next.right.end(), rest.begin(), rest.end());
        break;
    }
    case 1:
    default:
        next.left = conf.left;
        next.left.push_back(rule.write);
        next.right = rest;
        if (next.right.empty())
            next.right.push_back(tm.blank); // extend the support
        break;
    }
    res.kind = StepKind::Stepped;
    res.next = std::move(next);
    return res;
}

ConfigWord initialConfigWord(const TuringMachine& tm, const std::vector<Symbol>& input) {
    ConfigWord c;
    c.state = tm.initial;
    c.right = input;
    return c;
}

RunResult run(const TuringMachine& tm, const std::vector<Symbol>& input, int maxSteps) {
    RunResult res;
    for (Symbol s : input)
        if (!tm.isInput(s))
            throw UsageError("input contains a symbol outside the input alphabet");
    ConfigWord c = initialConfigWord(tm, input);
    res.history.push_back(c);
    for (int moves = 0;; ++moves) {
        auto sr = step(tm, c);
        if (sr.kind == StepKind::LeftEdge) {
            res.kind = RunKind::NonConforming;
            res.note = "left move at the left edge of the support";
            return res;
        }
        if (sr.kind == StepKind::Halted) {
            if (tm.accepting.count(c.state)) {
                if (moves % 2 == 0) {
                    res.kind = RunKind::NonConforming;
                    res.note = "accepting halt after an even number of moves";
                } else if (moves < 3) {
                    res.kind = RunKind::NonConforming;
                    res.note = "accepting halt after fewer than three moves";
                } else {
                    res.kind = RunKind::Accepted;
                }
            } else {
                res.kind = RunKind::Rejected;
            }
            return res;
        }
        if (moves == maxSteps) {
            res.kind = RunKind::BoundExceeded;
            return res;
        }
        c = std::move(sr.next);
        res.history.push_back(c);
    }
}

Alphabet valcAlphabet(const TuringMachine& tm) {
    Alphabet a;
    a.add("$");
    for (const auto& n : tm.tapeSymbols)
        a.add(n);
    for (const auto& n : tm.stateNames)
        a.add(n);
    return a;
}

namespace {

constexpr Symbol kSep = 0; // "$" is always interned first

Symbol tapeId(const TuringMachine&, Symbol tapeSym) { return static_cast<Symbol>(1 + tapeSym); }

Symbol stateId(const TuringMachine& tm, State s) {
    return static_cast<Symbol>(1 + tm.tapeSymbols.size() + s);
}

bool isTapeId(const TuringMachine& tm, Symbol v) {
    return v >= 1 && v < 1 + tm.tapeSymbols.size();
}

bool isStateId(const TuringMachine& tm, Symbol v) {
    return v >= 1 + tm.tapeSymbols.size() &&
           v < 1 + tm.tapeSymbols.size() + tm.stateNames.size();
}

std::optional<ConfigWord> parseBlock(const TuringMachine& tm, const Word& w, std::size_t lo,
                                     std::size_t hi) {
    ConfigWord c;
    bool seenState = false;
    for (std::size_t i = lo; i < hi; ++i) {
        Symbol v = w[i];
        if (isStateId(tm, v)) {
            if (seenState)
                return std::nullopt;
            seenState = true;
            c.state = static_cast<State>(v - 1 - tm.tapeSymbols.size());
        } else if (isTapeId(tm, v)) {
            (seenState ? c.right : c.left).push_back(static_cast<Symbol>(v - 1));
        } else {
            return std::nullopt;
        }
    }
    if (!seenState)
        return std::nullopt;
    return c;
}

} // namespace

Word configToWord(const TuringMachine& tm, const Alphabet&, const ConfigWord& c) {
    Word w;
    w.reserve(c.length());
    for (Symbol s : c.left)
        w.push_back(tapeId(tm, s));
    w.push_back(stateId(tm, c.state));
    for (Symbol s : c.right)
        w.push_back(tapeId(tm, s));
    return w;
}

Word valcString(const TuringMachine& tm, const std::vector<ConfigWord>& history) {
    if (history.size() < 4 || history.size() % 2 != 0)
        throw ConformanceError("history must hold an even number (at least four) of configurations");
    Alphabet va = valcAlphabet(tm);
    Word w{kSep};
    for (const auto& c : history) {
        Word block = configToWord(tm, va, c);
        w.insert(w.end(), block.begin(), block.end());
        w.push_back(kSep);
    }
    return w;
}

bool referenceValcMember(const TuringMachine& tm, const Word& w) {
    if (w.size() < 2 || w.front() != kSep || w.back() != kSep)
        return false;
    // blocks between consecutive separators
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t start = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == kSep) {
            spans.emplace_back(start, i);
            start = i + 1;
        }
    }
    if (start != w.size())
        return false; // trailing garbage after the last separator
    if (spans.size() < 4 || spans.size() % 2 != 0)
        return false;

    std::vector<ConfigWord> blocks;
    for (auto [lo, hi] : spans) {
        auto c = parseBlock(tm, w, lo, hi);
        if (!c)
            return false;
        blocks.push_back(std::move(*c));
    }

    const ConfigWord& first = blocks.front();
    if (first.state != tm.initial || !first.left.empty())
        return false;
    for (Symbol s : first.right)
        if (!tm.isInput(s))
            return false;

    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
        auto sr = step(tm, blocks[i]);
        if (sr.kind != StepKind::Stepped || !(sr.next == blocks[i + 1]))
            return false;
    }
    return tm.accepting.count(blocks.back().state) > 0;
}

std::vector<Word> valcWordsUpTo(const TuringMachine& tm, int maxLen) {
    std::vector<Word> out;
    if (maxLen < 1)
        return out;
    // A word with c configurations of lengths l_i takes 1 + sum(l_i + 1)
    // symbols, so runs and inputs beyond maxLen cannot contribute.
    for (int inLen = 0; inLen + 2 <= maxLen; ++inLen) {
        std::vector<std::vector<Symbol>> inputs;
        std::vector<Symbol> cur(inLen, 0);
        if (tm.inputSymbols.empty() && inLen > 0)
            break;
        while (true) {
            std::vector<Symbol> input(inLen);
            for (int i = 0; i < inLen; ++i)
                input[i] = tm.inputSymbols[cur[i]];
            inputs.push_back(input);
            int i = inLen - 1;
            while (i >= 0 && cur[i] + 1u == tm.inputSymbols.size()) {
                cur[i] = 0;
                --i;
            }
            if (i < 0)
                break;
            ++cur[i];
        }
        for (const auto& input : inputs) {
            std::vector<ConfigWord> history{initialConfigWord(tm, input)};
            std::size_t total = 1 + history.back().length() + 1;
            while (total <= static_cast<std::size_t>(maxLen)) {
                if (history.size() >= 4 && history.size() % 2 == 0 &&
                    tm.accepting.count(history.back().state))
                    out.push_back(valcString(tm, history));
                auto sr = step(tm, history.back());
                if (sr.kind != StepKind::Stepped)
                    break;
                history.push_back(sr.next);
                total += history.back().length() + 1;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TuringMachine fixtureTm() {
    TuringMachine tm;
    tm.name = "halt3";
    tm.tapeSymbols = {"a", "b", "B"};
    tm.blank = 2;
    tm.inputSymbols = {0};
    tm.stateNames = {"s0", "s1"};
    tm.initial = 0;
    tm.accepting = {1};
    // run on the empty word: s0 | s0 b | s1 a | s1 b, halting in s1
    tm.rules[{0, 2}] = {0, 1, 0}; // s0,B -> s0,b,stay
    tm.rules[{0, 1}] = {1, 0, 0}; // s0,b -> s1,a,stay
    tm.rules[{1, 0}] = {1, 1, 0}; // s1,a -> s1,b,stay
    return tm;
}

TuringMachine fixtureTmLr() {
    TuringMachine tm;
    tm.name = "shuttle";
    tm.tapeSymbols = {"a", "x", "y", "B"};
    tm.blank = 3;
    tm.inputSymbols = {0};
    tm.stateNames = {"s0", "s1", "s2"};
    tm.initial = 0;
    tm.accepting = {1};
    // run on "a": s0 a | x s1 B | s2 x y | s1 x y, halting in s1
    tm.rules[{0, 0}] = {1, 1, 1};  // s0,a -> s1,x,right
    tm.rules[{1, 3}] = {2, 2, -1}; // s1,B -> s2,y,left
    tm.rules[{2, 1}] = {1, 1, 0};  // s2,x -> s1,x,stay
    tm.rules[{1, 0}] = {1, 0, 1};  // s1,a -> s1,a,right (reject longer inputs via s2)
    return tm;
}

} // namespace mhfa::tm
