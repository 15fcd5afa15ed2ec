// SPDX-License-Identifier: Apache-2.0
#include "mhfa/variants.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "mhfa/engine.hpp"
#include "mhfa/errors.hpp"

namespace mhfa {

namespace {

std::vector<std::uint16_t> headPositions(const MultiHeadAutomaton& m, const Config& c) {
    std::vector<std::uint16_t> p(m.heads);
    for (int i = 0; i < m.heads; ++i)
        p[i] = c.pos[i];
    return p;
}

// Explores all branches on one input, layer by layer in time, recording
// position tuples into the shared table.
std::optional<IndependenceViolation> exploreInput(const MultiHeadAutomaton& m, const Word& input,
                                                  int maxSteps, TrajectoryTable& table) {
    int len = static_cast<int>(input.size());
    std::unordered_set<Config, ConfigHash> layer{initialConfig(m)};
    for (int t = 0; t <= maxSteps && !layer.empty(); ++t) {
        for (const Config& c : layer) {
            auto pos = headPositions(m, c);
            auto [it, inserted] = table.samples.try_emplace({len, t}, pos, input);
            if (!inserted && it->second.first != pos) {
                IndependenceViolation v;
                v.inputA = it->second.second;
                v.inputB = input;
                v.time = t;
                v.head = 1;
                for (int i = 0; i < m.heads; ++i)
                    if (it->second.first[i] != pos[i]) {
                        v.head = i + 1;
                        break;
                    }
                return v;
            }
        }
        if (t == maxSteps)
            break;
        std::unordered_set<Config, ConfigHash> next;
        for (const Config& c : layer)
            for (const Config& n : step(m, input, c))
                next.insert(n);
        layer = std::move(next);
    }
    return std::nullopt;
}

} // namespace

IndependenceReport checkDataIndependent(const MultiHeadAutomaton& m, int maxLen, int maxSteps) {
    IndependenceReport report;
    for (int len = 0; len <= maxLen; ++len) {
        Word w(len, 0);
        while (true) {
            if (auto v = exploreInput(m, w, maxSteps, report.table)) {
                report.independent = false;
                report.violation = std::move(v);
                return report;
            }
            int i = len - 1;
            while (i >= 0 && w[i] + 1u == m.alphabet.size()) {
                w[i] = 0;
                --i;
            }
            if (i < 0)
                break;
            ++w[i];
        }
        if (m.alphabet.size() == 0)
            break;
    }
    return report;
}

namespace {

using StateSet = std::vector<State>; // sorted, unique

std::string subsetName(const MultiHeadAutomaton& m, const StateSet& set) {
    std::string n;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i)
            n += '+';
        n += m.stateNames[set[i]];
    }
    return n;
}

} // namespace

MultiHeadAutomaton determinizeOblivious(const MultiHeadAutomaton& m, int maxLen) {
    {
        auto diags = validate(m);
        if (!diags.empty())
            throw ValidationError("machine invalid: " + diags.front());
        // Step budget: enough to cover every configuration of the longest
        // checked input once.
        std::uint64_t budget = m.stateNames.size();
        for (int i = 0; i < m.heads; ++i) {
            budget *= static_cast<std::uint64_t>(maxLen) + 2;
            if (budget > 2000000ull) {
                budget = 2000000ull;
                break;
            }
        }
        auto report = checkDataIndependent(m, maxLen, static_cast<int>(budget));
        if (!report.independent)
            throw ObliviousnessViolation(
                "machine is not data-independent up to length " + std::to_string(maxLen) +
                " (head " + std::to_string(report.violation->head) + " diverges at step " +
                std::to_string(report.violation->time) + ")");
    }

    MultiHeadAutomaton out;
    out.name = m.name + "-det";
    out.alphabet = m.alphabet;
    out.heads = m.heads;
    out.direction = m.direction;
    out.flavor = m.flavor;

    std::map<StateSet, State> ids;
    std::deque<StateSet> work;
    auto intern = [&](const StateSet& set) {
        auto it = ids.find(set);
        if (it != ids.end())
            return it->second;
        State id = out.addState(subsetName(m, set));
        ids.emplace(set, id);
        work.push_back(set);
        return id;
    };

    StateSet start{m.initial};
    out.initial = intern(start);
    State sink = out.addState("accept-halt");
    out.accepting[sink] = true;

    // Symbol universe a head can scan.
    std::vector<Symbol> universe;
    for (std::size_t s = 0; s < m.alphabet.size(); ++s)
        universe.push_back(static_cast<Symbol>(s));
    universe.push_back(kRightEnd);
    if (m.direction == Direction::TwoWay)
        universe.push_back(kLeftEnd);

    std::vector<Symbol> tuple(m.heads, 0);
    while (!work.empty()) {
        StateSet set = work.front();
        work.pop_front();
        State from = ids[set];

        // iterate all scanned tuples
        std::vector<std::size_t> idx(m.heads, 0);
        while (true) {
            for (int i = 0; i < m.heads; ++i)
                tuple[i] = universe[idx[i]];
            std::uint64_t packed = packSymbols(tuple);

            bool acceptingHalt = false;
            std::vector<Target> contributors;
            for (State s : set) {
                const auto* image = m.targets(s, packed, 0);
                if (!image || image->empty()) {
                    if (m.isAccepting(s))
                        acceptingHalt = true;
                    continue;
                }
                for (const auto& t : *image)
                    contributors.push_back(t);
            }

            if (!contributors.empty()) {
                auto moves = contributors.front().moves;
                for (const auto& t : contributors)
                    if (t.moves != moves)
                        throw ObliviousnessViolation(
                            "co-reachable states propose different moves in subset '" +
                            subsetName(m, set) + "'");
                if (acceptingHalt) {
                    // Some branch accepts here no matter what follows.
                    Target t;
                    t.next = sink;
                    t.moves = moves;
                    out.transitions[TransitionKey{from, packed, 0}] = {t};
                } else {
                    StateSet nextSet;
                    for (const auto& t : contributors)
                        nextSet.push_back(t.next);
                    std::sort(nextSet.begin(), nextSet.end());
                    nextSet.erase(std::unique(nextSet.begin(), nextSet.end()), nextSet.end());
                    Target t;
                    t.next = intern(nextSet);
                    t.moves = moves;
                    out.transitions[TransitionKey{from, packed, 0}] = {t};
                }
            } else if (acceptingHalt) {
                Target t;
                t.next = sink;
                t.moves = {}; // all zero
                out.transitions[TransitionKey{from, packed, 0}] = {t};
            }

            int i = m.heads - 1;
            while (i >= 0 && idx[i] + 1 == universe.size()) {
                idx[i] = 0;
                --i;
            }
            if (i < 0)
                break;
            ++idx[i];
        }
    }
    return out;
}

bool validatePartiallyBlind(const MultiHeadAutomaton& m, int designatedHead) {
    if (designatedHead < 1 || designatedHead > m.heads)
        throw UsageError("designated head out of range");
    if (m.heads == 1)
        return true;
    int d = designatedHead - 1;

    // Class of one non-designated symbol: everything except the right
    // endmarker collapses into a single observation.
    std::vector<Symbol> inputClass;
    for (std::size_t s = 0; s < m.alphabet.size(); ++s)
        inputClass.push_back(static_cast<Symbol>(s));
    inputClass.push_back(kLeftEnd);
    std::vector<Symbol> endClass{kRightEnd};

    auto sortedImage = [&](const TransitionKey& k) {
        std::vector<Target> image;
        if (auto it = m.transitions.find(k); it != m.transitions.end())
            image = it->second;
        std::sort(image.begin(), image.end());
        return image;
    };

    for (const auto& [key, imageRaw] : m.transitions) {
        auto syms = unpackSymbols(key.symbols, m.heads);
        auto reference = sortedImage(key);
        // enumerate every class-mate of this key
        std::vector<const std::vector<Symbol>*> classes(m.heads);
        std::vector<Symbol> designatedOnly{syms[d]};
        for (int i = 0; i < m.heads; ++i) {
            if (i == d)
                classes[i] = &designatedOnly;
            else
                classes[i] = (syms[i] == kRightEnd) ? &endClass : &inputClass;
        }
        std::vector<std::size_t> idx(m.heads, 0);
        std::vector<Symbol> mate(m.heads);
        while (true) {
            for (int i = 0; i < m.heads; ++i)
                mate[i] = (*classes[i])[idx[i]];
            TransitionKey mk{key.state, packSymbols(mate), key.partition};
            if (sortedImage(mk) != reference)
                return false;
            int i = m.heads - 1;
            while (i >= 0 && idx[i] + 1 == classes[i]->size()) {
                idx[i] = 0;
                --i;
            }
            if (i < 0)
                break;
            ++idx[i];
        }
    }
    return true;
}

} // namespace mhfa
