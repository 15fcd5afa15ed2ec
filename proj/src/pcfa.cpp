// SPDX-License-Identifier: Apache-2.0
#include "mhfa/pcfa.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "mhfa/errors.hpp"
#include "mhfa/wordscan.hpp"

namespace mhfa::pcfa {

bool Component::isMember(StateId s) const {
    return std::find(members.begin(), members.end(), s) != members.end();
}

bool Component::isAccepting(StateId s) const {
    return std::find(accepting.begin(), accepting.end(), s) != accepting.end();
}

const std::vector<StateId>* Component::image(StateId s, Symbol a) const {
    auto it = transitions.find({s, a});
    if (it == transitions.end())
        return nullptr;
    return &it->second;
}

StateId System::internState(const std::string& n) {
    for (std::size_t i = 0; i < stateNames.size(); ++i)
        if (stateNames[i] == n)
            return static_cast<StateId>(i);
    stateNames.push_back(n);
    return static_cast<StateId>(stateNames.size() - 1);
}

StateId System::stateId(const std::string& n) const {
    for (std::size_t i = 0; i < stateNames.size(); ++i)
        if (stateNames[i] == n)
            return static_cast<StateId>(i);
    throw UsageError("unknown state '" + n + "'");
}

bool System::isQuery(StateId s) const {
    return std::find(queryStates.begin(), queryStates.end(), s) != queryStates.end();
}

int System::queryTarget(StateId s) const {
    for (std::size_t i = 0; i < queryStates.size(); ++i)
        if (queryStates[i] == s)
            return static_cast<int>(i);
    return -1;
}

std::vector<std::string> validateSystem(const System& sys) {
    std::vector<std::string> diags;
    int k = sys.degree();
    if (k < 1 || k > kMaxHeads) {
        diags.push_back("system degree must be between 1 and " + std::to_string(kMaxHeads));
        return diags;
    }
    if (static_cast<int>(sys.queryStates.size()) != k)
        diags.push_back("query state list must have one entry per component");

    for (std::size_t i = 0; i < sys.queryStates.size(); ++i)
        for (std::size_t j = i + 1; j < sys.queryStates.size(); ++j)
            if (sys.queryStates[i] == sys.queryStates[j])
                diags.push_back("query states q" + std::to_string(i + 1) + " and q" +
                                std::to_string(j + 1) + " coincide");

    for (StateId q : sys.queryStates) {
        bool found = false;
        for (const auto& comp : sys.components)
            if (comp.isMember(q))
                found = true;
        if (!found)
            diags.push_back("query state '" + sys.stateNames[q] +
                            "' is not a member of any component state set");
    }

    for (int i = 0; i < k; ++i) {
        const auto& comp = sys.components[i];
        std::string tag = "component " + std::to_string(i + 1);
        if (!comp.isMember(comp.initial))
            diags.push_back(tag + ": initial state outside its state set");
        for (StateId f : comp.accepting)
            if (!comp.isMember(f))
                diags.push_back(tag + ": accepting state outside its state set");
        for (const auto& [key, image] : comp.transitions) {
            auto [from, sym] = key;
            if (!comp.isMember(from))
                diags.push_back(tag + ": transition from foreign state '" +
                                sys.stateNames[from] + "'");
            if (sym != kLambda && sym != kRightEnd && !sys.alphabet.contains(sym))
                diags.push_back(tag + ": transition on undeclared symbol");
            for (StateId to : image)
                if (!comp.isMember(to))
                    diags.push_back(tag + ": transition into foreign state '" +
                                    sys.stateNames[to] + "'");
        }
        if (sys.centralized && i > 0) {
            for (StateId q : sys.queryStates)
                if (comp.isMember(q))
                    diags.push_back(tag + ": contains query state '" + sys.stateNames[q] +
                                    "' in a centralized system");
            for (const auto& [key, image] : comp.transitions) {
                if (sys.isQuery(key.first))
                    diags.push_back(tag + ": transition from query state '" +
                                    sys.stateNames[key.first] + "' in a centralized system");
                for (StateId to : image)
                    if (sys.isQuery(to))
                        diags.push_back(tag + ": transition into query state '" +
                                        sys.stateNames[to] + "' in a centralized system");
            }
        }
    }
    std::sort(diags.begin(), diags.end());
    diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
    return diags;
}

SysConfig initialConfig(const System& sys) {
    SysConfig c;
    for (int i = 0; i < sys.degree(); ++i) {
        c.state[i] = sys.components[i].initial;
        c.consumed[i] = 0;
    }
    return c;
}

namespace {

Symbol currentSymbol(const Word& input, std::uint16_t consumed) {
    return consumed < input.size() ? input[consumed] : kRightEnd;
}

// The read options of one component: (next state, consumes one symbol?).
void componentOptions(const Component& comp, StateId s, Symbol cur,
                      std::vector<std::pair<StateId, bool>>& out) {
    out.clear();
    if (const auto* img = comp.image(s, cur))
        for (StateId to : *img)
            out.emplace_back(to, cur != kRightEnd);
    if (const auto* img = comp.image(s, kLambda))
        for (StateId to : *img)
            out.emplace_back(to, false);
}

bool componentStuck(const Component& comp, StateId s, Symbol cur) {
    const auto* a = comp.image(s, cur);
    const auto* l = comp.image(s, kLambda);
    return (!a || a->empty()) && (!l || l->empty());
}

// One communication round over a state tuple; true when anything changed.
bool communicationRound(const System& sys, const std::vector<StateId>& in,
                        std::vector<StateId>& out) {
    int k = sys.degree();
    out = in;
    bool changed = false;
    for (int i = 0; i < k; ++i) {
        int j = sys.queryTarget(in[i]);
        if (j < 0)
            continue;
        if (sys.isQuery(in[j]))
            continue; // sender itself busy querying; wait
        out[i] = in[j];
        if (sys.mode == Mode::Returning)
            out[j] = sys.components[j].initial;
        changed = true;
    }
    if (!changed)
        return false;
    bool different = false;
    for (int i = 0; i < k; ++i)
        if (out[i] != in[i])
            different = true;
    return different;
}

} // namespace

std::vector<SysConfig> stepSystem(const System& sys, const Word& input, const SysConfig& c) {
    int k = sys.degree();
    bool anyQuery = false;
    for (int i = 0; i < k; ++i)
        if (sys.isQuery(c.state[i]))
            anyQuery = true;

    if (anyQuery) {
        std::vector<StateId> in(k), out;
        for (int i = 0; i < k; ++i)
            in[i] = c.state[i];
        if (!communicationRound(sys, in, out))
            return {}; // cyclic requests: no successor
        SysConfig n = c;
        for (int i = 0; i < k; ++i)
            n.state[i] = out[i];
        return {n};
    }

    // read step: every component fires exactly one transition
    std::vector<std::vector<std::pair<StateId, bool>>> options(k);
    for (int i = 0; i < k; ++i) {
        componentOptions(sys.components[i], c.state[i], currentSymbol(input, c.consumed[i]),
                         options[i]);
        if (options[i].empty())
            return {};
    }
    std::vector<SysConfig> result;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        SysConfig n = c;
        for (int i = 0; i < k; ++i) {
            n.state[i] = options[i][idx[i]].first;
            if (options[i][idx[i]].second)
                n.consumed[i] = static_cast<std::uint16_t>(n.consumed[i] + 1);
        }
        result.push_back(n);
        int i = k - 1;
        while (i >= 0 && idx[i] + 1 == options[i].size()) {
            idx[i] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++idx[i];
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

namespace {

bool haltingWitness(const System& sys, const Word& input, const SysConfig& c) {
    for (int i = 0; i < sys.degree(); ++i) {
        StateId s = c.state[i];
        if (sys.isQuery(s))
            continue;
        if (!sys.components[i].isAccepting(s))
            continue;
        if (componentStuck(sys.components[i], s, currentSymbol(input, c.consumed[i])))
            return true;
    }
    return false;
}

} // namespace

bool acceptsSystem(const System& sys, const Word& input) {
    for (Symbol s : input)
        if (!sys.alphabet.contains(s))
            throw UsageError("input contains a symbol outside the system alphabet");
    std::unordered_set<SysConfig, SysConfigHash> visited;
    std::deque<SysConfig> queue;
    SysConfig start = initialConfig(sys);
    visited.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        SysConfig c = queue.front();
        queue.pop_front();
        auto succ = stepSystem(sys, input, c);
        if (succ.empty()) {
            if (haltingWitness(sys, input, c))
                return true;
            continue;
        }
        for (const SysConfig& n : succ)
            if (visited.insert(n).second)
                queue.push_back(n);
    }
    return false;
}

bool isDeterministicSystem(const System& sys) {
    for (const auto& comp : sys.components) {
        std::unordered_set<StateId> lambdaStates;
        for (const auto& [key, image] : comp.transitions) {
            if (image.size() > 1)
                return false;
            if (key.second == kLambda && !image.empty())
                lambdaStates.insert(key.first);
        }
        for (const auto& [key, image] : comp.transitions)
            if (key.second != kLambda && !image.empty() && lambdaStates.count(key.first))
                return false;
    }
    return true;
}

std::vector<Word> enumerateSystem(const System& sys, int maxLen) {
    return scanWords(sys.alphabet, maxLen,
                     [&](const Word& w) { return acceptsSystem(sys, w); });
}

System builtinFixture() {
    System sys;
    sys.name = "copy-dcpcfa";
    sys.mode = Mode::NonReturning;
    sys.centralized = true;
    Symbol a = sys.alphabet.add("a");
    Symbol b = sys.alphabet.add("b");
    Symbol sep = sys.alphabet.add("$");

    StateId q1 = sys.internState("q1");
    StateId q2 = sys.internState("q2");
    StateId s01 = sys.internState("s01");
    StateId s02 = sys.internState("s02");
    StateId sa = sys.internState("sa");
    StateId sb = sys.internState("sb");
    StateId sS = sys.internState("sS");
    StateId sa2 = sys.internState("sa2");
    StateId sb2 = sys.internState("sb2");
    StateId se = sys.internState("se");
    StateId acc = sys.internState("acc");
    sys.queryStates = {q1, q2};

    Component master;
    master.members = {s01, q1, q2, sa, sb, sS, sa2, sb2, se, acc};
    master.initial = s01;
    master.accepting = {acc};
    master.transitions[{s01, kLambda}] = {q2};
    master.transitions[{sa, kLambda}] = {q2};
    master.transitions[{sb, kLambda}] = {q2};
    master.transitions[{sS, kLambda}] = {q2};
    master.transitions[{sa2, a}] = {q2};
    master.transitions[{sb2, b}] = {q2};
    master.transitions[{se, sep}] = {acc};

    Component worker;
    worker.members = {s02, sa, sb, sS, sa2, sb2, se};
    worker.initial = s02;
    worker.transitions[{s02, a}] = {sa};
    worker.transitions[{s02, b}] = {sb};
    worker.transitions[{sa, a}] = {sa};
    worker.transitions[{sa, b}] = {sb};
    worker.transitions[{sa, sep}] = {sS};
    worker.transitions[{sb, a}] = {sa};
    worker.transitions[{sb, b}] = {sb};
    worker.transitions[{sb, sep}] = {sS};
    worker.transitions[{sS, a}] = {sa2};
    worker.transitions[{sS, b}] = {sb2};
    worker.transitions[{sa2, a}] = {sa2};
    worker.transitions[{sa2, b}] = {sb2};
    worker.transitions[{sa2, kRightEnd}] = {se};
    worker.transitions[{sb2, a}] = {sa2};
    worker.transitions[{sb2, b}] = {sb2};
    worker.transitions[{sb2, kRightEnd}] = {se};
    worker.transitions[{se, kRightEnd}] = {se};

    sys.components = {master, worker};
    return sys;
}

MultiHeadAutomaton compileToMultiHead(const System& sys) {
    {
        auto diags = validateSystem(sys);
        if (!diags.empty())
            throw ValidationError("system invalid: " + diags.front());
    }
    int k = sys.degree();

    MultiHeadAutomaton out;
    out.name = sys.name + "-mhfa";
    out.alphabet = sys.alphabet;
    out.heads = k;
    out.direction = Direction::OneWay;

    using Tuple = std::vector<StateId>;
    std::map<Tuple, State> ids;
    std::deque<Tuple> work;
    auto intern = [&](const Tuple& t) {
        auto it = ids.find(t);
        if (it != ids.end())
            return it->second;
        std::string name;
        for (int i = 0; i < k; ++i) {
            if (i)
                name += '.';
            name += sys.stateNames[t[i]];
        }
        State id = out.addState(name);
        ids.emplace(t, id);
        work.push_back(t);
        return id;
    };

    Tuple start(k);
    for (int i = 0; i < k; ++i)
        start[i] = sys.components[i].initial;
    out.initial = intern(start);
    State sink = out.addState("accept-halt");
    out.accepting[sink] = true;

    std::vector<Symbol> universe;
    for (std::size_t s = 0; s < sys.alphabet.size(); ++s)
        universe.push_back(static_cast<Symbol>(s));
    universe.push_back(kRightEnd);

    std::vector<std::vector<std::pair<StateId, bool>>> options(k);
    while (!work.empty()) {
        Tuple t = work.front();
        work.pop_front();
        State from = ids[t];

        bool anyQuery = false;
        for (int i = 0; i < k; ++i)
            if (sys.isQuery(t[i]))
                anyQuery = true;

        if (anyQuery) {
            Tuple next;
            bool changed = communicationRound(sys, t, next);
            if (changed) {
                // communication: state change only, heads stay put
                State to = intern(next);
                std::vector<std::size_t> idx(k, 0);
                std::vector<Symbol> tuple(k);
                while (true) {
                    for (int i = 0; i < k; ++i)
                        tuple[i] = universe[idx[i]];
                    Target tg;
                    tg.next = to;
                    out.transitions[TransitionKey{from, packSymbols(tuple), 0}] = {tg};
                    int i = k - 1;
                    while (i >= 0 && idx[i] + 1 == universe.size()) {
                        idx[i] = 0;
                        --i;
                    }
                    if (i < 0)
                        break;
                    ++idx[i];
                }
                continue;
            }
            // cyclic requests: the tuple halts; check witnesses per symbol
        }

        std::vector<std::size_t> idx(k, 0);
        std::vector<Symbol> tuple(k);
        while (true) {
            for (int i = 0; i < k; ++i)
                tuple[i] = universe[idx[i]];

            bool stuck = anyQuery; // cyclic query tuples never read
            if (!anyQuery) {
                for (int i = 0; i < k; ++i) {
                    componentOptions(sys.components[i], t[i], tuple[i], options[i]);
                    if (options[i].empty())
                        stuck = true;
                }
            }

            if (!stuck) {
                std::vector<Target> image;
                std::vector<std::size_t> oi(k, 0);
                while (true) {
                    Target tg;
                    Tuple next(k);
                    for (int i = 0; i < k; ++i) {
                        next[i] = options[i][oi[i]].first;
                        tg.moves[i] = options[i][oi[i]].second ? 1 : 0;
                    }
                    tg.next = intern(next);
                    if (std::find(image.begin(), image.end(), tg) == image.end())
                        image.push_back(tg);
                    int i = k - 1;
                    while (i >= 0 && oi[i] + 1 == options[i].size()) {
                        oi[i] = 0;
                        --i;
                    }
                    if (i < 0)
                        break;
                    ++oi[i];
                }
                out.transitions[TransitionKey{from, packSymbols(tuple), 0}] = image;
            } else {
                // halting tuple: accept exactly when some non-query
                // component is accepting and stuck on its symbol
                bool witness = false;
                for (int i = 0; i < k; ++i) {
                    if (sys.isQuery(t[i]))
                        continue;
                    if (!sys.components[i].isAccepting(t[i]))
                        continue;
                    if (componentStuck(sys.components[i], t[i], tuple[i]))
                        witness = true;
                }
                if (witness) {
                    Target tg;
                    tg.next = sink;
                    out.transitions[TransitionKey{from, packSymbols(tuple), 0}] = {tg};
                }
            }

            int i = k - 1;
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

} // namespace mhfa::pcfa
