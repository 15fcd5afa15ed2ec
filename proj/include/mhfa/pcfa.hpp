// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mhfa/machine.hpp"

namespace mhfa::pcfa {

enum class Mode { Returning, NonReturning };

// State names are interned once per system; components share the table so
// a communicated state keeps its identity across components.
using StateId = std::uint32_t;

struct Component {
    std::vector<StateId> members;
    StateId initial = 0;
    std::vector<StateId> accepting;
    // key symbol is an input symbol, kLambda, or kRightEnd
    std::map<std::pair<StateId, Symbol>, std::vector<StateId>> transitions;

    bool isMember(StateId s) const;
    bool isAccepting(StateId s) const;
    const std::vector<StateId>* image(StateId s, Symbol a) const;
};

struct System {
    std::string name = "system";
    Alphabet alphabet;
    std::vector<std::string> stateNames;
    std::vector<Component> components;
    std::vector<StateId> queryStates; // entry i designates component i+1
    Mode mode = Mode::NonReturning;
    bool centralized = false;

    StateId internState(const std::string& n);
    StateId stateId(const std::string& n) const;
    int degree() const { return static_cast<int>(components.size()); }
    bool isQuery(StateId s) const;
    // index of the component a query state designates, or -1
    int queryTarget(StateId s) const;
};

// Per component: current state and how much input it has consumed. A
// component that has consumed everything scans the end-of-input symbol
// from then on.
struct SysConfig {
    std::array<StateId, kMaxHeads> state{};
    std::array<std::uint16_t, kMaxHeads> consumed{};

    bool operator==(const SysConfig& o) const {
        return state == o.state && consumed == o.consumed;
    }
    bool operator<(const SysConfig& o) const {
        if (state != o.state)
            return state < o.state;
        return consumed < o.consumed;
    }
};

struct SysConfigHash {
    std::size_t operator()(const SysConfig& c) const {
        std::uint64_t h = 0xCBF29CE484222325ull;
        for (int i = 0; i < kMaxHeads; ++i) {
            h = (h ^ c.state[i]) * 0x100000001B3ull;
            h = (h ^ c.consumed[i]) * 0x100000001B3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

std::vector<std::string> validateSystem(const System& sys);

SysConfig initialConfig(const System& sys);

// One step of the system: a simultaneous read step when no component is in
// a query state, otherwise one communication round. An empty result means
// the configuration has no successor (a component is stuck, or every
// pending query targets another query state).
std::vector<SysConfig> stepSystem(const System& sys, const Word& input, const SysConfig& c);

// Halting acceptance: some reachable configuration has no successor and a
// non-query component sits in an accepting state with no applicable
// transition on its current symbol.
bool acceptsSystem(const System& sys, const Word& input);

// Every image a singleton and no state mixing a lambda transition with a
// symbol or end-of-input transition.
bool isDeterministicSystem(const System& sys);

std::vector<Word> enumerateSystem(const System& sys, int maxLen);

// The worked two-component centralized non-returning system accepting
// { w$w | w in {a,b}+ }.
System builtinFixture();

// Product construction: one head per component mirrors that component's
// input position. Read steps consume with the matching heads, communication
// rounds keep every head still, and accepting halts are routed through a
// dedicated sink so acceptance stays a property of the state alone.
MultiHeadAutomaton compileToMultiHead(const System& sys);

} // namespace mhfa::pcfa
