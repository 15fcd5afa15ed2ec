// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mhfa/alphabet.hpp"

namespace mhfa {

using State = std::uint32_t;

inline constexpr int kMaxHeads = 8;

enum class Direction { OneWay, TwoWay };
enum class Flavor { Plain, Sensing, PartiallyBlind };

// Coincidence partition of head indices by position equality, in canonical
// form: block labels assigned in first-occurrence order, one label per head.
using Partition = std::vector<std::uint8_t>;

Partition partitionOf(const std::vector<int>& positions);
// Packs labels+1 into nibbles; 0 means "no partition" (plain lookup).
std::uint64_t packPartition(const Partition& p);
Partition unpackPartition(std::uint64_t packed, int heads);
std::string partitionToString(const Partition& p);

struct TransitionKey {
    State state = 0;
    std::uint64_t symbols = 0;   // 8 bits per head
    std::uint64_t partition = 0; // 0 for plain machines

    bool operator==(const TransitionKey& o) const {
        return state == o.state && symbols == o.symbols && partition == o.partition;
    }
};

struct TransitionKeyHash {
    std::size_t operator()(const TransitionKey& k) const {
        std::uint64_t h = k.symbols * 0x9E3779B97F4A7C15ull;
        h ^= (h >> 29);
        h += k.partition * 0xBF58476D1CE4E5B9ull;
        h ^= (h >> 32);
        h += k.state * 0x94D049BB133111EBull;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

std::uint64_t packSymbols(const std::vector<Symbol>& syms);
std::vector<Symbol> unpackSymbols(std::uint64_t packed, int heads);

struct Target {
    State next = 0;
    std::array<std::int8_t, kMaxHeads> moves{}; // -1, 0, +1

    bool operator==(const Target& o) const { return next == o.next && moves == o.moves; }
    bool operator<(const Target& o) const {
        if (next != o.next)
            return next < o.next;
        return moves < o.moves;
    }
};

using TransitionMap = std::unordered_map<TransitionKey, std::vector<Target>, TransitionKeyHash>;

// A k-head finite automaton over an endmarked input tape.
struct MultiHeadAutomaton {
    std::string name = "machine";
    Alphabet alphabet;
    std::vector<std::string> stateNames;
    int heads = 1;
    Direction direction = Direction::OneWay;
    Flavor flavor = Flavor::Plain;
    int designatedHead = 1; // 1-based, meaningful for PartiallyBlind
    State initial = 0;
    std::vector<bool> accepting;
    TransitionMap transitions;

    State addState(const std::string& n);
    State stateId(const std::string& n) const; // UsageError when absent
    bool isAccepting(State s) const { return s < accepting.size() && accepting[s]; }

    void addTransition(State from, const std::vector<Symbol>& read, State to,
                       const std::vector<int>& moves, const Partition* part = nullptr);

    const std::vector<Target>* targets(State from, std::uint64_t packedSyms,
                                       std::uint64_t packedPart) const;

    std::size_t transitionCount() const;
};

// A machine state plus the current head positions on a fixed input.
// Position 0 reads the left endmarker, position n+1 the right one.
struct Config {
    State state = 0;
    std::array<std::uint16_t, kMaxHeads> pos{};

    bool operator==(const Config& o) const { return state == o.state && pos == o.pos; }
    bool operator<(const Config& o) const {
        if (state != o.state)
            return state < o.state;
        return pos < o.pos;
    }
};

struct ConfigHash {
    std::size_t operator()(const Config& c) const {
        std::uint64_t a = 0, b = 0;
        for (int i = 0; i < 4; ++i)
            a = (a << 16) | c.pos[i];
        for (int i = 4; i < 8; ++i)
            b = (b << 16) | c.pos[i];
        std::uint64_t h = a * 0x9E3779B97F4A7C15ull;
        h ^= (h >> 30);
        h += b * 0xBF58476D1CE4E5B9ull;
        h ^= (h >> 27);
        h += c.state;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

Config initialConfig(const MultiHeadAutomaton& m);

enum class Termination { Halted, LoopDetected, BoundExceeded };

struct RunTrace {
    std::vector<Config> steps;
    Termination kind = Termination::Halted;
};

// Structural diagnostics; empty result means every invariant holds.
std::vector<std::string> validate(const MultiHeadAutomaton& m);

// True when every transition image has at most one element.
bool isDeterministic(const MultiHeadAutomaton& m);

} // namespace mhfa
