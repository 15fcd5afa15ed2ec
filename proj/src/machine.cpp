// SPDX-License-Identifier: Apache-2.0
#include "mhfa/machine.hpp"

#include <algorithm>

#include "mhfa/errors.hpp"

namespace mhfa {

Partition partitionOf(const std::vector<int>& positions) {
    Partition labels(positions.size(), 0);
    std::vector<int> seen; // position of each block's first member
    for (std::size_t i = 0; i < positions.size(); ++i) {
        std::size_t j = 0;
        while (j < seen.size() && seen[j] != positions[i])
            ++j;
        if (j == seen.size())
            seen.push_back(positions[i]);
        labels[i] = static_cast<std::uint8_t>(j);
    }
    return labels;
}

std::uint64_t packPartition(const Partition& p) {
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        packed |= static_cast<std::uint64_t>(p[i] + 1) << (4 * i);
    return packed;
}

Partition unpackPartition(std::uint64_t packed, int heads) {
    Partition p(heads, 0);
    for (int i = 0; i < heads; ++i)
        p[i] = static_cast<std::uint8_t>(((packed >> (4 * i)) & 0xF) - 1);
    return p;
}

std::string partitionToString(const Partition& p) {
    // groups of 1-based head indices, e.g. "1,2|3"
    std::string out;
    std::uint8_t blocks = 0;
    for (auto l : p)
        blocks = std::max<std::uint8_t>(blocks, static_cast<std::uint8_t>(l + 1));
    for (std::uint8_t b = 0; b < blocks; ++b) {
        if (b)
            out += '|';
        bool first = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] != b)
                continue;
            if (!first)
                out += ',';
            out += std::to_string(i + 1);
            first = false;
        }
    }
    return out;
}

std::uint64_t packSymbols(const std::vector<Symbol>& syms) {
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < syms.size(); ++i)
        packed |= static_cast<std::uint64_t>(syms[i]) << (8 * i);
    return packed;
}

std::vector<Symbol> unpackSymbols(std::uint64_t packed, int heads) {
    std::vector<Symbol> syms(heads);
    for (int i = 0; i < heads; ++i)
        syms[i] = static_cast<Symbol>((packed >> (8 * i)) & 0xFF);
    return syms;
}

State MultiHeadAutomaton::addState(const std::string& n) {
    for (const auto& existing : stateNames)
        if (existing == n)
            throw UsageError("duplicate state '" + n + "'");
    stateNames.push_back(n);
    accepting.push_back(false);
    return static_cast<State>(stateNames.size() - 1);
}

State MultiHeadAutomaton::stateId(const std::string& n) const {
    for (std::size_t i = 0; i < stateNames.size(); ++i)
        if (stateNames[i] == n)
            return static_cast<State>(i);
    throw UsageError("unknown state '" + n + "'");
}

void MultiHeadAutomaton::addTransition(State from, const std::vector<Symbol>& read, State to,
                                       const std::vector<int>& moves, const Partition* part) {
    if (static_cast<int>(read.size()) != heads || static_cast<int>(moves.size()) != heads)
        throw UsageError("transition arity does not match head count");
    TransitionKey key{from, packSymbols(read), part ? packPartition(*part) : 0};
    Target t;
    t.next = to;
    for (int i = 0; i < heads; ++i)
        t.moves[i] = static_cast<std::int8_t>(moves[i]);
    auto& image = transitions[key];
    if (std::find(image.begin(), image.end(), t) == image.end())
        image.push_back(t);
}

const std::vector<Target>* MultiHeadAutomaton::targets(State from, std::uint64_t packedSyms,
                                                       std::uint64_t packedPart) const {
    auto it = transitions.find(TransitionKey{from, packedSyms, packedPart});
    if (it == transitions.end())
        return nullptr;
    return &it->second;
}

std::size_t MultiHeadAutomaton::transitionCount() const {
    std::size_t n = 0;
    for (const auto& [k, image] : transitions)
        n += image.size();
    return n;
}

Config initialConfig(const MultiHeadAutomaton& m) {
    Config c;
    c.state = m.initial;
    for (int i = 0; i < m.heads; ++i)
        c.pos[i] = 1;
    return c;
}

namespace {

std::string describeKey(const MultiHeadAutomaton& m, const TransitionKey& key) {
    std::string out = "from " +
                      (key.state < m.stateNames.size() ? m.stateNames[key.state]
                                                       : "#" + std::to_string(key.state)) +
                      " on (";
    auto syms = unpackSymbols(key.symbols, m.heads);
    for (int i = 0; i < m.heads; ++i) {
        if (i)
            out += ',';
        out += (syms[i] == kLeftEnd)    ? "<"
               : (syms[i] == kRightEnd) ? ">"
               : m.alphabet.contains(syms[i]) ? m.alphabet.name(syms[i])
                                              : "#" + std::to_string(syms[i]);
    }
    out += ')';
    if (key.partition != 0)
        out += " part " + partitionToString(unpackPartition(key.partition, m.heads));
    return out;
}

} // namespace

std::vector<std::string> validate(const MultiHeadAutomaton& m) {
    std::vector<std::string> diags;
    if (m.heads < 1 || m.heads > kMaxHeads) {
        diags.push_back("head count must be between 1 and " + std::to_string(kMaxHeads));
        return diags;
    }
    if (m.stateNames.empty())
        diags.push_back("machine has no states");
    if (m.initial >= m.stateNames.size())
        diags.push_back("initial state out of range");
    if (m.accepting.size() != m.stateNames.size())
        diags.push_back("accepting flags do not cover the state set");
    if (m.flavor == Flavor::PartiallyBlind &&
        (m.designatedHead < 1 || m.designatedHead > m.heads))
        diags.push_back("designated head out of range");

    for (const auto& [key, image] : m.transitions) {
        if (key.state >= m.stateNames.size())
            diags.push_back("transition source out of range: " + describeKey(m, key));
        auto syms = unpackSymbols(key.symbols, m.heads);
        for (int i = 0; i < m.heads; ++i) {
            Symbol s = syms[i];
            if (s != kLeftEnd && s != kRightEnd && !m.alphabet.contains(s))
                diags.push_back("transition reads undeclared symbol: " + describeKey(m, key));
        }
        if (m.flavor == Flavor::Sensing) {
            if (key.partition == 0)
                diags.push_back("sensing machine has a transition without a partition: " +
                                describeKey(m, key));
        } else if (key.partition != 0) {
            diags.push_back("non-sensing machine has a partition-keyed transition: " +
                            describeKey(m, key));
        }
        for (const auto& t : image) {
            if (t.next >= m.stateNames.size())
                diags.push_back("transition target out of range: " + describeKey(m, key));
            for (int i = 0; i < m.heads; ++i) {
                int d = t.moves[i];
                if (d < -1 || d > 1) {
                    diags.push_back("head " + std::to_string(i + 1) + " move not in {-1,0,1}: " +
                                    describeKey(m, key));
                    continue;
                }
                if (syms[i] == kLeftEnd && d == -1)
                    diags.push_back("head " + std::to_string(i + 1) +
                                    " moves left while reading the left endmarker: " +
                                    describeKey(m, key));
                if (syms[i] == kRightEnd && d == 1)
                    diags.push_back("head " + std::to_string(i + 1) +
                                    " moves right while reading the right endmarker: " +
                                    describeKey(m, key));
                if (m.direction == Direction::OneWay && d == -1)
                    diags.push_back("head " + std::to_string(i + 1) +
                                    " moves left in a one-way machine: " + describeKey(m, key));
            }
        }
    }
    std::sort(diags.begin(), diags.end());
    return diags;
}

bool isDeterministic(const MultiHeadAutomaton& m) {
    for (const auto& [key, image] : m.transitions)
        if (image.size() > 1)
            return false;
    return true;
}

} // namespace mhfa
