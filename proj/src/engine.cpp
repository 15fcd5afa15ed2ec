// SPDX-License-Identifier: Apache-2.0
#include "mhfa/engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "mhfa/errors.hpp"

namespace mhfa {

namespace {

void checkWord(const MultiHeadAutomaton& m, const Word& input) {
    for (Symbol s : input)
        if (!m.alphabet.contains(s))
            throw UsageError("input contains a symbol outside the machine alphabet");
    if (input.size() > 0xFFF0)
        throw UsageError("input too long to simulate");
}

void checkConfig(const MultiHeadAutomaton& m, const Word& input, const Config& c) {
    if (c.state >= m.stateNames.size())
        throw UsageError("configuration state out of range");
    for (int i = 0; i < m.heads; ++i)
        if (c.pos[i] > input.size() + 1)
            throw UsageError("configuration head position beyond the right endmarker");
}

Symbol scanned(const Word& input, std::uint16_t pos) {
    if (pos == 0)
        return kLeftEnd;
    if (pos == input.size() + 1)
        return kRightEnd;
    return input[pos - 1];
}

std::uint64_t scannedTuple(const MultiHeadAutomaton& m, const Word& input, const Config& c) {
    std::uint64_t packed = 0;
    for (int i = 0; i < m.heads; ++i)
        packed |= static_cast<std::uint64_t>(scanned(input, c.pos[i])) << (8 * i);
    return packed;
}

std::uint64_t lookupPartition(const MultiHeadAutomaton& m, const Config& c) {
    if (m.flavor != Flavor::Sensing)
        return 0;
    std::vector<int> pos(m.heads);
    for (int i = 0; i < m.heads; ++i)
        pos[i] = c.pos[i];
    return packPartition(partitionOf(pos));
}

std::vector<Config> applyTargets(const MultiHeadAutomaton& m, const Config& c,
                                 const std::vector<Target>& image) {
    std::vector<Config> out;
    out.reserve(image.size());
    for (const auto& t : image) {
        Config n;
        n.state = t.next;
        n.pos = c.pos;
        for (int i = 0; i < m.heads; ++i)
            n.pos[i] = static_cast<std::uint16_t>(n.pos[i] + t.moves[i]);
        out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Config> stepUnchecked(const MultiHeadAutomaton& m, const Word& input,
                                  const Config& c) {
    const auto* image = m.targets(c.state, scannedTuple(m, input, c), lookupPartition(m, c));
    if (!image)
        return {};
    return applyTargets(m, c, *image);
}

// BFS over the remaining configuration graph; true when some halting
// configuration carries an accepting state.
bool reachesAcceptingHalt(const MultiHeadAutomaton& m, const Word& input,
                          const std::vector<Config>& seeds) {
    std::unordered_set<Config, ConfigHash> visited(seeds.begin(), seeds.end());
    std::deque<Config> queue(visited.begin(), visited.end());
    while (!queue.empty()) {
        Config c = queue.front();
        queue.pop_front();
        auto succ = stepUnchecked(m, input, c);
        if (succ.empty()) {
            if (m.isAccepting(c.state))
                return true;
            continue;
        }
        for (const Config& n : succ)
            if (visited.insert(n).second)
                queue.push_back(n);
    }
    return false;
}

} // namespace

std::vector<Config> step(const MultiHeadAutomaton& m, const Word& input, const Config& c) {
    checkWord(m, input);
    checkConfig(m, input, c);
    return stepUnchecked(m, input, c);
}

std::vector<Config> sensingStep(const MultiHeadAutomaton& m, const Word& input, const Config& c) {
    if (m.flavor != Flavor::Sensing)
        throw UsageError("sensingStep requires a sensing-flavored machine");
    return step(m, input, c);
}

bool accepts(const MultiHeadAutomaton& m, const Word& input) {
    checkWord(m, input);
    return reachesAcceptingHalt(m, input, {initialConfig(m)});
}

RunTrace runDeterministic(const MultiHeadAutomaton& m, const Word& input, std::size_t maxSteps) {
    if (!isDeterministic(m))
        throw UsageError("runDeterministic requires a deterministic machine");
    checkWord(m, input);
    RunTrace trace;
    std::unordered_set<Config, ConfigHash> seen;
    Config c = initialConfig(m);
    trace.steps.push_back(c);
    seen.insert(c);
    for (std::size_t stepCount = 0;; ++stepCount) {
        auto succ = stepUnchecked(m, input, c);
        if (succ.empty()) {
            trace.kind = Termination::Halted;
            return trace;
        }
        if (stepCount == maxSteps) {
            trace.kind = Termination::BoundExceeded;
            return trace;
        }
        c = succ.front();
        if (!seen.insert(c).second) {
            trace.kind = Termination::LoopDetected;
            return trace;
        }
        trace.steps.push_back(c);
    }
}

std::vector<int> countReversals(const MultiHeadAutomaton& m, const RunTrace& trace) {
    if (trace.steps.empty())
        throw UsageError("countReversals requires a nonempty trace");
    std::vector<int> reversals(m.heads, 0);
    std::vector<int> lastDir(m.heads, 0);
    for (std::size_t t = 1; t < trace.steps.size(); ++t) {
        for (int i = 0; i < m.heads; ++i) {
            int d = static_cast<int>(trace.steps[t].pos[i]) -
                    static_cast<int>(trace.steps[t - 1].pos[i]);
            if (d == 0)
                continue;
            if (lastDir[i] != 0 && d != lastDir[i])
                ++reversals[i];
            lastDir[i] = d;
        }
    }
    return reversals;
}

namespace {

bool lengthLexLess(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

// Prefix-incremental enumeration for one-way machines. A search node is a
// word prefix plus the configurations that are waiting on the first
// undecided cell. Cells behind every head are never re-read, so running
// the machine as far as the decided cells allow is sound, and a subtree is
// abandoned as soon as no configuration can consume more input.
class OneWayEnumerator {
  public:
    OneWayEnumerator(const MultiHeadAutomaton& m, int maxLen) : m_(m), maxLen_(maxLen) {}

    std::vector<Word> run() {
        Word prefix;
        dfs(prefix, {initialConfig(m_)});
        std::sort(out_.begin(), out_.end(), lengthLexLess);
        out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
        return out_;
    }

  private:
    const MultiHeadAutomaton& m_;
    int maxLen_;
    std::vector<Word> out_;

    bool needsUndecidedCell(const Config& c, std::size_t decided) const {
        for (int i = 0; i < m_.heads; ++i)
            if (c.pos[i] == decided + 1)
                return true;
        return false;
    }

    // Steps configurations whose heads all sit on decided cells. Returns
    // true when some branch halts accepting with every head on a decided
    // cell: such a branch accepts under every extension of the prefix.
    bool closure(const Word& prefix, const std::vector<Config>& frontier,
                 std::vector<Config>& parked) {
        std::unordered_set<Config, ConfigHash> visited(frontier.begin(), frontier.end());
        std::deque<Config> queue(visited.begin(), visited.end());
        while (!queue.empty()) {
            Config c = queue.front();
            queue.pop_front();
            if (needsUndecidedCell(c, prefix.size())) {
                parked.push_back(c);
                continue;
            }
            auto succ = stepUnchecked(m_, prefix, c);
            if (succ.empty()) {
                if (m_.isAccepting(c.state))
                    return true;
                continue;
            }
            for (const Config& n : succ)
                if (visited.insert(n).second)
                    queue.push_back(n);
        }
        return false;
    }

    void emitAllExtensions(const Word& prefix) {
        out_.push_back(prefix);
        if (static_cast<int>(prefix.size()) >= maxLen_)
            return;
        Word w = prefix;
        w.push_back(0);
        for (std::size_t s = 0; s < m_.alphabet.size(); ++s) {
            w.back() = static_cast<Symbol>(s);
            emitAllExtensions(w);
        }
    }

    void dfs(Word& prefix, const std::vector<Config>& frontier) {
        std::vector<Config> parked;
        if (closure(prefix, frontier, parked)) {
            emitAllExtensions(prefix);
            return;
        }
        if (parked.empty())
            return;
        // Ending the word here turns the undecided cell into the right
        // endmarker; the parked configurations can then run to completion.
        if (reachesAcceptingHalt(m_, prefix, parked))
            out_.push_back(prefix);
        if (static_cast<int>(prefix.size()) >= maxLen_)
            return;
        prefix.push_back(0);
        for (std::size_t s = 0; s < m_.alphabet.size(); ++s) {
            prefix.back() = static_cast<Symbol>(s);
            dfs(prefix, parked);
        }
        prefix.pop_back();
    }
};

} // namespace

std::vector<Word> enumerate(const MultiHeadAutomaton& m, int maxLen) {
    if (m.direction == Direction::OneWay)
        return OneWayEnumerator(m, maxLen).run();
    return enumerateBruteForce(m, maxLen);
}

std::vector<Word> enumerateBruteForce(const MultiHeadAutomaton& m, int maxLen) {
    std::vector<Word> out;
    Word w;
    for (int len = 0; len <= maxLen; ++len) {
        w.assign(len, 0);
        while (true) {
            if (accepts(m, w))
                out.push_back(w);
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
            break; // only the empty word exists
    }
    return out;
}

std::optional<Word> equivalentUpTo(const MultiHeadAutomaton& a, const MultiHeadAutomaton& b,
                                   int maxLen) {
    if (!(a.alphabet == b.alphabet))
        throw UsageError("machines have different alphabets");
    auto la = enumerate(a, maxLen);
    auto lb = enumerate(b, maxLen);
    std::size_t i = 0, j = 0;
    while (i < la.size() || j < lb.size()) {
        if (i == la.size())
            return lb[j];
        if (j == lb.size())
            return la[i];
        if (la[i] == lb[j]) {
            ++i;
            ++j;
            continue;
        }
        return lengthLexLess(la[i], lb[j]) ? la[i] : lb[j];
    }
    return std::nullopt;
}

} // namespace mhfa
