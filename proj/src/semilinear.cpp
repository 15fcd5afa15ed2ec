// SPDX-License-Identifier: Apache-2.0
#include "mhfa/semilinear.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "mhfa/engine.hpp"
#include "mhfa/errors.hpp"

namespace mhfa::slin {

LinearSet::LinearSet(NVector base_, std::vector<NVector> periods_) : base(std::move(base_)) {
    for (long x : base)
        if (x < 0)
            throw UsageError("linear set base has a negative component");
    for (auto& p : periods_) {
        if (p.size() != base.size())
            throw UsageError("period dimension mismatch");
        bool zero = true;
        for (long x : p) {
            if (x < 0)
                throw UsageError("period has a negative component");
            if (x != 0)
                zero = false;
        }
        if (!zero)
            periods.push_back(std::move(p));
    }
}

NVector parikh(const Word& w, const Alphabet& alphabet) {
    NVector v(alphabet.size(), 0);
    for (Symbol s : w) {
        if (!alphabet.contains(s))
            throw UsageError("word contains a symbol outside the alphabet");
        ++v[s];
    }
    return v;
}

namespace {

bool searchCoefficients(const NVector& rest, const std::vector<NVector>& periods,
                        std::size_t idx, long bound) {
    if (std::all_of(rest.begin(), rest.end(), [](long x) { return x == 0; }))
        return true;
    if (idx == periods.size())
        return false;
    NVector cur = rest;
    for (long a = 0; a <= bound; ++a) {
        if (searchCoefficients(cur, periods, idx + 1, bound))
            return true;
        bool fits = true;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            cur[i] -= periods[idx][i];
            if (cur[i] < 0)
                fits = false;
        }
        if (!fits)
            return false;
    }
    return false;
}

} // namespace

bool linearMember(const NVector& v, const LinearSet& ls) {
    if (v.size() != ls.dimension())
        throw UsageError("vector dimension does not match the linear set");
    NVector rest(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        rest[i] = v[i] - ls.base[i];
        if (rest[i] < 0)
            return false;
    }
    long bound = 0;
    for (long x : v)
        bound = std::max(bound, x);
    return searchCoefficients(rest, ls.periods, 0, bound);
}

bool semilinearMember(const NVector& v, const SemilinearSet& s) {
    for (const auto& part : s.parts)
        if (linearMember(v, part))
            return true;
    return false;
}

std::vector<NVector> linearMembersUpToWeight(const LinearSet& ls, long maxWeight) {
    std::set<NVector> seen;
    std::deque<NVector> queue;
    auto weight = [](const NVector& v) { return std::accumulate(v.begin(), v.end(), 0L); };
    if (weight(ls.base) <= maxWeight) {
        seen.insert(ls.base);
        queue.push_back(ls.base);
    }
    while (!queue.empty()) {
        NVector v = queue.front();
        queue.pop_front();
        for (const auto& p : ls.periods) {
            NVector n = v;
            for (std::size_t i = 0; i < n.size(); ++i)
                n[i] += p[i];
            if (weight(n) <= maxWeight && seen.insert(n).second)
                queue.push_back(n);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<NVector> parikhImage(const MultiHeadAutomaton& m, int maxLen) {
    std::set<NVector> image;
    for (const Word& w : enumerate(m, maxLen))
        image.insert(parikh(w, m.alphabet));
    return {image.begin(), image.end()};
}

SemilinearComparison compareSemilinear(const MultiHeadAutomaton& m, const SemilinearSet& s,
                                       int maxLen) {
    if (!s.parts.empty() && s.dimension() != m.alphabet.size())
        throw UsageError("semilinear set dimension does not match the machine alphabet");
    SemilinearComparison res;
    auto words = enumerate(m, maxLen);
    // direction 1: every accepted word's image lies in the set
    std::set<NVector> image;
    for (const Word& w : words) {
        NVector v = parikh(w, m.alphabet);
        if (!semilinearMember(v, s)) {
            res.consistent = false;
            res.counterexample = v;
            res.side = SemilinearComparison::Side::MachineOnly;
            return res;
        }
        image.insert(std::move(v));
    }
    // direction 2: members of weight <= maxLen are realized by some word
    std::set<NVector> members;
    for (const auto& part : s.parts)
        for (auto& v : linearMembersUpToWeight(part, maxLen))
            members.insert(std::move(v));
    for (const auto& v : members) {
        if (!image.count(v)) {
            res.consistent = false;
            res.counterexample = v;
            res.side = SemilinearComparison::Side::SetOnly;
            return res;
        }
    }
    return res;
}

BoundednessReport isBoundedUpTo(const MultiHeadAutomaton& m,
                                const std::vector<Symbol>& order, int maxLen) {
    std::vector<int> rank(m.alphabet.size());
    if (order.empty()) {
        for (std::size_t i = 0; i < rank.size(); ++i)
            rank[i] = static_cast<int>(i);
    } else {
        if (order.size() != m.alphabet.size())
            throw UsageError("symbol order must cover the whole alphabet");
        std::vector<bool> seen(m.alphabet.size(), false);
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (!m.alphabet.contains(order[i]) || seen[order[i]])
                throw UsageError("symbol order is not a permutation of the alphabet");
            seen[order[i]] = true;
            rank[order[i]] = static_cast<int>(i);
        }
    }
    BoundednessReport res;
    for (const Word& w : enumerate(m, maxLen)) {
        bool sorted = true;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (rank[w[i - 1]] > rank[w[i]])
                sorted = false;
        if (!sorted) {
            res.bounded = false;
            res.counterexample = w;
            return res;
        }
    }
    return res;
}

} // namespace mhfa::slin
