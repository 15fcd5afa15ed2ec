// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mhfa/engine.hpp"
#include "mhfa/errors.hpp"
#include "mhfa/variants.hpp"

using namespace mhfa;

namespace {

// Nondeterministic one-head machine over {a}: guesses one of two residue
// tracks at the first symbol; every move is +1, so it is oblivious.
MultiHeadAutomaton unaryResidueNfa() {
    MultiHeadAutomaton m;
    m.name = "unary-residues";
    Symbol a = m.alphabet.add("a");
    State s0 = m.addState("s0");
    State e0 = m.addState("e0");
    State e1 = m.addState("e1");
    State t0 = m.addState("t0");
    State t1 = m.addState("t1");
    State t2 = m.addState("t2");
    m.initial = s0;
    m.accepting[s0] = true; // empty word
    m.accepting[e0] = true; // even length
    m.accepting[t0] = true; // multiple of three
    m.addTransition(s0, {a}, e1, {1});
    m.addTransition(s0, {a}, t1, {1});
    m.addTransition(e0, {a}, e1, {1});
    m.addTransition(e1, {a}, e0, {1});
    m.addTransition(t0, {a}, t1, {1});
    m.addTransition(t1, {a}, t2, {1});
    m.addTransition(t2, {a}, t0, {1});
    return m;
}

// Last symbol must be 'a'; the guessing branch survives only at the end.
MultiHeadAutomaton lastIsA() {
    MultiHeadAutomaton m;
    m.name = "last-a";
    Symbol a = m.alphabet.add("a");
    Symbol b = m.alphabet.add("b");
    State s0 = m.addState("s0");
    State fin = m.addState("fin");
    State dead = m.addState("dead");
    m.initial = s0;
    m.accepting[fin] = true;
    m.addTransition(s0, {a}, s0, {1});
    m.addTransition(s0, {a}, fin, {1});
    m.addTransition(s0, {b}, s0, {1});
    m.addTransition(fin, {a}, dead, {1});
    m.addTransition(fin, {b}, dead, {1});
    m.addTransition(dead, {a}, dead, {1});
    m.addTransition(dead, {b}, dead, {1});
    return m;
}

// Two lockstep heads; guesses whether the final symbol is 'b'.
MultiHeadAutomaton lastIsBTwoHeads() {
    MultiHeadAutomaton m;
    m.name = "last-b-2h";
    Symbol a = m.alphabet.add("a");
    Symbol b = m.alphabet.add("b");
    m.heads = 2;
    State s0 = m.addState("s0");
    State fin = m.addState("fin");
    State dead = m.addState("dead");
    m.initial = s0;
    m.accepting[fin] = true;
    for (Symbol x : {a, b}) {
        m.addTransition(s0, {x, x}, s0, {1, 1});
        m.addTransition(fin, {x, x}, dead, {1, 1});
        m.addTransition(dead, {x, x}, dead, {1, 1});
    }
    m.addTransition(s0, {b, b}, fin, {1, 1});
    return m;
}

} // namespace

TEST_CASE("checkDataIndependent: uniform right-mover is independent") {
    auto m = testing::aStar();
    auto report = checkDataIndependent(m, 4, 50);
    CHECK(report.independent);
    // trajectory is t -> min(t+1, n+1) for every input of length n
    auto pos = report.table.positions(3, 2);
    REQUIRE(pos.has_value());
    CHECK((*pos)[0] == 3);
}

TEST_CASE("checkDataIndependent: content-dependent head movement is caught") {
    // head 2 advances only on 'a'
    MultiHeadAutomaton m;
    Symbol a = m.alphabet.add("a");
    Symbol b = m.alphabet.add("b");
    m.heads = 2;
    State s = m.addState("s");
    m.initial = s;
    m.addTransition(s, {a, a}, s, {1, 1});
    m.addTransition(s, {b, b}, s, {1, 0});
    m.addTransition(s, {a, b}, s, {1, 1});
    m.addTransition(s, {b, a}, s, {1, 0});
    auto report = checkDataIndependent(m, 2, 20);
    REQUIRE_FALSE(report.independent);
    CHECK(report.violation->head == 2);
    CHECK(report.violation->inputA.size() == report.violation->inputB.size());
}

TEST_CASE("deterministic unary machines are data-independent") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> statesDist(1, 4), coin(0, 1), moveDist(0, 1);
    for (int round = 0; round < 50; ++round) {
        MultiHeadAutomaton m;
        Symbol a = m.alphabet.add("a");
        int states = statesDist(rng);
        for (int i = 0; i < states; ++i)
            m.addState("s" + std::to_string(i));
        m.initial = 0;
        for (int i = 0; i < states; ++i) {
            m.accepting[i] = coin(rng) == 1;
            if (coin(rng) == 1)
                m.addTransition(static_cast<State>(i), {a},
                                static_cast<State>(
                                    std::uniform_int_distribution<int>(0, states - 1)(rng)),
                                {1});
            if (coin(rng) == 1)
                m.addTransition(static_cast<State>(i), {kRightEnd},
                                static_cast<State>(
                                    std::uniform_int_distribution<int>(0, states - 1)(rng)),
                                {0});
        }
        if (!isDeterministic(m))
            continue;
        auto report = checkDataIndependent(m, 5, 40);
        REQUIRE(report.independent);
    }
}

TEST_CASE("determinizeOblivious on the three oblivious fixtures") {
    for (auto make : {unaryResidueNfa, lastIsA, lastIsBTwoHeads}) {
        auto m = make();
        REQUIRE(validate(m).empty());
        auto det = determinizeOblivious(m, 8);
        REQUIRE(validate(det).empty());
        CHECK(isDeterministic(det));
        CHECK(checkDataIndependent(det, 8, 200).independent);
        CHECK(!equivalentUpTo(m, det, 8).has_value());
    }
}

TEST_CASE("determinizeOblivious keeps an already-deterministic machine equivalent") {
    auto m = testing::aStar();
    auto det = determinizeOblivious(m, 6);
    CHECK(isDeterministic(det));
    CHECK(!equivalentUpTo(m, det, 6).has_value());
}

TEST_CASE("determinizeOblivious rejects data-dependent machines") {
    MultiHeadAutomaton m;
    Symbol a = m.alphabet.add("a");
    Symbol b = m.alphabet.add("b");
    State s = m.addState("s");
    m.initial = s;
    m.accepting[s] = true;
    m.addTransition(s, {a}, s, {1});
    m.addTransition(s, {b}, s, {0}); // stalls on b: trajectory depends on content
    CHECK_THROWS_AS(determinizeOblivious(m, 4), ObliviousnessViolation);
}

TEST_CASE("determinizeOblivious reports conflicting move proposals") {
    // On inputs of length <= 1 the conflicting rules never fire, so the
    // empirical precondition holds; the power-set construction still meets
    // the subset {p,q} proposing two different moves on 'a' and must
    // surface the insufficient witness.
    MultiHeadAutomaton m;
    Symbol a = m.alphabet.add("a");
    State s0 = m.addState("s0");
    State p = m.addState("p");
    State q = m.addState("q");
    m.initial = s0;
    m.addTransition(s0, {a}, p, {1});
    m.addTransition(s0, {a}, q, {1});
    m.addTransition(p, {a}, p, {1});
    m.addTransition(q, {a}, q, {0}); // q proposes a different move
    CHECK(checkDataIndependent(m, 1, 50).independent);
    CHECK_THROWS_AS(determinizeOblivious(m, 1), ObliviousnessViolation);
    CHECK_THROWS_AS(determinizeOblivious(m, 4), ObliviousnessViolation);
}

TEST_CASE("sensing semantics dispatch on the coincidence partition") {
    MultiHeadAutomaton m;
    Symbol a = m.alphabet.add("a");
    m.heads = 2;
    m.flavor = Flavor::Sensing;
    State s = m.addState("s");
    State t = m.addState("t");
    m.initial = s;
    Partition together = partitionOf({1, 1});
    Partition apart = partitionOf({1, 2});
    m.addTransition(s, {a, a}, t, {1, 0}, &together);
    m.addTransition(t, {a, a}, t, {1, 1}, &apart);
    REQUIRE(validate(m).empty());

    Word in = m.alphabet.wordFromChars("aaa");
    Config c = initialConfig(m);
    auto s1 = sensingStep(m, in, c);
    REQUIRE(s1.size() == 1); // coincident key applies
    CHECK(s1[0].state == t);
    auto s2 = sensingStep(m, in, s1[0]);
    REQUIRE(s2.size() == 1); // heads now apart
    CHECK(s2[0].pos[0] == 3);

    SUBCASE("missing partition key halts") {
        Config backTogether = s1[0];
        backTogether.pos[0] = backTogether.pos[1] = 2;
        CHECK(sensingStep(m, in, backTogether).empty());
    }
    SUBCASE("plain machines refuse sensingStep") {
        auto plain = testing::aStar();
        CHECK_THROWS_AS(sensingStep(plain, testing::word(plain, "a"), initialConfig(plain)),
                        UsageError);
    }
}

TEST_CASE("sensing tables constant across partitions match plain semantics") {
    MultiHeadAutomaton plain;
    Symbol a = plain.alphabet.add("a");
    Symbol b = plain.alphabet.add("b");
    plain.heads = 2;
    State s = plain.addState("s");
    State t = plain.addState("t");
    plain.initial = s;
    plain.accepting[t] = true;

    MultiHeadAutomaton sensing = plain;
    sensing.flavor = Flavor::Sensing;

    auto addBoth = [&](State from, std::vector<Symbol> read, State to,
                       std::vector<int> moves) {
        plain.addTransition(from, read, to, moves);
        // same row under every coincidence pattern of two heads
        for (auto positions : {std::vector<int>{1, 1}, std::vector<int>{1, 2}}) {
            Partition part = partitionOf(positions);
            sensing.addTransition(from, read, to, moves, &part);
        }
    };
    addBoth(s, {a, a}, s, {1, 0});
    addBoth(s, {b, a}, t, {0, 1});
    addBoth(t, {b, b}, t, {1, 1});

    for (const std::string text : {"", "a", "ab", "aab", "abb", "aabb"}) {
        Word w = plain.alphabet.wordFromChars(text);
        std::vector<Config> frontier{initialConfig(plain)};
        // walk a few steps and compare successor sets
        for (int depth = 0; depth < 4 && !frontier.empty(); ++depth) {
            std::vector<Config> nextPlain, nextSensing;
            for (const auto& c : frontier) {
                auto sp = step(plain, w, c);
                auto ss = step(sensing, w, c);
                REQUIRE(sp == ss);
                for (auto& n : sp)
                    nextPlain.push_back(n);
            }
            frontier = std::move(nextPlain);
        }
    }
}

TEST_CASE("validatePartiallyBlind") {
    SUBCASE("non-designated heads that only split on the right endmarker pass") {
        MultiHeadAutomaton m;
        Symbol a = m.alphabet.add("a");
        Symbol b = m.alphabet.add("b");
        m.heads = 2;
        State s = m.addState("s");
        State t = m.addState("t");
        m.initial = s;
        // head 1 designated: reads symbols; head 2 sees input-vs-end only
        for (Symbol x : {a, b}) {
            m.addTransition(s, {a, x}, s, {1, 1});
            m.addTransition(s, {b, x}, t, {1, 0});
        }
        m.addTransition(s, {a, kLeftEnd}, s, {1, 1});
        m.addTransition(s, {b, kLeftEnd}, t, {1, 0});
        m.addTransition(s, {a, kRightEnd}, s, {1, 0});
        CHECK(validatePartiallyBlind(m, 1));
        CHECK_FALSE(validatePartiallyBlind(m, 2));
    }
    SUBCASE("a non-designated head distinguishing a from b fails") {
        MultiHeadAutomaton m;
        Symbol a = m.alphabet.add("a");
        Symbol b = m.alphabet.add("b");
        m.heads = 2;
        State s = m.addState("s");
        State t = m.addState("t");
        m.initial = s;
        m.addTransition(s, {a, a}, s, {1, 1});
        m.addTransition(s, {a, b}, t, {1, 1});
        CHECK_FALSE(validatePartiallyBlind(m, 1));
    }
    SUBCASE("one-head machines are vacuously partially blind") {
        CHECK(validatePartiallyBlind(testing::aStar(), 1));
    }
    SUBCASE("renaming input symbols uniformly preserves the verdict") {
        MultiHeadAutomaton m;
        Symbol a = m.alphabet.add("a");
        Symbol b = m.alphabet.add("b");
        m.heads = 2;
        State s = m.addState("s");
        m.initial = s;
        for (Symbol x : {a, b})
            m.addTransition(s, {a, x}, s, {1, 1});
        for (Symbol x : {a, b})
            m.addTransition(s, {b, x}, s, {1, 1});
        m.addTransition(s, {a, kLeftEnd}, s, {1, 1});
        m.addTransition(s, {b, kLeftEnd}, s, {1, 1});
        bool before = validatePartiallyBlind(m, 1);

        MultiHeadAutomaton renamed;
        renamed.alphabet.add("b"); // swap the names
        renamed.alphabet.add("a");
        renamed.heads = 2;
        renamed.addState("s");
        renamed.initial = 0;
        for (const auto& [key, image] : m.transitions)
            for (const auto& t : image) {
                auto syms = unpackSymbols(key.symbols, 2);
                for (auto& sym : syms)
                    if (sym == a)
                        sym = b;
                    else if (sym == b)
                        sym = a;
                renamed.addTransition(key.state, syms, t.next,
                                      {t.moves[0], t.moves[1]});
            }
        CHECK(validatePartiallyBlind(renamed, 1) == before);
    }
}
