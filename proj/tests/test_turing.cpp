// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "mhfa/errors.hpp"
#include "mhfa/turing.hpp"

using namespace mhfa;
using namespace mhfa::tm;

namespace {

ConfigWord cw(const TuringMachine& machine, const std::string& leftChars, const char* state,
              const std::string& rightChars) {
    ConfigWord c;
    for (char ch : leftChars)
        c.left.push_back(machine.tapeSymbol(std::string(1, ch)));
    c.state = machine.state(state);
    for (char ch : rightChars)
        c.right.push_back(machine.tapeSymbol(std::string(1, ch)));
    return c;
}

} // namespace

TEST_CASE("tm step forms") {
    TuringMachine m;
    m.tapeSymbols = {"a", "b", "c", "B"};
    m.blank = 3;
    m.inputSymbols = {0, 1, 2};
    m.stateNames = {"s", "t"};
    m.initial = 0;

    SUBCASE("stay rewrites in place") {
        m.rules[{0, 0}] = {1, 1, 0}; // s,a -> t,b,stay
        auto r = step(m, cw(m, "", "s", "a"));
        REQUIRE(r.kind == StepKind::Stepped);
        CHECK(r.next == cw(m, "", "t", "b"));
    }
    SUBCASE("right moves the state over the written cell") {
        m.rules[{0, 0}] = {1, 1, 1}; // s,a -> t,b,right
        auto r = step(m, cw(m, "", "s", "ac"));
        REQUIRE(r.kind == StepKind::Stepped);
        CHECK(r.next == cw(m, "b", "t", "c"));
    }
    SUBCASE("left pulls the state back over the last support cell") {
        m.rules[{0, 0}] = {1, 1, -1}; // s,a -> t,b,left
        auto r = step(m, cw(m, "c", "s", "a"));
        REQUIRE(r.kind == StepKind::Stepped);
        CHECK(r.next == cw(m, "", "t", "cb"));
    }
    SUBCASE("right at the support edge appends one blank") {
        m.rules[{0, 0}] = {1, 1, 1};
        auto r = step(m, cw(m, "", "s", "a"));
        REQUIRE(r.kind == StepKind::Stepped);
        CHECK(r.next == cw(m, "b", "t", "B"));
    }
    SUBCASE("state at the end scans the blank") {
        m.rules[{0, 3}] = {1, 0, 0}; // s,B -> t,a,stay
        auto r = step(m, cw(m, "c", "s", ""));
        REQUIRE(r.kind == StepKind::Stepped);
        CHECK(r.next == cw(m, "c", "t", "a"));
    }
    SUBCASE("left at the left edge is a conformance violation") {
        m.rules[{0, 0}] = {1, 1, -1};
        auto r = step(m, cw(m, "", "s", "a"));
        CHECK(r.kind == StepKind::LeftEdge);
    }
    SUBCASE("undefined rule halts") {
        auto r = step(m, cw(m, "", "s", "a"));
        CHECK(r.kind == StepKind::Halted);
    }
}

TEST_CASE("fixture machine accepts only the empty word, in three stationary moves") {
    auto m = fixtureTm();
    CHECK(conformanceDiagnostics(m).empty());

    auto res = run(m, {}, 100);
    REQUIRE(res.kind == RunKind::Accepted);
    REQUIRE(res.history.size() == 4);
    CHECK(res.history[0] == cw(m, "", "s0", ""));
    CHECK(res.history[1] == cw(m, "", "s0", "b"));
    CHECK(res.history[2] == cw(m, "", "s1", "a"));
    CHECK(res.history[3] == cw(m, "", "s1", "b"));

    CHECK(run(m, {m.tapeSymbol("a")}, 100).kind == RunKind::Rejected);
    CHECK(run(m, {m.tapeSymbol("a"), m.tapeSymbol("a")}, 100).kind == RunKind::Rejected);
}

TEST_CASE("shuttle machine accepts only 'a' with right and left moves") {
    auto m = fixtureTmLr();
    CHECK(conformanceDiagnostics(m).empty());
    auto res = run(m, {m.tapeSymbol("a")}, 100);
    REQUIRE(res.kind == RunKind::Accepted);
    REQUIRE(res.history.size() == 4);
    CHECK(res.history[1] == cw(m, "x", "s1", "B"));
    CHECK(res.history[2] == cw(m, "", "s2", "xy"));
    CHECK(res.history[3] == cw(m, "", "s1", "xy"));
    CHECK(run(m, {}, 100).kind == RunKind::Rejected);
    CHECK(run(m, {m.tapeSymbol("a"), m.tapeSymbol("a")}, 100).kind == RunKind::Rejected);
}

TEST_CASE("bound exceeded is reported") {
    auto m = fixtureTm();
    CHECK(run(m, {}, 1).kind == RunKind::BoundExceeded);
}

TEST_CASE("non-conforming accepting halts are reported") {
    // accepts after one move
    TuringMachine m;
    m.tapeSymbols = {"a", "B"};
    m.blank = 1;
    m.inputSymbols = {0};
    m.stateNames = {"s0", "s1"};
    m.initial = 0;
    m.accepting = {1};
    m.rules[{0, 0}] = {1, 0, 0};
    auto res = run(m, {0}, 10);
    CHECK(res.kind == RunKind::NonConforming);
    CHECK(res.note.find("three") != std::string::npos);
}

TEST_CASE("static conformance diagnostics") {
    TuringMachine m;
    m.tapeSymbols = {"a", "B"};
    m.blank = 1;
    m.inputSymbols = {0};
    m.stateNames = {"s0"};
    m.initial = 0;
    m.rules[{0, 0}] = {0, 1, 0}; // writes the blank
    auto diags = conformanceDiagnostics(m);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("blank") != std::string::npos);
}

TEST_CASE("valcString formats the history with separators") {
    auto m = fixtureTm();
    auto res = run(m, {}, 100);
    Word w = valcString(m, res.history);
    Alphabet va = valcAlphabet(m);
    CHECK(va.wordToTokens(w) == "$ s0 $ s0 b $ s1 a $ s1 b $");
    CHECK(w.size() == 12);

    SUBCASE("histories that are too short are rejected") {
        std::vector<ConfigWord> two(res.history.begin(), res.history.begin() + 2);
        CHECK_THROWS_AS(valcString(m, two), ConformanceError);
        std::vector<ConfigWord> empty;
        CHECK_THROWS_AS(valcString(m, empty), ConformanceError);
        std::vector<ConfigWord> odd(res.history.begin(), res.history.begin() + 3);
        CHECK_THROWS_AS(valcString(m, odd), ConformanceError);
    }
}

TEST_CASE("referenceValcMember accepts exactly the round-tripped histories") {
    auto m = fixtureTm();
    auto res = run(m, {}, 100);
    Word w = valcString(m, res.history);
    CHECK(referenceValcMember(m, w));

    SUBCASE("every single-symbol corruption is rejected") {
        Alphabet va = valcAlphabet(m);
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (Symbol s = 0; s < va.size(); ++s) {
                if (s == w[i])
                    continue;
                Word bad = w;
                bad[i] = s;
                CAPTURE(i);
                CAPTURE(static_cast<int>(s));
                CHECK_FALSE(referenceValcMember(m, bad));
            }
        }
    }
    SUBCASE("empty and trivial words are rejected") {
        CHECK_FALSE(referenceValcMember(m, {}));
        CHECK_FALSE(referenceValcMember(m, {0}));
        CHECK_FALSE(referenceValcMember(m, {0, 0}));
    }
    SUBCASE("truncations are rejected") {
        for (std::size_t cut = 1; cut < w.size(); ++cut) {
            Word bad(w.begin(), w.begin() + cut);
            CHECK_FALSE(referenceValcMember(m, bad));
        }
    }
}

TEST_CASE("valcWordsUpTo enumerates the full history set constructively") {
    auto m = fixtureTm();
    auto words = valcWordsUpTo(m, 14);
    REQUIRE(words.size() == 1);
    CHECK(words[0].size() == 12);
    CHECK(referenceValcMember(m, words[0]));
    CHECK(valcWordsUpTo(m, 11).empty());

    SUBCASE("the shuttle machine contributes mid-run prefixes that end accepting") {
        auto lr = fixtureTmLr();
        auto lrWords = valcWordsUpTo(lr, 22);
        REQUIRE(lrWords.size() == 2); // the 'a' run and the even prefix of the 'aaa' run
        CHECK(lrWords[0].size() == 16);
        CHECK(lrWords[1].size() == 22);
        for (const auto& w2 : lrWords)
            CHECK(referenceValcMember(lr, w2));
        CHECK(valcWordsUpTo(lr, 21).size() == 1);
    }
}
