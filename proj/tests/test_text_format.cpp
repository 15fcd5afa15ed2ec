// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mhfa/builders.hpp"
#include "mhfa/engine.hpp"
#include "mhfa/errors.hpp"
#include "mhfa/pcfa.hpp"
#include "mhfa/text_format.hpp"

using namespace mhfa;
using namespace mhfa::text;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture(const std::string& name) {
    return slurp(std::string(MHFA_FIXTURE_DIR) + "/" + name);
}

} // namespace

TEST_CASE("well-formed two-head file parses") {
    std::string src = "machine two\nkind mhfa\ndirection one-way\nheads 2\n"
                      "alphabet a b\nstates s0 s1\ninitial s0\naccepting s1\n"
                      "trans s0 a,b -> s1 1,0\n";
    auto parsed = parseMachineFile(src);
    REQUIRE(std::holds_alternative<MultiHeadAutomaton>(parsed));
    const auto& m = std::get<MultiHeadAutomaton>(parsed);
    CHECK(m.heads == 2);
    CHECK(m.transitionCount() == 1);
    CHECK(validate(m).empty());
}

TEST_CASE("transition arity mismatch is a parse error with the line number") {
    std::string src = "machine two\nkind mhfa\ndirection one-way\nheads 2\n"
                      "alphabet a b\nstates s0\ninitial s0\naccepting\n"
                      "trans s0 a -> s0 1,0\n";
    try {
        parseMachineFile(src);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 9);
        CHECK(std::string(e.what()).find("2 heads") != std::string::npos);
    }
}

TEST_CASE("reserved tokens cannot be declared as symbols") {
    std::string src = "machine bad\nkind mhfa\ndirection one-way\nheads 1\n"
                      "alphabet a @\nstates s0\ninitial s0\naccepting\n";
    CHECK_THROWS_AS(parseMachineFile(src), ParseError);

    std::string pcfaSrc = "machine bad\nkind pcfa\nmode returning\ncentralized false\n"
                          "components 2\nalphabet a q1\ncomponent 1\nstates s0\n"
                          "initial s0\naccepting\n";
    CHECK_THROWS_AS(parseMachineFile(pcfaSrc), ParseError);
}

TEST_CASE("partially blind flavor survives the round trip") {
    std::string src = "machine pb\nkind mhfa\ndirection one-way\nheads 2\n"
                      "alphabet a b\nflavor partially-blind 1\nstates s0\ninitial s0\n"
                      "accepting\ntrans s0 a,a -> s0 1,1\n";
    auto parsed = parseMachineFile(src);
    const auto& m = std::get<MultiHeadAutomaton>(parsed);
    CHECK(m.flavor == Flavor::PartiallyBlind);
    CHECK(m.designatedHead == 1);
    auto again = parseMachineFile(renderMachine(m));
    CHECK(render(again) == renderMachine(m));
}

TEST_CASE("fixture files round-trip through parse and render") {
    for (const std::string name :
         {"astar.mhfa", "pingpong.mhfa", "meet.mhfa", "fixture.pcfa", "fixture.tm",
          "shuttle.tm"}) {
        CAPTURE(name);
        std::string original = fixture(name);
        auto parsed = parseMachineFile(original);
        std::string rendered = render(parsed);
        auto reparsed = parseMachineFile(rendered);
        CHECK(render(reparsed) == rendered);
    }
}

TEST_CASE("parsed fixture.pcfa behaves like the built-in system") {
    auto parsed = parseMachineFile(fixture("fixture.pcfa"));
    REQUIRE(std::holds_alternative<pcfa::System>(parsed));
    const auto& sys = std::get<pcfa::System>(parsed);
    CHECK(pcfa::validateSystem(sys).empty());
    CHECK(pcfa::isDeterministicSystem(sys));
    CHECK(sys.centralized);
    CHECK(sys.mode == pcfa::Mode::NonReturning);

    auto builtin = pcfa::builtinFixture();
    for (int len = 0; len <= 6; ++len)
        CHECK(pcfa::enumerateSystem(sys, len) == pcfa::enumerateSystem(builtin, len));
}

TEST_CASE("parsed fixture.tm matches the built-in machine") {
    auto parsed = parseMachineFile(fixture("fixture.tm"));
    REQUIRE(std::holds_alternative<tm::TuringMachine>(parsed));
    const auto& machine = std::get<tm::TuringMachine>(parsed);
    CHECK(tm::conformanceDiagnostics(machine).empty());
    auto res = tm::run(machine, {}, 100);
    CHECK(res.kind == tm::RunKind::Accepted);
    CHECK(tm::valcString(machine, res.history) ==
          tm::valcString(tm::fixtureTm(), tm::run(tm::fixtureTm(), {}, 100).history));
}

TEST_CASE("sensing partitions survive the round trip") {
    auto parsed = parseMachineFile(fixture("meet.mhfa"));
    REQUIRE(std::holds_alternative<MultiHeadAutomaton>(parsed));
    const auto& m = std::get<MultiHeadAutomaton>(parsed);
    CHECK(m.flavor == Flavor::Sensing);
    REQUIRE(validate(m).empty());
    // the machine moves head 1 while the heads coincide, then head 2:
    // heads split after the first step and the split key takes over
    Word w = m.alphabet.wordFromChars("aa");
    auto s1 = step(m, w, initialConfig(m));
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].pos[0] == 2);
    CHECK(s1[0].pos[1] == 1);
}

TEST_CASE("rendered witness machines re-parse and re-validate") {
    auto m = build::buildLnAcceptor(3);
    std::string rendered = renderMachine(m);
    auto parsed = parseMachineFile(rendered);
    REQUIRE(std::holds_alternative<MultiHeadAutomaton>(parsed));
    const auto& back = std::get<MultiHeadAutomaton>(parsed);
    CHECK(validate(back).empty());
    CHECK(isDeterministic(back));
    CHECK(enumerate(back, 7) == enumerate(m, 7));
    CHECK(renderMachine(back) == rendered);
}

TEST_CASE("semilinear files") {
    auto set = parseSemilinearFile("linear base 0 0 ; periods 1 0 | 0 1\nlinear base 2 2\n");
    REQUIRE(set.parts.size() == 2);
    CHECK(set.parts[0].periods.size() == 2);
    CHECK(set.parts[1].periods.empty());
    CHECK(set.dimension() == 2);
    CHECK(renderSemilinear(parseSemilinearFile(renderSemilinear(set))) ==
          renderSemilinear(set));

    SUBCASE("dimension mismatch is a parse error") {
        CHECK_THROWS_AS(parseSemilinearFile("linear base 1\nlinear base 1 2\n"), ParseError);
    }
    SUBCASE("negative entries are parse errors") {
        CHECK_THROWS_AS(parseSemilinearFile("linear base -1\n"), ParseError);
    }
}

TEST_CASE("word syntax") {
    Alphabet al;
    al.add("a");
    al.add("b");
    CHECK(parseWord(al, "ab").size() == 2);
    CHECK(parseWord(al, "").empty());
    CHECK(parseWord(al, "a b a") == Word{0, 1, 0});
    CHECK_THROWS_AS(parseWord(al, "ax"), UsageError);

    Alphabet pairs;
    pairs.add("$");
    pairs.add("a:s0");
    CHECK(parseWord(pairs, "$ a:s0 $") == Word{0, 1, 0});
    CHECK(renderWord(pairs, {0, 1}) == "$ a:s0");
    CHECK(renderWord(al, {0, 1}) == "ab");
}
