// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct CmdResult {
    int exitCode;
    std::string out;
};

CmdResult runCli(const std::string& args) {
    std::string cmd = std::string(MHFA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CmdResult res{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fx(const std::string& name) { return std::string(MHFA_FIXTURE_DIR) + "/" + name; }

std::string tmpPath(const std::string& name) {
    return std::string("/tmp/mhfa_cli_test_") + name;
}

} // namespace

TEST_CASE("run: accept and reject with matching exit codes") {
    auto ok = runCli("run " + fx("fixture.pcfa") + " --input 'ab$ab'");
    CHECK(ok.exitCode == 0);
    CHECK(ok.out == "accept\n");

    auto no = runCli("run " + fx("fixture.pcfa") + " --input 'ab$ba'");
    CHECK(no.exitCode == 1);
    CHECK(no.out == "reject\n");
}

TEST_CASE("run: deterministic trace output") {
    auto res = runCli("run " + fx("astar.mhfa") + " --input aa --trace");
    CHECK(res.exitCode == 0);
    CHECK(res.out == "t=0 state=s0 heads=1\n"
                     "t=1 state=s0 heads=2\n"
                     "t=2 state=s0 heads=3\n"
                     "accept\n");
}

TEST_CASE("enumerate lists accepted words in length-lex order") {
    auto res = runCli("enumerate " + fx("astar.mhfa") + " --max-len 2");
    CHECK(res.exitCode == 0);
    CHECK(res.out == "\na\naa\n");

    auto pcfa = runCli("enumerate " + fx("fixture.pcfa") + " --max-len 3");
    CHECK(pcfa.exitCode == 0);
    CHECK(pcfa.out == "a$a\nb$b\n");
}

TEST_CASE("compile pcfa to mhfa and compare") {
    std::string out = tmpPath("compiled.mhfa");
    auto compile =
        runCli("compile --from pcfa --to mhfa " + fx("fixture.pcfa") + " -o " + out);
    REQUIRE(compile.exitCode == 0);

    auto cmp = runCli("compare " + out + " " + fx("fixture.pcfa") + " --max-len 6");
    CHECK(cmp.exitCode == 0);
    CHECK(cmp.out == "equal\n");

    auto diff = runCli("compare " + out + " " + fx("astar.mhfa") + " --max-len 4");
    CHECK(diff.exitCode == 2); // different alphabets: usage error
}

TEST_CASE("compare reports the first counterexample") {
    std::string l2 = tmpPath("l2.mhfa");
    REQUIRE(runCli("witness l2 -o " + l2).exitCode == 0);
    std::string copy = tmpPath("copy.mhfa");
    REQUIRE(runCli("witness ln --heads 2 -o " + copy).exitCode == 0);

    // same machine on both sides
    auto same = runCli("compare " + l2 + " " + l2 + " --max-len 6");
    CHECK(same.exitCode == 0);
    CHECK(same.out == "equal\n");
}

TEST_CASE("check properties with exit codes") {
    CHECK(runCli("check " + fx("astar.mhfa") + " --property one-way").exitCode == 0);
    auto two = runCli("check " + fx("pingpong.mhfa") + " --property one-way");
    CHECK(two.exitCode == 1);
    CHECK(two.out == "two-way\n");

    CHECK(runCli("check " + fx("astar.mhfa") + " --property deterministic").exitCode == 0);
    CHECK(runCli("check " + fx("fixture.pcfa") + " --property deterministic").exitCode == 0);
    CHECK(runCli("check " + fx("astar.mhfa") + " --property data-independent --max-len 4")
              .exitCode == 0);
    CHECK(runCli("check " + fx("astar.mhfa") + " --property partially-blind").exitCode == 0);
}

TEST_CASE("compile tm to the history acceptor and run a valid history") {
    std::string out = tmpPath("valc.mhfa");
    REQUIRE(runCli("compile --from tm --to valc-acceptor " + fx("fixture.tm") + " -o " + out)
                .exitCode == 0);
    auto ok = runCli("run " + out + " --input '$ s0 $ s0 b $ s1 a $ s1 b $'");
    CHECK(ok.exitCode == 0);
    auto no = runCli("run " + out + " --input '$ s0 $ s0 b $ s1 a $ s0 b $'");
    CHECK(no.exitCode == 1);
}

TEST_CASE("determinize writes a deterministic equivalent") {
    // nondeterministic one-way guesser over a: needs the subset construction
    std::string src = tmpPath("guess.mhfa");
    std::ofstream(src) << "machine guess\nkind mhfa\ndirection one-way\nheads 1\n"
                          "alphabet a\nstates s0 sF dead\ninitial s0\naccepting sF\n"
                          "trans s0 a -> s0 1\n"
                          "trans s0 a -> sF 1\n"
                          "trans sF a -> dead 1\n"
                          "trans dead a -> dead 1\n";
    std::string out = tmpPath("guess_det.mhfa");
    REQUIRE(runCli("determinize " + src + " --max-len 6 -o " + out).exitCode == 0);
    CHECK(runCli("check " + out + " --property deterministic").exitCode == 0);
    CHECK(runCli("compare " + src + " " + out + " --max-len 6").exitCode == 0);
}

TEST_CASE("witness lnm writes a machine that accepts a paired-track word") {
    std::string out = tmpPath("lnm.mhfa");
    REQUIRE(runCli("witness lnm --heads 2 --tm " + fx("fixture.tm") + " -o " + out)
                .exitCode == 0);
    CHECK(runCli("check " + out + " --property deterministic").exitCode == 0);
    CHECK(runCli("check " + out + " --property one-way").exitCode == 0);
}

TEST_CASE("parikh image and semilinear comparison") {
    auto img = runCli("parikh " + fx("astar.mhfa") + " --max-len 3");
    CHECK(img.exitCode == 0);
    CHECK(img.out == "0\n1\n2\n3\n");

    auto cons = runCli("parikh " + fx("astar.mhfa") + " --max-len 5 --semilinear " +
                       fx("naturals.slin"));
    CHECK(cons.exitCode == 0);
    CHECK(cons.out == "consistent\n");

    std::string l2 = tmpPath("l2b.mhfa");
    REQUIRE(runCli("witness l2 -o " + l2).exitCode == 0);
    auto img2 = runCli("parikh " + l2 + " --max-len 9");
    CHECK(img2.exitCode == 0);
    CHECK(img2.out == "1 1\n3 2\n6 3\n");
}

TEST_CASE("parse and validation errors map to exit codes 2 and 3") {
    std::string bad = tmpPath("bad.mhfa");
    std::ofstream(bad) << "machine bad\nkind mhfa\nheads\n";
    CHECK(runCli("run " + bad + " --input a").exitCode == 2);

    std::string invalid = tmpPath("invalid.mhfa");
    std::ofstream(invalid) << "machine inv\nkind mhfa\ndirection one-way\nheads 1\n"
                              "alphabet a\nstates s0\ninitial s0\naccepting\n"
                              "trans s0 a -> s0 -1\n"; // left move in a one-way machine
    CHECK(runCli("run " + invalid + " --input a").exitCode == 3);

    CHECK(runCli("definitely-not-a-command").exitCode == 2);
    CHECK(runCli("run missing-file.mhfa --input a").exitCode == 2);
}

TEST_CASE("byte-deterministic output") {
    auto a = runCli("enumerate " + fx("fixture.pcfa") + " --max-len 5");
    auto b = runCli("enumerate " + fx("fixture.pcfa") + " --max-len 5");
    CHECK(a.out == b.out);
    std::string w1 = tmpPath("det1.mhfa"), w2 = tmpPath("det2.mhfa");
    REQUIRE(runCli("witness ln --heads 3 -o " + w1).exitCode == 0);
    REQUIRE(runCli("witness ln --heads 3 -o " + w2).exitCode == 0);
    std::ifstream f1(w1), f2(w2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK(!s1.empty());
}
