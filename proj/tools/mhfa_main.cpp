// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: run, enumerate, compare, check, compile,
// determinize, witness and parikh over the line-oriented machine files.
// Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or parse
// error, 3 validation error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mhfa/builders.hpp"
#include "mhfa/engine.hpp"
#include "mhfa/errors.hpp"
#include "mhfa/pcfa.hpp"
#include "mhfa/semilinear.hpp"
#include "mhfa/text_format.hpp"
#include "mhfa/turing.hpp"
#include "mhfa/variants.hpp"
#include "mhfa/wordscan.hpp"

namespace {

using namespace mhfa;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeFile(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << contents;
}

text::ParsedMachine load(const std::string& path) {
    auto parsed = text::parseMachineFile(slurp(path));
    if (std::holds_alternative<MultiHeadAutomaton>(parsed)) {
        auto diags = validate(std::get<MultiHeadAutomaton>(parsed));
        if (!diags.empty()) {
            for (const auto& d : diags)
                std::cerr << path << ": " << d << "\n";
            throw ValidationError("machine file fails validation");
        }
    } else if (std::holds_alternative<pcfa::System>(parsed)) {
        auto diags = pcfa::validateSystem(std::get<pcfa::System>(parsed));
        if (!diags.empty()) {
            for (const auto& d : diags)
                std::cerr << path << ": " << d << "\n";
            throw ValidationError("system file fails validation");
        }
    } else {
        auto diags = tm::conformanceDiagnostics(std::get<tm::TuringMachine>(parsed));
        if (!diags.empty()) {
            for (const auto& d : diags)
                std::cerr << path << ": " << d << "\n";
            throw ValidationError("turing machine file fails validation");
        }
    }
    return parsed;
}

const Alphabet& alphabetOf(const text::ParsedMachine& parsed, Alphabet& tmScratch) {
    if (std::holds_alternative<MultiHeadAutomaton>(parsed))
        return std::get<MultiHeadAutomaton>(parsed).alphabet;
    if (std::holds_alternative<pcfa::System>(parsed))
        return std::get<pcfa::System>(parsed).alphabet;
    const auto& machine = std::get<tm::TuringMachine>(parsed);
    tmScratch = Alphabet();
    for (Symbol s : machine.inputSymbols)
        tmScratch.add(machine.tapeSymbols[s]);
    return tmScratch;
}

std::function<bool(const Word&)> acceptorOf(const text::ParsedMachine& parsed, int maxSteps) {
    if (std::holds_alternative<MultiHeadAutomaton>(parsed)) {
        const auto& m = std::get<MultiHeadAutomaton>(parsed);
        return [&m](const Word& w) { return accepts(m, w); };
    }
    if (std::holds_alternative<pcfa::System>(parsed)) {
        const auto& sys = std::get<pcfa::System>(parsed);
        return [&sys](const Word& w) { return pcfa::acceptsSystem(sys, w); };
    }
    const auto& machine = std::get<tm::TuringMachine>(parsed);
    return [&machine, maxSteps](const Word& w) {
        std::vector<Symbol> input;
        for (Symbol s : w)
            input.push_back(machine.inputSymbols[s]);
        auto res = tm::run(machine, input, maxSteps);
        return res.kind == tm::RunKind::Accepted;
    };
}

int cmdRun(const std::string& file, const std::string& wordText, bool trace, int maxSteps) {
    auto parsed = load(file);
    Alphabet scratch;
    const Alphabet& al = alphabetOf(parsed, scratch);
    Word w = text::parseWord(al, wordText);

    if (trace) {
        if (std::holds_alternative<MultiHeadAutomaton>(parsed)) {
            const auto& m = std::get<MultiHeadAutomaton>(parsed);
            if (!isDeterministic(m))
                throw UsageError("--trace requires a deterministic machine");
            auto tr = runDeterministic(m, w, static_cast<std::size_t>(maxSteps));
            for (std::size_t t = 0; t < tr.steps.size(); ++t) {
                std::cout << "t=" << t << " state=" << m.stateNames[tr.steps[t].state]
                          << " heads=";
                for (int i = 0; i < m.heads; ++i)
                    std::cout << (i ? "," : "") << tr.steps[t].pos[i];
                std::cout << "\n";
            }
        } else if (std::holds_alternative<pcfa::System>(parsed)) {
            const auto& sys = std::get<pcfa::System>(parsed);
            if (!pcfa::isDeterministicSystem(sys))
                throw UsageError("--trace requires a deterministic system");
            auto c = pcfa::initialConfig(sys);
            for (int t = 0; t <= maxSteps; ++t) {
                std::cout << "t=" << t << " states=";
                for (int i = 0; i < sys.degree(); ++i)
                    std::cout << (i ? "," : "") << sys.stateNames[c.state[i]];
                std::cout << " consumed=";
                for (int i = 0; i < sys.degree(); ++i)
                    std::cout << (i ? "," : "") << c.consumed[i];
                std::cout << "\n";
                auto succ = pcfa::stepSystem(sys, w, c);
                if (succ.empty())
                    break;
                c = succ.front();
            }
        } else {
            const auto& machine = std::get<tm::TuringMachine>(parsed);
            std::vector<Symbol> input;
            for (Symbol s : w)
                input.push_back(machine.inputSymbols[s]);
            auto res = tm::run(machine, input, maxSteps);
            Alphabet va = tm::valcAlphabet(machine);
            for (std::size_t t = 0; t < res.history.size(); ++t)
                std::cout << "t=" << t << " conf="
                          << va.wordToTokens(tm::configToWord(machine, va, res.history[t]))
                          << "\n";
        }
    }

    bool ok = acceptorOf(parsed, maxSteps)(w);
    std::cout << (ok ? "accept" : "reject") << "\n";
    return ok ? 0 : 1;
}

int cmdEnumerate(const std::string& file, int maxLen, int maxSteps) {
    auto parsed = load(file);
    std::vector<Word> words;
    Alphabet scratch;
    const Alphabet& al = alphabetOf(parsed, scratch);
    if (std::holds_alternative<MultiHeadAutomaton>(parsed)) {
        words = enumerate(std::get<MultiHeadAutomaton>(parsed), maxLen);
    } else if (std::holds_alternative<pcfa::System>(parsed)) {
        words = pcfa::enumerateSystem(std::get<pcfa::System>(parsed), maxLen);
    } else {
        auto pred = acceptorOf(parsed, maxSteps);
        words = scanWords(al, maxLen, pred);
    }
    for (const auto& w : words)
        std::cout << text::renderWord(al, w) << "\n";
    return 0;
}

int cmdCompare(const std::string& fileA, const std::string& fileB, int maxLen, int maxSteps) {
    auto pa = load(fileA);
    auto pb = load(fileB);
    Alphabet sa, sb;
    const Alphabet& alA = alphabetOf(pa, sa);
    const Alphabet& alB = alphabetOf(pb, sb);
    if (!(alA == alB))
        throw UsageError("machines have different alphabets");
    auto fa = acceptorOf(pa, maxSteps);
    auto fb = acceptorOf(pb, maxSteps);
    for (int len = 0; len <= maxLen; ++len) {
        std::uint64_t count = wordCount(alA, len);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Word w = wordAtIndex(alA, len, idx);
            if (fa(w) != fb(w)) {
                std::cout << text::renderWord(alA, w) << "\n";
                return 1;
            }
        }
        if (alA.size() == 0)
            break;
    }
    std::cout << "equal\n";
    return 0;
}

int cmdCheck(const std::string& file, const std::string& property, int maxLen, int maxSteps,
             int designatedHead) {
    auto parsed = load(file);
    if (property == "deterministic") {
        bool ok;
        if (std::holds_alternative<MultiHeadAutomaton>(parsed))
            ok = isDeterministic(std::get<MultiHeadAutomaton>(parsed));
        else if (std::holds_alternative<pcfa::System>(parsed))
            ok = pcfa::isDeterministicSystem(std::get<pcfa::System>(parsed));
        else
            ok = true; // tm files are deterministic by format
        std::cout << (ok ? "deterministic" : "nondeterministic") << "\n";
        return ok ? 0 : 1;
    }
    if (property == "one-way") {
        if (!std::holds_alternative<MultiHeadAutomaton>(parsed))
            throw UsageError("one-way applies to mhfa files");
        bool ok = std::get<MultiHeadAutomaton>(parsed).direction == Direction::OneWay;
        std::cout << (ok ? "one-way" : "two-way") << "\n";
        return ok ? 0 : 1;
    }
    if (property == "data-independent") {
        if (!std::holds_alternative<MultiHeadAutomaton>(parsed))
            throw UsageError("data-independent applies to mhfa files");
        auto report =
            checkDataIndependent(std::get<MultiHeadAutomaton>(parsed), maxLen, maxSteps);
        if (report.independent) {
            std::cout << "data-independent up to length " << maxLen << "\n";
            return 0;
        }
        const auto& m = std::get<MultiHeadAutomaton>(parsed);
        std::cout << "violation head=" << report.violation->head
                  << " time=" << report.violation->time << " inputs='"
                  << text::renderWord(m.alphabet, report.violation->inputA) << "' '"
                  << text::renderWord(m.alphabet, report.violation->inputB) << "'\n";
        return 1;
    }
    if (property == "partially-blind") {
        if (!std::holds_alternative<MultiHeadAutomaton>(parsed))
            throw UsageError("partially-blind applies to mhfa files");
        const auto& m = std::get<MultiHeadAutomaton>(parsed);
        int head = designatedHead != 0 ? designatedHead
                   : m.flavor == Flavor::PartiallyBlind ? m.designatedHead
                                                        : 1;
        bool ok = validatePartiallyBlind(m, head);
        std::cout << (ok ? "partially-blind" : "not partially-blind") << " (designated head "
                  << head << ")\n";
        return ok ? 0 : 1;
    }
    throw UsageError("unknown property '" + property + "'");
}

int cmdCompile(const std::string& from, const std::string& to, const std::string& file,
               const std::string& outPath) {
    auto parsed = load(file);
    if (from == "tm" && to == "valc-acceptor") {
        if (!std::holds_alternative<tm::TuringMachine>(parsed))
            throw UsageError("'" + file + "' is not a tm file");
        auto m = build::buildValcAcceptor(std::get<tm::TuringMachine>(parsed));
        writeFile(outPath, text::renderMachine(m));
        return 0;
    }
    if (from == "pcfa" && to == "mhfa") {
        if (!std::holds_alternative<pcfa::System>(parsed))
            throw UsageError("'" + file + "' is not a pcfa file");
        auto m = pcfa::compileToMultiHead(std::get<pcfa::System>(parsed));
        writeFile(outPath, text::renderMachine(m));
        return 0;
    }
    throw UsageError("unsupported compilation '" + from + "' -> '" + to + "'");
}

int cmdDeterminize(const std::string& file, int maxLen, const std::string& outPath) {
    auto parsed = load(file);
    if (!std::holds_alternative<MultiHeadAutomaton>(parsed))
        throw UsageError("determinize applies to mhfa files");
    auto m = determinizeOblivious(std::get<MultiHeadAutomaton>(parsed), maxLen);
    writeFile(outPath, text::renderMachine(m));
    return 0;
}

int cmdWitness(const std::string& kind, int headsArg, const std::string& tmFile,
               const std::string& outPath) {
    if (kind == "l2") {
        writeFile(outPath, text::renderMachine(build::buildL2Acceptor()));
        return 0;
    }
    if (kind == "ln") {
        writeFile(outPath, text::renderMachine(build::buildLnAcceptor(headsArg)));
        return 0;
    }
    if (kind == "lnm") {
        if (tmFile.empty())
            throw UsageError("witness lnm needs --tm TMFILE");
        auto parsed = load(tmFile);
        if (!std::holds_alternative<tm::TuringMachine>(parsed))
            throw UsageError("'" + tmFile + "' is not a tm file");
        writeFile(outPath, text::renderMachine(build::buildLnmAcceptor(
                               headsArg, std::get<tm::TuringMachine>(parsed))));
        return 0;
    }
    throw UsageError("unknown witness kind '" + kind + "'");
}

int cmdParikh(const std::string& file, int maxLen, const std::string& setFile) {
    auto parsed = load(file);
    std::vector<slin::NVector> image;
    Alphabet scratch;
    const Alphabet& al = alphabetOf(parsed, scratch);
    if (std::holds_alternative<MultiHeadAutomaton>(parsed)) {
        image = slin::parikhImage(std::get<MultiHeadAutomaton>(parsed), maxLen);
    } else if (std::holds_alternative<pcfa::System>(parsed)) {
        std::set<slin::NVector> dedup;
        for (const Word& w :
             pcfa::enumerateSystem(std::get<pcfa::System>(parsed), maxLen))
            dedup.insert(slin::parikh(w, al));
        image.assign(dedup.begin(), dedup.end());
    } else {
        throw UsageError("parikh applies to mhfa and pcfa files");
    }
    if (setFile.empty()) {
        for (const auto& v : image) {
            for (std::size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? " " : "") << v[i];
            std::cout << "\n";
        }
        return 0;
    }
    auto set = text::parseSemilinearFile(slurp(setFile));
    if (!std::holds_alternative<MultiHeadAutomaton>(parsed))
        throw UsageError("semilinear comparison applies to mhfa files");
    auto cmp = slin::compareSemilinear(std::get<MultiHeadAutomaton>(parsed), set, maxLen);
    if (cmp.consistent) {
        std::cout << "consistent\n";
        return 0;
    }
    std::cout << "counterexample";
    for (long v : *cmp.counterexample)
        std::cout << ' ' << v;
    std::cout << (cmp.side == slin::SemilinearComparison::Side::MachineOnly
                      ? " (accepted word outside the set)"
                      : " (set member not realized)")
              << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-head finite automata toolkit"};
    app.require_subcommand(1);

    std::string file, fileB, wordText, property, outPath, fromKind, toKind, tmFile, setFile,
        witnessKind;
    int maxLen = 8, maxSteps = 10000, designatedHead = 0, headsArg = 2;
    bool trace = false;

    auto* run = app.add_subcommand("run", "run a machine on one input word");
    run->add_option("file", file)->required();
    run->add_option("--input", wordText, "input word")->required();
    run->add_flag("--trace", trace, "print the configuration trace (deterministic only)");
    run->add_option("--max-steps", maxSteps);

    auto* enumerateCmd = app.add_subcommand("enumerate", "list accepted words");
    enumerateCmd->add_option("file", file)->required();
    enumerateCmd->add_option("--max-len", maxLen)->required();
    enumerateCmd->add_option("--max-steps", maxSteps);

    auto* compare = app.add_subcommand("compare", "bounded language comparison");
    compare->add_option("file1", file)->required();
    compare->add_option("file2", fileB)->required();
    compare->add_option("--max-len", maxLen)->required();
    compare->add_option("--max-steps", maxSteps);

    auto* check = app.add_subcommand("check", "decide a machine property");
    check->add_option("file", file)->required();
    check->add_option("--property", property)->required();
    check->add_option("--max-len", maxLen);
    check->add_option("--max-steps", maxSteps, "step budget for data-independence");
    check->add_option("--designated-head", designatedHead);

    auto* compile = app.add_subcommand("compile", "constructive compilers");
    compile->add_option("--from", fromKind)->required();
    compile->add_option("--to", toKind)->required();
    compile->add_option("file", file)->required();
    compile->add_option("-o,--output", outPath)->required();

    auto* determinize = app.add_subcommand("determinize", "oblivious power-set construction");
    determinize->add_option("file", file)->required();
    determinize->add_option("--max-len", maxLen)->required();
    determinize->add_option("-o,--output", outPath)->required();

    auto* witness = app.add_subcommand("witness", "build hierarchy witness acceptors");
    witness->add_option("kind", witnessKind, "ln | l2 | lnm")->required();
    witness->add_option("--heads", headsArg);
    witness->add_option("--tm", tmFile);
    witness->add_option("-o,--output", outPath)->required();

    auto* parikh = app.add_subcommand("parikh", "Parikh image and semilinear comparison");
    parikh->add_option("file", file)->required();
    parikh->add_option("--max-len", maxLen)->required();
    parikh->add_option("--semilinear", setFile);

    // data-independence checks want a tighter default budget
    check->parse_complete_callback([&] {
        if (property == "data-independent" && check->count("--max-steps") == 0)
            maxSteps = 200;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(run))
            return cmdRun(file, wordText, trace, maxSteps);
        if (app.got_subcommand(enumerateCmd))
            return cmdEnumerate(file, maxLen, maxSteps);
        if (app.got_subcommand(compare))
            return cmdCompare(file, fileB, maxLen, maxSteps);
        if (app.got_subcommand(check))
            return cmdCheck(file, property, maxLen, maxSteps, designatedHead);
        if (app.got_subcommand(compile))
            return cmdCompile(fromKind, toKind, file, outPath);
        if (app.got_subcommand(determinize))
            return cmdDeterminize(file, maxLen, outPath);
        if (app.got_subcommand(witness))
            return cmdWitness(witnessKind, headsArg, tmFile, outPath);
        if (app.got_subcommand(parikh))
            return cmdParikh(file, maxLen, setFile);
    } catch (const mhfa::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const mhfa::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const mhfa::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const mhfa::ConformanceError& e) {
        std::cerr << "conformance error: " << e.what() << "\n";
        return 3;
    } catch (const mhfa::ObliviousnessViolation& e) {
        std::cerr << "obliviousness violation: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
