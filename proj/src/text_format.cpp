// SPDX-License-Identifier: Apache-2.0
#include "mhfa/text_format.hpp"

#include <algorithm>
#include <sstream>

#include "mhfa/errors.hpp"

namespace mhfa::text {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& contents) {
    std::vector<Line> lines;
    std::istringstream in(contents);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<std::string> splitCommas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parseInt(const Line& line, const std::string& tok) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    }
}

Symbol symbolToken(const Line& line, const Alphabet& alphabet, const std::string& tok,
                   bool allowEnds, bool allowLambda) {
    if (tok == "<") {
        if (!allowEnds)
            throw ParseError(line.number, "endmarker '<' not allowed here");
        return kLeftEnd;
    }
    if (tok == ">") {
        if (!allowEnds)
            throw ParseError(line.number, "endmarker '>' not allowed here");
        return kRightEnd;
    }
    if (tok == "@") {
        if (!allowLambda)
            throw ParseError(line.number, "'@' not allowed here");
        return kLambda;
    }
    if (auto s = alphabet.find(tok))
        return *s;
    throw ParseError(line.number, "undeclared symbol '" + tok + "'");
}

// ---- mhfa ----

MultiHeadAutomaton parseMhfa(const std::vector<Line>& lines, const std::string& name) {
    MultiHeadAutomaton m;
    m.name = name;
    bool sawHeads = false, sawStates = false, sawInitial = false, sawAccepting = false;
    for (std::size_t li = 2; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& key = line.tokens[0];
        if (key == "direction") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "direction needs one value");
            if (line.tokens[1] == "one-way")
                m.direction = Direction::OneWay;
            else if (line.tokens[1] == "two-way")
                m.direction = Direction::TwoWay;
            else
                throw ParseError(line.number, "direction must be one-way or two-way");
        } else if (key == "heads") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "heads needs one value");
            m.heads = parseInt(line, line.tokens[1]);
            if (m.heads < 1 || m.heads > kMaxHeads)
                throw ParseError(line.number, "head count out of range");
            sawHeads = true;
        } else if (key == "alphabet") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                if (line.tokens[i] == "@" || line.tokens[i] == "<" || line.tokens[i] == ">")
                    throw ParseError(line.number,
                                     "'" + line.tokens[i] + "' is a reserved token");
                try {
                    m.alphabet.add(line.tokens[i]);
                } catch (const UsageError& e) {
                    throw ParseError(line.number, e.what());
                }
            }
        } else if (key == "flavor") {
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "flavor needs a value");
            if (line.tokens[1] == "plain") {
                m.flavor = Flavor::Plain;
            } else if (line.tokens[1] == "sensing") {
                m.flavor = Flavor::Sensing;
            } else if (line.tokens[1] == "partially-blind") {
                if (line.tokens.size() != 3)
                    throw ParseError(line.number, "partially-blind needs the designated head");
                m.flavor = Flavor::PartiallyBlind;
                m.designatedHead = parseInt(line, line.tokens[2]);
            } else {
                throw ParseError(line.number, "unknown flavor '" + line.tokens[1] + "'");
            }
        } else if (key == "states") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                try {
                    m.addState(line.tokens[i]);
                } catch (const UsageError& e) {
                    throw ParseError(line.number, e.what());
                }
            }
            sawStates = true;
        } else if (key == "initial") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "initial needs one state");
            try {
                m.initial = m.stateId(line.tokens[1]);
            } catch (const UsageError& e) {
                throw ParseError(line.number, e.what());
            }
            sawInitial = true;
        } else if (key == "accepting") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                try {
                    m.accepting[m.stateId(line.tokens[i])] = true;
                } catch (const UsageError& e) {
                    throw ParseError(line.number, e.what());
                }
            }
            sawAccepting = true;
        } else if (key == "trans") {
            // trans STATE s1,...,sk [part G] -> STATE d1,...,dk
            std::size_t arrow = 0;
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                if (line.tokens[i] == "->")
                    arrow = i;
            if (arrow == 0 || arrow + 3 != line.tokens.size())
                throw ParseError(line.number, "malformed transition line");
            if (!(arrow == 3 || arrow == 5))
                throw ParseError(line.number, "malformed transition line");
            State from, to;
            try {
                from = m.stateId(line.tokens[1]);
                to = m.stateId(line.tokens[arrow + 1]);
            } catch (const UsageError& e) {
                throw ParseError(line.number, e.what());
            }
            auto symToks = splitCommas(line.tokens[2]);
            if (static_cast<int>(symToks.size()) != m.heads)
                throw ParseError(line.number, "transition reads " +
                                                  std::to_string(symToks.size()) +
                                                  " symbols but the machine has " +
                                                  std::to_string(m.heads) + " heads");
            std::vector<Symbol> syms;
            for (const auto& t : symToks)
                syms.push_back(symbolToken(line, m.alphabet, t, true, false));
            auto moveToks = splitCommas(line.tokens[arrow + 2]);
            if (static_cast<int>(moveToks.size()) != m.heads)
                throw ParseError(line.number, "move tuple arity mismatch");
            std::vector<int> moves;
            for (const auto& t : moveToks) {
                int d = parseInt(line, t);
                if (d < -1 || d > 1)
                    throw ParseError(line.number, "moves must be -1, 0 or 1");
                moves.push_back(d);
            }
            if (arrow == 5) {
                if (line.tokens[3] != "part")
                    throw ParseError(line.number, "expected 'part' before the partition");
                // groups like 1,2|3
                std::vector<int> label(m.heads, -1);
                int block = 0;
                for (const auto& group : [&] {
                         std::vector<std::string> gs;
                         std::string cur;
                         for (char c : line.tokens[4]) {
                             if (c == '|') {
                                 gs.push_back(cur);
                                 cur.clear();
                             } else
                                 cur += c;
                         }
                         gs.push_back(cur);
                         return gs;
                     }()) {
                    for (const auto& t : splitCommas(group)) {
                        int h = parseInt(line, t);
                        if (h < 1 || h > m.heads || label[h - 1] != -1)
                            throw ParseError(line.number, "bad partition group");
                        label[h - 1] = block;
                    }
                    ++block;
                }
                Partition part(m.heads);
                for (int i = 0; i < m.heads; ++i) {
                    if (label[i] == -1)
                        throw ParseError(line.number, "partition must cover every head");
                    part[i] = static_cast<std::uint8_t>(label[i]);
                }
                // canonicalize: first-occurrence order
                std::vector<int> posLike(m.heads);
                for (int i = 0; i < m.heads; ++i)
                    posLike[i] = part[i];
                part = partitionOf(posLike);
                m.addTransition(from, syms, to, moves, &part);
            } else {
                m.addTransition(from, syms, to, moves);
            }
        } else {
            throw ParseError(line.number, "unknown declaration '" + key + "'");
        }
    }
    if (!sawHeads || !sawStates || !sawInitial || !sawAccepting)
        throw ParseError(lines.back().number,
                         "missing declaration (heads, states, initial and accepting required)");
    return m;
}

// ---- pcfa ----

pcfa::System parsePcfa(const std::vector<Line>& lines, const std::string& name) {
    pcfa::System sys;
    sys.name = name;
    int componentCount = 0;
    int currentComponent = -1; // index into sys.components
    bool sawMode = false;

    for (std::size_t li = 2; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& key = line.tokens[0];
        if (key == "mode") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "mode needs one value");
            if (line.tokens[1] == "returning")
                sys.mode = pcfa::Mode::Returning;
            else if (line.tokens[1] == "non-returning")
                sys.mode = pcfa::Mode::NonReturning;
            else
                throw ParseError(line.number, "mode must be returning or non-returning");
            sawMode = true;
        } else if (key == "centralized") {
            if (line.tokens.size() != 2 ||
                (line.tokens[1] != "true" && line.tokens[1] != "false"))
                throw ParseError(line.number, "centralized must be true or false");
            sys.centralized = line.tokens[1] == "true";
        } else if (key == "components") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "components needs one value");
            componentCount = parseInt(line, line.tokens[1]);
            if (componentCount < 1 || componentCount > kMaxHeads)
                throw ParseError(line.number, "component count out of range");
            sys.components.resize(componentCount);
            for (int i = 1; i <= componentCount; ++i)
                sys.queryStates.push_back(sys.internState("q" + std::to_string(i)));
        } else if (key == "alphabet") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const std::string& t = line.tokens[i];
                if (t == "@" || t == "<" || t == ">")
                    throw ParseError(line.number, "'" + t + "' is a reserved token");
                if (t.size() > 1 && t[0] == 'q' &&
                    std::all_of(t.begin() + 1, t.end(), ::isdigit))
                    throw ParseError(line.number, "'" + t + "' is reserved for query states");
                try {
                    sys.alphabet.add(t);
                } catch (const UsageError& e) {
                    throw ParseError(line.number, e.what());
                }
            }
        } else if (key == "component") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "component needs an index");
            int idx = parseInt(line, line.tokens[1]);
            if (idx < 1 || idx > componentCount)
                throw ParseError(line.number, "component index out of range (declare "
                                              "'components N' first)");
            currentComponent = idx - 1;
        } else if (key == "states" || key == "initial" || key == "accepting" ||
                   key == "trans") {
            if (currentComponent < 0)
                throw ParseError(line.number, "'" + key + "' must appear inside a component");
            auto& comp = sys.components[currentComponent];
            if (key == "states") {
                for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                    pcfa::StateId id = sys.internState(line.tokens[i]);
                    if (comp.isMember(id))
                        throw ParseError(line.number,
                                         "duplicate state '" + line.tokens[i] + "'");
                    comp.members.push_back(id);
                }
            } else if (key == "initial") {
                if (line.tokens.size() != 2)
                    throw ParseError(line.number, "initial needs one state");
                comp.initial = sys.internState(line.tokens[1]);
            } else if (key == "accepting") {
                for (std::size_t i = 1; i < line.tokens.size(); ++i)
                    comp.accepting.push_back(sys.internState(line.tokens[i]));
            } else { // trans STATE SYM -> STATE
                if (line.tokens.size() != 5 || line.tokens[3] != "->")
                    throw ParseError(line.number, "malformed transition line");
                pcfa::StateId from = sys.internState(line.tokens[1]);
                Symbol sym = line.tokens[2] == ">"
                                 ? kRightEnd
                                 : symbolToken(line, sys.alphabet, line.tokens[2], false, true);
                pcfa::StateId to = sys.internState(line.tokens[4]);
                comp.transitions[{from, sym}].push_back(to);
            }
        } else {
            throw ParseError(line.number, "unknown declaration '" + key + "'");
        }
    }
    if (!sawMode || componentCount == 0)
        throw ParseError(lines.back().number, "missing mode or components declaration");
    for (auto& comp : sys.components)
        for (auto& [k2, image] : comp.transitions) {
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
        }
    return sys;
}

// ---- tm ----

tm::TuringMachine parseTm(const std::vector<Line>& lines, const std::string& name) {
    tm::TuringMachine machine;
    machine.name = name;
    bool sawBlank = false, sawStates = false;
    for (std::size_t li = 2; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& key = line.tokens[0];
        auto tapeId = [&](const std::string& tok) -> Symbol {
            for (std::size_t i = 0; i < machine.tapeSymbols.size(); ++i)
                if (machine.tapeSymbols[i] == tok)
                    return static_cast<Symbol>(i);
            throw ParseError(line.number, "undeclared tape symbol '" + tok + "'");
        };
        auto stateId = [&](const std::string& tok) -> State {
            for (std::size_t i = 0; i < machine.stateNames.size(); ++i)
                if (machine.stateNames[i] == tok)
                    return static_cast<State>(i);
            throw ParseError(line.number, "undeclared state '" + tok + "'");
        };
        if (key == "tape-alphabet") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                machine.tapeSymbols.push_back(line.tokens[i]);
        } else if (key == "blank") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "blank needs one symbol");
            machine.blank = tapeId(line.tokens[1]);
            sawBlank = true;
        } else if (key == "input-alphabet") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                machine.inputSymbols.push_back(tapeId(line.tokens[i]));
        } else if (key == "states") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                for (const auto& t : machine.tapeSymbols)
                    if (t == line.tokens[i])
                        throw ParseError(line.number,
                                         "state '" + t + "' collides with a tape symbol");
                machine.stateNames.push_back(line.tokens[i]);
            }
            sawStates = true;
        } else if (key == "initial") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "initial needs one state");
            machine.initial = stateId(line.tokens[1]);
        } else if (key == "accepting") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                machine.accepting.insert(stateId(line.tokens[i]));
        } else if (key == "trans") {
            // trans STATE READ -> STATE WRITE L|N|R
            if (line.tokens.size() != 7 || line.tokens[3] != "->")
                throw ParseError(line.number, "malformed transition line");
            State from = stateId(line.tokens[1]);
            Symbol read = tapeId(line.tokens[2]);
            tm::TuringMachine::Rule rule;
            rule.next = stateId(line.tokens[4]);
            rule.write = tapeId(line.tokens[5]);
            const std::string& mv = line.tokens[6];
            if (mv == "L")
                rule.move = -1;
            else if (mv == "N")
                rule.move = 0;
            else if (mv == "R")
                rule.move = 1;
            else
                throw ParseError(line.number, "move must be L, N or R");
            if (machine.rules.count({from, read}))
                throw ParseError(line.number, "duplicate rule (the machine is deterministic)");
            machine.rules[{from, read}] = rule;
        } else {
            throw ParseError(line.number, "unknown declaration '" + key + "'");
        }
    }
    if (!sawBlank || !sawStates)
        throw ParseError(lines.back().number, "missing blank or states declaration");
    return machine;
}

} // namespace

ParsedMachine parseMachineFile(const std::string& contents) {
    auto lines = tokenize(contents);
    if (lines.size() < 2)
        throw ParseError(1, "expected 'machine NAME' and 'kind ...' header lines");
    if (lines[0].tokens.size() != 2 || lines[0].tokens[0] != "machine")
        throw ParseError(lines[0].number, "first line must be 'machine NAME'");
    if (lines[1].tokens.size() != 2 || lines[1].tokens[0] != "kind")
        throw ParseError(lines[1].number, "second line must be 'kind mhfa|pcfa|tm'");
    const std::string& name = lines[0].tokens[1];
    const std::string& kind = lines[1].tokens[1];
    if (kind == "mhfa")
        return parseMhfa(lines, name);
    if (kind == "pcfa")
        return parsePcfa(lines, name);
    if (kind == "tm")
        return parseTm(lines, name);
    throw ParseError(lines[1].number, "unknown kind '" + kind + "'");
}

namespace {

std::string symbolName(const Alphabet& alphabet, Symbol s) {
    if (s == kLeftEnd)
        return "<";
    if (s == kRightEnd)
        return ">";
    if (s == kLambda)
        return "@";
    return alphabet.name(s);
}

} // namespace

std::string renderMachine(const MultiHeadAutomaton& m) {
    std::ostringstream out;
    out << "machine " << m.name << "\n";
    out << "kind mhfa\n";
    out << "direction " << (m.direction == Direction::OneWay ? "one-way" : "two-way") << "\n";
    out << "heads " << m.heads << "\n";
    out << "alphabet";
    for (const auto& n : m.alphabet.names())
        out << ' ' << n;
    out << "\n";
    if (m.flavor == Flavor::Sensing)
        out << "flavor sensing\n";
    else if (m.flavor == Flavor::PartiallyBlind)
        out << "flavor partially-blind " << m.designatedHead << "\n";
    out << "states";
    for (const auto& n : m.stateNames)
        out << ' ' << n;
    out << "\n";
    out << "initial " << m.stateNames[m.initial] << "\n";
    out << "accepting";
    for (std::size_t i = 0; i < m.stateNames.size(); ++i)
        if (m.accepting[i])
            out << ' ' << m.stateNames[i];
    out << "\n";

    std::vector<TransitionKey> keys;
    for (const auto& [key, image] : m.transitions)
        keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const TransitionKey& a, const TransitionKey& b) {
        if (a.state != b.state)
            return a.state < b.state;
        if (a.symbols != b.symbols)
            return a.symbols < b.symbols;
        return a.partition < b.partition;
    });
    for (const auto& key : keys) {
        auto image = m.transitions.at(key);
        std::sort(image.begin(), image.end());
        auto syms = unpackSymbols(key.symbols, m.heads);
        for (const auto& t : image) {
            out << "trans " << m.stateNames[key.state] << ' ';
            for (int i = 0; i < m.heads; ++i)
                out << (i ? "," : "") << symbolName(m.alphabet, syms[i]);
            if (key.partition != 0)
                out << " part " << partitionToString(unpackPartition(key.partition, m.heads));
            out << " -> " << m.stateNames[t.next] << ' ';
            for (int i = 0; i < m.heads; ++i)
                out << (i ? "," : "") << static_cast<int>(t.moves[i]);
            out << "\n";
        }
    }
    return out.str();
}

std::string renderSystem(const pcfa::System& sys) {
    std::ostringstream out;
    out << "machine " << sys.name << "\n";
    out << "kind pcfa\n";
    out << "mode " << (sys.mode == pcfa::Mode::Returning ? "returning" : "non-returning")
        << "\n";
    out << "centralized " << (sys.centralized ? "true" : "false") << "\n";
    out << "components " << sys.degree() << "\n";
    out << "alphabet";
    for (const auto& n : sys.alphabet.names())
        out << ' ' << n;
    out << "\n";
    for (int c = 0; c < sys.degree(); ++c) {
        const auto& comp = sys.components[c];
        out << "component " << c + 1 << "\n";
        out << "states";
        for (auto s : comp.members)
            out << ' ' << sys.stateNames[s];
        out << "\n";
        out << "initial " << sys.stateNames[comp.initial] << "\n";
        out << "accepting";
        for (auto s : comp.accepting)
            out << ' ' << sys.stateNames[s];
        out << "\n";
        for (const auto& [key, image] : comp.transitions)
            for (auto to : image)
                out << "trans " << sys.stateNames[key.first] << ' '
                    << symbolName(sys.alphabet, key.second) << " -> " << sys.stateNames[to]
                    << "\n";
    }
    return out.str();
}

std::string renderTm(const tm::TuringMachine& machine) {
    std::ostringstream out;
    out << "machine " << machine.name << "\n";
    out << "kind tm\n";
    out << "tape-alphabet";
    for (const auto& n : machine.tapeSymbols)
        out << ' ' << n;
    out << "\n";
    out << "blank " << machine.tapeSymbols[machine.blank] << "\n";
    out << "input-alphabet";
    for (Symbol s : machine.inputSymbols)
        out << ' ' << machine.tapeSymbols[s];
    out << "\n";
    out << "states";
    for (const auto& n : machine.stateNames)
        out << ' ' << n;
    out << "\n";
    out << "initial " << machine.stateNames[machine.initial] << "\n";
    out << "accepting";
    for (State s : machine.accepting)
        out << ' ' << machine.stateNames[s];
    out << "\n";
    for (const auto& [key, rule] : machine.rules) {
        out << "trans " << machine.stateNames[key.first] << ' '
            << machine.tapeSymbols[key.second] << " -> " << machine.stateNames[rule.next]
            << ' ' << machine.tapeSymbols[rule.write] << ' '
            << (rule.move < 0 ? "L" : rule.move > 0 ? "R" : "N") << "\n";
    }
    return out.str();
}

std::string render(const ParsedMachine& parsed) {
    if (std::holds_alternative<MultiHeadAutomaton>(parsed))
        return renderMachine(std::get<MultiHeadAutomaton>(parsed));
    if (std::holds_alternative<pcfa::System>(parsed))
        return renderSystem(std::get<pcfa::System>(parsed));
    return renderTm(std::get<tm::TuringMachine>(parsed));
}

slin::SemilinearSet parseSemilinearFile(const std::string& contents) {
    slin::SemilinearSet set;
    auto lines = tokenize(contents);
    for (const auto& line : lines) {
        if (line.tokens[0] != "linear" || line.tokens.size() < 2 || line.tokens[1] != "base")
            throw ParseError(line.number, "expected 'linear base v1 .. vn [; periods ...]'");
        slin::NVector base;
        std::size_t i = 2;
        while (i < line.tokens.size() && line.tokens[i] != ";") {
            base.push_back(parseInt(line, line.tokens[i]));
            ++i;
        }
        std::vector<slin::NVector> periods;
        if (i < line.tokens.size()) { // ";"
            ++i;
            if (i >= line.tokens.size() || line.tokens[i] != "periods")
                throw ParseError(line.number, "expected 'periods' after ';'");
            ++i;
            slin::NVector cur;
            for (; i < line.tokens.size(); ++i) {
                if (line.tokens[i] == "|") {
                    periods.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(parseInt(line, line.tokens[i]));
                }
            }
            if (!cur.empty())
                periods.push_back(cur);
        }
        try {
            slin::LinearSet ls(base, periods);
            if (!set.parts.empty() && ls.dimension() != set.dimension())
                throw UsageError("dimension mismatch between linear sets");
            set.parts.push_back(std::move(ls));
        } catch (const UsageError& e) {
            throw ParseError(line.number, e.what());
        }
    }
    return set;
}

std::string renderSemilinear(const slin::SemilinearSet& s) {
    std::ostringstream out;
    for (const auto& part : s.parts) {
        out << "linear base";
        for (long v : part.base)
            out << ' ' << v;
        if (!part.periods.empty()) {
            out << " ; periods";
            for (std::size_t i = 0; i < part.periods.size(); ++i) {
                if (i)
                    out << " |";
                for (long v : part.periods[i])
                    out << ' ' << v;
            }
        }
        out << "\n";
    }
    return out.str();
}

Word parseWord(const Alphabet& alphabet, const std::string& text) {
    if (text.find_first_of(" \t") != std::string::npos) {
        Word w;
        std::istringstream in(text);
        std::string tok;
        while (in >> tok)
            w.push_back(alphabet.at(tok));
        return w;
    }
    return alphabet.wordFromChars(text);
}

std::string renderWord(const Alphabet& alphabet, const Word& w) {
    bool singles = true;
    for (const auto& n : alphabet.names())
        if (n.size() != 1)
            singles = false;
    if (singles)
        return alphabet.wordToChars(w);
    return alphabet.wordToTokens(w);
}

} // namespace mhfa::text
