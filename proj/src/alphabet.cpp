// SPDX-License-Identifier: Apache-2.0
#include "mhfa/alphabet.hpp"

#include "mhfa/errors.hpp"

namespace mhfa {

Symbol Alphabet::add(const std::string& name) {
    if (name.empty())
        throw UsageError("empty symbol name");
    if (name == "<" || name == ">")
        throw UsageError("'" + name + "' is a reserved endmarker token");
    if (index_.count(name))
        throw UsageError("duplicate symbol '" + name + "'");
    if (names_.size() >= kMaxAlphabetSize)
        throw UsageError("alphabet larger than " + std::to_string(kMaxAlphabetSize) + " symbols");
    Symbol id = static_cast<Symbol>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
}

std::optional<Symbol> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Symbol Alphabet::at(const std::string& name) const {
    auto s = find(name);
    if (!s)
        throw UsageError("symbol '" + name + "' is not in the alphabet");
    return *s;
}

const std::string& Alphabet::name(Symbol s) const {
    if (!contains(s))
        throw UsageError("symbol id out of range");
    return names_[s];
}

std::string Alphabet::displayName(Symbol s) const {
    if (s == kLeftEnd)
        return "<";
    if (s == kRightEnd)
        return ">";
    if (s == kLambda)
        return "@";
    return name(s);
}

Word Alphabet::wordFromChars(const std::string& chars) const {
    Word w;
    w.reserve(chars.size());
    for (char c : chars)
        w.push_back(at(std::string(1, c)));
    return w;
}

std::string Alphabet::wordToChars(const Word& w) const {
    std::string out;
    for (Symbol s : w) {
        const std::string& n = name(s);
        if (n.size() != 1)
            throw UsageError("alphabet has multi-character symbol names; cannot render as chars");
        out += n;
    }
    return out;
}

std::string Alphabet::wordToTokens(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ' ';
        out += name(w[i]);
    }
    return out;
}

} // namespace mhfa
