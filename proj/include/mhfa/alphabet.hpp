// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mhfa {

// Interned input symbol. Endmarkers and the PCFA lambda token live above
// the interning range so they can never collide with a declared symbol.
using Symbol = std::uint8_t;

inline constexpr Symbol kLambda = 0xFD;   // PCFA empty-step token
inline constexpr Symbol kLeftEnd = 0xFE;  // left endmarker
inline constexpr Symbol kRightEnd = 0xFF; // right endmarker
inline constexpr std::size_t kMaxAlphabetSize = 0xF0;

using Word = std::vector<Symbol>;

// Ordered symbol table. Declaration order doubles as the total symbol
// order used for length-lexicographic enumeration.
class Alphabet {
  public:
    Alphabet() = default;

    Symbol add(const std::string& name);
    std::optional<Symbol> find(const std::string& name) const;
    Symbol at(const std::string& name) const; // UsageError when absent

    std::size_t size() const { return names_.size(); }
    const std::string& name(Symbol s) const;
    const std::vector<std::string>& names() const { return names_; }
    bool contains(Symbol s) const { return s < names_.size(); }

    // Display name that also covers the reserved tokens.
    std::string displayName(Symbol s) const;

    // Conversions for alphabets whose symbol names are all single
    // characters; handy in tests and trace output.
    Word wordFromChars(const std::string& chars) const;
    std::string wordToChars(const Word& w) const;
    std::string wordToTokens(const Word& w) const; // space-joined

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

} // namespace mhfa
