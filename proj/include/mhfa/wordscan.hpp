// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mhfa/alphabet.hpp"

namespace mhfa {

using WordPredicate = std::function<bool(const Word&)>;

// Words of one length are indexed 0 .. |A|^len - 1, most significant
// position first, so ascending index = lexicographic order.
Word wordAtIndex(const Alphabet& a, int len, std::uint64_t index);
std::uint64_t wordCount(const Alphabet& a, int len); // throws when > 10^9

// Every word of length <= maxLen satisfying pred, in length-lex order.
// Serial reference implementation.
std::vector<Word> scanWords(const Alphabet& a, int maxLen, const WordPredicate& pred);

// Same contract, parallelized over word indices with OpenMP. Falls back to
// the serial scan when built without OpenMP. Output is deterministic and
// byte-identical to scanWords: chunks are merged in index order.
std::vector<Word> scanWordsParallel(const Alphabet& a, int maxLen, const WordPredicate& pred);

} // namespace mhfa
