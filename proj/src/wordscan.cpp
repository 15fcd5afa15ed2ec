// SPDX-License-Identifier: Apache-2.0
#include "mhfa/wordscan.hpp"

#include <stdexcept>

#include "mhfa/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mhfa {

Word wordAtIndex(const Alphabet& a, int len, std::uint64_t index) {
    Word w(len);
    std::uint64_t base = a.size();
    for (int i = len - 1; i >= 0; --i) {
        w[i] = static_cast<Symbol>(index % base);
        index /= base;
    }
    return w;
}

std::uint64_t wordCount(const Alphabet& a, int len) {
    std::uint64_t n = 1;
    for (int i = 0; i < len; ++i) {
        n *= a.size();
        if (n > 1000000000ull)
            throw UsageError("word scan space larger than 10^9");
    }
    return n;
}

std::vector<Word> scanWords(const Alphabet& a, int maxLen, const WordPredicate& pred) {
    std::vector<Word> out;
    for (int len = 0; len <= maxLen; ++len) {
        std::uint64_t count = wordCount(a, len);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Word w = wordAtIndex(a, len, idx);
            if (pred(w))
                out.push_back(std::move(w));
        }
        if (a.size() == 0)
            break;
    }
    return out;
}

std::vector<Word> scanWordsParallel(const Alphabet& a, int maxLen, const WordPredicate& pred) {
#ifndef _OPENMP
    return scanWords(a, maxLen, pred);
#else
    std::vector<Word> out;
    for (int len = 0; len <= maxLen; ++len) {
        std::uint64_t count = wordCount(a, len);
        int chunks = omp_get_max_threads() * 4;
        if (static_cast<std::uint64_t>(chunks) > count)
            chunks = static_cast<int>(count);
        if (chunks <= 1) {
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                Word w = wordAtIndex(a, len, idx);
                if (pred(w))
                    out.push_back(std::move(w));
            }
        } else {
            std::vector<std::vector<Word>> found(chunks);
            std::uint64_t per = (count + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic, 1)
            for (int c = 0; c < chunks; ++c) {
                std::uint64_t lo = per * c;
                std::uint64_t hi = lo + per < count ? lo + per : count;
                for (std::uint64_t idx = lo; idx < hi; ++idx) {
                    Word w = wordAtIndex(a, len, idx);
                    if (pred(w))
                        found[c].push_back(std::move(w));
                }
            }
            for (auto& chunk : found)
                for (auto& w : chunk)
                    out.push_back(std::move(w));
        }
        if (a.size() == 0)
            break;
    }
    return out;
#endif
}

} // namespace mhfa
