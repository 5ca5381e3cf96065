#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mbfix {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline bool test_bit(std::span<const Word> words, std::size_t i) {
    return (words[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set_bit(std::span<Word> words, std::size_t i) {
    words[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline std::size_t popcount(std::span<const Word> words) {
    std::size_t total = 0;
    for (Word w : words) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

/// |a AND b| restricted to the word range [first, last).
inline std::size_t popcount_and(const Word* a, const Word* b, std::size_t first, std::size_t last) {
    std::size_t total = 0;
    for (std::size_t i = first; i < last; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

/// a is a subset of b.
inline bool is_subset(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] & ~b[i]) != 0) return false;
    }
    return true;
}

/// Compares two equal-length word vectors as unsigned integers
/// (word 0 least significant).
inline int compare_words(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

/// Renders bits 0..count-1 left to right as '0'/'1'.
inline std::string bits_to_string(std::span<const Word> words, std::size_t count) {
    std::string out(count, '0');
    for (std::size_t i = 0; i < count; ++i) {
        if (test_bit(words, i)) out[i] = '1';
    }
    return out;
}

}  // namespace mbfix
