#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mbfix/bigcount.hpp"
#include "mbfix/bits.hpp"
#include "mbfix/poset.hpp"

namespace mbfix {

/// Words needed for one function of n variables (2^n bits, at least one word).
constexpr std::size_t function_words(unsigned n) { return n <= 6 ? 1 : (std::size_t{1} << n) / kWordBits; }

/// Largest variable count a function may have.
inline constexpr unsigned kMaxVariables = 16;

/// Boolean function of n variables packed as 2^n bits. Bit at index
/// sum x_i * 2^(i-1) holds f(x_1, ..., x_n), so the text form
/// g(00) g(10) g(01) g(11) reads bits 0..3 left to right.
class MonotoneFunction {
public:
    MonotoneFunction() = default;
    MonotoneFunction(unsigned n, std::vector<Word> words);
    /// Parses a 0/1 string of length 2^n.
    static MonotoneFunction from_string(const std::string& bits);

    unsigned n() const { return n_; }
    std::size_t points() const { return std::size_t{1} << n_; }
    bool value_at(std::size_t point) const { return test_bit(words_, point); }
    std::span<const Word> words() const { return words_; }
    std::string to_string() const { return bits_to_string(words_, points()); }

    bool operator==(const MonotoneFunction&) const = default;

private:
    unsigned n_ = 0;
    std::vector<Word> words_;
};

bool is_monotone(unsigned n, std::span<const Word> bits);
bool is_monotone(const MonotoneFunction& f);
/// Text form; the length must be a power of two.
bool is_monotone(const std::string& bits);

/// f <= g pointwise.
bool leq(const MonotoneFunction& f, const MonotoneFunction& g);

/// Sorted, duplicate-free set of functions of n variables stored as one flat
/// word array (stride function_words(n)).
class FunctionFamily {
public:
    FunctionFamily() = default;
    explicit FunctionFamily(unsigned n) : n_(n), stride_(function_words(n)) {}
    /// Takes ownership of a flat buffer; sorts and deduplicates it.
    FunctionFamily(unsigned n, std::vector<Word> flat);

    unsigned n() const { return n_; }
    std::size_t stride() const { return stride_; }
    std::size_t size() const { return stride_ ? data_.size() / stride_ : 0; }
    std::span<const Word> operator[](std::size_t i) const { return {data_.data() + i * stride_, stride_}; }
    MonotoneFunction function(std::size_t i) const;
    const std::vector<Word>& flat() const { return data_; }

    /// Index of an exact member, or size() when absent.
    std::size_t find(std::span<const Word> f) const;

    bool operator==(const FunctionFamily&) const = default;

private:
    unsigned n_ = 0;
    std::size_t stride_ = 1;
    std::vector<Word> data_;
};

/// All of D_n (n <= 6) in ascending order.
FunctionFamily generate_dn(unsigned n);

/// Poset of a family ordered pointwise; element order is the family order,
/// which is a linear extension.
Poset as_poset(const FunctionFamily& family);

/// d_n for n <= 7. n <= 6 by generation, n = 7 from the interval matrix of D_5.
BigCount dedekind(unsigned n);

/// Published d_0..d_8.
BigCount known_dedekind(unsigned n);

/// Binary family file: "MBF1", u8 n, u64 count, then count records of
/// ceil(2^n / 8) bytes each, little-endian.
void save_family(const FunctionFamily& family, const std::filesystem::path& path);
FunctionFamily load_family(const std::filesystem::path& path);

}  // namespace mbfix
