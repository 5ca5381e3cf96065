#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbfix/bigcount.hpp"
#include "mbfix/bits.hpp"

namespace mbfix {

/// Finite partial order. Row i of the order matrix holds bit j iff i <= j
/// ("up" row); the transposed "down" rows are kept alongside because the
/// interval and pivot computations need both directions.
class Poset {
public:
    Poset() = default;

    /// Builds from up-rows given as 0/1 matrix. Does not validate; call
    /// validate() on untrusted input.
    static Poset from_matrix(const std::vector<std::vector<bool>>& order,
                             std::vector<std::string> labels = {});

    /// Builds from a predicate less_equal(i, j).
    template <class LessEqual>
    static Poset from_relation(std::size_t size, LessEqual less_equal, std::vector<std::string> labels = {}) {
        Poset p(size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                if (less_equal(i, j)) p.set_leq(i, j);
            }
        }
        p.labels_ = std::move(labels);
        return p;
    }

    /// Builds from packed up-rows (row stride words_for(size)).
    static Poset from_up_rows(std::size_t size, std::vector<Word> up_rows, std::vector<std::string> labels = {});

    std::size_t size() const { return size_; }
    std::size_t stride() const { return stride_; }
    bool empty() const { return size_ == 0; }

    bool leq(std::size_t i, std::size_t j) const { return test_bit(up(i), j); }
    std::span<const Word> up(std::size_t i) const { return {up_.data() + i * stride_, stride_}; }
    std::span<const Word> down(std::size_t i) const { return {down_.data() + i * stride_, stride_}; }
    const Word* up_data() const { return up_.data(); }
    const Word* down_data() const { return down_.data(); }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    /// True when i <= j implies i <= j as indices.
    bool indexed_by_linear_extension() const;

    /// Stable topological order (smallest available index first).
    std::vector<std::size_t> linear_extension() const;

    /// Poset whose element k is this poset's element order[k].
    Poset relabeled(std::span<const std::size_t> order) const;

    /// Reflexive-transitive closure of the stored relation.
    Poset transitive_closure() const;

    bool operator==(const Poset& other) const {
        return size_ == other.size_ && up_ == other.up_;
    }

private:
    explicit Poset(std::size_t size);
    void set_leq(std::size_t i, std::size_t j);
    void rebuild_down();

    std::size_t size_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> up_;
    std::vector<Word> down_;
    std::vector<std::string> labels_;
};

/// Subset of poset elements, one bit per element.
class UpsetMask {
public:
    UpsetMask() = default;
    explicit UpsetMask(std::size_t size) : size_(size), words_(words_for(size), 0) {}
    UpsetMask(std::size_t size, std::vector<Word> words) : size_(size), words_(std::move(words)) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return test_bit(words_, i); }
    void set(std::size_t i) { set_bit(words_, i); }
    std::size_t count() const { return popcount(words_); }
    std::span<const Word> words() const { return words_; }
    std::string to_string() const { return bits_to_string(words_, size_); }

    bool operator==(const UpsetMask&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

Poset chain(std::size_t k);
Poset antichain(std::size_t k);
/// Componentwise order; element (s, t) has index s + |S| * t.
Poset product(const Poset& s, const Poset& t);
/// Elements of S first, then T; no cross relations.
Poset disjoint_sum(const Poset& s, const Poset& t);
/// 2^n elements; index bit i-1 is coordinate x_i; order is mask inclusion.
Poset boolean_cube(unsigned n);

/// Tuning and limits for count_upsets.
struct UpsetCountOptions {
    /// Abort with ResourceError once the memo table holds this many entries.
    std::size_t max_memo_entries = 40'000'000;
};

/// Number of upward-closed subsets. Elements are limited to 256.
BigCount count_upsets(const Poset& s, const UpsetCountOptions& options = {});

/// All upsets of a small poset (<= 64 elements), ascending as integers.
std::vector<UpsetMask> enumerate_upsets(const Poset& s, std::size_t max_count = 5'000'000);

/// Poset of all upsets of S ordered by inclusion (the lattice B^S).
Poset upset_lattice(const Poset& s);

/// Number of monotone maps from `domain` into `target`. Search is over
/// the domain, so it must be small (<= 24 elements).
BigCount count_monotone_maps(const Poset& domain, const Poset& target);

/// Monotone maps from `domain` into the upset lattice B^C, counted as
/// upsets of C x domain without building B^C.
BigCount count_monotone_maps_into_upsets(const Poset& domain, const Poset& c);

UpsetMask principal_upset(const Poset& s, std::size_t c);

bool is_upset(const Poset& s, const UpsetMask& mask);

enum class PosetDefect { none, reflexivity, antisymmetry, transitivity };

struct PosetDiagnosis {
    PosetDefect defect = PosetDefect::none;
    std::size_t i = 0, j = 0, k = 0;  // witness elements
    bool ok() const { return defect == PosetDefect::none; }
    std::string describe() const;
};

PosetDiagnosis validate(const Poset& s);

/// {"size": N, "order": ["0110", ...], "labels": [...]}
std::string poset_to_json(const Poset& s);
Poset poset_from_json(const std::string& text);

}  // namespace mbfix
