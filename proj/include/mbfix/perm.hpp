#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbfix/bigcount.hpp"
#include "mbfix/poset.hpp"

namespace mbfix {

/// Permutation of the variables {1..n}. Stored 0-based.
class Permutation {
public:
    Permutation() = default;
    /// image[i] is the 0-based image of variable i+1. Must be a bijection.
    explicit Permutation(std::vector<unsigned> image);
    static Permutation identity(unsigned n);

    unsigned degree() const { return static_cast<unsigned>(image_.size()); }
    unsigned operator()(unsigned i) const { return image_[i]; }
    const std::vector<unsigned>& image() const { return image_; }

    bool is_identity() const;
    /// Number of moved variables.
    unsigned support() const;
    /// Disjoint cycles of length >= 2, each starting at its smallest element,
    /// ordered by that element.
    std::vector<std::vector<unsigned>> cycles() const;
    /// Same permutation with fixed variables appended up to degree n.
    Permutation with_degree(unsigned n) const;
    /// Cycle notation, 1-based: "(12)(345)", "(1 10)" once any element
    /// exceeds 9, "e" for the identity.
    std::string to_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<unsigned> image_;
};

/// Parses cycle notation: "(12)(345)", "(1 10)", "(1,2)(3,4)", "e", "()".
/// Without an explicit degree the degree is the largest element mentioned.
Permutation parse_cycles(const std::string& text, std::optional<unsigned> degree = std::nullopt);

/// Hypercube point x (bit i-1 = x_i) mapped by x -> x o pi: coordinate i of
/// the result is coordinate pi(i) of x.
std::uint32_t act_on_point(const Permutation& pi, std::uint32_t x);

/// act_on_point for every point of B^n.
std::vector<std::uint32_t> point_map(const Permutation& pi);

/// Cycle type: multiset of cycle lengths including fixed points, kept in
/// descending order.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned degree() const;
    /// Multiplicity of each length.
    unsigned multiplicity(unsigned length) const;
    /// Consecutive blocks, longest first: 3+2+1 -> (123)(45).
    Permutation representative() const;
    /// "3+2+1"
    std::string to_string() const;

    bool operator==(const CycleType&) const = default;

private:
    std::vector<unsigned> parts_;
};

CycleType cycle_type(const Permutation& pi);

/// n! / prod(k^{m_k} * m_k!).
BigCount class_size(const CycleType& type);

/// All cycle types of S_n (n <= 12), largest part first, in descending
/// lexicographic order.
std::vector<CycleType> enumerate_cycle_types(unsigned n);

/// Orbits of pi acting on B^n, ordered by existence of comparable members.
struct CyclePoset {
    Poset order;
    std::vector<unsigned> lengths;
    std::vector<std::uint32_t> representatives;   // smallest point of each cycle
    std::vector<std::vector<std::uint32_t>> points;
    std::vector<std::uint32_t> cycle_of_point;

    std::size_t size() const { return lengths.size(); }
};

/// Cycles sorted by smallest point. The relation is validated as a partial
/// order; on failure it is transitively closed and a diagnostic written to
/// stderr.
CyclePoset cycle_poset(const Permutation& pi);

/// Number of orbits of pi on B^n, computed from the cycle type alone.
std::uint64_t cycle_poset_size(const CycleType& type);

/// Distinct orbit lengths of pi on B^n.
std::vector<unsigned> orbit_lengths(const CycleType& type);

}  // namespace mbfix
