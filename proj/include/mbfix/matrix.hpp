#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mbfix/bigcount.hpp"
#include "mbfix/poset.hpp"

namespace mbfix {

/// Dense square matrix of exact counts.
class CountMatrix {
public:
    CountMatrix() = default;
    explicit CountMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static CountMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    BigCount& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const BigCount& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    bool is_upper_triangular() const;

    friend CountMatrix operator*(const CountMatrix& a, const CountMatrix& b);
    bool operator==(const CountMatrix&) const = default;

    /// Rows of decimal entries separated by commas.
    std::string to_csv() const;

private:
    std::size_t dim_ = 0;
    std::vector<BigCount> entries_;
};

/// Largest dimension any dense matrix operation will materialize.
inline constexpr std::size_t kMaxDenseDim = 2048;

/// Order matrix of S. When S is not indexed by a linear extension it is
/// relabeled first so the result is upper triangular.
CountMatrix count_matrix(const Poset& s);

CountMatrix mat_power(const CountMatrix& m, unsigned k);

BigCount sum_entries(const CountMatrix& m);
BigCount sum_squares(const CountMatrix& m);

/// M(S)^2 built from packed rows: entry [i, j] = |up(i) AND down(j)|.
CountMatrix interval_matrix_via_bitsets(const Poset& s);

/// Sum and sum of squares of M(S)^2 streamed row by row without
/// materializing the matrix. Parallel over rows; exact.
struct IntervalTotals {
    BigCount sum;          // |S^{P_3}|
    BigCount sum_squares;  // |S^{B^2}|
};
IntervalTotals interval_totals(const Poset& s);

/// Sum(M(S)) = number of comparable ordered pairs = |S^{P_2}|.
BigCount comparable_pairs(const Poset& s);

/// Sum(M(S)^2) by the per-element identity sum_k |down(k)| * |up(k)|.
BigCount interval_sum_by_elements(const Poset& s);

/// Sum(M(S)^3) = |S^{P_4}| = sum over b <= c of |down(b)| * |up(c)|.
BigCount chain4_maps(const Poset& s);

}  // namespace mbfix
