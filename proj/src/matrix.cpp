#include "mbfix/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "mbfix/errors.hpp"
#include "mbfix/parallel.hpp"

namespace mbfix {

namespace {

const Poset& linearly_indexed(const Poset& s, Poset& storage) {
    if (s.indexed_by_linear_extension()) return s;
    const auto order = s.linear_extension();
    storage = s.relabeled(order);
    return storage;
}

void require_dense(std::size_t dim, const char* what) {
    if (dim > kMaxDenseDim) {
        throw ResourceError(std::string(what) + ": dimension " + std::to_string(dim) +
                            " exceeds the dense limit; use the streaming totals");
    }
}

}  // namespace

CountMatrix CountMatrix::identity(std::size_t dim) {
    CountMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

bool CountMatrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (at(i, j) != 0) return false;
        }
    }
    return true;
}

CountMatrix operator*(const CountMatrix& a, const CountMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
    const std::size_t n = a.dim();
    CountMatrix c(n);
    parallel_chunks(n, [&](int, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const BigCount& aik = a.at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const BigCount& bkj = b.at(k, j);
                    if (bkj != 0) c.at(i, j) += aik * bkj;
                }
            }
        }
    });
    return c;
}

std::string CountMatrix::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j) out << ',';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

CountMatrix count_matrix(const Poset& s) {
    require_dense(s.size(), "count_matrix");
    Poset storage;
    const Poset& p = linearly_indexed(s, storage);
    CountMatrix m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i; j < p.size(); ++j) {
            if (p.leq(i, j)) m.at(i, j) = 1;
        }
    }
    return m;
}

CountMatrix mat_power(const CountMatrix& m, unsigned k) {
    if (k == 0) throw std::invalid_argument("mat_power: exponent must be at least 1");
    require_dense(m.dim(), "mat_power");
    CountMatrix result = m;
    for (unsigned step = 1; step < k; ++step) result = result * m;
    return result;
}

BigCount sum_entries(const CountMatrix& m) {
    BigCount total = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) total += m.at(i, j);
    }
    return total;
}

BigCount sum_squares(const CountMatrix& m) {
    BigCount total = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) total += m.at(i, j) * m.at(i, j);
    }
    return total;
}

CountMatrix interval_matrix_via_bitsets(const Poset& s) {
    require_dense(s.size(), "interval_matrix_via_bitsets");
    Poset storage;
    const Poset& p = linearly_indexed(s, storage);
    const std::size_t n = p.size();
    const std::size_t stride = p.stride();
    CountMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (!p.leq(i, j)) continue;
            m.at(i, j) = popcount_and(p.up_data() + i * stride, p.down_data() + j * stride, i / kWordBits,
                                      j / kWordBits + 1);
        }
    }
    return m;
}

IntervalTotals interval_totals(const Poset& s) {
    Poset storage;
    const Poset& p = linearly_indexed(s, storage);
    const std::size_t n = p.size();
    const std::size_t stride = p.stride();
    const int workers = chunk_count(n);
    std::vector<unsigned __int128> sums(static_cast<std::size_t>(workers), 0);
    std::vector<unsigned __int128> squares(static_cast<std::size_t>(workers), 0);
    // Rows near the top of a linear extension have the longest intervals,
    // so rows are dealt round-robin to keep chunks balanced.
    parallel_chunks(static_cast<std::size_t>(workers), [&](int, std::size_t wb, std::size_t we) {
        for (std::size_t w = wb; w < we; ++w) {
            unsigned __int128 sum = 0, sq = 0;
            for (std::size_t i = w; i < n; i += static_cast<std::size_t>(workers)) {
                const Word* up_i = p.up_data() + i * stride;
                const std::size_t first = i / kWordBits;
                // Entries are at most n, so a row's totals fit easily in 64 bits
                // for every n this code can hold in memory.
                std::uint64_t row_sum = 0, row_sq = 0;
                for (std::size_t jw = first; jw < stride; ++jw) {
                    Word targets = up_i[jw];
                    while (targets) {
                        const std::size_t j = jw * kWordBits + static_cast<std::size_t>(std::countr_zero(targets));
                        targets &= targets - 1;
                        const std::uint64_t c = popcount_and(up_i, p.down_data() + j * stride, first, jw + 1);
                        row_sum += c;
                        row_sq += c * c;
                    }
                }
                sum += row_sum;
                sq += row_sq;
            }
            sums[w] = sum;
            squares[w] = sq;
        }
    });
    IntervalTotals totals{0, 0};
    for (int w = 0; w < workers; ++w) {
        totals.sum += from_u128(sums[static_cast<std::size_t>(w)]);
        totals.sum_squares += from_u128(squares[static_cast<std::size_t>(w)]);
    }
    return totals;
}

BigCount comparable_pairs(const Poset& s) {
    BigCount total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) total += popcount(s.up(i));
    return total;
}

BigCount interval_sum_by_elements(const Poset& s) {
    BigCount total = 0;
    for (std::size_t k = 0; k < s.size(); ++k) total += BigCount(popcount(s.down(k))) * popcount(s.up(k));
    return total;
}

BigCount chain4_maps(const Poset& s) {
    const std::size_t n = s.size();
    std::vector<std::uint64_t> up_size(n);
    for (std::size_t c = 0; c < n; ++c) up_size[c] = popcount(s.up(c));
    BigCount total = 0;
    for (std::size_t b = 0; b < n; ++b) {
        std::uint64_t above = 0;
        const auto row = s.up(b);
        for (std::size_t w = 0; w < row.size(); ++w) {
            Word word = row[w];
            while (word) {
                above += up_size[w * kWordBits + static_cast<std::size_t>(std::countr_zero(word))];
                word &= word - 1;
            }
        }
        total += BigCount(popcount(s.down(b))) * above;
    }
    return total;
}

}  // namespace mbfix
