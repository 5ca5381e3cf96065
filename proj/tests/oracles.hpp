#pragma once

// Brute-force reference computations. They share nothing with the library
// beyond the Poset accessors and plain data, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "mbfix/poset.hpp"

namespace oracle {

// Reflexive, transitive random order on k elements. Elements are indexed in
// a random order so the indexing is usually not a linear extension.
inline mbfix::Poset random_poset(std::size_t k, double density, std::mt19937_64& rng) {
    std::vector<std::size_t> label(k);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::bernoulli_distribution edge(density);
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) rel[i][i] = true;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            if (edge(rng)) rel[label[a]][label[b]] = true;
        }
    }
    // Warshall closure.
    for (std::size_t m = 0; m < k; ++m) {
        for (std::size_t i = 0; i < k; ++i) {
            if (!rel[i][m]) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (rel[m][j]) rel[i][j] = true;
            }
        }
    }
    return mbfix::Poset::from_relation(k, [&](std::size_t i, std::size_t j) { return rel[i][j]; });
}

// Upsets by checking every subset.
inline std::uint64_t upsets_by_subsets(const mbfix::Poset& s) {
    const std::size_t k = s.size();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        bool closed = true;
        for (std::size_t i = 0; i < k && closed; ++i) {
            if (!((mask >> i) & 1U)) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (s.leq(i, j) && !((mask >> j) & 1U)) {
                    closed = false;
                    break;
                }
            }
        }
        count += closed;
    }
    return count;
}

// Monotone maps domain -> target by trying every assignment.
inline std::uint64_t maps_by_tuples(const mbfix::Poset& domain, const mbfix::Poset& target) {
    const std::size_t d = domain.size(), t = target.size();
    std::vector<std::size_t> image(d, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < d && ok; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
                if (domain.leq(a, b) && !target.leq(image[a], image[b])) {
                    ok = false;
                    break;
                }
            }
        }
        count += ok;
        std::size_t pos = 0;
        while (pos < d && ++image[pos] == t) image[pos++] = 0;
        if (pos == d) break;
    }
    return count;
}

// Order on k-tuples where each tuple is a bit vector and comparison is
// coordinatewise; the returned relation is over 2^k points.
inline mbfix::Poset cube(unsigned k) {
    return mbfix::Poset::from_relation(std::size_t{1} << k, [](std::size_t i, std::size_t j) { return (i & ~j) == 0; });
}

inline mbfix::Poset chain(std::size_t k) {
    return mbfix::Poset::from_relation(k, [](std::size_t i, std::size_t j) { return i <= j; });
}

// Point x of B^n as coordinates, coordinate i = bit i.
inline std::vector<int> coords(std::uint32_t x, unsigned n) {
    std::vector<int> c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = (x >> i) & 1U;
    return c;
}

inline std::uint32_t point(const std::vector<int>& c) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < c.size(); ++i) x |= static_cast<std::uint32_t>(c[i]) << i;
    return x;
}

// All monotone Boolean functions of n <= 4 variables by testing every one of
// the 2^(2^n) truth tables; truth table bit x is f(x).
inline std::vector<std::uint32_t> monotone_tables(unsigned n) {
    const std::uint32_t points = 1U << n;
    std::vector<std::uint32_t> out;
    const std::uint64_t tables = std::uint64_t{1} << points;
    for (std::uint64_t f = 0; f < tables; ++f) {
        bool ok = true;
        for (std::uint32_t x = 0; x < points && ok; ++x) {
            for (std::uint32_t y = 0; y < points; ++y) {
                if ((x & ~y) == 0 && ((f >> x) & 1U) && !((f >> y) & 1U)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(static_cast<std::uint32_t>(f));
    }
    return out;
}

// f o pi evaluated pointwise: (f o pi)(x) = f(y) with y_i = x_{pi(i)}.
// image[i] is the 0-based image of coordinate i.
inline std::uint32_t compose(std::uint32_t f, const std::vector<unsigned>& image) {
    const unsigned n = static_cast<unsigned>(image.size());
    std::uint32_t out = 0;
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
        const auto c = coords(x, n);
        std::vector<int> y(n);
        for (unsigned i = 0; i < n; ++i) y[i] = c[image[i]];
        if ((f >> point(y)) & 1U) out |= 1U << x;
    }
    return out;
}

inline std::uint64_t fixes_by_tables(const std::vector<unsigned>& image) {
    std::uint64_t count = 0;
    for (std::uint32_t f : monotone_tables(static_cast<unsigned>(image.size()))) count += compose(f, image) == f;
    return count;
}

// Class sizes by walking all of S_n; key is the sorted-descending cycle type.
inline std::vector<std::pair<std::vector<unsigned>, std::uint64_t>> class_sizes_by_walk(unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0U);
    std::vector<std::pair<std::vector<unsigned>, std::uint64_t>> out;
    do {
        std::vector<bool> seen(n, false);
        std::vector<unsigned> type;
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i]) continue;
            unsigned len = 0;
            for (unsigned j = i; !seen[j]; j = p[j]) {
                seen[j] = true;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == type; });
        if (it == out.end()) {
            out.emplace_back(type, 1);
        } else {
            ++it->second;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace oracle
