#include <random>

#include "doctest.h"
#include "mbfix/errors.hpp"
#include "mbfix/matrix.hpp"
#include "mbfix/mbf.hpp"
#include "oracles.hpp"

using namespace mbfix;

TEST_CASE("order matrix of a chain") {
    const CountMatrix m = count_matrix(chain(3));
    CHECK(m.is_upper_triangular());
    CHECK(sum_entries(m) == 6);
    CHECK(m.to_csv() == "1,1,1\n0,1,1\n0,0,1\n");
}

TEST_CASE("powers of M(P_n) count chains") {
    // Sum(M(P_4)^2) = |P_4^{P_3}| = C(6,3) = 20; SumSq(M(P_4)^2) = 50.
    const CountMatrix m = count_matrix(chain(4));
    const CountMatrix m2 = mat_power(m, 2);
    CHECK(sum_entries(m2) == 20);
    CHECK(sum_squares(m2) == 50);
    CHECK(mat_power(m, 1) == m);
    CHECK_THROWS_AS(mat_power(m, 0), std::invalid_argument);
    // SumSq(M(P_5)^2) = 105.
    CHECK(sum_squares(mat_power(count_matrix(chain(5)), 2)) == 105);
}

TEST_CASE("D_1 and D_2 matrices") {
    const Poset d1 = as_poset(generate_dn(1));
    CHECK(sum_entries(mat_power(count_matrix(d1), 2)) == 10);
    const Poset d2 = as_poset(generate_dn(2));
    CHECK(sum_entries(mat_power(count_matrix(d2), 2)) == 50);
    CHECK(comparable_pairs(d2) == 20);
    // SumSq(M(D_2)^2) = |D_2^{B^2}| = d_4.
    CHECK(sum_squares(mat_power(count_matrix(d2), 2)) == 168);
}

TEST_CASE("matrix of an unsorted poset is relabeled to upper triangular") {
    const Poset s = Poset::from_matrix({{true, false, false}, {true, true, true}, {true, false, true}});
    const CountMatrix m = count_matrix(s);
    CHECK(m.is_upper_triangular());
    CHECK(sum_entries(m) == comparable_pairs(s));
}

TEST_CASE("interval identities on random posets") {
    std::mt19937_64 rng(5);
    const Poset p2 = oracle::chain(2), p3 = oracle::chain(3), p4 = oracle::chain(4), b2 = oracle::cube(2);
    for (int trial = 0; trial < 120; ++trial) {
        const Poset s = oracle::random_poset(1 + trial % 12, 0.08 * (1 + trial % 8), rng);
        const CountMatrix m = count_matrix(s);
        const CountMatrix m2 = m * m;
        const auto sum_p2 = oracle::maps_by_tuples(p2, s);
        const auto sum_p3 = oracle::maps_by_tuples(p3, s);
        const auto sq_b2 = oracle::maps_by_tuples(b2, s);
        const auto sum_p4 = oracle::maps_by_tuples(p4, s);
        CHECK(sum_entries(m) == sum_p2);
        CHECK(comparable_pairs(s) == sum_p2);
        CHECK(sum_entries(m2) == sum_p3);
        CHECK(interval_sum_by_elements(s) == sum_p3);
        CHECK(sum_squares(m2) == sq_b2);
        CHECK(sum_entries(m2 * m) == sum_p4);
        CHECK(chain4_maps(s) == sum_p4);
        CHECK(interval_matrix_via_bitsets(s) == mat_power(count_matrix(s.relabeled(s.linear_extension())), 2));
        const IntervalTotals t = interval_totals(s);
        CHECK(t.sum == sum_p3);
        CHECK(t.sum_squares == sq_b2);
        CHECK(count_upsets(s) == oracle::upsets_by_subsets(s));
    }
}

TEST_CASE("streamed totals match the dense matrix on D_4") {
    const Poset d4 = as_poset(generate_dn(4));
    const CountMatrix m2 = interval_matrix_via_bitsets(d4);
    const IntervalTotals t = interval_totals(d4);
    CHECK(t.sum == sum_entries(m2));
    CHECK(t.sum_squares == sum_squares(m2));
    // |D_4^{B^2}| = d_6.
    CHECK(t.sum_squares == 7828354);
}

TEST_CASE("dense matrices above the cap are refused") {
    CHECK_THROWS_AS(count_matrix(antichain(kMaxDenseDim + 1)), ResourceError);
    CHECK_THROWS_AS(CountMatrix(2) * CountMatrix(3), std::invalid_argument);
}
