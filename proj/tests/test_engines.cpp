#include <algorithm>
#include <set>

#include "doctest.h"
#include "mbfix/engines.hpp"
#include "mbfix/errors.hpp"
#include "mbfix/parallel.hpp"
#include "oracles.hpp"

using namespace mbfix;

namespace {

Permutation perm(const char* text, unsigned n) { return parse_cycles(text, n); }

}  // namespace

TEST_CASE("apply_perm") {
    const auto f = MonotoneFunction::from_string("0011");
    CHECK(apply_perm(perm("(12)", 2), f).to_string() == "0101");
    CHECK(apply_perm(Permutation::identity(2), f) == f);
    const Permutation inv = perm("(12)(34)", 4);
    for (std::size_t i = 0; i < 168; i += 7) {
        const auto g = generate_dn(4).function(i);
        CHECK(apply_perm(inv, apply_perm(inv, g)) == g);
        CHECK(is_monotone(apply_perm(inv, g)));
    }
    CHECK_THROWS_AS(apply_perm(perm("(12)", 3), f), std::invalid_argument);
}

TEST_CASE("WordPermuter matches apply_perm") {
    const Permutation pi = perm("(132)(45)", 6);
    const WordPermuter w(pi);
    const FunctionFamily d = generate_dn(5);
    for (std::size_t i = 0; i < d.size(); i += 13) {
        const MonotoneFunction f(6, {d[i][0] | (d[i][0] << 32)});
        CHECK(w(f.words()[0]) == apply_perm(pi, f).words()[0]);
    }
}

TEST_CASE("bruteforce engine") {
    CHECK(fix_count_bruteforce(Permutation::identity(3)) == 20);
    CHECK(fix_count_bruteforce(perm("(12)", 2)) == 4);
    CHECK(fix_count_bruteforce(perm("(12)(345)", 5)) == 35);
    CHECK_THROWS_AS(fix_count_bruteforce(Permutation::identity(6)), RefusalError);
}

TEST_CASE("bruteforce agrees with the truth table oracle") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& type : enumerate_cycle_types(n)) {
            const Permutation pi = type.representative();
            CHECK(fix_count_bruteforce(pi) == oracle::fixes_by_tables(pi.image()));
        }
    }
}

TEST_CASE("upset engine") {
    CHECK(fix_count_upsets(perm("(1234567)", 7)) == 101);
    CHECK(fix_count_upsets(perm("(12345678)", 8)) == 2364);
    CHECK(fix_count_upsets(perm("(123)", 3)) == 5);
}

TEST_CASE("generation of Fix((12), D_3) reproduces the ten rows") {
    const FixSet fs = fix_generate(perm("(12)", 3));
    REQUIRE(fs.size() == 10);
    std::set<std::string> got;
    for (const auto& u : fs.upsets) got.insert(u.to_string());
    // The six principal upsets (row a1 reads 000111) and the four added rows.
    const std::set<std::string> expected = {"111111", "011011", "001001", "000111", "000011",
                                            "000001", "000000", "011111", "001111", "001011"};
    CHECK(got == expected);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const MonotoneFunction f = fs.functions.function(i);
        // Function i is 1 exactly on the points of the cycles in upsets[i].
        for (std::uint32_t x = 0; x < 8; ++x) CHECK(f.value_at(x) == fs.upsets[i].test(fs.cycles.cycle_of_point[x]));
    }
}

TEST_CASE("generation examples") {
    CHECK(fix_generate(Permutation::identity(2)).size() == 6);
    CHECK(fix_generate(perm("(12)(34)(56)", 6)).size() == 8600);
    CHECK(fix_generate(perm("(12)", 2)).functions.function(1).to_string() == "0001");
    GenerateLimits tight;
    tight.max_members = 100;
    CHECK_THROWS_AS(fix_generate(Permutation::identity(4), tight), ResourceError);
    tight = {};
    tight.max_cycles = 10;
    CHECK_THROWS_AS(fix_generate(Permutation::identity(4), tight), ResourceError);
}

TEST_CASE("generated fix sets are closed lattices of fixes") {
    for (unsigned n = 1; n <= 6; ++n) {
        for (const auto& type : enumerate_cycle_types(n)) {
            if (n == 6 && type.parts()[0] == 1) continue;  // D_6 itself is too big to close pairwise
            const Permutation pi = type.representative();
            const FixSet fs = fix_generate(pi);
            const auto& fam = fs.functions;
            CHECK(fam.size() == fs.upsets.size());
            const std::size_t stride = fam.stride();
            std::vector<Word> zero(stride, 0), one(stride, 0);
            for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) set_bit(one, x);
            CHECK(fam.find(zero) == 0);
            CHECK(fam.find(one) == fam.size() - 1);
            for (std::size_t i = 0; i < fam.size(); ++i) {
                const MonotoneFunction f = fam.function(i);
                CHECK(is_monotone(f));
                CHECK(apply_perm(pi, f) == f);
            }
            if (fam.size() > 600) continue;
            std::vector<Word> both(stride), either(stride);
            for (std::size_t i = 0; i < fam.size(); ++i) {
                for (std::size_t j = i + 1; j < fam.size(); ++j) {
                    for (std::size_t k = 0; k < stride; ++k) {
                        both[k] = fam[i][k] & fam[j][k];
                        either[k] = fam[i][k] | fam[j][k];
                    }
                    REQUIRE(fam.find(both) < fam.size());
                    REQUIRE(fam.find(either) < fam.size());
                }
            }
        }
    }
}

TEST_CASE("coprime engine") {
    CHECK(fix_count_coprime(perm("(123)", 3), perm("(12)", 2)) == 35);
    CHECK(fix_count_coprime(perm("(12)", 2), perm("(12345)", 5)) == 264);
    CHECK(fix_count_coprime(perm("(12345)", 5), perm("(123)", 3)) == 870);
    CHECK(fix_count_coprime(perm("(123)", 3), perm("(12345)", 5)) == 870);
    CHECK_THROWS_AS(fix_count_coprime(perm("(12)", 2), perm("(1234)", 4)), RefusalError);
    const auto blocks = coprime_blocks(perm("(12)(345)(67)", 8));
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].to_string() == "(123)");
    CHECK(blocks[1].to_string() == "(12)(34)");
    CHECK(blocks[2].is_identity());
    CHECK(coprime_blocks(perm("(1234)(56)", 6)).size() == 1);
}

TEST_CASE("cube extension routes") {
    CHECK(fix_count_extend(perm("(12)", 2), 3) == 10);
    CHECK(fix_count_extend(perm("(123)", 3), 5) == 105);
    CHECK(fix_count_extend(perm("(12345)", 5), 7) == 1548);
    CHECK(fix_count_extend(perm("(12)", 2), 7) == parse_decimal("2208001624"));
    // Fix((12), D_4) as |P_4^{B^2}| and as |D_2^{P_3}|.
    CHECK(fix_count_extend(perm("(12)", 2), 4, ExtendRoute::matrix) == 50);
    CHECK(fix_count_extend(perm("(12)", 2), 4, ExtendRoute::dual) == 50);
    CHECK(fix_count_extend(perm("(12)", 2), 4, ExtendRoute::upset_product) == 50);
    for (unsigned n = 3; n <= 6; ++n) {
        for (const char* p : {"(12)", "(123)", "(12)(34)", "(1234)", "(12)(345)"}) {
            const Permutation pi = parse_cycles(p);
            if (pi.degree() >= n) continue;
            const BigCount want = fix_count_upsets(pi.with_degree(n));
            CHECK(fix_count_extend(pi, n, ExtendRoute::matrix) == want);
            CHECK(fix_count_extend(pi, n, ExtendRoute::upset_product) == want);
        }
    }
    // Cycl((12), B^2) and Cycl((123), B^3) are chains of 3 and 4 cycles.
    CHECK(fix_count_extend(perm("(12)", 2), 5, ExtendRoute::dual) == 887);
    CHECK(fix_count_extend(perm("(123)", 3), 5, ExtendRoute::dual) == 105);
    CHECK(fix_count_extend(perm("(123)", 3), 7, ExtendRoute::dual) == 2068224);
    CHECK_THROWS_AS(fix_count_extend(perm("(1234)", 4), 5, ExtendRoute::dual), RefusalError);
    CHECK_THROWS_AS(fix_count_extend(perm("(12)(34)", 4), 5, ExtendRoute::dual), RefusalError);
    CHECK_THROWS_AS(fix_count_extend(perm("(12)", 2), 2), RefusalError);
    std::vector<std::string> trace;
    fix_count_extend(perm("(12)", 2), 7, ExtendRoute::automatic, &trace);
    CHECK(trace.size() >= 2);
}

TEST_CASE("Down-Up trace for (12)(34) on D_4") {
    std::vector<DownUpStep> steps;
    CHECK(fix_count_downup(perm("(12)", 2), DownUpScan::indexed, &steps) == 28);
    REQUIRE(steps.size() == 6);
    struct Row {
        const char *f10, *f01, *meet, *join;
        std::uint64_t down, up;
    };
    const Row rows[] = {
        {"0000", "0000", "0000", "0000", 1, 4}, {"0001", "0001", "0001", "0001", 2, 3},
        {"0011", "0101", "0001", "0111", 2, 2}, {"0101", "0011", "0001", "0111", 2, 2},
        {"0111", "0111", "0111", "0111", 3, 2}, {"1111", "1111", "1111", "1111", 4, 1},
    };
    auto str = [](Word w) { return MonotoneFunction(2, {w}).to_string(); };
    std::uint64_t sum = 0;
    for (const Row& r : rows) {
        const auto it = std::find_if(steps.begin(), steps.end(), [&](const DownUpStep& s) { return str(s.f10) == r.f10; });
        REQUIRE(it != steps.end());
        CHECK(str(it->f01) == r.f01);
        CHECK(str(it->meet) == r.meet);
        CHECK(str(it->join) == r.join);
        CHECK(it->down == r.down);
        CHECK(it->up == r.up);
        sum += it->down * it->up;
    }
    CHECK(sum == 28);
    std::vector<DownUpStep> linear;
    CHECK(fix_count_downup(perm("(12)", 2), DownUpScan::linear, &linear) == 28);
    CHECK(linear.size() == steps.size());
}

TEST_CASE("Down-Up examples and cross-checks") {
    CHECK(fix_count_downup(Permutation::identity(2)) == 50);
    CHECK(fix_count_upsets(perm("(12)(34)", 4)) == 28);
    const std::pair<const char*, unsigned> bases[] = {{"e", 1}, {"e", 3}, {"(12)", 3}, {"(12)", 4},
                                                      {"(12)(34)", 4}, {"(12)(34)", 5}};
    for (const auto& [base, n] : bases) {
        const Permutation b = perm(base, n);
        std::vector<unsigned> image = b.image();
        image.push_back(n + 1);
        image.push_back(n);
        const BigCount want = fix_count_upsets(Permutation(image));
        CHECK(fix_count_downup(b, DownUpScan::indexed) == want);
        CHECK(fix_count_downup(b, DownUpScan::linear) == want);
    }
    CHECK_THROWS_AS(fix_count_downup(perm("(123)", 3)), RefusalError);
    CHECK_THROWS_AS(fix_count_downup(Permutation::identity(7)), RefusalError);
}

TEST_CASE("dispatcher routes") {
    const MethodReport a = fix_count(perm("(12)(345)", 5));
    CHECK(a.count == 35);
    CHECK(a.method == "coprime");
    const MethodReport b = fix_count(perm("(123)(456)", 7));
    CHECK(b.count == 69264);
    CHECK(b.method == "extend");
    CHECK(std::any_of(b.decomposition.begin(), b.decomposition.end(),
                      [](const std::string& s) { return s.find("562") != std::string::npos; }));
    const MethodReport c = fix_count(Permutation::identity(7));
    CHECK(c.count == parse_decimal("2414682040998"));
    CHECK(c.method == "dedekind");
    CHECK(fix_count(perm("(12)", 2), Method::bruteforce).count == 4);
    CHECK(fix_count(perm("(12)", 4), Method::generate).count == 50);
}

TEST_CASE("dispatcher refusals name the bottleneck") {
    CHECK_THROWS_AS(fix_count(Permutation::identity(8)), RefusalError);
    CHECK_THROWS_AS(fix_count(perm("(12)", 6), Method::bruteforce), RefusalError);
    CHECK_THROWS_AS(fix_count(perm("(123)", 4), Method::downup), RefusalError);
    try {
        fix_count(perm("(12)", 8));
        FAIL("expected a refusal");
    } catch (const RefusalError& e) {
        const std::string what = e.what();
        CHECK(what.find("budget") != std::string::npos);
        CHECK(what.find("extend") != std::string::npos);
    }
    FixCountOptions tiny;
    tiny.budget = 1;
    CHECK_THROWS_AS(fix_count(perm("(12)(34)", 6), Method::automatic, tiny), RefusalError);
    CHECK_FALSE(estimate_cost(perm("(12)", 3), Method::dedekind).has_value());
    CHECK(estimate_cost(perm("(12)", 3), Method::upsets).has_value());
}

TEST_CASE("method names round trip") {
    for (Method m : {Method::automatic, Method::bruteforce, Method::upsets, Method::generate, Method::coprime,
                     Method::extend, Method::downup, Method::dedekind}) {
        CHECK(parse_method(to_string(m)) == m);
    }
    CHECK_THROWS_AS(parse_method("fastest"), std::invalid_argument);
}

TEST_CASE("all engines agree for n <= 5") {
    for (unsigned n = 1; n <= 5; ++n) {
        for (const auto& type : enumerate_cycle_types(n)) {
            const Permutation pi = type.representative();
            const BigCount want = fix_count_bruteforce(pi);
            CHECK(fix_count_upsets(pi) == want);
            CHECK(fix_generate(pi).size() == want);
            CHECK(fix_count(pi).count == want);
            for (Method m : {Method::upsets, Method::generate, Method::coprime, Method::extend, Method::downup}) {
                if (!estimate_cost(pi, m)) continue;
                CHECK(fix_count(pi, m).count == want);
            }
        }
    }
}

TEST_CASE("results do not depend on the thread count") {
    const int saved = thread_count();
    std::vector<std::string> reference;
    for (int threads : {1, 3, 4}) {
        set_thread_count(threads);
        std::vector<std::string> got;
        for (const char* p : {"(12)", "(12)(34)", "(123)(45)"}) {
            got.push_back(to_decimal(fix_count(parse_cycles(p, 6)).count));
        }
        got.push_back(to_decimal(fix_count_downup(perm("(12)(34)", 5))));
        got.push_back(to_decimal(dedekind(6)));
        got.push_back(std::to_string(fix_generate(perm("(12)(34)(56)", 6)).functions.flat().back()));
        if (reference.empty()) {
            reference = got;
        } else {
            CHECK(got == reference);
        }
    }
    set_thread_count(saved);
}
