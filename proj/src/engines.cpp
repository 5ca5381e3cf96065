#include "mbfix/engines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mbfix/errors.hpp"
#include "mbfix/matrix.hpp"
#include "mbfix/parallel.hpp"

namespace mbfix {

MonotoneFunction apply_perm(const Permutation& pi, const MonotoneFunction& f) {
    if (pi.degree() != f.n()) {
        throw std::invalid_argument("apply_perm: permutation degree " + std::to_string(pi.degree()) +
                                    " does not match function degree " + std::to_string(f.n()));
    }
    const auto map = point_map(pi);
    std::vector<Word> out(f.words().size(), 0);
    for (std::size_t x = 0; x < map.size(); ++x) {
        if (f.value_at(map[x])) set_bit(out, x);
    }
    return MonotoneFunction(f.n(), std::move(out));
}

WordPermuter::WordPermuter(const Permutation& pi) {
    if (pi.degree() > 6) throw std::invalid_argument("WordPermuter: degree above 6");
    const auto map = point_map(pi);
    std::vector<std::size_t> dest(map.size());
    for (std::size_t x = 0; x < map.size(); ++x) dest[map[x]] = x;
    const std::size_t bytes = (map.size() + 7) / 8;
    tables_.resize(bytes);
    for (std::size_t p = 0; p < bytes; ++p) {
        for (std::size_t v = 0; v < 256; ++v) {
            Word out = 0;
            for (std::size_t t = 0; t < 8; ++t) {
                const std::size_t src = 8 * p + t;
                if (((v >> t) & 1U) && src < map.size()) out |= Word{1} << dest[src];
            }
            tables_[p][v] = out;
        }
    }
}

Word WordPermuter::operator()(Word f) const {
    Word out = 0;
    for (std::size_t p = 0; p < tables_.size(); ++p) out |= tables_[p][(f >> (8 * p)) & 0xFF];
    return out;
}

namespace {

template <std::size_t W>
using Mask = std::array<Word, W>;

template <std::size_t W>
std::vector<Mask<W>> upset_closure(const CyclePoset& cp, std::size_t max_members) {
    std::vector<Mask<W>> family(1, Mask<W>{});
    std::vector<Mask<W>> added, merged;
    for (std::size_t c = 0; c < cp.size(); ++c) {
        Mask<W> row{};
        const auto up = cp.order.up(c);
        for (std::size_t w = 0; w < up.size(); ++w) row[w] = up[w];
        added.resize(family.size());
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t w = 0; w < W; ++w) added[i][w] = family[i][w] | row[w];
        }
        std::sort(added.begin(), added.end());
        merged.clear();
        std::set_union(family.begin(), family.end(), added.begin(), added.end(), std::back_inserter(merged));
        family.swap(merged);
        if (family.size() > max_members) {
            throw ResourceError("fix_generate: more than " + std::to_string(max_members) + " fixes");
        }
    }
    return family;
}

template <std::size_t W>
FixSet materialize(const Permutation& pi, CyclePoset cp, const std::vector<Mask<W>>& masks) {
    const unsigned n = pi.degree();
    const std::size_t stride = function_words(n);
    std::vector<Word> cycle_bits(cp.size() * stride, 0);
    for (std::size_t c = 0; c < cp.size(); ++c) {
        for (std::uint32_t x : cp.points[c]) set_bit({cycle_bits.data() + c * stride, stride}, x);
    }
    std::vector<Word> flat(masks.size() * stride, 0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
        Word* f = flat.data() + i * stride;
        for (std::size_t w = 0; w < W; ++w) {
            Word word = masks[i][w];
            while (word) {
                const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                for (std::size_t k = 0; k < stride; ++k) f[k] |= cycle_bits[c * stride + k];
            }
        }
    }
    auto row = [&](std::size_t i) { return std::span<const Word>(flat.data() + i * stride, stride); };
    std::vector<std::size_t> order(masks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return compare_words(row(a), row(b)) < 0; });

    FixSet fs;
    fs.n = n;
    fs.perm = pi;
    std::vector<Word> sorted;
    sorted.reserve(flat.size());
    const std::size_t mask_words = words_for(cp.size());
    for (std::size_t i : order) {
        const auto r = row(i);
        sorted.insert(sorted.end(), r.begin(), r.end());
        fs.upsets.emplace_back(cp.size(), std::vector<Word>(masks[i].begin(), masks[i].begin() + mask_words));
    }
    fs.functions = FunctionFamily(n, std::move(sorted));
    fs.cycles = std::move(cp);
    return fs;
}

}  // namespace

FixSet fix_generate(const Permutation& pi, const GenerateLimits& limits) {
    CyclePoset cp = cycle_poset(pi);
    const std::size_t s = cp.size();
    if (s > limits.max_cycles || s > 128) {
        throw ResourceError("fix_generate: cycle poset of " + pi.to_string() + " has " + std::to_string(s) +
                            " cycles, above the limit of " + std::to_string(std::min<std::size_t>(limits.max_cycles, 128)));
    }
    if (s <= 64) {
        const auto masks = upset_closure<1>(cp, limits.max_members);
        return materialize<1>(pi, std::move(cp), masks);
    }
    const auto masks = upset_closure<2>(cp, limits.max_members);
    return materialize<2>(pi, std::move(cp), masks);
}

BigCount fix_count_bruteforce(const Permutation& pi) {
    const unsigned n = pi.degree();
    if (n > 5) throw RefusalError("bruteforce: n = " + std::to_string(n) + " exceeds 5");
    const FunctionFamily dn = generate_dn(n);
    const WordPermuter permute(pi);
    std::uint64_t fixed = 0;
    for (Word f : dn.flat()) fixed += permute(f) == f;
    return fixed;
}

BigCount fix_count_upsets(const Permutation& pi) { return count_upsets(cycle_poset(pi).order); }

namespace {

bool lengths_coprime(const CycleType& a, const CycleType& b) {
    for (unsigned x : orbit_lengths(a)) {
        for (unsigned y : orbit_lengths(b)) {
            if (std::gcd(x, y) != 1) return false;
        }
    }
    return true;
}

}  // namespace

BigCount fix_count_coprime(const Permutation& pi, const Permutation& rho) {
    return fix_count_coprime_blocks({pi, rho});
}

BigCount fix_count_coprime_blocks(const std::vector<Permutation>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("coprime: no blocks");
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            if (!lengths_coprime(cycle_type(blocks[a]), cycle_type(blocks[b]))) {
                throw RefusalError("coprime: orbit lengths of " + blocks[a].to_string() + " and " +
                                   blocks[b].to_string() + " share a factor");
            }
        }
    }
    Poset combined = cycle_poset(blocks.front()).order;
    for (std::size_t b = 1; b < blocks.size(); ++b) combined = product(combined, cycle_poset(blocks[b]).order);
    return count_upsets(combined);
}

std::vector<Permutation> coprime_blocks(const Permutation& pi) {
    std::vector<unsigned> moved;
    const CycleType type = cycle_type(pi);
    for (unsigned p : type.parts()) {
        if (p >= 2) moved.push_back(p);
    }
    const unsigned fixed = pi.degree() - std::accumulate(moved.begin(), moved.end(), 0U);
    std::vector<std::size_t> parent(moved.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < moved.size(); ++a) {
        for (std::size_t b = a + 1; b < moved.size(); ++b) {
            if (std::gcd(moved[a], moved[b]) > 1) parent[find(a)] = find(b);
        }
    }
    std::vector<Permutation> blocks;
    std::vector<bool> done(moved.size(), false);
    for (std::size_t a = 0; a < moved.size(); ++a) {
        if (done[a]) continue;
        std::vector<unsigned> parts;
        for (std::size_t b = a; b < moved.size(); ++b) {
            if (!done[b] && find(b) == find(a)) {
                parts.push_back(moved[b]);
                done[b] = true;
            }
        }
        blocks.push_back(CycleType(parts).representative());
    }
    if (fixed > 0) blocks.push_back(Permutation::identity(fixed));
    return blocks;
}

std::string to_string(ExtendRoute route) {
    switch (route) {
        case ExtendRoute::automatic: return "automatic";
        case ExtendRoute::matrix: return "matrix";
        case ExtendRoute::upset_product: return "upset_product";
        case ExtendRoute::dual: return "dual";
    }
    return "unknown";
}

namespace {

constexpr double kInfeasible = 1e300;

// Rough size of the upset family of an s-element cycle poset.
double estimated_upsets(double s) { return std::pow(2.0, s / 2.7); }

// Work of the memoized upset recursion on an s-element poset.
double upset_count_cost(double s) {
    if (s > 256) return kInfeasible;
    return s * estimated_upsets(s);
}

double construction_cost(unsigned n) { return std::pow(3.0, n); }

double family_size(const CycleType& core, unsigned degree) {
    if (core.degree() == 0 || std::all_of(core.parts().begin(), core.parts().end(), [](unsigned p) { return p == 1; })) {
        if (degree <= 8) return static_cast<double>(known_dedekind(degree));
    }
    std::vector<unsigned> parts = core.parts();
    for (unsigned k = core.degree(); k < degree; ++k) parts.push_back(1);
    return estimated_upsets(static_cast<double>(cycle_poset_size(CycleType(parts))));
}

double generate_cost(const CycleType& type) {
    const double s = static_cast<double>(cycle_poset_size(type));
    if (s > 128) return kInfeasible;
    return construction_cost(type.degree()) + s * estimated_upsets(s);
}

// Building the order matrix of a family of size f plus one streaming pass.
double poset_cost(double f) { return f * f / 2.0; }
double interval_cost(double f) { return f * f * f / 192.0; }

struct Split {
    CycleType core;  // moved cycles only
    unsigned k = 0;  // moved variables
    unsigned m = 0;  // fixed variables
};

Split split_fixed(const Permutation& pi, unsigned n) {
    std::vector<unsigned> moved;
    const CycleType type = cycle_type(pi);
    for (unsigned p : type.parts()) {
        if (p >= 2) moved.push_back(p);
    }
    Split s;
    s.core = CycleType(moved);
    s.k = s.core.degree();
    s.m = n - s.k;
    return s;
}

bool is_identity_core(const Split& s) { return s.k == 0; }

bool is_chain(const Poset& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (!p.leq(i, j) && !p.leq(j, i)) return false;
        }
    }
    return true;
}

bool is_chain_core(const Split& s) {
    return s.k > 0 && cycle_poset_size(s.core) <= 4 && is_chain(cycle_poset(s.core.representative()).order);
}

std::optional<double> extend_route_cost(const Split& s, ExtendRoute route) {
    const unsigned n = s.k + s.m;
    if (s.m == 0) return std::nullopt;
    switch (route) {
        case ExtendRoute::matrix: {
            const unsigned base = s.m == 1 ? n - 1 : n - 2;
            if (is_identity_core(s) && base > 5) return std::nullopt;
            if (!is_identity_core(s) && base > 16) return std::nullopt;
            const double f = family_size(s.core, base);
            if (f > 40'000) return std::nullopt;
            std::vector<unsigned> parts = s.core.parts();
            for (unsigned k = s.k; k < base; ++k) parts.push_back(1);
            const double gen = is_identity_core(s) ? f * 4 : generate_cost(CycleType(parts));
            return gen + poset_cost(f) + (s.m == 1 ? f * f / 64.0 : interval_cost(f));
        }
        case ExtendRoute::upset_product: {
            const double cycles = static_cast<double>(cycle_poset_size(s.core)) * std::pow(2.0, s.m);
            return construction_cost(s.k) + upset_count_cost(cycles);
        }
        case ExtendRoute::dual: {
            if (s.m > 5) return std::nullopt;
            if (!is_chain_core(s)) return std::nullopt;
            const auto size = cycle_poset_size(s.core);
            const double d = static_cast<double>(known_dedekind(s.m));
            return construction_cost(s.k) + poset_cost(d) + (size >= 3 ? interval_cost(d) : d);
        }
        case ExtendRoute::automatic: break;
    }
    return std::nullopt;
}

ExtendRoute cheapest_route(const Split& s) {
    ExtendRoute best = ExtendRoute::upset_product;
    double best_cost = kInfeasible * 2;
    for (ExtendRoute r : {ExtendRoute::matrix, ExtendRoute::dual, ExtendRoute::upset_product}) {
        const auto c = extend_route_cost(s, r);
        if (c && *c < best_cost) {
            best = r;
            best_cost = *c;
        }
    }
    return best;
}

}  // namespace

BigCount fix_count_extend(const Permutation& pi, unsigned n, ExtendRoute route, std::vector<std::string>* trace) {
    if (pi.degree() > n) throw std::invalid_argument("extend: permutation degree exceeds target degree");
    const Split s = split_fixed(pi, n);
    if (s.m == 0) throw RefusalError("extend: " + pi.to_string() + " moves all " + std::to_string(n) + " variables");
    const Permutation core = s.core.representative();
    if (route == ExtendRoute::automatic) route = cheapest_route(s);
    auto note = [&](const std::string& line) {
        if (trace) trace->push_back(line);
    };
    const std::string core_name = core.to_string() + " on " + std::to_string(s.k) + " vars";
    note("extend[" + to_string(route) + "]: " + core_name + " extended by m=" + std::to_string(s.m) + " fixed vars");

    switch (route) {
        case ExtendRoute::matrix: {
            const unsigned base = s.m == 1 ? n - 1 : n - 2;
            FunctionFamily family;
            if (s.k == 0) {
                family = generate_dn(base);
                note("base family D_" + std::to_string(base) + " (" + std::to_string(family.size()) + " functions)");
            } else {
                family = fix_generate(core.with_degree(base)).functions;
                note("base family Fix(" + core.to_string() + ", D_" + std::to_string(base) + ") (" +
                     std::to_string(family.size()) + " fixes)");
            }
            const Poset p = as_poset(family);
            if (s.m == 1) {
                note("Sum(M(base))");
                return comparable_pairs(p);
            }
            note("SumSq(M(base)^2) via bitset intervals");
            return interval_totals(p).sum_squares;
        }
        case ExtendRoute::upset_product: {
            const CyclePoset cp = cycle_poset(core);
            note("upsets of Cycl(" + core.to_string() + ") x B^" + std::to_string(s.m) + " (" +
                 std::to_string(cp.size() << s.m) + " elements)");
            return count_upsets(product(cp.order, boolean_cube(s.m)));
        }
        case ExtendRoute::dual: {
            const CyclePoset cp = cycle_poset(core);
            if (!is_chain(cp.order) || cp.size() > 4) {
                throw RefusalError("extend dual route: Cycl(" + core.to_string() + ") is not a chain of length <= 4");
            }
            if (s.m > 5) throw RefusalError("extend dual route: D_" + std::to_string(s.m) + " poset too large");
            const Poset dm = as_poset(generate_dn(s.m));
            const std::string dname = "D_" + std::to_string(s.m);
            switch (cp.size()) {
                case 1:
                    note("|" + dname + "|");
                    return dm.size();
                case 2:
                    note("Sum(M(" + dname + "))");
                    return comparable_pairs(dm);
                case 3:
                    note("Sum(M(" + dname + ")^2) via bitset intervals");
                    return interval_totals(dm).sum;
                default:
                    note("Sum(M(" + dname + ")^3)");
                    return chain4_maps(dm);
            }
        }
        case ExtendRoute::automatic: break;
    }
    throw std::logic_error("extend: unresolved route");
}

BigCount fix_count_downup(const Permutation& base, DownUpScan scan, std::vector<DownUpStep>* trace) {
    const unsigned n = base.degree();
    if (n > 6) throw RefusalError("downup: base degree " + std::to_string(n) + " exceeds 6");
    for (const auto& c : base.cycles()) {
        if (c.size() > 2) throw RefusalError("downup: base " + base.to_string() + " has a cycle longer than 2");
    }
    const FunctionFamily dn = generate_dn(n);
    const FixSet fix = fix_generate(base);
    const std::vector<Word>& fixes = fix.functions.flat();
    const WordPermuter permute(base);

    std::vector<std::uint64_t> below, above;
    if (scan == DownUpScan::indexed) {
        const Poset p = fix.poset();
        below.resize(p.size());
        above.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            below[i] = popcount(p.down(i));
            above[i] = popcount(p.up(i));
        }
    }
    auto lookup = [&](Word g) {
        const auto it = std::lower_bound(fixes.begin(), fixes.end(), g);
        if (it == fixes.end() || *it != g) {
            throw ConsistencyError("downup: f10 & f01 or f10 | f01 is not a fix of " + base.to_string());
        }
        return static_cast<std::size_t>(it - fixes.begin());
    };
    auto count_down = [&](Word meet) -> std::uint64_t {
        if (scan == DownUpScan::indexed) return below[lookup(meet)];
        std::uint64_t c = 0;
        for (Word g : fixes) c += (g & ~meet) == 0;
        return c;
    };
    auto count_up = [&](Word join) -> std::uint64_t {
        if (scan == DownUpScan::indexed) return above[lookup(join)];
        std::uint64_t c = 0;
        for (Word g : fixes) c += (join & ~g) == 0;
        return c;
    };

    const std::vector<Word>& all = dn.flat();
    if (trace) {
        trace->clear();
        for (Word f10 : all) {
            const Word f01 = permute(f10);
            const Word meet = f10 & f01, join = f10 | f01;
            trace->push_back({f10, f01, meet, join, count_down(meet), count_up(join)});
        }
    }
    const int workers = chunk_count(all.size());
    std::vector<unsigned __int128> partial(static_cast<std::size_t>(workers), 0);
    parallel_chunks(all.size(), [&](int w, std::size_t begin, std::size_t end) {
        unsigned __int128 sum = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const Word f10 = all[i];
            const Word f01 = permute(f10);
            sum += static_cast<unsigned __int128>(count_down(f10 & f01)) * count_up(f10 | f01);
        }
        partial[static_cast<std::size_t>(w)] = sum;
    });
    BigCount total = 0;
    for (auto v : partial) total += from_u128(v);
    return total;
}

std::string to_string(Method method) {
    switch (method) {
        case Method::automatic: return "auto";
        case Method::bruteforce: return "bruteforce";
        case Method::upsets: return "upsets";
        case Method::generate: return "generate";
        case Method::coprime: return "coprime";
        case Method::extend: return "extend";
        case Method::downup: return "downup";
        case Method::dedekind: return "dedekind";
    }
    return "unknown";
}

Method parse_method(const std::string& name) {
    for (Method m : {Method::automatic, Method::bruteforce, Method::upsets, Method::generate, Method::coprime,
                     Method::extend, Method::downup, Method::dedekind}) {
        if (to_string(m) == name) return m;
    }
    throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

struct Estimate {
    std::optional<double> cost;
    std::string reason;  // why the engine does not apply
};

Estimate estimate(const Permutation& pi, Method method) {
    const unsigned n = pi.degree();
    const CycleType type = cycle_type(pi);
    const double s = n <= 16 ? static_cast<double>(cycle_poset_size(type)) : kInfeasible;
    switch (method) {
        case Method::bruteforce:
            if (n > 5) return {std::nullopt, "bruteforce needs n <= 5"};
            return {static_cast<double>(known_dedekind(n)) * 8.0 + (n ? std::pow(static_cast<double>(known_dedekind(n - 1)), 2) : 1), {}};
        case Method::upsets:
            if (n > 16) return {std::nullopt, "upsets needs n <= 16"};
            if (s > 256) return {std::nullopt, "cycle poset exceeds 256 elements"};
            return {construction_cost(n) + upset_count_cost(s), {}};
        case Method::generate:
            if (s > 128) return {std::nullopt, "cycle poset exceeds 128 elements"};
            return {generate_cost(type), {}};
        case Method::coprime: {
            const auto blocks = coprime_blocks(pi);
            if (blocks.size() < 2) return {std::nullopt, "no coprime split of the cycles"};
            double cost = 0, cycles = 1;
            for (const auto& b : blocks) {
                cost += construction_cost(b.degree());
                cycles *= static_cast<double>(cycle_poset_size(cycle_type(b)));
            }
            if (cycles > 256) return {std::nullopt, "product cycle poset exceeds 256 elements"};
            return {cost + upset_count_cost(cycles), {}};
        }
        case Method::extend: {
            const Split sp = split_fixed(pi, n);
            if (sp.m == 0) return {std::nullopt, "no fixed variable to extend over"};
            std::optional<double> best;
            for (ExtendRoute r : {ExtendRoute::matrix, ExtendRoute::dual, ExtendRoute::upset_product}) {
                const auto c = extend_route_cost(sp, r);
                if (c && (!best || *c < *best)) best = c;
            }
            if (!best) return {std::nullopt, "no extension route applies"};
            return {best, {}};
        }
        case Method::downup: {
            if (n < 2 || n - 2 > 6) return {std::nullopt, "downup needs 2 <= n <= 8"};
            if (type.parts().front() > 2 || type.parts().front() < 2) {
                return {std::nullopt, "downup needs cycles of length <= 2 and at least one transposition"};
            }
            const double d = static_cast<double>(known_dedekind(n - 2));
            std::vector<unsigned> base = type.parts();
            base.erase(base.begin());
            const CycleType bt(base);
            const double f = estimated_upsets(static_cast<double>(cycle_poset_size(bt)));
            if (f > 40'000) return {std::nullopt, "fix family of the base exceeds the order-matrix limit"};
            const double dn_gen = n - 2 > 0 ? std::pow(static_cast<double>(known_dedekind(n - 3)), 2) / 2 : 1;
            return {dn_gen + d * 40.0 + generate_cost(bt) + poset_cost(f), {}};
        }
        case Method::dedekind:
            if (!pi.is_identity()) return {std::nullopt, "dedekind applies to the identity only"};
            if (n > 7) return {std::nullopt, "d_" + std::to_string(n) + " is out of scope"};
            if (n == 7) return {poset_cost(7581) + interval_cost(7581), {}};
            return {n ? std::pow(static_cast<double>(known_dedekind(n - 1)), 2) / 2 : 1, {}};
        case Method::automatic: break;
    }
    return {std::nullopt, "not an engine"};
}

std::string format_cost(double c) {
    std::ostringstream out;
    out.precision(3);
    out << c;
    return out.str();
}

}  // namespace

std::optional<double> estimate_cost(const Permutation& pi, Method method) { return estimate(pi, method).cost; }

MethodReport fix_count(const Permutation& pi, Method method, const FixCountOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const unsigned n = pi.degree();
    const CycleType type = cycle_type(pi);
    MethodReport report;

    if (method == Method::automatic) {
        if (pi.is_identity()) {
            method = Method::dedekind;
        } else {
            std::optional<Method> chosen;
            double chosen_cost = 0;
            std::string why;
            for (Method m : {Method::upsets, Method::extend, Method::coprime, Method::downup, Method::bruteforce}) {
                const Estimate e = estimate(pi, m);
                if (!e.cost) {
                    why += "; " + to_string(m) + ": " + e.reason;
                    continue;
                }
                if (*e.cost > options.budget) {
                    why += "; " + to_string(m) + ": estimate " + format_cost(*e.cost) + " over budget";
                    continue;
                }
                if (!chosen || *e.cost < chosen_cost) {
                    chosen = m;
                    chosen_cost = *e.cost;
                }
            }
            if (!chosen) {
                throw RefusalError("no engine can count Fix(" + pi.to_string() + ", D_" + std::to_string(n) +
                                   ") within budget " + format_cost(options.budget) + why);
            }
            method = *chosen;
        }
    }

    const Estimate e = estimate(pi, method);
    if (!e.cost) throw RefusalError(to_string(method) + " does not apply to " + pi.to_string() + ": " + e.reason);
    if (*e.cost > options.budget) {
        throw RefusalError(to_string(method) + " on " + pi.to_string() + " (n=" + std::to_string(n) + "): estimate " +
                           format_cost(*e.cost) + " exceeds budget " + format_cost(options.budget));
    }
    report.method = to_string(method);
    report.estimated_cost = *e.cost;
    const Permutation rep = type.representative();
    auto& notes = report.decomposition;

    switch (method) {
        case Method::bruteforce:
            notes.push_back("bruteforce: checked all " + to_decimal(known_dedekind(n)) + " functions of D_" + std::to_string(n));
            report.count = fix_count_bruteforce(pi);
            break;
        case Method::upsets: {
            const CyclePoset cp = cycle_poset(pi);
            notes.push_back("upsets: Cycl(" + pi.to_string() + ", B^" + std::to_string(n) + ") has " +
                            std::to_string(cp.size()) + " cycles");
            report.count = count_upsets(cp.order);
            break;
        }
        case Method::generate: {
            const FixSet fs = fix_generate(pi);
            notes.push_back("generate: closure over " + std::to_string(fs.cycles.size()) + " principal upsets");
            report.count = fs.size();
            break;
        }
        case Method::coprime: {
            const auto blocks = coprime_blocks(rep);
            std::string line = "coprime: blocks";
            for (const auto& b : blocks) {
                line += " " + (b.is_identity() ? "e^" + std::to_string(b.degree()) : b.to_string()) + "[" +
                        std::to_string(cycle_poset_size(cycle_type(b))) + " cycles]";
            }
            notes.push_back(line);
            report.count = fix_count_coprime_blocks(blocks);
            break;
        }
        case Method::extend:
            report.count = fix_count_extend(rep, n, ExtendRoute::automatic, &notes);
            break;
        case Method::downup: {
            std::vector<unsigned> base = type.parts();
            base.erase(base.begin());
            const Permutation bp = CycleType(base).representative();
            notes.push_back("downup: base " + bp.to_string() + " on D_" + std::to_string(n - 2) +
                            " with transposition (" + std::to_string(n - 1) + " " + std::to_string(n) + ")");
            report.count = fix_count_downup(bp);
            break;
        }
        case Method::dedekind:
            notes.push_back(n <= 6 ? "dedekind: |D_" + std::to_string(n) + "| by generation"
                                   : "dedekind: SumSq(M(D_5)^2) via bitset intervals");
            report.count = dedekind(n);
            break;
        case Method::automatic: break;
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace mbfix
