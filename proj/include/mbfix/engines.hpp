#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbfix/bigcount.hpp"
#include "mbfix/mbf.hpp"
#include "mbfix/perm.hpp"
#include "mbfix/poset.hpp"

namespace mbfix {

/// pi(f) = f o pi: bit x of the result is bit act_on_point(pi, x) of f.
MonotoneFunction apply_perm(const Permutation& pi, const MonotoneFunction& f);

/// Bit permutation of single-word functions (degree <= 6) by byte tables.
class WordPermuter {
public:
    explicit WordPermuter(const Permutation& pi);
    Word operator()(Word f) const;

private:
    std::vector<std::array<Word, 256>> tables_;
};

/// All f in D_n with pi(f) = f. `upsets[i]` is the set of cycles on which
/// `functions[i]` is 1; both lists share the family's ascending order.
struct FixSet {
    unsigned n = 0;
    Permutation perm;
    CyclePoset cycles;
    std::vector<UpsetMask> upsets;
    FunctionFamily functions;

    std::size_t size() const { return functions.size(); }
    Poset poset() const { return as_poset(functions); }
};

struct GenerateLimits {
    std::size_t max_cycles = 128;
    std::size_t max_members = 2'000'000;
};

/// Seeds with the empty upset, then for every cycle c folds in x | Up(c)
/// for each member x, removing repetitions after each step.
FixSet fix_generate(const Permutation& pi, const GenerateLimits& limits = {});

/// Checks every f in D_n (n <= 5).
BigCount fix_count_bruteforce(const Permutation& pi);

/// Upsets of the cycle poset.
BigCount fix_count_upsets(const Permutation& pi);

/// pi acts on its own k variables, rho on the next m. Every orbit length of
/// pi on B^k must be coprime to every orbit length of rho on B^m; the count
/// is then the upsets of Cycl(pi) x Cycl(rho).
BigCount fix_count_coprime(const Permutation& pi, const Permutation& rho);

/// Same for several pairwise coprime blocks.
BigCount fix_count_coprime_blocks(const std::vector<Permutation>& blocks);

/// Splits the moved cycles of pi into blocks whose orbit lengths are
/// pairwise coprime (components of the "shares a factor" graph), each
/// relabeled onto its own variables, plus an identity block for the fixed
/// variables when there are any. One block means no split exists.
std::vector<Permutation> coprime_blocks(const Permutation& pi);

enum class ExtendRoute {
    automatic,
    /// m = 1: Sum(M(Fix(pi, D_{n-1}))); m >= 2: SumSq of the interval matrix
    /// of Fix(pi, D_{n-2}).
    matrix,
    /// Upsets of Cycl(pi, B^k) x B^m.
    upset_product,
    /// D_m^{Cycl(pi, B^k)} for a chain-shaped cycle poset of length <= 4.
    dual,
};

std::string to_string(ExtendRoute route);

/// Fix(pi, D_n) for pi moving k < n variables, by the cube extension.
BigCount fix_count_extend(const Permutation& pi, unsigned n, ExtendRoute route = ExtendRoute::automatic,
                          std::vector<std::string>* trace = nullptr);

struct DownUpStep {
    Word f10, f01, meet, join;
    std::uint64_t down, up;
};

enum class DownUpScan {
    /// Down and Up are read from precomputed principal ideal/filter sizes of
    /// the fix poset (f10 & f01 and f10 | f01 are themselves fixes).
    indexed,
    /// Linear scan of the fix family for every f10.
    linear,
};

/// Fix(base o (n+1 n+2), D_{n+2}) for a base permutation of degree n <= 6
/// whose cycles all have length <= 2: sum over f10 in D_n of Down * Up.
BigCount fix_count_downup(const Permutation& base, DownUpScan scan = DownUpScan::indexed,
                          std::vector<DownUpStep>* trace = nullptr);

enum class Method { automatic, bruteforce, upsets, generate, coprime, extend, downup, dedekind };

std::string to_string(Method method);
Method parse_method(const std::string& name);

struct MethodReport {
    std::string method;
    BigCount count;
    double elapsed_ms = 0;
    double estimated_cost = 0;
    std::vector<std::string> decomposition;
};

/// Default work cap, in the abstract units of estimate_cost.
inline constexpr double kDefaultBudget = 2e11;

struct FixCountOptions {
    double budget = kDefaultBudget;
};

/// Estimated work for one engine on pi, or nullopt when the engine does not
/// apply to pi at all.
std::optional<double> estimate_cost(const Permutation& pi, Method method);

/// Runs the requested engine. `automatic` takes the cheapest applicable
/// engine within budget, ties going to upsets, extend, coprime, downup,
/// bruteforce in that order; the identity goes straight to dedekind.
MethodReport fix_count(const Permutation& pi, Method method = Method::automatic, const FixCountOptions& options = {});

}  // namespace mbfix
