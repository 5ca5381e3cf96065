#include "mbfix/poset.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

#include "mbfix/errors.hpp"

namespace mbfix {

Poset::Poset(std::size_t size)
    : size_(size), stride_(words_for(size)), up_(size * stride_, 0), down_(size * stride_, 0) {}

void Poset::set_leq(std::size_t i, std::size_t j) {
    set_bit({up_.data() + i * stride_, stride_}, j);
    set_bit({down_.data() + j * stride_, stride_}, i);
}

void Poset::rebuild_down() {
    std::fill(down_.begin(), down_.end(), 0);
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            if (leq(i, j)) set_bit({down_.data() + j * stride_, stride_}, i);
        }
    }
}

Poset Poset::from_matrix(const std::vector<std::vector<bool>>& order, std::vector<std::string> labels) {
    const std::size_t n = order.size();
    for (const auto& row : order) {
        if (row.size() != n) throw std::invalid_argument("order matrix is not square");
    }
    return from_relation(n, [&](std::size_t i, std::size_t j) { return order[i][j]; }, std::move(labels));
}

Poset Poset::from_up_rows(std::size_t size, std::vector<Word> up_rows, std::vector<std::string> labels) {
    Poset p(size);
    if (up_rows.size() != size * p.stride_) throw std::invalid_argument("up-row buffer has wrong length");
    p.up_ = std::move(up_rows);
    p.rebuild_down();
    p.labels_ = std::move(labels);
    return p;
}

bool Poset::indexed_by_linear_extension() const {
    for (std::size_t i = 0; i < size_; ++i) {
        const auto row = up(i);
        // No bit below i may be set in row i.
        for (std::size_t w = 0; w <= i / kWordBits; ++w) {
            Word below = row[w];
            if (w == i / kWordBits) below &= (Word{1} << (i % kWordBits)) - 1;
            if (below != 0) return false;
        }
    }
    return true;
}

std::vector<std::size_t> Poset::linear_extension() const {
    std::vector<std::size_t> pending(size_);
    for (std::size_t j = 0; j < size_; ++j) pending[j] = popcount(down(j)) - (leq(j, j) ? 1 : 0);
    std::vector<std::size_t> order;
    order.reserve(size_);
    std::vector<bool> placed(size_, false);
    while (order.size() < size_) {
        std::size_t pick = size_;
        for (std::size_t j = 0; j < size_; ++j) {
            if (!placed[j] && pending[j] == 0) {
                pick = j;
                break;
            }
        }
        if (pick == size_) throw std::invalid_argument("relation has a cycle; no linear extension");
        placed[pick] = true;
        order.push_back(pick);
        for (std::size_t j = 0; j < size_; ++j) {
            if (j != pick && leq(pick, j)) --pending[j];
        }
    }
    return order;
}

Poset Poset::relabeled(std::span<const std::size_t> order) const {
    if (order.size() != size_) throw std::invalid_argument("relabel order has wrong length");
    std::vector<std::string> labels;
    if (!labels_.empty()) {
        for (std::size_t k : order) labels.push_back(labels_[k]);
    }
    return from_relation(
        size_, [&](std::size_t a, std::size_t b) { return leq(order[a], order[b]); }, std::move(labels));
}

Poset Poset::transitive_closure() const {
    Poset p = *this;
    for (std::size_t i = 0; i < size_; ++i) p.set_leq(i, i);
    // Warshall over packed rows.
    for (std::size_t k = 0; k < size_; ++k) {
        for (std::size_t i = 0; i < size_; ++i) {
            if (!p.leq(i, k)) continue;
            Word* dst = p.up_.data() + i * stride_;
            const Word* src = p.up_.data() + k * stride_;
            for (std::size_t w = 0; w < stride_; ++w) dst[w] |= src[w];
        }
    }
    p.rebuild_down();
    return p;
}

Poset chain(std::size_t k) {
    if (k == 0) throw std::invalid_argument("chain needs at least one element");
    return Poset::from_relation(k, [](std::size_t i, std::size_t j) { return i <= j; });
}

Poset antichain(std::size_t k) {
    if (k == 0) throw std::invalid_argument("antichain needs at least one element");
    return Poset::from_relation(k, [](std::size_t i, std::size_t j) { return i == j; });
}

Poset product(const Poset& s, const Poset& t) {
    const std::size_t ns = s.size();
    return Poset::from_relation(ns * t.size(), [&](std::size_t a, std::size_t b) {
        return s.leq(a % ns, b % ns) && t.leq(a / ns, b / ns);
    });
}

Poset disjoint_sum(const Poset& s, const Poset& t) {
    const std::size_t ns = s.size();
    return Poset::from_relation(ns + t.size(), [&](std::size_t a, std::size_t b) {
        if (a < ns && b < ns) return s.leq(a, b);
        if (a >= ns && b >= ns) return t.leq(a - ns, b - ns);
        return false;
    });
}

Poset boolean_cube(unsigned n) {
    if (n > 16) throw ResourceError("boolean_cube: n > 16 is too large");
    return Poset::from_relation(std::size_t{1} << n, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

namespace {

template <std::size_t W>
using Mask = std::array<Word, W>;

template <std::size_t W>
struct MaskHash {
    std::size_t operator()(const Mask<W>& m) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (Word w : m) {
            std::uint64_t z = w + h;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            h = z ^ (z >> 31);
        }
        return static_cast<std::size_t>(h);
    }
};

struct Overflow {};

inline void add_into(unsigned __int128& a, const unsigned __int128& b) {
    if (__builtin_add_overflow(a, b, &a)) throw Overflow{};
}
inline void mul_into(unsigned __int128& a, const unsigned __int128& b) {
    if (__builtin_mul_overflow(a, b, &a)) throw Overflow{};
}
inline void add_into(BigCount& a, const BigCount& b) { a += b; }
inline void mul_into(BigCount& a, const BigCount& b) { a *= b; }

// Upsets of X: pick a pivot v. Upsets avoiding v avoid down(v); upsets
// containing v contain up(v). Hence U(X) = U(X \ down v) + U(X \ up v).
// Disconnected X factors into its components.
template <std::size_t W, class Value>
class UpsetCounter {
public:
    UpsetCounter(const Poset& p, const UpsetCountOptions& opts) : n_(p.size()), opts_(opts) {
        up_.resize(n_);
        down_.resize(n_);
        link_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t w = 0; w < W; ++w) {
                up_[i][w] = w < p.stride() ? p.up(i)[w] : 0;
                down_[i][w] = w < p.stride() ? p.down(i)[w] : 0;
                link_[i][w] = up_[i][w] | down_[i][w];
            }
        }
    }

    Value run() {
        Mask<W> all{};
        for (std::size_t i = 0; i < n_; ++i) all[i / kWordBits] |= Word{1} << (i % kWordBits);
        return count(all);
    }

private:
    static std::size_t bits(const Mask<W>& m) {
        std::size_t c = 0;
        for (Word w : m) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    static bool is_empty(const Mask<W>& m) {
        for (Word w : m) {
            if (w) return false;
        }
        return true;
    }
    static std::size_t first(const Mask<W>& m) {
        for (std::size_t w = 0; w < W; ++w) {
            if (m[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(m[w]));
        }
        return W * kWordBits;
    }
    static Mask<W> and_not(const Mask<W>& a, const Mask<W>& b) {
        Mask<W> r;
        for (std::size_t w = 0; w < W; ++w) r[w] = a[w] & ~b[w];
        return r;
    }
    static std::size_t and_bits(const Mask<W>& a, const Mask<W>& b) {
        std::size_t c = 0;
        for (std::size_t w = 0; w < W; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
        return c;
    }

    Mask<W> component(const Mask<W>& x) const {
        Mask<W> comp{};
        const std::size_t start = first(x);
        comp[start / kWordBits] |= Word{1} << (start % kWordBits);
        Mask<W> frontier = comp;
        while (!is_empty(frontier)) {
            Mask<W> next{};
            for (std::size_t w = 0; w < W; ++w) {
                Word f = frontier[w];
                while (f) {
                    const std::size_t v = w * kWordBits + static_cast<std::size_t>(std::countr_zero(f));
                    f &= f - 1;
                    for (std::size_t u = 0; u < W; ++u) next[u] |= link_[v][u];
                }
            }
            for (std::size_t u = 0; u < W; ++u) {
                next[u] &= x[u] & ~comp[u];
                comp[u] |= next[u];
            }
            frontier = next;
        }
        return comp;
    }

    Value count(const Mask<W>& x) {
        const std::size_t k = bits(x);
        if (k == 0) return Value(1);
        if (k == 1) return Value(2);
        if (auto it = memo_.find(x); it != memo_.end()) return it->second;

        Value result;
        const Mask<W> comp = component(x);
        if (comp != x) {
            result = count(comp);
            mul_into(result, count(and_not(x, comp)));
        } else {
            // Pivot maximizing the smaller of the two removals.
            std::size_t best = 0, best_score = 0, best_total = 0;
            bool is_chain = true;
            for (std::size_t w = 0; w < W; ++w) {
                Word word = x[w];
                while (word) {
                    const std::size_t v = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                    word &= word - 1;
                    const std::size_t a = and_bits(up_[v], x);
                    const std::size_t b = and_bits(down_[v], x);
                    if (a + b - 1 != k) is_chain = false;
                    const std::size_t score = std::min(a, b);
                    if (score > best_score || (score == best_score && a + b > best_total)) {
                        best = v;
                        best_score = score;
                        best_total = a + b;
                    }
                }
            }
            if (is_chain) {
                result = Value(static_cast<unsigned>(k + 1));
            } else {
                result = count(and_not(x, down_[best]));
                add_into(result, count(and_not(x, up_[best])));
            }
        }
        if (memo_.size() >= opts_.max_memo_entries) {
            throw ResourceError("count_upsets: memo table exceeded " + std::to_string(opts_.max_memo_entries) +
                                " entries on a " + std::to_string(n_) + "-element poset");
        }
        memo_.emplace(x, result);
        return result;
    }

    std::size_t n_;
    UpsetCountOptions opts_;
    std::vector<Mask<W>> up_, down_, link_;
    std::unordered_map<Mask<W>, Value, MaskHash<W>> memo_;
};

template <std::size_t W>
BigCount count_with_words(const Poset& s, const UpsetCountOptions& options) {
    try {
        UpsetCounter<W, unsigned __int128> narrow(s, options);
        return from_u128(narrow.run());
    } catch (const Overflow&) {
        UpsetCounter<W, BigCount> wide(s, options);
        return wide.run();
    }
}

}  // namespace

BigCount count_upsets(const Poset& s, const UpsetCountOptions& options) {
    const std::size_t n = s.size();
    if (n == 0) return 1;
    if (n <= 64) return count_with_words<1>(s, options);
    if (n <= 128) return count_with_words<2>(s, options);
    if (n <= 192) return count_with_words<3>(s, options);
    if (n <= 256) return count_with_words<4>(s, options);
    throw ResourceError("count_upsets: " + std::to_string(n) + " elements exceeds the 256-element limit");
}

std::vector<UpsetMask> enumerate_upsets(const Poset& s, std::size_t max_count) {
    const std::size_t n = s.size();
    if (n > 64) throw ResourceError("enumerate_upsets: more than 64 elements");
    // Closure under union of principal upsets, seeded with the empty set.
    std::vector<Word> family{0};
    for (std::size_t c = 0; c < n; ++c) {
        const Word row = n == 0 ? 0 : s.up(c)[0];
        const std::size_t before = family.size();
        for (std::size_t i = 0; i < before; ++i) family.push_back(family[i] | row);
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());
        if (family.size() > max_count) throw ResourceError("enumerate_upsets: more than max_count upsets");
    }
    std::vector<UpsetMask> out;
    out.reserve(family.size());
    for (Word w : family) out.emplace_back(n, std::vector<Word>{w});
    if (n == 0) out.front() = UpsetMask(0);
    return out;
}

Poset upset_lattice(const Poset& s) {
    const auto ups = enumerate_upsets(s, 200'000);
    return Poset::from_relation(ups.size(), [&](std::size_t a, std::size_t b) {
        return is_subset(ups[a].words(), ups[b].words());
    });
}

namespace {

struct MapCounter {
    const Poset& domain;
    const Poset& target;
    std::vector<std::size_t> order;       // domain elements in linear-extension order
    std::vector<std::size_t> image;       // image[domain element]
    std::vector<Word> candidates;         // scratch, one row per depth

    BigCount go(std::size_t depth) {
        const std::size_t stride = target.stride();
        const std::size_t v = order[depth];
        Word* cand = candidates.data() + depth * stride;
        std::fill(cand, cand + stride, ~Word{0});
        if (target.size() % kWordBits) cand[stride - 1] = (Word{1} << (target.size() % kWordBits)) - 1;
        for (std::size_t p = 0; p < depth; ++p) {
            const std::size_t u = order[p];
            if (!domain.leq(u, v)) continue;
            const auto row = target.up(image[u]);
            for (std::size_t w = 0; w < stride; ++w) cand[w] &= row[w];
        }
        if (depth + 1 == order.size()) return popcount({cand, stride});
        BigCount total = 0;
        for (std::size_t w = 0; w < stride; ++w) {
            Word word = cand[w];
            while (word) {
                image[v] = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                total += go(depth + 1);
            }
        }
        return total;
    }
};

}  // namespace

BigCount count_monotone_maps(const Poset& domain, const Poset& target) {
    if (domain.empty()) return 1;
    if (target.empty()) return 0;
    if (domain.size() > 24) throw ResourceError("count_monotone_maps: domain larger than 24 elements");
    MapCounter mc{domain, target, domain.linear_extension(), std::vector<std::size_t>(domain.size()),
                  std::vector<Word>(domain.size() * target.stride())};
    return mc.go(0);
}

BigCount count_monotone_maps_into_upsets(const Poset& domain, const Poset& c) {
    return count_upsets(product(c, domain));
}

UpsetMask principal_upset(const Poset& s, std::size_t c) {
    if (c >= s.size()) throw std::out_of_range("principal_upset: element index out of range");
    const auto row = s.up(c);
    return UpsetMask(s.size(), std::vector<Word>(row.begin(), row.end()));
}

bool is_upset(const Poset& s, const UpsetMask& mask) {
    if (mask.size() != s.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask.test(i) && !is_subset(s.up(i), mask.words())) return false;
    }
    return true;
}

std::string PosetDiagnosis::describe() const {
    switch (defect) {
        case PosetDefect::none:
            return "OK";
        case PosetDefect::reflexivity:
            return "reflexivity violated at element " + std::to_string(i);
        case PosetDefect::antisymmetry:
            return "antisymmetry violated: " + std::to_string(i) + " <= " + std::to_string(j) + " and " +
                   std::to_string(j) + " <= " + std::to_string(i);
        case PosetDefect::transitivity:
            return "transitivity violated: " + std::to_string(i) + " <= " + std::to_string(j) + " <= " +
                   std::to_string(k) + " but not " + std::to_string(i) + " <= " + std::to_string(k);
    }
    return "unknown";
}

PosetDiagnosis validate(const Poset& s) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!s.leq(i, i)) return {PosetDefect::reflexivity, i, i, i};
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s.leq(i, j) && s.leq(j, i)) return {PosetDefect::antisymmetry, i, j, i};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !s.leq(i, j) || is_subset(s.up(j), s.up(i))) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (s.leq(j, k) && !s.leq(i, k)) return {PosetDefect::transitivity, i, j, k};
            }
        }
    }
    return {};
}

std::string poset_to_json(const Poset& s) {
    nlohmann::json j;
    j["size"] = s.size();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < s.size(); ++i) rows.push_back(bits_to_string(s.up(i), s.size()));
    j["order"] = std::move(rows);
    j["labels"] = s.labels();
    return j.dump();
}

Poset poset_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const std::size_t n = j.at("size").get<std::size_t>();
    const auto& rows = j.at("order");
    if (rows.size() != n) throw std::invalid_argument("poset JSON: order has wrong row count");
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = rows[i].get<std::string>();
        if (row.size() != n) throw std::invalid_argument("poset JSON: row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < n; ++k) {
            if (row[k] != '0' && row[k] != '1') throw std::invalid_argument("poset JSON: rows must be 0/1 text");
            m[i][k] = row[k] == '1';
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Poset::from_matrix(m, std::move(labels));
}

}  // namespace mbfix
