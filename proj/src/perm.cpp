#include "mbfix/perm.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mbfix/errors.hpp"

namespace mbfix {

Permutation::Permutation(std::vector<unsigned> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (unsigned v : image_) {
        if (v >= image_.size() || seen[v]) throw std::invalid_argument("permutation image is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(unsigned n) {
    std::vector<unsigned> image(n);
    std::iota(image.begin(), image.end(), 0U);
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const { return support() == 0; }

unsigned Permutation::support() const {
    unsigned moved = 0;
    for (unsigned i = 0; i < degree(); ++i) moved += image_[i] != i;
    return moved;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(degree(), false);
    for (unsigned i = 0; i < degree(); ++i) {
        if (seen[i] || image_[i] == i) continue;
        std::vector<unsigned> cycle;
        for (unsigned j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            cycle.push_back(j);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Permutation Permutation::with_degree(unsigned n) const {
    if (n < degree()) throw std::invalid_argument("with_degree: cannot shrink a permutation");
    std::vector<unsigned> image = image_;
    for (unsigned i = degree(); i < n; ++i) image.push_back(i);
    return Permutation(std::move(image));
}

std::string Permutation::to_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "e";
    const bool wide = degree() > 9;
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (wide && k) out += ' ';
            out += std::to_string(c[k] + 1);
        }
        out += ')';
    }
    return out;
}

Permutation parse_cycles(const std::string& text, std::optional<unsigned> degree) {
    std::vector<std::vector<unsigned>> cycles;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    const bool identity_word = pos < text.size() && (text[pos] == 'e' || text[pos] == 'E');
    if (identity_word) {
        ++pos;
        skip_space();
        if (pos != text.size()) throw std::invalid_argument("malformed permutation '" + text + "'");
    }
    while (!identity_word && pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("malformed permutation '" + text + "': expected '('");
        const std::size_t close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("malformed permutation '" + text + "': missing ')'");
        const std::string body = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        skip_space();
        // Separators make multi-digit elements possible; without them each
        // digit is one element, as in "(12)(345)".
        const bool separated = body.find_first_of(" ,\t") != std::string::npos;
        std::vector<unsigned> cycle;
        std::string token;
        auto flush = [&] {
            if (token.empty()) return;
            const unsigned long v = std::stoul(token);
            if (v == 0) throw std::invalid_argument("permutation elements are 1-based; got 0 in '" + text + "'");
            cycle.push_back(static_cast<unsigned>(v - 1));
            token.clear();
        };
        for (char ch : body) {
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                token += ch;
                if (!separated) flush();
            } else if (ch == ' ' || ch == ',' || ch == '\t') {
                flush();
            } else {
                throw std::invalid_argument("malformed permutation '" + text + "': unexpected '" + ch + "'");
            }
        }
        flush();
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }

    unsigned top = 0;
    for (const auto& c : cycles) {
        for (unsigned v : c) top = std::max(top, v + 1);
    }
    const unsigned n = degree.value_or(top);
    if (top > n) {
        throw std::invalid_argument("permutation '" + text + "' mentions " + std::to_string(top) +
                                    " but degree is " + std::to_string(n));
    }
    std::vector<unsigned> image(n);
    std::iota(image.begin(), image.end(), 0U);
    std::vector<bool> used(n, false);
    for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (used[c[k]]) {
                throw std::invalid_argument("permutation '" + text + "' repeats element " + std::to_string(c[k] + 1));
            }
            used[c[k]] = true;
            image[c[k]] = c[(k + 1) % c.size()];
        }
    }
    return Permutation(std::move(image));
}

std::uint32_t act_on_point(const Permutation& pi, std::uint32_t x) {
    const unsigned n = pi.degree();
    if (n < 32 && (x >> n) != 0) throw std::out_of_range("act_on_point: point outside B^n");
    std::uint32_t y = 0;
    for (unsigned i = 0; i < n; ++i) y |= ((x >> pi(i)) & 1U) << i;
    return y;
}

std::vector<std::uint32_t> point_map(const Permutation& pi) {
    const unsigned n = pi.degree();
    if (n > 24) throw ResourceError("point_map: degree too large");
    std::vector<std::uint32_t> map(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < map.size(); ++x) map[x] = act_on_point(pi, x);
    return map;
}

CycleType::CycleType(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_) {
        if (p == 0) throw std::invalid_argument("cycle type parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned CycleType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

unsigned CycleType::multiplicity(unsigned length) const {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), length));
}

Permutation CycleType::representative() const {
    std::vector<unsigned> image;
    unsigned start = 0;
    for (unsigned len : parts_) {
        for (unsigned k = 0; k < len; ++k) image.push_back(start + (k + 1) % len);
        start += len;
    }
    return Permutation(std::move(image));
}

std::string CycleType::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += '+';
        out += std::to_string(parts_[k]);
    }
    return out.empty() ? "0" : out;
}

CycleType cycle_type(const Permutation& pi) {
    std::vector<unsigned> parts;
    std::vector<bool> seen(pi.degree(), false);
    for (unsigned i = 0; i < pi.degree(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (unsigned j = i; !seen[j]; j = pi(j)) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return CycleType(std::move(parts));
}

BigCount class_size(const CycleType& type) {
    BigCount denominator = 1;
    std::map<unsigned, unsigned> mult;
    for (unsigned p : type.parts()) ++mult[p];
    for (const auto& [len, m] : mult) {
        for (unsigned k = 0; k < m; ++k) denominator *= len;
        denominator *= factorial(m);
    }
    return factorial(type.degree()) / denominator;
}

namespace {

void partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
                std::vector<CycleType>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<CycleType> enumerate_cycle_types(unsigned n) {
    if (n > 12) throw RefusalError("enumerate_cycle_types: n > 12");
    std::vector<CycleType> out;
    std::vector<unsigned> current;
    partitions(n, n, current, out);
    return out;
}

CyclePoset cycle_poset(const Permutation& pi) {
    const unsigned n = pi.degree();
    if (n > 16) throw ResourceError("cycle_poset: degree above 16");
    const auto map = point_map(pi);
    const std::uint32_t points = static_cast<std::uint32_t>(map.size());

    CyclePoset cp;
    cp.cycle_of_point.assign(points, UINT32_MAX);
    for (std::uint32_t x = 0; x < points; ++x) {
        if (cp.cycle_of_point[x] != UINT32_MAX) continue;
        const auto id = static_cast<std::uint32_t>(cp.lengths.size());
        std::vector<std::uint32_t> orbit;
        for (std::uint32_t y = x; cp.cycle_of_point[y] == UINT32_MAX; y = map[y]) {
            cp.cycle_of_point[y] = id;
            orbit.push_back(y);
        }
        cp.lengths.push_back(static_cast<unsigned>(orbit.size()));
        cp.representatives.push_back(x);
        cp.points.push_back(std::move(orbit));
    }

    // C_i <= C_j iff some y in C_j contains rep(C_i): pi preserves inclusion,
    // so comparing the representative alone is enough.
    const std::size_t size = cp.lengths.size();
    const std::size_t stride = words_for(size);
    std::vector<Word> rows(size * stride, 0);
    const std::uint32_t full = points - 1;
    for (std::size_t i = 0; i < size; ++i) {
        const std::uint32_t rep = cp.representatives[i];
        const std::uint32_t free = full & ~rep;
        Word* row = rows.data() + i * stride;
        std::uint32_t sub = free;
        while (true) {
            const std::uint32_t c = cp.cycle_of_point[rep | sub];
            row[c / kWordBits] |= Word{1} << (c % kWordBits);
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }
    std::vector<std::string> labels;
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        std::string rep(n, '0');
        for (unsigned b = 0; b < n; ++b) {
            if ((cp.representatives[i] >> b) & 1U) rep[b] = '1';
        }
        labels.push_back(rep + "/" + std::to_string(cp.lengths[i]));
    }
    cp.order = Poset::from_up_rows(size, std::move(rows), std::move(labels));

    const auto diagnosis = validate(cp.order);
    if (!diagnosis.ok()) {
        std::cerr << "warning: cycle relation of " << pi.to_string() << " is not a partial order ("
                  << diagnosis.describe() << "); closing transitively\n";
        cp.order = cp.order.transitive_closure();
        const auto again = validate(cp.order);
        if (!again.ok()) throw ConsistencyError("cycle relation of " + pi.to_string() + ": " + again.describe());
    }
    return cp;
}

std::uint64_t cycle_poset_size(const CycleType& type) {
    // Burnside over the cyclic group generated by pi: pi^k has
    // sum_L gcd(k, L) cycles on the variables, so it fixes 2^that points.
    std::uint64_t order = 1;
    for (unsigned p : type.parts()) order = std::lcm(order, static_cast<std::uint64_t>(p));
    BigCount total = 0;
    for (std::uint64_t k = 0; k < order; ++k) {
        unsigned cycles = 0;
        for (unsigned p : type.parts()) cycles += static_cast<unsigned>(std::gcd(k, static_cast<std::uint64_t>(p)));
        total += BigCount(1) << cycles;
    }
    return static_cast<std::uint64_t>(total / order);
}

std::vector<unsigned> orbit_lengths(const CycleType& type) {
    // An orbit length is the lcm of one divisor chosen per variable cycle.
    std::set<unsigned> lengths{1};
    for (unsigned p : type.parts()) {
        std::set<unsigned> next;
        for (unsigned have : lengths) {
            for (unsigned d = 1; d <= p; ++d) {
                if (p % d == 0) next.insert(std::lcm(have, d));
            }
        }
        lengths = std::move(next);
    }
    return {lengths.begin(), lengths.end()};
}

}  // namespace mbfix
