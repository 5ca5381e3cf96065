#include "mbfix/mbf.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "mbfix/errors.hpp"
#include "mbfix/matrix.hpp"
#include "mbfix/parallel.hpp"

namespace mbfix {

namespace {

// Points whose coordinate i is 0, within one 64-point word.
constexpr std::array<Word, 6> kLowerHalf = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

constexpr std::size_t kMaxPosetFamily = 40'000;

}  // namespace

MonotoneFunction::MonotoneFunction(unsigned n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
    if (n > kMaxVariables) throw std::invalid_argument("MonotoneFunction: too many variables");
    if (words_.size() != function_words(n)) throw std::invalid_argument("MonotoneFunction: wrong word count");
    if (n < 6) {
        const Word valid = (Word{1} << (std::size_t{1} << n)) - 1;
        if (words_[0] & ~valid) throw std::invalid_argument("MonotoneFunction: bits beyond 2^n are set");
    }
}

MonotoneFunction MonotoneFunction::from_string(const std::string& bits) {
    const std::size_t len = bits.size();
    if (len == 0 || (len & (len - 1)) != 0) throw std::invalid_argument("function string length must be 2^n");
    const unsigned n = static_cast<unsigned>(std::countr_zero(len));
    if (n > kMaxVariables) throw std::invalid_argument("function string too long");
    std::vector<Word> words(function_words(n), 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (bits[i] == '1') {
            set_bit(words, i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("function string must contain only 0 and 1");
        }
    }
    return MonotoneFunction(n, std::move(words));
}

bool is_monotone(unsigned n, std::span<const Word> bits) {
    if (bits.size() != function_words(n)) throw std::invalid_argument("is_monotone: wrong word count");
    if (n <= 6) {
        const Word f = bits[0];
        for (unsigned i = 0; i < n; ++i) {
            const Word lifted = (f & kLowerHalf[i]) << (1U << i);
            if (lifted & ~f) return false;
        }
        return true;
    }
    // Coordinates 0..5 vary inside a word, the rest across words.
    for (const Word f : bits) {
        for (unsigned i = 0; i < 6; ++i) {
            if (((f & kLowerHalf[i]) << (1U << i)) & ~f) return false;
        }
    }
    for (unsigned i = 6; i < n; ++i) {
        const std::size_t step = std::size_t{1} << (i - 6);
        for (std::size_t w = 0; w < bits.size(); ++w) {
            if ((w & step) == 0 && (bits[w] & ~bits[w | step]) != 0) return false;
        }
    }
    return true;
}

bool is_monotone(const MonotoneFunction& f) { return is_monotone(f.n(), f.words()); }

bool is_monotone(const std::string& bits) { return is_monotone(MonotoneFunction::from_string(bits)); }

bool leq(const MonotoneFunction& f, const MonotoneFunction& g) {
    if (f.n() != g.n()) throw std::invalid_argument("leq: functions have different variable counts");
    return is_subset(f.words(), g.words());
}

FunctionFamily::FunctionFamily(unsigned n, std::vector<Word> flat)
    : n_(n), stride_(function_words(n)), data_(std::move(flat)) {
    if (data_.size() % stride_ != 0) throw std::invalid_argument("FunctionFamily: buffer not a multiple of stride");
    if (stride_ == 1) {
        std::sort(data_.begin(), data_.end());
        data_.erase(std::unique(data_.begin(), data_.end()), data_.end());
        return;
    }
    const std::size_t count = data_.size() / stride_;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    auto row = [&](std::size_t i) { return std::span<const Word>(data_.data() + i * stride_, stride_); };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return compare_words(row(a), row(b)) < 0; });
    std::vector<Word> sorted;
    sorted.reserve(data_.size());
    for (std::size_t k = 0; k < count; ++k) {
        const auto r = row(order[k]);
        if (k > 0 && compare_words(r, row(order[k - 1])) == 0) continue;
        sorted.insert(sorted.end(), r.begin(), r.end());
    }
    data_ = std::move(sorted);
}

MonotoneFunction FunctionFamily::function(std::size_t i) const {
    const auto r = (*this)[i];
    return MonotoneFunction(n_, std::vector<Word>(r.begin(), r.end()));
}

std::size_t FunctionFamily::find(std::span<const Word> f) const {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const int c = compare_words((*this)[mid], f);
        if (c == 0) return mid;
        if (c < 0) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return size();
}

FunctionFamily generate_dn(unsigned n) {
    if (n > 6) throw RefusalError("generate_dn: n = " + std::to_string(n) + " exceeds 6 (D_7 does not fit in memory)");
    std::vector<Word> current{0, 1};
    for (unsigned k = 1; k <= n; ++k) {
        const unsigned half = 1U << (k - 1);
        // g = g0 * g1 with g0 <= g1; for ascending g1 and ascending g0 the
        // concatenations come out ascending.
        const std::size_t m = current.size();
        const int workers = chunk_count(m);
        std::vector<std::vector<Word>> parts(static_cast<std::size_t>(workers));
        parallel_chunks(m, [&](int w, std::size_t begin, std::size_t end) {
            auto& out = parts[static_cast<std::size_t>(w)];
            for (std::size_t hi = begin; hi < end; ++hi) {
                const Word g1 = current[hi];
                for (std::size_t lo = 0; lo <= hi; ++lo) {
                    const Word g0 = current[lo];
                    if ((g0 & ~g1) == 0) out.push_back(g0 | (g1 << half));
                }
            }
        });
        std::vector<Word> next;
        for (auto& p : parts) next.insert(next.end(), p.begin(), p.end());
        current = std::move(next);
    }
    return FunctionFamily(n, std::move(current));
}

Poset as_poset(const FunctionFamily& family) {
    const std::size_t n = family.size();
    if (n > kMaxPosetFamily) {
        throw ResourceError("as_poset: family of " + std::to_string(n) + " functions exceeds the " +
                            std::to_string(kMaxPosetFamily) + "-element order-matrix limit");
    }
    const std::size_t stride = words_for(n);
    std::vector<Word> rows(n * stride, 0);
    parallel_chunks(n, [&](int, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto fi = family[i];
            Word* row = rows.data() + i * stride;
            for (std::size_t j = i; j < n; ++j) {
                if (is_subset(fi, family[j])) row[j / kWordBits] |= Word{1} << (j % kWordBits);
            }
        }
    });
    std::vector<std::string> labels;
    return Poset::from_up_rows(n, std::move(rows), std::move(labels));
}

BigCount known_dedekind(unsigned n) {
    static const char* const kValues[] = {
        "2", "3", "6", "20", "168", "7581", "7828354", "2414682040998", "56130437228687557907788",
    };
    if (n > 8) throw std::out_of_range("known_dedekind: n > 8");
    return parse_decimal(kValues[n]);
}

BigCount dedekind(unsigned n) {
    if (n <= 6) return generate_dn(n).size();
    if (n == 7) return interval_totals(as_poset(generate_dn(5))).sum_squares;
    throw RefusalError("dedekind: n = " + std::to_string(n) + " is out of scope (d_8 needs a dedicated computation)");
}

namespace {

std::size_t record_bytes(unsigned n) { return ((std::size_t{1} << n) + 7) / 8; }

}  // namespace

void save_family(const FunctionFamily& family, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write("MBF1", 4);
    const auto n = static_cast<std::uint8_t>(family.n());
    out.put(static_cast<char>(n));
    std::uint64_t count = family.size();
    for (int b = 0; b < 8; ++b) out.put(static_cast<char>((count >> (8 * b)) & 0xFF));
    const std::size_t bytes = record_bytes(family.n());
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto f = family[i];
        for (std::size_t b = 0; b < bytes; ++b) {
            out.put(static_cast<char>((f[b / 8] >> (8 * (b % 8))) & 0xFF));
        }
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

FunctionFamily load_family(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != "MBF1") throw std::invalid_argument(path.string() + ": not an MBF1 file");
    const int n = in.get();
    if (n < 0 || n > static_cast<int>(kMaxVariables)) throw std::invalid_argument(path.string() + ": bad variable count");
    std::uint64_t count = 0;
    for (int b = 0; b < 8; ++b) {
        const int byte = in.get();
        if (byte < 0) throw std::invalid_argument(path.string() + ": truncated header");
        count |= static_cast<std::uint64_t>(byte) << (8 * b);
    }
    const auto vars = static_cast<unsigned>(n);
    const std::size_t stride = function_words(vars);
    const std::size_t bytes = record_bytes(vars);
    std::vector<Word> flat(count * stride, 0);
    std::vector<char> record(bytes);
    for (std::uint64_t i = 0; i < count; ++i) {
        in.read(record.data(), static_cast<std::streamsize>(bytes));
        if (!in) throw std::invalid_argument(path.string() + ": truncated record " + std::to_string(i));
        for (std::size_t b = 0; b < bytes; ++b) {
            flat[i * stride + b / 8] |= static_cast<Word>(static_cast<unsigned char>(record[b])) << (8 * (b % 8));
        }
    }
    FunctionFamily family(vars, std::move(flat));
    if (family.size() != count) throw std::invalid_argument(path.string() + ": records are not distinct");
    return family;
}

}  // namespace mbfix
