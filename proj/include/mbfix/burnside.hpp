#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbfix/bigcount.hpp"
#include "mbfix/engines.hpp"
#include "mbfix/perm.hpp"

namespace mbfix {

struct LedgerRow {
    CycleType type;
    Permutation representative;
    BigCount mu;
    BigCount fix;
    std::string method;
};

/// Burnside count of D_n up to variable permutations.
struct BurnsideLedger {
    unsigned n = 0;
    std::vector<LedgerRow> rows;
    BigCount total;  // sum of mu * fix
    BigCount r_n;
};

/// Every cycle type of S_n through the dispatcher (n <= 7). Refuses n >= 8
/// naming the rows no engine can handle; a nonzero remainder of the total
/// modulo n! raises ConsistencyError.
BurnsideLedger class_count(unsigned n, const FixCountOptions& options = {});

std::string ledger_to_json(const BurnsideLedger& ledger);
std::string ledger_to_text(const BurnsideLedger& ledger);

/// How far a printed value is trusted.
enum class Trust {
    verified,  // agrees with the published class counts through Burnside
    misprint,  // printed value is wrong; `correction` holds the derived one
    unchecked, // no global check available (n = 8)
};

std::string to_string(Trust trust);

struct PublishedFix {
    unsigned n;
    unsigned index;  // 1-based row number in the published table
    std::string_view perm;
    std::string_view mu;
    std::string_view fix;
    Trust mu_trust;
    std::string_view mu_correction;
    Trust fix_trust;
    std::string_view fix_correction;
};

struct PublishedCounts {
    unsigned n;
    std::string_view d_n;
    std::string_view r_n;
};

/// Published per-permutation fix counts for n = 3..8.
const std::vector<PublishedFix>& published_fix_table();
/// Published d_n and r_n for n = 0..8.
const std::vector<PublishedCounts>& published_counts();
/// FNV-1a over every field of both tables.
std::uint64_t published_checksum();
/// Value the tables were embedded with.
inline constexpr std::uint64_t kPublishedChecksum = 0x83da2487355b0f0eULL;

enum class RowStatus { pass, misprint, skipped, mismatch };

std::string to_string(RowStatus status);

struct VerifyRow {
    unsigned n = 0;
    unsigned index = 0;  // 0 for the per-n class count row
    std::string perm;
    std::string field;   // "fix", "mu" or "r_n"
    std::string published;
    std::string computed;  // empty when skipped
    RowStatus status = RowStatus::skipped;
    std::string method;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    /// True when no row is a mismatch.
    bool ok() const;
};

struct VerifyOptions {
    /// Per-row work cap; rows above it are skipped with their estimate.
    double budget = kDefaultBudget;
};

/// Recomputes every published row for n in [n_min, n_max] (3 <= n_min,
/// n_max <= 8). A row whose computed value differs from the print is a
/// misprint when the computed row set reproduces the published r_n exactly,
/// and a mismatch otherwise.
VerifyReport verify_published_tables(unsigned n_min, unsigned n_max, const VerifyOptions& options = {});

std::string report_to_csv(const VerifyReport& report);
std::string report_to_json(const VerifyReport& report);

}  // namespace mbfix
