#include "mbfix/burnside.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "mbfix/errors.hpp"

namespace mbfix {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

nlohmann::json cycle_type_json(const CycleType& type) {
    auto arr = nlohmann::json::array();
    for (unsigned p : type.parts()) arr.push_back(p);
    return arr;
}

}  // namespace

BurnsideLedger class_count(unsigned n, const FixCountOptions& options) {
    auto types = enumerate_cycle_types(n);
    std::reverse(types.begin(), types.end());  // identity first
    if (n >= 8) {
        std::vector<std::string> blocked;
        for (const auto& type : types) {
            const Permutation rep = type.representative();
            bool feasible = false;
            for (Method m : {Method::upsets, Method::extend, Method::coprime, Method::downup, Method::bruteforce,
                             Method::dedekind}) {
                const auto cost = estimate_cost(rep, m);
                if (cost && *cost <= options.budget) feasible = true;
            }
            if (!feasible) blocked.push_back(rep.to_string());
        }
        throw RefusalError("r_" + std::to_string(n) + " is out of scope: no engine can count the rows " +
                           join(blocked, ", ") + " on D_" + std::to_string(n));
    }
    BurnsideLedger ledger;
    ledger.n = n;
    BigCount mu_sum = 0;
    for (const auto& type : types) {
        LedgerRow row;
        row.type = type;
        row.representative = type.representative();
        row.mu = class_size(type);
        MethodReport report;
        try {
            report = fix_count(row.representative, Method::automatic, options);
        } catch (const RefusalError& e) {
            throw RefusalError("r_" + std::to_string(n) + ": row " + row.representative.to_string() + " refused: " + e.what());
        }
        row.fix = report.count;
        row.method = report.method;
        ledger.total += row.mu * row.fix;
        mu_sum += row.mu;
        ledger.rows.push_back(std::move(row));
    }
    const BigCount order = factorial(n);
    if (mu_sum != order) {
        throw ConsistencyError("class sizes of S_" + std::to_string(n) + " sum to " + to_decimal(mu_sum) + ", not " +
                               to_decimal(order));
    }
    if (ledger.total % order != 0) {
        throw ConsistencyError("Burnside total " + to_decimal(ledger.total) + " is not divisible by " +
                               std::to_string(n) + "! = " + to_decimal(order) + " (remainder " +
                               to_decimal(ledger.total % order) + "); some fix count is wrong");
    }
    ledger.r_n = ledger.total / order;
    return ledger;
}

std::string ledger_to_json(const BurnsideLedger& ledger) {
    nlohmann::json j;
    j["n"] = ledger.n;
    j["total"] = to_decimal(ledger.total);
    j["r_n"] = to_decimal(ledger.r_n);
    auto rows = nlohmann::json::array();
    for (const auto& row : ledger.rows) {
        rows.push_back({{"perm", row.representative.to_string()},
                        {"cycle_type", cycle_type_json(row.type)},
                        {"mu", to_decimal(row.mu)},
                        {"count", to_decimal(row.fix)},
                        {"method", row.method}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2);
}

std::string ledger_to_text(const BurnsideLedger& ledger) {
    std::ostringstream out;
    out << "n = " << ledger.n << "\n";
    out << "perm\tcycle_type\tmu\tfix\tmethod\n";
    for (const auto& row : ledger.rows) {
        out << row.representative.to_string() << '\t' << row.type.to_string() << '\t' << to_decimal(row.mu) << '\t'
            << to_decimal(row.fix) << '\t' << row.method << '\n';
    }
    out << "total = " << to_decimal(ledger.total) << "\n";
    out << "r_" << ledger.n << " = " << to_decimal(ledger.r_n) << "\n";
    return out.str();
}

std::string to_string(Trust trust) {
    switch (trust) {
        case Trust::verified: return "verified";
        case Trust::misprint: return "misprint";
        case Trust::unchecked: return "unchecked";
    }
    return "unknown";
}

namespace {

constexpr Trust V = Trust::verified;
constexpr Trust M = Trust::misprint;
constexpr Trust U = Trust::unchecked;

}  // namespace

const std::vector<PublishedFix>& published_fix_table() {
    static const std::vector<PublishedFix> table = {
        {3, 1, "e", "1", "20", V, "", V, ""},
        {3, 2, "(12)", "3", "10", V, "", V, ""},
        {3, 3, "(123)", "2", "5", V, "", V, ""},

        {4, 1, "e", "1", "168", V, "", V, ""},
        {4, 2, "(12)", "6", "50", V, "", V, ""},
        {4, 3, "(123)", "8", "15", V, "", V, ""},
        {4, 4, "(1234)", "6", "8", V, "", V, ""},
        {4, 5, "(12)(34)", "3", "28", V, "", V, ""},

        {5, 1, "e", "1", "7581", V, "", V, ""},
        {5, 2, "(12)", "10", "887", V, "", V, ""},
        {5, 3, "(123)", "20", "105", V, "", V, ""},
        {5, 4, "(1234)", "30", "35", V, "", V, ""},
        {5, 5, "(12)(34)", "15", "309", V, "", V, ""},
        {5, 6, "(12345)", "24", "11", V, "", V, ""},
        {5, 7, "(12)(345)", "20", "35", V, "", V, ""},

        {6, 1, "e", "1", "7828354", V, "", V, ""},
        {6, 2, "(12)", "15", "160948", V, "", V, ""},
        {6, 3, "(123)", "40", "3490", V, "", V, ""},
        {6, 4, "(1234)", "90", "494", V, "", V, ""},
        {6, 5, "(12)(34)", "45", "24302", V, "", V, ""},
        {6, 6, "(12345)", "144", "64", V, "", V, ""},
        {6, 7, "(123456)", "120", "44", V, "", V, ""},
        {6, 8, "(12)(345)", "120", "490", V, "", V, ""},
        {6, 9, "(123)(456)", "40", "562", V, "", V, ""},
        {6, 10, "(12)(3456)", "90", "324", V, "", V, ""},
        {6, 11, "(12)(34)(56)", "15", "860", V, "", M, "8600"},

        {7, 1, "e", "1", "2414682040998", V, "", V, ""},
        {7, 2, "(12)", "15", "2208001624", M, "21", V, ""},
        {7, 3, "(123)", "40", "2068224", M, "70", V, ""},
        {7, 4, "(1234)", "90", "60312", M, "210", V, ""},
        {7, 5, "(12345)", "144", "1548", M, "504", V, ""},
        {7, 6, "(123456)", "120", "766", M, "840", V, ""},
        {7, 7, "(1234567)", "120", "101", M, "720", V, ""},
        {7, 8, "(12)(34)", "45", "67922470", M, "105", V, ""},
        {7, 9, "(12)(345)", "45", "59542", M, "420", V, ""},
        {7, 10, "(12)(3456)", "120", "26878", M, "630", V, ""},
        {7, 11, "(12)(34567)", "120", "264", M, "504", V, ""},
        {7, 12, "(123)(456)", "120", "69264", M, "280", V, ""},
        {7, 13, "(123)(4567)", "120", "294", M, "420", V, ""},
        {7, 14, "(12)(34)(56)", "15", "12015832860", M, "105", M, "12015832"},
        {7, 15, "(12)(34)(567)", "15", "10192", M, "210", V, ""},

        {8, 1, "e", "1", "56130437228687557907788", V, "", U, ""},
        {8, 2, "(12)", "28", "101627867809333596", V, "", U, ""},
        {8, 3, "(123)", "112", "262808891710", V, "", U, ""},
        {8, 4, "(1234)", "420", "424234996", V, "", U, ""},
        {8, 5, "(12345)", "1344", "531708", V, "", U, ""},
        {8, 6, "(123456)", "3366", "144320", M, "3360", U, ""},
        {8, 7, "(1234567)", "5760", "3858", V, "", U, ""},
        {8, 8, "(12345678)", "5040", "2364", V, "", U, ""},
        {8, 9, "(12)(34)", "210", "182755441509724", V, "", U, ""},
        {8, 10, "(12)(345)", "1120", "401622018", V, "", U, ""},
        {8, 11, "(12)(3456)", "2520", "93994196", V, "", U, ""},
        {8, 12, "(12)(34567)", "4032", "21216", V, "", U, ""},
        {8, 13, "(12)(345678)", "3360", "70096", V, "", U, ""},
        {8, 14, "(123)(456)", "1120", "535426780", V, "", U, ""},
        {8, 15, "(123)(4567)", "3360", "25168", V, "", U, ""},
        {8, 16, "(123)(45678)", "2688", "870", V, "", U, ""},
        {8, 17, "(1234)(5678)", "1260", "3211276", V, "", U, ""},
        {8, 18, "(12)(34)(56)", "420", "7377670895900", V, "", U, ""},
        {8, 19, "(12)(34)(567)", "1680", "16380370", V, "", U, ""},
        {8, 20, "(12)(34)(5678)", "1260", "37834164", V, "", U, ""},
        {8, 21, "(12)(345)(678)", "1120", "3607596", V, "", U, ""},
        {8, 22, "(12)(34)(56)(78)", "105", "2038188253420", V, "", U, ""},
    };
    return table;
}

const std::vector<PublishedCounts>& published_counts() {
    static const std::vector<PublishedCounts> table = {
        {0, "2", "2"},
        {1, "3", "3"},
        {2, "6", "5"},
        {3, "20", "10"},
        {4, "168", "30"},
        {5, "7581", "210"},
        {6, "7828354", "16353"},
        {7, "2414682040998", "490013148"},
        {8, "56130437228687557907788", "1392195548889993358"},
    };
    return table;
}

std::uint64_t published_checksum() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        h ^= 0xFF;
        h *= 0x100000001b3ULL;
    };
    for (const auto& r : published_fix_table()) {
        feed(std::to_string(r.n));
        feed(std::to_string(r.index));
        feed(r.perm);
        feed(r.mu);
        feed(r.fix);
        feed(to_string(r.mu_trust));
        feed(r.mu_correction);
        feed(to_string(r.fix_trust));
        feed(r.fix_correction);
    }
    for (const auto& r : published_counts()) {
        feed(std::to_string(r.n));
        feed(r.d_n);
        feed(r.r_n);
    }
    return h;
}

std::string to_string(RowStatus status) {
    switch (status) {
        case RowStatus::pass: return "PASS";
        case RowStatus::misprint: return "MISPRINT";
        case RowStatus::skipped: return "SKIPPED";
        case RowStatus::mismatch: return "MISMATCH";
    }
    return "UNKNOWN";
}

bool VerifyReport::ok() const {
    for (const auto& row : rows) {
        if (row.status == RowStatus::mismatch) return false;
    }
    return true;
}

VerifyReport verify_published_tables(unsigned n_min, unsigned n_max, const VerifyOptions& options) {
    if (n_min < 3 || n_max > 8 || n_min > n_max) {
        throw std::invalid_argument("verify_published_tables: range must satisfy 3 <= n_min <= n_max <= 8");
    }
    VerifyReport report;
    for (unsigned n = n_min; n <= n_max; ++n) {
        std::vector<const PublishedFix*> printed;
        for (const auto& r : published_fix_table()) {
            if (r.n == n) printed.push_back(&r);
        }
        struct Computed {
            std::optional<BigCount> fix;
            BigCount mu;
            std::string method, note;
        };
        std::vector<Computed> computed(printed.size());
        std::map<std::vector<unsigned>, bool> seen;
        for (std::size_t k = 0; k < printed.size(); ++k) {
            const Permutation pi = parse_cycles(std::string(printed[k]->perm), n);
            seen[cycle_type(pi).parts()] = true;
            computed[k].mu = class_size(cycle_type(pi));
            try {
                const MethodReport mr = fix_count(pi, Method::automatic, FixCountOptions{options.budget});
                computed[k].fix = mr.count;
                computed[k].method = mr.method;
            } catch (const RefusalError& e) {
                computed[k].note = e.what();
            }
        }

        // Burnside check on the computed rows, independent of the printed values.
        std::optional<BigCount> r_computed;
        std::string r_note;
        const bool complete = seen.size() == enumerate_cycle_types(n).size();
        bool all_computed = complete;
        BigCount total = 0;
        for (const auto& c : computed) {
            if (!c.fix) {
                all_computed = false;
                continue;
            }
            total += c.mu * *c.fix;
        }
        const BigCount order = factorial(n);
        if (!complete) {
            r_note = "published table does not list every cycle type";
        } else if (!all_computed) {
            r_note = "some rows are out of scope";
        } else if (total % order != 0) {
            r_note = "Burnside total " + to_decimal(total) + " not divisible by " + to_decimal(order);
        } else {
            r_computed = total / order;
        }
        const PublishedCounts& published = published_counts().at(n);
        const bool consistent = r_computed && *r_computed == parse_decimal(std::string(published.r_n));

        for (std::size_t k = 0; k < printed.size(); ++k) {
            const PublishedFix& p = *printed[k];
            const Computed& c = computed[k];
            VerifyRow fix_row;
            fix_row.n = n;
            fix_row.index = p.index;
            fix_row.perm = std::string(p.perm);
            fix_row.field = "fix";
            fix_row.published = std::string(p.fix);
            fix_row.method = c.method;
            if (!c.fix) {
                fix_row.status = RowStatus::skipped;
                fix_row.note = c.note;
            } else {
                fix_row.computed = to_decimal(*c.fix);
                if (fix_row.computed == fix_row.published) {
                    fix_row.status = RowStatus::pass;
                } else if (consistent) {
                    fix_row.status = RowStatus::misprint;
                    fix_row.note = "computed rows reproduce r_" + std::to_string(n) + " = " + std::string(published.r_n);
                } else {
                    fix_row.status = RowStatus::mismatch;
                    fix_row.note = "no Burnside-consistent correction available";
                }
                if (p.fix_trust == Trust::misprint && fix_row.computed != p.fix_correction) {
                    fix_row.note += (fix_row.note.empty() ? "" : "; ") + std::string("recorded correction ") +
                                    std::string(p.fix_correction) + " differs";
                }
            }
            report.rows.push_back(std::move(fix_row));

            VerifyRow mu_row;
            mu_row.n = n;
            mu_row.index = p.index;
            mu_row.perm = std::string(p.perm);
            mu_row.field = "mu";
            mu_row.published = std::string(p.mu);
            mu_row.computed = to_decimal(c.mu);
            mu_row.method = "formula";
            if (mu_row.computed == mu_row.published) {
                mu_row.status = RowStatus::pass;
            } else {
                mu_row.status = RowStatus::misprint;
                mu_row.note = "n!/prod(k^m_k m_k!)";
            }
            report.rows.push_back(std::move(mu_row));
        }

        VerifyRow r_row;
        r_row.n = n;
        r_row.perm = "";
        r_row.field = "r_n";
        r_row.published = std::string(published.r_n);
        r_row.method = "burnside";
        if (r_computed) {
            r_row.computed = to_decimal(*r_computed);
            r_row.status = consistent ? RowStatus::pass : RowStatus::mismatch;
        } else {
            r_row.status = all_computed ? RowStatus::mismatch : RowStatus::skipped;
            r_row.note = r_note;
        }
        report.rows.push_back(std::move(r_row));
    }
    return report;
}

std::string report_to_csv(const VerifyReport& report) {
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "n,row,perm,field,published,computed,status,method,note\n";
    for (const auto& r : report.rows) {
        out << r.n << ',' << r.index << ',' << quote(r.perm) << ',' << r.field << ',' << r.published << ','
            << r.computed << ',' << to_string(r.status) << ',' << quote(r.method) << ',' << quote(r.note) << '\n';
    }
    return out.str();
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::json j;
    auto rows = nlohmann::json::array();
    std::map<std::string, int> tally;
    for (const auto& r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"row", r.index},
                        {"perm", r.perm},
                        {"field", r.field},
                        {"published", r.published},
                        {"computed", r.computed},
                        {"status", to_string(r.status)},
                        {"method", r.method},
                        {"note", r.note}});
        ++tally[to_string(r.status)];
    }
    j["rows"] = std::move(rows);
    j["summary"] = tally;
    j["ok"] = report.ok();
    return j.dump(2);
}

}  // namespace mbfix
