#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbfix/burnside.hpp"
#include "mbfix/engines.hpp"
#include "mbfix/errors.hpp"
#include "mbfix/matrix.hpp"
#include "mbfix/mbf.hpp"
#include "mbfix/parallel.hpp"
#include "mbfix/perm.hpp"

namespace mbfix::cli {

namespace {

struct RunConfig {
    unsigned n = 0;
    unsigned n_min = 3;
    unsigned n_max = 8;
    std::string perm;
    std::string method = "auto";
    std::string format;
    std::string save;
    std::string of = "cycles";
    unsigned power = 1;
    int threads = 0;
    std::optional<double> budget;
};

nlohmann::json fix_json(const Permutation& pi, const MethodReport& report) {
    auto type = nlohmann::json::array();
    const CycleType ct = cycle_type(pi);
    for (unsigned p : ct.parts()) type.push_back(p);
    nlohmann::json j;
    j["n"] = pi.degree();
    j["perm"] = pi.to_string();
    j["cycle_type"] = std::move(type);
    j["mu"] = to_decimal(class_size(cycle_type(pi)));
    j["count"] = to_decimal(report.count);
    j["method"] = report.method;
    j["elapsed_ms"] = report.elapsed_ms;
    j["decomposition"] = report.decomposition;
    return j;
}

// Poset selected by --of: the cycle poset of pi, its fix family, or D_n.
Poset selected_poset(const RunConfig& cfg) {
    if (cfg.of == "dn") return as_poset(generate_dn(cfg.n));
    const Permutation pi = parse_cycles(cfg.perm, cfg.n);
    if (cfg.of == "fix") return fix_generate(pi).poset();
    return cycle_poset(pi).order;
}

int cmd_dn(const RunConfig& cfg, std::ostream& out) {
    BigCount d;
    if (!cfg.save.empty()) {
        const FunctionFamily family = generate_dn(cfg.n);
        save_family(family, cfg.save);
        d = family.size();
    } else {
        d = dedekind(cfg.n);
    }
    if (cfg.format == "json") {
        out << nlohmann::json{{"n", cfg.n}, {"d_n", to_decimal(d)}}.dump() << '\n';
    } else {
        out << to_decimal(d) << '\n';
    }
    return kExitOk;
}

int cmd_rn(const RunConfig& cfg, std::ostream& out) {
    FixCountOptions options;
    if (cfg.budget) options.budget = *cfg.budget;
    const BurnsideLedger ledger = class_count(cfg.n, options);
    out << (cfg.format == "json" ? ledger_to_json(ledger) + "\n" : ledger_to_text(ledger));
    return kExitOk;
}

int cmd_fix(const RunConfig& cfg, std::ostream& out) {
    const Permutation pi = parse_cycles(cfg.perm, cfg.n);
    FixCountOptions options;
    if (cfg.budget) options.budget = *cfg.budget;
    const MethodReport report = fix_count(pi, parse_method(cfg.method), options);
    if (cfg.format == "json") {
        out << fix_json(pi, report).dump() << '\n';
    } else {
        out << "perm " << pi.to_string() << " on D_" << cfg.n << '\n';
        out << "count " << to_decimal(report.count) << '\n';
        out << "method " << report.method << '\n';
        for (const auto& line : report.decomposition) out << "  " << line << '\n';
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions options;
    if (cfg.budget) options.budget = *cfg.budget;
    const VerifyReport report = verify_published_tables(cfg.n_min, cfg.n_max, options);
    out << (cfg.format == "json" ? report_to_json(report) + "\n" : report_to_csv(report));
    return report.ok() ? kExitOk : kExitInconsistent;
}

int cmd_dump_poset(const RunConfig& cfg, std::ostream& out) {
    out << poset_to_json(selected_poset(cfg)) << '\n';
    return kExitOk;
}

int cmd_dump_matrix(const RunConfig& cfg, std::ostream& out) {
    out << mat_power(count_matrix(selected_poset(cfg)), cfg.power).to_csv();
    return kExitOk;
}

int cmd_gen_fix(const RunConfig& cfg, std::ostream& out) {
    const Permutation pi = parse_cycles(cfg.perm, cfg.n);
    const FixSet fs = fix_generate(pi);
    if (!cfg.save.empty()) {
        save_family(fs.functions, cfg.save);
        out << fs.size() << '\n';
        return kExitOk;
    }
    if (cfg.format == "json") {
        nlohmann::json j;
        j["n"] = cfg.n;
        j["perm"] = pi.to_string();
        j["count"] = std::to_string(fs.size());
        auto fns = nlohmann::json::array();
        for (std::size_t i = 0; i < fs.size(); ++i) fns.push_back(fs.functions.function(i).to_string());
        j["functions"] = std::move(fns);
        out << j.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < fs.size(); ++i) out << fs.functions.function(i).to_string() << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts monotone Boolean functions and their fixes under variable permutations"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--threads", cfg.threads, "worker threads (default $MBF_THREADS or 1)")->check(CLI::NonNegativeNumber);

    const auto formats = CLI::IsMember({"text", "json"});
    auto* dn = app.add_subcommand("dn", "Dedekind number d_n (n <= 7)");
    dn->add_option("--n", cfg.n, "number of variables")->required();
    dn->add_option("--save", cfg.save, "write D_n (n <= 6) as an MBF1 file");
    dn->add_option("--format", cfg.format, "text or json")->check(formats);

    auto* rn = app.add_subcommand("rn", "classes of D_n under variable permutations, with the Burnside ledger");
    rn->add_option("--n", cfg.n, "number of variables")->required();
    rn->add_option("--format", cfg.format, "text or json")->check(formats);
    rn->add_option("--budget", cfg.budget, "work cap per row");

    auto* fix = app.add_subcommand("fix", "number of f in D_n with f o pi = f");
    fix->add_option("--perm", cfg.perm, "permutation in cycle notation, e.g. (12)(34)")->required();
    fix->add_option("--n", cfg.n, "number of variables")->required();
    fix->add_option("--method", cfg.method, "auto, bruteforce, upsets, generate, coprime, extend, downup, dedekind");
    fix->add_option("--format", cfg.format, "text or json")->check(formats);
    fix->add_option("--budget", cfg.budget, "work cap for the dispatcher");

    auto* verify = app.add_subcommand("verify-tables", "recompute the published fix and class tables");
    verify->add_option("--n-min", cfg.n_min, "first n (>= 3)");
    verify->add_option("--n-max", cfg.n_max, "last n (<= 8)");
    verify->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--budget", cfg.budget, "work cap per row; rows above it are skipped");

    const auto sources = CLI::IsMember({"cycles", "fix", "dn"});
    auto* dump_poset = app.add_subcommand("dump-poset", "order relation as JSON");
    dump_poset->add_option("--perm", cfg.perm, "permutation (for --of cycles or fix)");
    dump_poset->add_option("--n", cfg.n, "number of variables")->required();
    dump_poset->add_option("--of", cfg.of, "cycles (cycle poset), fix (fix family) or dn (D_n)")->check(sources);

    auto* dump_matrix = app.add_subcommand("dump-matrix", "k-th power of the order matrix as CSV");
    dump_matrix->add_option("--perm", cfg.perm, "permutation (for --of cycles or fix)");
    dump_matrix->add_option("--n", cfg.n, "number of variables")->required();
    dump_matrix->add_option("--of", cfg.of, "cycles, fix or dn")->check(sources);
    dump_matrix->add_option("--power", cfg.power, "matrix power k >= 1")->check(CLI::PositiveNumber);

    auto* gen_fix = app.add_subcommand("gen-fix", "list every fix of pi on D_n");
    gen_fix->add_option("--perm", cfg.perm, "permutation")->required();
    gen_fix->add_option("--n", cfg.n, "number of variables")->required();
    gen_fix->add_option("--save", cfg.save, "write the family as an MBF1 file instead");
    gen_fix->add_option("--format", cfg.format, "text or json")->check(formats);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    if ((*dump_poset || *dump_matrix) && cfg.of != "dn" && cfg.perm.empty()) {
        err << "error: --perm is required unless --of dn\n";
        return kExitUsage;
    }
    if (cfg.threads > 0) set_thread_count(cfg.threads);

    try {
        if (*dn) return cmd_dn(cfg, out);
        if (*rn) return cmd_rn(cfg, out);
        if (*fix) return cmd_fix(cfg, out);
        if (*verify) return cmd_verify(cfg, out);
        if (*dump_poset) return cmd_dump_poset(cfg, out);
        if (*dump_matrix) return cmd_dump_matrix(cfg, out);
        if (*gen_fix) return cmd_gen_fix(cfg, out);
    } catch (const RefusalError& e) {
        err << "refused: " << e.what() << '\n';
        return kExitRefused;
    } catch (const ConsistencyError& e) {
        err << "inconsistent: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInconsistent;
    }
    return kExitUsage;
}

}  // namespace mbfix::cli
