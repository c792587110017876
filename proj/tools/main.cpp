// evenwalk: exact coefficients of the even-visiting walk series, with
// brute-force and random-matrix cross-checks. Subcommands:
//
//   ck       coefficient table c_0..c_kmax (composition sum or DP)
//   oracle   brute-force walk count at a given step count vs the formula
//   moments  ring-matrix trace moments, exhaustive or Monte-Carlo
//
// Data goes to stdout as CSV or a single JSON document; diagnostics go to
// stderr. Exit codes: 0 success/match, 2 usage error, 3 verification failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evenwalk/counting.hpp"
#include "evenwalk/moments.hpp"
#include "evenwalk/walk_oracle.hpp"

using evenwalk::BigCount;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

// The published c_0..c_16, embedded for --verify-table.
const char* const kPublishedCk[17] = {
    "1", "2", "14", "116", "1110", "11372", "123020", "1384168",
    "16058982", "190948796", "2317085924", "28602719576", "358298116092",
    "4545807497272", "58321701832408", "755700271652816", "9878971460641414",
};

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int resolve_threads(std::optional<int> cli_value) {
    if (cli_value) {
        if (*cli_value < 1 || *cli_value > 256) throw CLI::ValidationError("--threads must lie in [1, 256]");
        return *cli_value;
    }
    if (const char* env = std::getenv("EVENWALK_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > 256)
            throw CLI::ValidationError("EVENWALK_THREADS must be an integer in [1, 256]");
        return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit_json(const json& rows, const json& meta) {
    json doc;
    doc["schema_version"] = 1;
    doc["rows"] = rows;
    doc["meta"] = meta;
    std::cout << doc.dump(2) << "\n";
}

void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
}

struct CkOptions {
    int max_k = 0;
    std::string method = "dp";
    bool verify_table = false;
    std::string format = "csv";
    std::optional<int> threads;
};

int run_ck(const CkOptions& opt) {
    int threads = resolve_threads(opt.threads);
    if (opt.method == "compose" && opt.max_k > 30) {
        std::cerr << "evenwalk: the composition sum is limited to --max-k 30 (2^(k-1) terms); use --method dp\n";
        return kExitUsage;
    }
    if (opt.max_k > 200) {
        std::cerr << "evenwalk: --max-k above 200 is not supported\n";
        return kExitUsage;
    }

    auto source = [&](int k) {
        return opt.method == "dp" ? evenwalk::ck_fast(k) : evenwalk::ck_by_composition(k, threads);
    };
    auto series = evenwalk::resolvent_series(opt.max_k, source);

    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& row : series) {
            json r;
            r["k"] = row.k;
            r["c_k"] = row.ck.to_decimal();
            r["ratio"] = row.has_ratio ? json(row.ratio) : json(nullptr);
            r["growth_estimate"] = row.has_ratio ? json(row.growth) : json(nullptr);
            rows.push_back(std::move(r));
        }
        json meta;
        meta["command"] = "ck";
        meta["max_k"] = opt.max_k;
        meta["method"] = opt.method;
        emit_json(rows, meta);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : series) {
            rows.push_back({std::to_string(row.k), row.ck.to_decimal(),
                            row.has_ratio ? fmt12(row.ratio) : "",
                            row.has_ratio ? fmt12(row.growth) : ""});
        }
        emit_csv({"k", "c_k", "ratio", "growth_estimate"}, rows);
    }

    if (opt.verify_table) {
        for (const auto& row : series) {
            if (row.k > 16) break;
            BigCount expected = BigCount::from_decimal(kPublishedCk[row.k]);
            if (row.ck != expected) {
                std::cerr << "evenwalk: c_" << row.k << " = " << row.ck.to_decimal()
                          << " differs from the published value " << kPublishedCk[row.k] << "\n";
                return kExitVerification;
            }
        }
        std::cerr << "evenwalk: table verified for k <= " << std::min(opt.max_k, 16) << "\n";
    }
    return 0;
}

struct OracleOptions {
    int steps = 0;
    int cap = evenwalk::kDefaultStepCap;
    std::string format = "csv";
    std::optional<int> threads;
};

int run_oracle(const OracleOptions& opt) {
    int threads = resolve_threads(opt.threads);
    BigCount count = evenwalk::count_even_visiting(opt.steps, opt.cap, threads);
    bool is_4k = opt.steps % 4 == 0;
    BigCount formula = is_4k ? evenwalk::ck_fast(opt.steps / 4) : BigCount(0);
    bool match = count == formula;
    const char* verdict = match ? "MATCH" : "MISMATCH";

    if (opt.format == "json") {
        json row;
        row["steps"] = opt.steps;
        row["k"] = is_4k ? json(opt.steps / 4) : json(nullptr);
        row["count"] = count.to_decimal();
        row["formula"] = formula.to_decimal();
        row["verdict"] = verdict;
        json meta;
        meta["command"] = "oracle";
        meta["steps"] = opt.steps;
        meta["cap"] = opt.cap;
        emit_json(json::array({row}), meta);
    } else {
        emit_csv({"steps", "k", "count", "formula", "verdict"},
                 {{std::to_string(opt.steps), is_4k ? std::to_string(opt.steps / 4) : "",
                   count.to_decimal(), formula.to_decimal(), verdict}});
    }
    return match ? 0 : kExitVerification;
}

struct MomentsOptions {
    bool exact = false;
    bool mc = false;
    int n = 0;
    int k = 0;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::optional<int> threads;
};

int run_moments(const MomentsOptions& opt) {
    int threads = resolve_threads(opt.threads);
    BigCount expected = evenwalk::ck_fast(opt.k);

    if (opt.exact) {
        auto est = evenwalk::exact_moment(opt.n, opt.k, threads);
        bool meets = evenwalk::moment_matches_ck(opt.n, opt.k);
        bool equal = est.exact_equals(expected);
        std::string verdict = meets ? (equal ? "EQUAL" : "DIFFERS") : "UNCHECKED";
        if (!meets)
            std::cerr << "evenwalk: n = " << opt.n << " is below the 4k+2 = " << 4 * opt.k + 2
                      << " threshold; no equality asserted\n";

        if (opt.format == "json") {
            json row;
            row["n"] = opt.n;
            row["k"] = opt.k;
            row["power"] = est.power;
            row["configs"] = est.samples;
            row["average"] = est.exact_value();
            row["expected_ck"] = expected.to_decimal();
            row["threshold_met"] = meets;
            row["verdict"] = verdict;
            json meta;
            meta["command"] = "moments";
            meta["mode"] = "exact";
            meta["n"] = opt.n;
            meta["k"] = opt.k;
            emit_json(json::array({row}), meta);
        } else {
            emit_csv({"n", "k", "power", "configs", "average", "expected_ck", "threshold_met", "verdict"},
                     {{std::to_string(opt.n), std::to_string(opt.k), std::to_string(est.power),
                       std::to_string(est.samples), est.exact_value(), expected.to_decimal(),
                       meets ? "true" : "false", verdict}});
        }
        return verdict == "DIFFERS" ? kExitVerification : 0;
    }

    auto est = evenwalk::mc_moment(opt.n, opt.k, opt.samples, opt.seed, threads);
    double z = est.z_score(expected);
    if (opt.format == "json") {
        json row;
        row["n"] = opt.n;
        row["k"] = opt.k;
        row["power"] = est.power;
        row["samples"] = est.samples;
        row["seed"] = est.seed;
        row["mean"] = est.mean();
        row["std_error"] = est.std_error();
        row["z_score"] = z;
        row["expected_ck"] = expected.to_decimal();
        json meta;
        meta["command"] = "moments";
        meta["mode"] = "mc";
        meta["n"] = opt.n;
        meta["k"] = opt.k;
        meta["samples"] = opt.samples;
        meta["seed"] = opt.seed;
        emit_json(json::array({row}), meta);
    } else {
        emit_csv({"n", "k", "power", "samples", "seed", "mean", "std_error", "z_score", "expected_ck"},
                 {{std::to_string(opt.n), std::to_string(opt.k), std::to_string(est.power),
                   std::to_string(est.samples), std::to_string(est.seed), fmt12(est.mean()),
                   fmt12(est.std_error()), fmt12(z), expected.to_decimal()}});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"even-visiting walk counts and ring-matrix moments"};
    app.require_subcommand(1);

    CkOptions ck;
    auto* ck_cmd = app.add_subcommand("ck", "coefficient table c_0..c_max");
    ck_cmd->add_option("--max-k", ck.max_k, "largest k to tabulate")->required()->check(CLI::NonNegativeNumber);
    ck_cmd->add_option("--method", ck.method, "evaluation route")
        ->check(CLI::IsMember({"dp", "compose"}))
        ->capture_default_str();
    ck_cmd->add_flag("--verify-table", ck.verify_table, "compare k <= 16 against the published table");
    ck_cmd->add_option("--format", ck.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    int ck_threads = 0;
    auto* ck_threads_opt = ck_cmd->add_option("--threads", ck_threads, "worker threads (default: EVENWALK_THREADS or hardware)");

    OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force walk count vs the formula");
    oracle_cmd->add_option("--steps", oracle.steps, "walk length to enumerate")->required()->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--cap", oracle.cap, "enumeration step cap")->capture_default_str();
    oracle_cmd->add_option("--format", oracle.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    int oracle_threads = 0;
    auto* oracle_threads_opt = oracle_cmd->add_option("--threads", oracle_threads, "worker threads");

    MomentsOptions moments;
    auto* moments_cmd = app.add_subcommand("moments", "ring-matrix trace moments");
    auto* exact_flag = moments_cmd->add_flag("--exact", moments.exact, "exhaustive average over all sign configs");
    auto* mc_flag = moments_cmd->add_flag("--mc", moments.mc, "seeded Monte-Carlo average");
    exact_flag->excludes(mc_flag);
    moments_cmd->add_option("--n", moments.n, "matrix order")->required();
    moments_cmd->add_option("--k", moments.k, "moment index (power 4k)")->required()->check(CLI::NonNegativeNumber);
    moments_cmd->add_option("--samples", moments.samples, "Monte-Carlo sample count")->capture_default_str();
    moments_cmd->add_option("--seed", moments.seed, "Monte-Carlo seed")->capture_default_str();
    moments_cmd->add_option("--format", moments.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    int moments_threads = 0;
    auto* moments_threads_opt = moments_cmd->add_option("--threads", moments_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "evenwalk: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (ck_cmd->parsed()) {
            if (ck_threads_opt->count() > 0) ck.threads = ck_threads;
            return run_ck(ck);
        }
        if (oracle_cmd->parsed()) {
            if (oracle_threads_opt->count() > 0) oracle.threads = oracle_threads;
            return run_oracle(oracle);
        }
        if (moments_cmd->parsed()) {
            if (moments_threads_opt->count() > 0) moments.threads = moments_threads;
            if (moments.exact == moments.mc) {
                std::cerr << "evenwalk: moments requires exactly one of --exact or --mc\n";
                return kExitUsage;
            }
            return run_moments(moments);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "evenwalk: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "evenwalk: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "evenwalk: internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
