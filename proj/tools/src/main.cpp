#include "claimsim/claimsim.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace claimsim;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitData = 4;

struct CommonInputs {
    std::string transactions_path;
    std::string claims_path;
    int n_periods = 40;
    int period_multiple = 1;
};

SimulationConfig resolve_config(const std::string& config_path,
                                const std::optional<std::uint64_t>& seed_flag,
                                const std::optional<std::string>& preset_flag) {
    SimulationConfig cfg =
        config_path.empty() ? default_config() : load_config_file(config_path);
    if (const char* env = std::getenv("CLAIMSIM_SEED"); env != nullptr && !seed_flag) {
        char* end = nullptr;
        errno = 0;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || errno == ERANGE) {
            throw ConfigError(std::string("CLAIMSIM_SEED is not a valid seed: '") + env + "'");
        }
        cfg.master_seed = static_cast<std::uint64_t>(v);
    }
    if (seed_flag) {
        cfg.master_seed = *seed_flag;
    }
    if (preset_flag) {
        cfg.preset = *preset_flag;
    }
    validate(cfg);
    apply_preset(cfg);
    return cfg;
}

void ensure_directory(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + dir + "': " + ec.message());
    }
}

int run_simulate(const std::string& config_path, const std::optional<std::uint64_t>& seed_flag,
                 const std::optional<std::string>& preset_flag, const std::string& out_dir,
                 bool no_inflation, int threads) {
    const SimulationConfig cfg = resolve_config(config_path, seed_flag, preset_flag);
    RunOptions options;
    options.inflation = !no_inflation;
    options.threads = threads;

    const SimulationResult result = run_simulation(cfg, options);

    ensure_directory(out_dir);
    const std::string txn_text = transactions_csv_text(result.transactions);
    const std::string claims_text = claims_csv_text(result.claims);

    RunManifest manifest;
    manifest.version = kVersion;
    manifest.config_hash = config_hash(cfg);
    manifest.master_seed = cfg.master_seed;
    manifest.inflation = options.inflation;
    manifest.n_claims = static_cast<long>(result.claims.size());
    manifest.n_transactions = static_cast<long>(result.transactions.size());
    manifest.data_hash = content_hash(txn_text + claims_text);
    manifest.outputs.push_back({"transactions.csv", manifest.n_transactions});
    manifest.outputs.push_back({"claims.csv", manifest.n_claims});

    const auto out = std::filesystem::path(out_dir);
    write_file((out / "transactions.csv").string(), txn_text);
    write_file((out / "claims.csv").string(), claims_text);
    write_file((out / "manifest.json").string(), manifest_to_json_text(manifest));

    std::cout << "simulated " << result.claims.size() << " claims, "
              << result.transactions.size() << " transactions (seed " << cfg.master_seed
              << ", preset " << cfg.preset << ", inflation "
              << (options.inflation ? "on" : "off") << ")\n"
              << "wrote " << (out / "transactions.csv").string() << ", "
              << (out / "claims.csv").string() << ", " << (out / "manifest.json").string()
              << "\n";
    return kExitOk;
}

std::pair<std::vector<ClaimSummary>, std::vector<Transaction>> load_inputs(
    const CommonInputs& inputs) {
    auto claims = load_claims_csv(inputs.claims_path);
    auto transactions = load_transactions_csv(inputs.transactions_path);
    return {std::move(claims), std::move(transactions)};
}

int run_triangles(const CommonInputs& inputs, const std::string& kind, const std::string& out_dir) {
    const auto [claims, transactions] = load_inputs(inputs);
    ensure_directory(out_dir);
    const auto out = std::filesystem::path(out_dir);
    auto write_one = [&](AggregateKind k, const char* name) {
        const Triangle tri =
            aggregate_triangle(claims, transactions, k, inputs.n_periods, inputs.period_multiple);
        std::ostringstream text;
        write_triangle_csv(text, tri);
        const std::string path = (out / name).string();
        write_file(path, text.str());
        std::cout << "wrote " << path << " (" << tri.rows() << "x" << tri.devs() << ")\n";
    };
    if (kind == "paid" || kind == "both") {
        write_one(AggregateKind::CumulativePaid, "paid_triangle.csv");
    }
    if (kind == "incurred" || kind == "both") {
        write_one(AggregateKind::IncurredEstimate, "incurred_triangle.csv");
    }
    return kExitOk;
}

int run_chainladder(const CommonInputs& inputs, const std::string& out_dir) {
    const auto [claims, transactions] = load_inputs(inputs);
    const Triangle incurred = aggregate_triangle(claims, transactions, AggregateKind::IncurredEstimate,
                                                 inputs.n_periods, inputs.period_multiple);
    const Triangle paid = aggregate_triangle(claims, transactions, AggregateKind::CumulativePaid,
                                             inputs.n_periods, inputs.period_multiple);
    const ChainLadderResult cl = chain_ladder(incurred, paid);
    const std::vector<double> actual = actual_outstanding_by_period(
        claims, transactions, inputs.n_periods, inputs.period_multiple);
    const DeviationReport report = deviation_report(cl, actual);

    std::ostringstream table;
    table << "periods,actual_outstanding,forecast_reserve,deviation_pct\n";
    auto emit_band = [&table](const DeviationBand& band, const char* label) {
        if (label != nullptr) {
            table << label;
        } else if (band.first_period == band.last_period) {
            table << band.first_period;
        } else {
            table << band.first_period << '-' << band.last_period;
        }
        table << ',' << format_double(band.actual) << ',' << format_double(band.forecast) << ',';
        if (std::isnan(band.percent)) {
            table << "";
        } else {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.2f", band.percent);
            table << buf;
        }
        table << '\n';
    };
    for (const DeviationBand& band : report.bands) {
        emit_band(band, nullptr);
    }
    emit_band(report.total, "total");

    std::cout << table.str();
    if (!out_dir.empty()) {
        ensure_directory(out_dir);
        const std::string path = (std::filesystem::path(out_dir) / "forecast_report.csv").string();
        write_file(path, table.str());
        std::cout << "wrote " << path << "\n";
    }
    return kExitOk;
}

int run_diagnose(const CommonInputs& inputs, int dev_cutoff) {
    const auto [claims, transactions] = load_inputs(inputs);
    const Triangle incurred = aggregate_triangle(claims, transactions, AggregateKind::IncurredEstimate,
                                                 inputs.n_periods, inputs.period_multiple);
    const int cutoff = dev_cutoff > 0 ? dev_cutoff : std::max(1, incurred.devs() / 4);

    const auto pairs = major_factor_pairs(transactions);
    std::cout << "major-revision factor pairs: " << pairs.size() << "\n";
    if (pairs.size() >= 2) {
        std::cout << "factor correlation (second vs third): ";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", pearson_correlation(pairs));
        std::cout << buf << "\n";
    } else {
        std::cout << "factor correlation (second vs third): not enough pairs\n";
    }

    const RecognitionProfile profile = recognition_profile(incurred, cutoff);
    std::cout << "recognition profile: incurred at dev " << cutoff << " / incurred at dev "
              << incurred.devs() << "\n";
    std::cout << "period,raw,smoothed\n";
    for (std::size_t i = 0; i < profile.raw.size(); ++i) {
        char raw_buf[32];
        char smooth_buf[32];
        std::snprintf(raw_buf, sizeof(raw_buf), "%.4f", profile.raw[i]);
        std::snprintf(smooth_buf, sizeof(smooth_buf), "%.4f", profile.smoothed[i]);
        std::cout << i + 1 << ',' << raw_buf << ',' << smooth_buf << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transaction-level claim simulator: paid-loss histories with "
                 "backward-consolidated case estimates, development triangles and "
                 "chain-ladder forecasts"};
    app.require_subcommand(1);

    // --- simulate ---------------------------------------------------------
    std::string config_path;
    std::optional<std::uint64_t> seed_flag;
    std::optional<std::string> preset_flag;
    std::string out_dir;
    bool no_inflation = false;
    int threads = 1;

    CLI::App* simulate = app.add_subcommand("simulate", "Generate a portfolio and write CSV output");
    simulate->add_option("--config", config_path, "JSON config file (defaults apply when omitted)");
    simulate->add_option("--seed", seed_flag, "Master seed (overrides config and CLAIMSIM_SEED)");
    simulate->add_option("--preset", preset_flag,
                         "Portfolio preset: default_heterogeneous or homogeneous");
    simulate->add_option("--out", out_dir, "Output directory")->required();
    simulate->add_flag("--no-inflation", no_inflation,
                       "Emit constant-dollar amounts (no inflation of any kind)");
    simulate->add_option("--threads", threads, "Worker threads (output is identical for any value)")
        ->check(CLI::Range(1, 256));

    // --- shared input options ----------------------------------------------
    CommonInputs inputs;
    auto add_input_options = [&inputs](CLI::App* cmd) {
        cmd->add_option("--transactions", inputs.transactions_path, "transactions.csv path")
            ->required();
        cmd->add_option("--claims", inputs.claims_path, "claims.csv path")->required();
        cmd->add_option("--periods", inputs.n_periods, "Number of base occurrence periods")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--period-multiple", inputs.period_multiple,
                        "Base periods per aggregate period (e.g. 4 = quarters into years)")
            ->check(CLI::PositiveNumber);
    };

    std::string triangle_kind = "both";
    std::string triangles_out;
    CLI::App* triangles =
        app.add_subcommand("triangles", "Aggregate transactions into development triangles");
    add_input_options(triangles);
    triangles->add_option("--kind", triangle_kind, "paid, incurred or both")
        ->check(CLI::IsMember({"paid", "incurred", "both"}));
    triangles->add_option("--out", triangles_out, "Output directory")->required();

    std::string chainladder_out;
    CLI::App* chainladder = app.add_subcommand(
        "chainladder", "Chain-ladder forecast vs actual outstanding, by occurrence band");
    add_input_options(chainladder);
    chainladder->add_option("--out", chainladder_out, "Optional output directory for the report");

    int dev_cutoff = 0;
    CLI::App* diagnose = app.add_subcommand(
        "diagnose", "Dependency and recognition diagnostics on simulated output");
    add_input_options(diagnose);
    diagnose->add_option("--dev-cutoff", dev_cutoff,
                         "Development column for the recognition ratio (default: devs/4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(config_path, seed_flag, preset_flag, out_dir, no_inflation,
                                threads);
        }
        if (triangles->parsed()) {
            return run_triangles(inputs, triangle_kind, triangles_out);
        }
        if (chainladder->parsed()) {
            return run_chainladder(inputs, chainladder_out);
        }
        if (diagnose->parsed()) {
            return run_diagnose(inputs, dev_cutoff);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
