// Experiment runner. `run` executes a config and writes per-seed trace and
// regret-report files, `compare` runs several algorithms on identical
// environments, and `scan-intervals` dumps the dyadic covering tables.
//
// Exit codes: 0 ok, 1 a requested bound check failed, 2 bad config or
// arguments, 3 I/O failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "saol/experiment.hpp"

namespace {

saol::ExperimentConfig load_config(const std::string& path, const std::string& out_override,
                                   std::int64_t seed_override, const std::string& tau_override) {
    saol::ExperimentConfig config = saol::parse_config_file(path);
    if (!out_override.empty()) config.out_dir = out_override;
    if (seed_override >= 0)
        config.seeds = {static_cast<std::uint64_t>(seed_override)};
    if (!tau_override.empty()) {
        if (tau_override != "dyadic" && tau_override != "all")
            throw saol::ConfigError("--tau-grid must be dyadic or all");
        if (tau_override == "all" && config.horizon > 4096)
            throw saol::ConfigError("--tau-grid all is limited to T <= 4096");
        config.tau_grid = tau_override;
    }
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly adaptive online learning experiment runner"};
    app.require_subcommand(1);
    app.footer(R"(config keys (defaults in parentheses):
  [experiment] scenario=experts|oco (experts); algorithm=mw|ogd|saol-mw|saol-ogd
               (saol-mw; compare uses `algorithms = a, b`); mode=expected|sample
               (expected); T (required); seeds (required); diagnostics=on|off (on);
               mw_rate=anytime|horizon (anytime); weight_scale=linear|log (linear);
               out=DIR (runs)
  [experts]    N (2)
  [oco]        d (2); set=box|ball (box); half_width (1.0); radius (1.0);
               G (family bound: 2/B quadratic, 0.5/sup|x| affine)
  [environment] kind=stationary|switching|adversarial (experts) or drifting (oco);
               means; noise (0); segments start:end:arm, or switches=K;
               base (0.1); gap (0.5); family=quadratic|affine (quadratic); drift (0.05)
  [report]     tau_grid=dyadic|all (dyadic; all needs T<=4096); tracking_m;
               check_bounds=auto|on|off (auto); alpha (0.5);
               C (2*sqrt(ln N) experts, 3*B*G oco))");

    std::string config_path;
    std::string out_dir;
    std::int64_t seed_override = -1;
    std::string tau_grid;

    CLI::App* run = app.add_subcommand("run", "execute a config and write trace/report files");
    run->add_option("--config", config_path, "config file path")->required();
    run->add_option("--out", out_dir, "output directory (overrides the config)");
    run->add_option("--seed-override", seed_override, "run only this seed");
    run->add_option("--tau-grid", tau_grid, "window grid: dyadic|all");

    CLI::App* compare =
        app.add_subcommand("compare", "run every configured algorithm on the same environments");
    compare->add_option("--config", config_path, "config file path")->required();
    compare->add_option("--out", out_dir, "output directory (overrides the config)");
    compare->add_option("--seed-override", seed_override, "run only this seed");
    compare->add_option("--tau-grid", tau_grid, "window grid: dyadic|all");

    std::int64_t scan_from = 1;
    std::int64_t scan_to = 32;
    std::string partition_arg;
    CLI::App* scan = app.add_subcommand("scan-intervals",
                                        "dump active/entering covering blocks per round");
    scan->add_option("--from", scan_from, "first round (default 1)");
    scan->add_option("--to", scan_to, "last round (default 32)");
    scan->add_option("--partition", partition_arg,
                     "also print the geometric partition of start:end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : saol::kExitConfigError;
    }

    try {
        if (run->parsed() || compare->parsed()) {
            const saol::ExperimentConfig config =
                load_config(config_path, out_dir, seed_override, tau_grid);
            return run->parsed() ? saol::run_experiment(config, std::cout)
                                 : saol::run_comparison(config, std::cout);
        }
        saol::write_interval_scan(scan_from, scan_to, std::cout);
        if (!partition_arg.empty()) {
            const auto colon = partition_arg.find(':');
            if (colon == std::string::npos)
                throw saol::ConfigError("--partition expects start:end");
            std::int64_t start = 0;
            std::int64_t end = 0;
            try {
                start = std::stoll(partition_arg.substr(0, colon));
                end = std::stoll(partition_arg.substr(colon + 1));
            } catch (const std::exception&) {
                throw saol::ConfigError("--partition expects integer start:end");
            }
            saol::write_partition_scan(start, end, std::cout);
        }
        return saol::kExitOk;
    } catch (const saol::ConfigError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return saol::kExitConfigError;
    } catch (const saol::IoError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return saol::kExitIoError;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return saol::kExitConfigError;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return saol::kExitIoError;
    }
}
