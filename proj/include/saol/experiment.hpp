#pragma once
/*
Experiment harness behind the command line tool.

Configs are flat key=value text with [section] headers (diff-friendly
provenance for experiment runs). A run executes each seed, writes a trace CSV
with a metadata sidecar and a regret-report CSV per seed (plus a tracking CSV
when switch budgets are requested), prints a summary with one pass/fail line
per requested bound check, and reports failure through the exit status.

All randomness flows from the config seed through counter-based streams, so a
rerun with the same config produces byte-identical artifacts. Seeds execute
concurrently up to the SAOL_THREADS cap; per-seed outputs are disjoint files
and the summary is merged in seed order.
*/

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "saol/baselines.hpp"
#include "saol/environments.hpp"
#include "saol/evaluation.hpp"
#include "saol/saol.hpp"
#include "saol/trace.hpp"

namespace saol {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exit codes of the tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitBoundCheckFailed = 1,
    kExitConfigError = 2,
    kExitIoError = 3,
};

struct ExperimentConfig {
    // [experiment]
    std::string scenario = "experts"; // experts | oco
    std::vector<std::string> algorithms{"saol-mw"};
    PlayMode mode = PlayMode::Expected;
    std::int64_t horizon = 0;
    std::vector<std::uint64_t> seeds{1};
    bool diagnostics = true;
    MwRate mw_rate = MwRate::Anytime;
    WeightScale weight_scale = WeightScale::Linear;
    std::string out_dir = "runs";

    // [experts]
    std::int64_t arms = 2;

    // [oco]
    std::int64_t dimension = 2;
    std::string set_kind = "box"; // box | ball
    double half_width = 1.0;
    double radius = 1.0;
    std::optional<double> lipschitz_override;

    // [environment]
    EnvironmentKind environment = AdversarialExpertsSpec{2};

    // [report]
    std::string tau_grid = "dyadic"; // dyadic | all
    std::vector<std::int64_t> tracking_switches;
    std::string check_bounds = "auto"; // auto | on | off
    double bound_exponent = 0.5;
    std::optional<double> bound_coefficient;
};

// ---------------------------------------------------------------------------
// Config parsing

namespace detail {

inline std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(trim(current));
    if (parts.size() == 1 && parts.front().empty()) parts.clear();
    return parts;
}

class KeyValues {
public:
    void insert(const std::string& section, const std::string& key, const std::string& value) {
        values_[section + "." + key] = value;
    }

    std::optional<std::string> raw(const std::string& name) const {
        const auto it = values_.find(name);
        if (it == values_.end() || it->second.empty()) return std::nullopt;
        return it->second;
    }

    std::string get(const std::string& name, const std::string& fallback) const {
        return raw(name).value_or(fallback);
    }

    std::int64_t get_int(const std::string& name, std::int64_t fallback) const {
        const auto text = raw(name);
        if (!text) return fallback;
        try {
            std::size_t used = 0;
            const std::int64_t value = std::stoll(*text, &used);
            if (used != text->size()) throw std::invalid_argument("trailing characters");
            return value;
        } catch (const std::exception&) {
            throw ConfigError("config: " + name + " must be an integer (got \"" + *text + "\")");
        }
    }

    double get_double(const std::string& name, double fallback) const {
        const auto text = raw(name);
        if (!text) return fallback;
        try {
            std::size_t used = 0;
            const double value = std::stod(*text, &used);
            if (used != text->size()) throw std::invalid_argument("trailing characters");
            return value;
        } catch (const std::exception&) {
            throw ConfigError("config: " + name + " must be a number (got \"" + *text + "\")");
        }
    }

private:
    std::map<std::string, std::string> values_;
};

inline KeyValues parse_key_values(std::istream& in) {
    KeyValues values;
    std::string section = "experiment";
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: malformed section header at line " +
                                  std::to_string(line_number));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " +
                              std::to_string(line_number));
        values.insert(section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return values;
}

template <typename T>
inline std::vector<T> parse_number_list(const KeyValues& values, const std::string& name) {
    std::vector<T> numbers;
    const auto text = values.raw(name);
    if (!text) return numbers;
    for (const std::string& part : split(*text, ',')) {
        try {
            if constexpr (std::is_floating_point_v<T>)
                numbers.push_back(static_cast<T>(std::stod(part)));
            else
                numbers.push_back(static_cast<T>(std::stoll(part)));
        } catch (const std::exception&) {
            throw ConfigError("config: " + name + " has a malformed entry \"" + part + "\"");
        }
    }
    return numbers;
}

} // namespace detail

inline ExperimentConfig parse_config_text(std::istream& in) {
    using detail::KeyValues;
    const KeyValues values = detail::parse_key_values(in);
    ExperimentConfig config;

    config.scenario = values.get("experiment.scenario", "experts");
    if (config.scenario != "experts" && config.scenario != "oco")
        throw ConfigError("config: [experiment] scenario must be experts or oco");

    config.algorithms.clear();
    if (const auto many = values.raw("experiment.algorithms")) {
        for (const std::string& name : detail::split(*many, ','))
            config.algorithms.push_back(name);
    } else {
        config.algorithms.push_back(values.get("experiment.algorithm", "saol-mw"));
    }
    for (const std::string& name : config.algorithms)
        if (name != "mw" && name != "ogd" && name != "saol-mw" && name != "saol-ogd")
            throw ConfigError("config: [experiment] algorithm \"" + name +
                              "\" is not one of mw|ogd|saol-mw|saol-ogd");

    const std::string mode = values.get("experiment.mode", "expected");
    if (mode == "sample")
        config.mode = PlayMode::Sample;
    else if (mode == "expected")
        config.mode = PlayMode::Expected;
    else
        throw ConfigError("config: [experiment] mode must be sample or expected");

    config.horizon = values.get_int("experiment.T", 0);
    if (config.horizon < 1)
        throw ConfigError("config: [experiment] T must be a positive integer");

    config.seeds = detail::parse_number_list<std::uint64_t>(values, "experiment.seeds");
    if (config.seeds.empty())
        throw ConfigError("config: [experiment] seeds must list at least one seed");

    const std::string diagnostics = values.get("experiment.diagnostics", "on");
    if (diagnostics != "on" && diagnostics != "off")
        throw ConfigError("config: [experiment] diagnostics must be on or off");
    config.diagnostics = diagnostics == "on";

    const std::string mw_rate = values.get("experiment.mw_rate", "anytime");
    if (mw_rate == "anytime")
        config.mw_rate = MwRate::Anytime;
    else if (mw_rate == "horizon")
        config.mw_rate = MwRate::FixedHorizon;
    else
        throw ConfigError("config: [experiment] mw_rate must be anytime or horizon");

    const std::string scale = values.get("experiment.weight_scale", "linear");
    if (scale == "linear")
        config.weight_scale = WeightScale::Linear;
    else if (scale == "log")
        config.weight_scale = WeightScale::Log;
    else
        throw ConfigError("config: [experiment] weight_scale must be linear or log");

    config.out_dir = values.get("experiment.out", "runs");

    config.arms = values.get_int("experts.N", 2);
    if (config.scenario == "experts" && config.arms < 1)
        throw ConfigError("config: [experts] N must be >= 1");

    config.dimension = values.get_int("oco.d", 2);
    config.set_kind = values.get("oco.set", "box");
    config.half_width = values.get_double("oco.half_width", 1.0);
    config.radius = values.get_double("oco.radius", 1.0);
    if (const auto g = values.raw("oco.G")) config.lipschitz_override = values.get_double("oco.G", 0.0);
    if (config.scenario == "oco") {
        if (config.dimension < 1) throw ConfigError("config: [oco] d must be >= 1");
        if (config.set_kind != "box" && config.set_kind != "ball")
            throw ConfigError("config: [oco] set must be box or ball");
        if (config.set_kind == "box" && !(config.half_width > 0.0))
            throw ConfigError("config: [oco] half_width must be positive");
        if (config.set_kind == "ball" && !(config.radius > 0.0))
            throw ConfigError("config: [oco] radius must be positive");
    }

    const std::string kind =
        values.get("environment.kind", config.scenario == "experts" ? "adversarial" : "drifting");
    if (config.scenario == "experts") {
        if (kind == "stationary") {
            StationaryExpertsSpec spec;
            spec.mean_losses = detail::parse_number_list<double>(values, "environment.means");
            if (spec.mean_losses.empty())
                throw ConfigError("config: [environment] means is required for kind=stationary");
            if (static_cast<std::int64_t>(spec.mean_losses.size()) != config.arms)
                throw ConfigError("config: [environment] means must list N entries");
            spec.noise = values.get_double("environment.noise", 0.0);
            config.environment = spec;
        } else if (kind == "switching") {
            SwitchingExpertsSpec spec;
            spec.arms = config.arms;
            spec.base = values.get_double("environment.base", 0.1);
            spec.gap = values.get_double("environment.gap", 0.5);
            spec.noise = values.get_double("environment.noise", 0.0);
            const std::int64_t switches = values.get_int("environment.switches", -1);
            if (const auto text = values.raw("environment.segments")) {
                for (const std::string& part : detail::split(*text, ',')) {
                    const std::vector<std::string> fields = detail::split(part, ':');
                    if (fields.size() != 3)
                        throw ConfigError(
                            "config: [environment] segments entries must be start:end:arm");
                    SwitchSegment segment;
                    try {
                        segment.start = std::stoll(fields[0]);
                        segment.end = std::stoll(fields[1]);
                        segment.best_arm = std::stoll(fields[2]);
                    } catch (const std::exception&) {
                        throw ConfigError("config: [environment] segments entry \"" + part +
                                          "\" is malformed");
                    }
                    spec.segments.push_back(segment);
                }
            } else if (switches >= 1) {
                spec.segments = even_segments(config.horizon, switches, config.arms);
            } else {
                throw ConfigError(
                    "config: [environment] switching needs segments or switches >= 1");
            }
            config.environment = spec;
        } else if (kind == "adversarial") {
            config.environment = AdversarialExpertsSpec{config.arms};
        } else {
            throw ConfigError("config: [environment] kind \"" + kind +
                              "\" is not valid for the experts scenario");
        }
    } else {
        if (kind != "drifting")
            throw ConfigError("config: [environment] kind \"" + kind +
                              "\" is not valid for the oco scenario");
        DriftingOcoSpec spec;
        const std::string family = values.get("environment.family", "quadratic");
        if (family == "quadratic")
            spec.family = OcoLossFamily::Quadratic;
        else if (family == "affine")
            spec.family = OcoLossFamily::Affine;
        else
            throw ConfigError("config: [environment] family must be quadratic or affine");
        spec.drift = values.get_double("environment.drift", 0.05);
        config.environment = spec;
    }

    config.tau_grid = values.get("report.tau_grid", "dyadic");
    if (config.tau_grid != "dyadic" && config.tau_grid != "all")
        throw ConfigError("config: [report] tau_grid must be dyadic or all");
    if (config.tau_grid == "all" && config.horizon > 4096)
        throw ConfigError("config: [report] tau_grid=all is limited to T <= 4096");

    config.tracking_switches = detail::parse_number_list<std::int64_t>(values, "report.tracking_m");
    for (std::int64_t m : config.tracking_switches)
        if (m < 1 || m > config.horizon - 1)
            throw ConfigError("config: [report] tracking_m entries must lie in [1, T-1]");
    if (!config.tracking_switches.empty() && config.scenario != "experts")
        throw ConfigError("config: [report] tracking_m requires the experts scenario");

    config.check_bounds = values.get("report.check_bounds", "auto");
    if (config.check_bounds != "auto" && config.check_bounds != "on" &&
        config.check_bounds != "off")
        throw ConfigError("config: [report] check_bounds must be auto, on, or off");

    config.bound_exponent = values.get_double("report.alpha", 0.5);
    if (!(config.bound_exponent > 0.0) || !(config.bound_exponent < 1.0))
        throw ConfigError("config: [report] alpha must lie in (0,1)");
    if (const auto c = values.raw("report.C"))
        config.bound_coefficient = values.get_double("report.C", 0.0);

    return config;
}

inline ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open \"" + path + "\"");
    return parse_config_text(in);
}

// ---------------------------------------------------------------------------
// Run construction

inline FeasibleSet make_feasible_set(const ExperimentConfig& config) {
    const std::size_t dim = static_cast<std::size_t>(config.dimension);
    double diameter = 0.0;
    if (config.set_kind == "box")
        diameter = 2.0 * config.half_width * std::sqrt(static_cast<double>(dim));
    else
        diameter = 2.0 * config.radius;

    double lipschitz = 0.0;
    const auto& drifting = std::get<DriftingOcoSpec>(config.environment);
    if (drifting.family == OcoLossFamily::Quadratic) {
        lipschitz = 2.0 / diameter;
    } else {
        const double reach = config.set_kind == "box"
                                 ? config.half_width * std::sqrt(static_cast<double>(dim))
                                 : config.radius;
        lipschitz = 0.5 / reach;
    }
    if (config.lipschitz_override) lipschitz = *config.lipschitz_override;

    if (config.set_kind == "box")
        return make_box_set(std::vector<double>(dim, -config.half_width),
                            std::vector<double>(dim, config.half_width), lipschitz);
    return make_ball_set(std::vector<double>(dim, 0.0), config.radius, lipschitz);
}

inline LearnerFactory make_learner_factory(const ExperimentConfig& config,
                                           const std::string& algorithm,
                                           const FeasibleSet* set) {
    if (algorithm == "saol-mw" || algorithm == "mw") {
        const std::int64_t arms = config.arms;
        const MwRate rate = config.mw_rate;
        return [arms, rate](const DyadicInterval& interval) -> std::unique_ptr<Learner> {
            if (rate == MwRate::FixedHorizon)
                return std::make_unique<MwLearner>(arms, rate, interval.length());
            return std::make_unique<MwLearner>(arms, rate);
        };
    }
    if (set == nullptr) throw std::logic_error("make_learner_factory: missing feasible set");
    const FeasibleSet feasible = *set;
    return [feasible](const DyadicInterval&) -> std::unique_ptr<Learner> {
        return std::make_unique<OgdLearner>(feasible);
    };
}

struct SingleRun {
    Trace trace;
    RegretReport report;
};

inline bool bounds_requested(const ExperimentConfig& config, const std::string& algorithm) {
    if (config.check_bounds == "on") return true;
    if (config.check_bounds == "off") return false;
    return algorithm.rfind("saol", 0) == 0;
}

inline RegretBoundSpec bound_spec_for(const ExperimentConfig& config, const FeasibleSet* set) {
    double coefficient = 0.0;
    if (config.bound_coefficient) {
        coefficient = *config.bound_coefficient;
    } else if (config.scenario == "experts") {
        coefficient = 2.0 * std::sqrt(std::log(static_cast<double>(std::max<std::int64_t>(
                                config.arms, 2)))); // ln N; N=1 degenerates to the N=2 constant
    } else {
        coefficient = 3.0 * set->diameter * set->lipschitz;
    }
    return make_regret_bound_spec(coefficient, config.bound_exponent);
}

inline SingleRun execute_run(const ExperimentConfig& config, const std::string& algorithm,
                             std::uint64_t seed) {
    const bool oco = config.scenario == "oco";
    std::optional<FeasibleSet> set;
    if (oco) set = make_feasible_set(config);

    EnvironmentSpec env_spec{config.environment, config.horizon, seed};
    const std::vector<Round> rounds = generate_environment(env_spec, oco ? &*set : nullptr);

    SingleRun run;
    run.trace.meta.scenario = config.scenario;
    run.trace.meta.algorithm = algorithm;
    run.trace.meta.mode = config.mode == PlayMode::Sample ? "sample" : "expected";
    run.trace.meta.seed = seed;
    if (oco) {
        run.trace.meta.dimension = config.dimension;
        run.trace.meta.diameter = set->diameter;
        run.trace.meta.lipschitz = set->lipschitz;
    } else {
        run.trace.meta.arms = config.arms;
    }

    if (algorithm.rfind("saol", 0) == 0) {
        SaolOptions options;
        options.mode = config.mode;
        options.seed = seed;
        options.diagnostics = config.diagnostics;
        options.weight_scale = config.weight_scale;
        SaolLearner learner(make_learner_factory(config, algorithm, oco ? &*set : nullptr),
                            options);
        for (const Round& round : rounds) run.trace.push(learner.step(round));
    } else {
        std::unique_ptr<Learner> learner;
        if (algorithm == "mw")
            learner = std::make_unique<MwLearner>(config.arms, config.mw_rate,
                                                  config.mw_rate == MwRate::FixedHorizon
                                                      ? config.horizon
                                                      : std::int64_t{0});
        else
            learner = std::make_unique<OgdLearner>(*set);
        for (const Round& round : rounds) {
            TraceRecord record;
            record.t = round.t;
            record.action = learner->predict(round.context);
            record.realized_loss = evaluate_loss(round.loss, record.action);
            record.potential = std::numeric_limits<double>::quiet_NaN();
            learner->update(round.loss);
            run.trace.push(std::move(record));
        }
    }
    run.trace.finalize();

    RegretOracle oracle = oco ? RegretOracle(OcoLossTable(rounds, *set))
                              : RegretOracle(ExpertLossTable(rounds));
    const std::vector<std::int64_t> grid = config.tau_grid == "all"
                                               ? full_window_grid(config.horizon)
                                               : dyadic_window_grid(config.horizon);
    run.report = build_regret_report(run.trace, oracle, grid,
                                     bound_spec_for(config, oco ? &*set : nullptr),
                                     bounds_requested(config, algorithm),
                                     config.tracking_switches);
    return run;
}

// ---------------------------------------------------------------------------
// Parallel seed execution

inline int thread_cap() {
    if (const char* env = std::getenv("SAOL_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) return cap;
        } catch (const std::exception&) {
        }
    }
    const unsigned hardware = std::thread::hardware_concurrency();
    return hardware == 0 ? 1 : static_cast<int>(hardware);
}

template <typename Job>
inline void run_jobs(std::size_t count, const Job& job) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_cap()), count);
    std::vector<std::exception_ptr> errors(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                job(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                    try {
                        job(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (std::thread& worker : pool) worker.join();
    }
    for (const std::exception_ptr& error : errors)
        if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// Artifact writing

namespace detail {

inline void write_file(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    body(out);
    out.flush();
    if (!out) throw IoError("failed while writing " + path.string());
}

inline std::filesystem::path prepare_out_dir(const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    return out_dir;
}

} // namespace detail

inline void summarize_run(const ExperimentConfig& config, const std::string& algorithm,
                          std::uint64_t seed, const RegretReport& report, std::ostream& out) {
    out << "[seed " << seed << "] algorithm=" << algorithm << " scenario=" << config.scenario
        << " T=" << config.horizon
        << " mode=" << (config.mode == PlayMode::Sample ? "sample" : "expected") << "\n";
    if (!report.bounds_checked) {
        out << "  bound checks: off\n";
        return;
    }
    std::size_t window_pass = 0;
    for (const auto& row : report.windows) window_pass += row.pass ? 1 : 0;
    out << "  theorem1 window check: " << window_pass << "/" << report.windows.size() << " "
        << (window_pass == report.windows.size() ? "PASS" : "FAIL") << "\n";
    if (!report.tracking.empty()) {
        std::size_t tracking_pass = 0;
        for (const auto& row : report.tracking) tracking_pass += row.pass ? 1 : 0;
        out << "  theorem2 tracking check: " << tracking_pass << "/" << report.tracking.size()
            << " " << (tracking_pass == report.tracking.size() ? "PASS" : "FAIL") << "\n";
    }
}

// Execute every seed of a single-algorithm config, write per-seed artifacts,
// print the summary. Returns kExitOk or kExitBoundCheckFailed.
inline int run_experiment(const ExperimentConfig& config, std::ostream& summary) {
    if (config.algorithms.size() != 1)
        throw ConfigError("config: run needs exactly one algorithm (use compare for several)");
    const std::string algorithm = config.algorithms.front();
    const std::filesystem::path out_dir = detail::prepare_out_dir(config.out_dir);

    std::vector<SingleRun> runs(config.seeds.size());
    run_jobs(config.seeds.size(),
             [&](std::size_t i) { runs[i] = execute_run(config, algorithm, config.seeds[i]); });

    bool all_pass = true;
    for (std::size_t i = 0; i < config.seeds.size(); ++i) {
        const std::uint64_t seed = config.seeds[i];
        const std::string tag = "_s" + std::to_string(seed);
        detail::write_file(out_dir / ("trace" + tag + ".csv"),
                           [&](std::ostream& out) { write_trace_csv(runs[i].trace, out); });
        detail::write_file(out_dir / ("trace" + tag + ".meta"),
                           [&](std::ostream& out) { write_trace_metadata(runs[i].trace, out); });
        detail::write_file(out_dir / ("report" + tag + ".csv"), [&](std::ostream& out) {
            write_regret_report_csv(runs[i].report, out);
        });
        if (!runs[i].report.tracking.empty())
            detail::write_file(out_dir / ("tracking" + tag + ".csv"), [&](std::ostream& out) {
                write_tracking_report_csv(runs[i].report, out);
            });
        summarize_run(config, algorithm, seed, runs[i].report, summary);
        all_pass = all_pass && runs[i].report.all_pass();
    }
    summary << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitOk : kExitBoundCheckFailed;
}

// Side-by-side runs of several algorithms on identical environments. Writes
// compare.csv with one row per (algorithm, window length): the mean worst
// regret over seeds.
inline int run_comparison(const ExperimentConfig& config, std::ostream& summary) {
    if (config.algorithms.size() < 2)
        throw ConfigError("config: compare needs at least two algorithms");
    const std::filesystem::path out_dir = detail::prepare_out_dir(config.out_dir);

    const std::size_t total = config.algorithms.size() * config.seeds.size();
    std::vector<SingleRun> runs(total);
    run_jobs(total, [&](std::size_t i) {
        const std::size_t algo = i / config.seeds.size();
        const std::size_t seed = i % config.seeds.size();
        runs[i] = execute_run(config, config.algorithms[algo], config.seeds[seed]);
    });

    bool all_pass = true;
    detail::write_file(out_dir / "compare.csv", [&](std::ostream& out) {
        out << "algorithm,tau,sa_regret\n";
        for (std::size_t algo = 0; algo < config.algorithms.size(); ++algo) {
            const std::size_t base = algo * config.seeds.size();
            const std::size_t rows = runs[base].report.windows.size();
            for (std::size_t row = 0; row < rows; ++row) {
                double mean = 0.0;
                for (std::size_t seed = 0; seed < config.seeds.size(); ++seed)
                    mean += runs[base + seed].report.windows[row].regret;
                mean /= static_cast<double>(config.seeds.size());
                out << config.algorithms[algo] << ','
                    << runs[base].report.windows[row].window << ',' << format_double(mean)
                    << '\n';
            }
        }
    });

    for (std::size_t algo = 0; algo < config.algorithms.size(); ++algo)
        for (std::size_t seed = 0; seed < config.seeds.size(); ++seed) {
            const SingleRun& run = runs[algo * config.seeds.size() + seed];
            summarize_run(config, config.algorithms[algo], config.seeds[seed], run.report,
                          summary);
            all_pass = all_pass && run.report.all_pass();
        }
    summary << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitOk : kExitBoundCheckFailed;
}

// ---------------------------------------------------------------------------
// Covering inspection (the scan-intervals subcommand)

inline std::string format_interval(const DyadicInterval& interval) {
    return std::to_string(interval.start) + ":" + std::to_string(interval.end);
}

inline std::string format_interval_list(const std::vector<DyadicInterval>& intervals) {
    std::string text;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (i > 0) text += ';';
        text += format_interval(intervals[i]);
    }
    return text;
}

inline void write_interval_scan(std::int64_t from, std::int64_t to, std::ostream& out) {
    if (from < 1 || to < from)
        throw ConfigError("scan-intervals: need 1 <= from <= to");
    out << "t,active,entering\n";
    for (std::int64_t t = from; t <= to; ++t)
        out << t << ',' << format_interval_list(active_set(t)) << ','
            << format_interval_list(entering_set(t)) << '\n';
}

inline void write_partition_scan(std::int64_t start, std::int64_t end, std::ostream& out) {
    const GeometricPartition partition = geometric_partition(start, end);
    out << "partition " << start << ":" << end << " left=" << format_interval_list(partition.left)
        << " right=" << format_interval_list(partition.right) << "\n";
}

} // namespace saol
