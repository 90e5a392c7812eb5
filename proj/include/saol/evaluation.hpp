#pragma once
/*
Exact regret accounting and the closed-form guarantees runs are checked
against.

Best-fixed oracles answer "what would the single best strategy have lost on
[q,s]" in O(1) per interval after O(T) preprocessing: per-arm prefix sums for
experts; per-family prefix statistics for the built-in convex losses (the
cumulative quadratic is minimized at the mean center, the cumulative affine at
an extreme point of the set). A generic offline oracle (projected subgradient
with tail averaging) covers any convex sequence and is used to validate the
closed forms.

The scanner computes, for each window length in a grid, the worst regret over
every window of that length. The switching oracle computes the exact best
action sequence with at most m switches by dynamic programming over
(round, arm, switches used) with backpointer recovery.

Guarantee evaluators, with log = log2 throughout (the covering is dyadic, and
log2 >= ln on x >= 1 makes this the conservative reading):
  interval regret of the meta-learner on [q,s]:
      4/(2^a - 1) * C * |I|^a + 40 * log2(s+1) * sqrt(|I|)
  cumulative instantaneous regret against the instance on its own block:
      5 * log2(s+1) * sqrt(|I|)
  pseudo-weight potential at round t:  t * (log2(t) + 1)
  regret against the best m-switch sequence:  C * T^a * m^(1-a).
*/

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "saol/baselines.hpp"
#include "saol/core.hpp"
#include "saol/environments.hpp"
#include "saol/intervals.hpp"
#include "saol/trace.hpp"

namespace saol {

// ---------------------------------------------------------------------------
// Best-fixed oracles

class ExpertLossTable {
public:
    explicit ExpertLossTable(const std::vector<Round>& rounds) {
        matrix_ = loss_matrix(rounds, arms_);
        horizon_ = static_cast<std::int64_t>(rounds.size());
        prefix_.assign(static_cast<std::size_t>((horizon_ + 1) * arms_), 0.0);
        for (std::int64_t t = 1; t <= horizon_; ++t)
            for (std::int64_t a = 0; a < arms_; ++a)
                prefix_at(t, a) = prefix_at(t - 1, a) + loss(t, a);
    }

    std::int64_t horizon() const { return horizon_; }
    std::int64_t arms() const { return arms_; }

    double loss(std::int64_t t, std::int64_t arm) const {
        return matrix_[static_cast<std::size_t>((t - 1) * arms_ + arm)];
    }

    double arm_loss(std::int64_t arm, std::int64_t start, std::int64_t end) const {
        check(start, end);
        return prefix(end, arm) - prefix(start - 1, arm);
    }

    struct BestFixed {
        double loss = 0.0;
        std::int64_t arm = 0;
    };

    // Lowest arm index wins ties.
    BestFixed best_fixed(std::int64_t start, std::int64_t end) const {
        check(start, end);
        BestFixed best{arm_loss(0, start, end), 0};
        for (std::int64_t a = 1; a < arms_; ++a) {
            const double value = arm_loss(a, start, end);
            if (value < best.loss) best = BestFixed{value, a};
        }
        return best;
    }

private:
    void check(std::int64_t start, std::int64_t end) const {
        if (start < 1 || end < start || end > horizon_)
            throw std::out_of_range("ExpertLossTable: interval outside horizon");
    }
    double prefix(std::int64_t t, std::int64_t arm) const {
        return prefix_[static_cast<std::size_t>(t * arms_ + arm)];
    }
    double& prefix_at(std::int64_t t, std::int64_t arm) {
        return prefix_[static_cast<std::size_t>(t * arms_ + arm)];
    }

    std::int64_t horizon_ = 0;
    std::int64_t arms_ = 0;
    std::vector<double> matrix_; // row-major horizon x arms
    std::vector<double> prefix_;
};

// Closed-form interval minimizers for the built-in convex families. The
// sequence must be single-family.
class OcoLossTable {
public:
    OcoLossTable(const std::vector<Round>& rounds, FeasibleSet set) : set_(std::move(set)) {
        horizon_ = static_cast<std::int64_t>(rounds.size());
        dim_ = static_cast<std::int64_t>(set_dimension(set_));
        if (rounds.empty()) throw std::invalid_argument("OcoLossTable: empty round sequence");
        const auto* first = std::get_if<ConvexLoss>(&rounds.front().loss);
        if (first == nullptr) throw std::invalid_argument("OcoLossTable: not a convex environment");
        quadratic_ = std::holds_alternative<QuadraticLoss>(*first);

        prefix_vec_.assign(static_cast<std::size_t>((horizon_ + 1) * dim_), 0.0);
        prefix_sq_.assign(static_cast<std::size_t>(horizon_ + 1), 0.0);
        prefix_offset_.assign(static_cast<std::size_t>(horizon_ + 1), 0.0);
        for (std::int64_t t = 1; t <= horizon_; ++t) {
            const auto& loss = std::get<ConvexLoss>(rounds[static_cast<std::size_t>(t - 1)].loss);
            if (quadratic_) {
                const auto& quad = std::get<QuadraticLoss>(loss);
                if (t == 1) scale_ = quad.scale;
                if (quad.scale != scale_ ||
                    quad.center.size() != static_cast<std::size_t>(dim_))
                    throw std::invalid_argument("OcoLossTable: mixed quadratic parameters");
                double sq = 0.0;
                for (std::int64_t i = 0; i < dim_; ++i) {
                    vec_at(t, i) = vec(t - 1, i) + quad.center[static_cast<std::size_t>(i)];
                    sq += quad.center[static_cast<std::size_t>(i)] *
                          quad.center[static_cast<std::size_t>(i)];
                }
                prefix_sq_[static_cast<std::size_t>(t)] =
                    prefix_sq_[static_cast<std::size_t>(t - 1)] + sq;
            } else {
                const auto& affine = std::get<AffineLoss>(loss);
                if (affine.slope.size() != static_cast<std::size_t>(dim_))
                    throw std::invalid_argument("OcoLossTable: affine dimension mismatch");
                for (std::int64_t i = 0; i < dim_; ++i)
                    vec_at(t, i) = vec(t - 1, i) + affine.slope[static_cast<std::size_t>(i)];
                prefix_offset_[static_cast<std::size_t>(t)] =
                    prefix_offset_[static_cast<std::size_t>(t - 1)] + affine.offset;
            }
        }
    }

    std::int64_t horizon() const { return horizon_; }
    const FeasibleSet& feasible_set() const { return set_; }

    struct BestFixed {
        double loss = 0.0;
        std::vector<double> point;
    };

    BestFixed best_fixed(std::int64_t start, std::int64_t end) const {
        if (start < 1 || end < start || end > horizon_)
            throw std::out_of_range("OcoLossTable: interval outside horizon");
        const auto count = static_cast<double>(end - start + 1);
        if (quadratic_) {
            // sum scale*|x-c_t|^2 is minimized at the center mean, which lies
            // in the set because every c_t does.
            std::vector<double> mean(static_cast<std::size_t>(dim_));
            double mean_sq = 0.0;
            for (std::int64_t i = 0; i < dim_; ++i) {
                mean[static_cast<std::size_t>(i)] = (vec(end, i) - vec(start - 1, i)) / count;
                mean_sq += mean[static_cast<std::size_t>(i)] * mean[static_cast<std::size_t>(i)];
            }
            const double centers_sq = prefix_sq_[static_cast<std::size_t>(end)] -
                                      prefix_sq_[static_cast<std::size_t>(start - 1)];
            const double value = scale_ * (centers_sq - count * mean_sq);
            return BestFixed{std::max(value, 0.0), std::move(mean)};
        }
        // sum of affine losses: minimize <sum slope, x> over the set.
        std::vector<double> total(static_cast<std::size_t>(dim_));
        for (std::int64_t i = 0; i < dim_; ++i)
            total[static_cast<std::size_t>(i)] = vec(end, i) - vec(start - 1, i);
        std::vector<double> point(static_cast<std::size_t>(dim_));
        if (const auto* box = std::get_if<Box>(&set_.shape)) {
            for (std::size_t i = 0; i < point.size(); ++i)
                point[i] = total[i] > 0.0 ? box->lower[i] : box->upper[i];
        } else {
            const auto& ball = std::get<Ball>(set_.shape);
            double norm = 0.0;
            for (double v : total) norm += v * v;
            norm = std::sqrt(norm);
            for (std::size_t i = 0; i < point.size(); ++i)
                point[i] = norm > 0.0 ? ball.center[i] - ball.radius * total[i] / norm
                                      : ball.center[i];
        }
        double value = prefix_offset_[static_cast<std::size_t>(end)] -
                       prefix_offset_[static_cast<std::size_t>(start - 1)];
        for (std::size_t i = 0; i < point.size(); ++i) value += total[i] * point[i];
        return BestFixed{value, std::move(point)};
    }

private:
    double vec(std::int64_t t, std::int64_t i) const {
        return prefix_vec_[static_cast<std::size_t>(t * dim_ + i)];
    }
    double& vec_at(std::int64_t t, std::int64_t i) {
        return prefix_vec_[static_cast<std::size_t>(t * dim_ + i)];
    }

    FeasibleSet set_;
    std::int64_t horizon_ = 0;
    std::int64_t dim_ = 0;
    bool quadratic_ = true;
    double scale_ = 1.0;
    std::vector<double> prefix_vec_;    // centers or slopes
    std::vector<double> prefix_sq_;     // |center|^2 (quadratic family)
    std::vector<double> prefix_offset_; // offsets (affine family)
};

// Scenario-dispatching wrapper used by the scanner and reports.
class RegretOracle {
public:
    explicit RegretOracle(ExpertLossTable table) : table_(std::move(table)) {}
    explicit RegretOracle(OcoLossTable table) : table_(std::move(table)) {}

    std::int64_t horizon() const {
        if (const auto* experts = std::get_if<ExpertLossTable>(&table_)) return experts->horizon();
        return std::get<OcoLossTable>(table_).horizon();
    }

    double best_fixed_loss(std::int64_t start, std::int64_t end) const {
        if (const auto* experts = std::get_if<ExpertLossTable>(&table_))
            return experts->best_fixed(start, end).loss;
        return std::get<OcoLossTable>(table_).best_fixed(start, end).loss;
    }

    const ExpertLossTable* experts() const { return std::get_if<ExpertLossTable>(&table_); }
    const OcoLossTable* oco() const { return std::get_if<OcoLossTable>(&table_); }

private:
    std::variant<ExpertLossTable, OcoLossTable> table_;
};

inline double interval_regret(const Trace& trace, const RegretOracle& oracle,
                              std::int64_t start, std::int64_t end) {
    return trace.cumulative_loss(start, end) - oracle.best_fixed_loss(start, end);
}

// ---------------------------------------------------------------------------
// Generic offline oracle: projected subgradient descent on the average loss
// over the interval, averaging the tail quarter of the iterates.

struct OfflineOracleOptions {
    int iterations = 10000;
    double tail_fraction = 0.25;
};

inline std::vector<double> offline_minimizer(const std::vector<Round>& rounds,
                                             std::int64_t start, std::int64_t end,
                                             const FeasibleSet& set,
                                             OfflineOracleOptions options = {}) {
    if (start < 1 || end < start || end > static_cast<std::int64_t>(rounds.size()))
        throw std::out_of_range("offline_minimizer: interval outside horizon");
    const double count = static_cast<double>(end - start + 1);
    std::vector<double> x = set_center(set);
    std::vector<double> sum(x.size(), 0.0);
    const int tail_start =
        options.iterations - std::max(1, static_cast<int>(options.iterations * options.tail_fraction));
    int averaged = 0;
    for (int iter = 1; iter <= options.iterations; ++iter) {
        std::vector<double> grad(x.size(), 0.0);
        for (std::int64_t t = start; t <= end; ++t) {
            const auto& loss = std::get<ConvexLoss>(rounds[static_cast<std::size_t>(t - 1)].loss);
            const std::vector<double> g = subgradient(loss, x);
            for (std::size_t i = 0; i < x.size(); ++i) grad[i] += g[i] / count;
        }
        const double eta =
            set.diameter / (std::max(set.lipschitz, 1e-12) * std::sqrt(static_cast<double>(iter)));
        x = gradient_step(x, grad, eta, set);
        if (iter > tail_start) {
            for (std::size_t i = 0; i < x.size(); ++i) sum[i] += x[i];
            ++averaged;
        }
    }
    for (double& v : sum) v /= static_cast<double>(averaged);
    return project(std::move(sum), set);
}

inline double offline_best_loss(const std::vector<Round>& rounds, std::int64_t start,
                                std::int64_t end, const FeasibleSet& set,
                                OfflineOracleOptions options = {}) {
    const std::vector<double> point = offline_minimizer(rounds, start, end, set, options);
    double total = 0.0;
    for (std::int64_t t = start; t <= end; ++t)
        total += convex_value(std::get<ConvexLoss>(rounds[static_cast<std::size_t>(t - 1)].loss),
                              point);
    return total;
}

// ---------------------------------------------------------------------------
// Worst-regret-per-window scanner

struct SaRegretEntry {
    std::int64_t window = 1;
    double regret = 0.0;
    std::int64_t argmax_start = 1;
    std::int64_t argmax_end = 1;
};

inline std::vector<std::int64_t> dyadic_window_grid(std::int64_t horizon) {
    std::vector<std::int64_t> grid;
    for (std::int64_t w = 1; w <= horizon; w *= 2) grid.push_back(w);
    if (grid.empty() || grid.back() != horizon) grid.push_back(horizon);
    return grid;
}

inline std::vector<std::int64_t> full_window_grid(std::int64_t horizon) {
    std::vector<std::int64_t> grid(static_cast<std::size_t>(horizon));
    for (std::int64_t w = 1; w <= horizon; ++w) grid[static_cast<std::size_t>(w - 1)] = w;
    return grid;
}

// Max interval regret over all windows of each grid length; earliest window
// wins ties.
inline std::vector<SaRegretEntry> sa_regret_profile(const Trace& trace, const RegretOracle& oracle,
                                                    const std::vector<std::int64_t>& window_grid) {
    const std::int64_t horizon = trace.horizon();
    std::vector<SaRegretEntry> profile;
    profile.reserve(window_grid.size());
    for (std::int64_t window : window_grid) {
        if (window < 1 || window > horizon)
            throw std::out_of_range("sa_regret_profile: window outside horizon");
        SaRegretEntry entry{window, -std::numeric_limits<double>::infinity(), 1, window};
        for (std::int64_t start = 1; start + window - 1 <= horizon; ++start) {
            const double regret = interval_regret(trace, oracle, start, start + window - 1);
            if (regret > entry.regret) {
                entry.regret = regret;
                entry.argmax_start = start;
                entry.argmax_end = start + window - 1;
            }
        }
        profile.push_back(entry);
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Best action sequence with at most m switches (exact dynamic program)

struct CompoundAction {
    std::vector<std::int64_t> arms; // one entry per round

    std::int64_t switches() const {
        std::int64_t count = 0;
        for (std::size_t t = 1; t < arms.size(); ++t)
            if (arms[t] != arms[t - 1]) ++count;
        return count;
    }
};

struct CompoundBest {
    double loss = 0.0;
    CompoundAction action;
};

// O(T * N * m) dynamic program over (round, arm, switches used), with
// backpointers. Ties prefer staying on the same arm, then the lowest arm.
inline CompoundBest best_compound_loss(const ExpertLossTable& table, std::int64_t max_switches) {
    const std::int64_t horizon = table.horizon();
    const std::int64_t arms = table.arms();
    if (max_switches < 0)
        throw std::invalid_argument("best_compound_loss: switch budget must be >= 0");
    if (max_switches > horizon - 1)
        throw std::invalid_argument("best_compound_loss: switch budget must be <= T-1");
    const std::int64_t budgets = max_switches + 1;

    // value[j * arms + a]: best loss over rounds 1..t ending at arm a with at
    // most j switches. from[] holds the predecessor arm (or a for "stay").
    std::vector<double> value(static_cast<std::size_t>(budgets * arms));
    std::vector<double> previous(value.size());
    std::vector<std::int64_t> from(static_cast<std::size_t>(horizon * budgets * arms));

    for (std::int64_t j = 0; j < budgets; ++j)
        for (std::int64_t a = 0; a < arms; ++a) {
            value[static_cast<std::size_t>(j * arms + a)] = table.loss(1, a);
            from[static_cast<std::size_t>(j * arms + a)] = a;
        }

    for (std::int64_t t = 2; t <= horizon; ++t) {
        std::swap(previous, value);
        // Lowest-index minimum and runner-up of the previous row per budget.
        std::vector<std::int64_t> best_arm(static_cast<std::size_t>(budgets));
        std::vector<std::int64_t> second_arm(static_cast<std::size_t>(budgets));
        for (std::int64_t j = 0; j < budgets; ++j) {
            std::int64_t lo = 0;
            for (std::int64_t a = 1; a < arms; ++a)
                if (previous[static_cast<std::size_t>(j * arms + a)] <
                    previous[static_cast<std::size_t>(j * arms + lo)])
                    lo = a;
            std::int64_t runner = lo == 0 ? (arms > 1 ? 1 : 0) : 0;
            for (std::int64_t a = 0; a < arms; ++a) {
                if (a == lo) continue;
                if (previous[static_cast<std::size_t>(j * arms + a)] <
                    previous[static_cast<std::size_t>(j * arms + runner)])
                    runner = a;
            }
            best_arm[static_cast<std::size_t>(j)] = lo;
            second_arm[static_cast<std::size_t>(j)] = runner;
        }
        for (std::int64_t j = 0; j < budgets; ++j) {
            for (std::int64_t a = 0; a < arms; ++a) {
                double best = previous[static_cast<std::size_t>(j * arms + a)];
                std::int64_t source = a; // stay
                if (j > 0 && arms > 1) {
                    std::int64_t other = best_arm[static_cast<std::size_t>(j - 1)];
                    if (other == a) other = second_arm[static_cast<std::size_t>(j - 1)];
                    const double via = previous[static_cast<std::size_t>((j - 1) * arms + other)];
                    if (via < best) {
                        best = via;
                        source = other;
                    }
                }
                value[static_cast<std::size_t>(j * arms + a)] = best + table.loss(t, a);
                from[static_cast<std::size_t>(((t - 1) * budgets + j) * arms + a)] = source;
            }
        }
    }

    std::int64_t arm = 0;
    const std::int64_t budget = budgets - 1;
    for (std::int64_t a = 1; a < arms; ++a)
        if (value[static_cast<std::size_t>(budget * arms + a)] <
            value[static_cast<std::size_t>(budget * arms + arm)])
            arm = a;

    CompoundBest result;
    result.loss = value[static_cast<std::size_t>(budget * arms + arm)];
    result.action.arms.assign(static_cast<std::size_t>(horizon), 0);
    std::int64_t j = budget;
    for (std::int64_t t = horizon; t >= 1; --t) {
        result.action.arms[static_cast<std::size_t>(t - 1)] = arm;
        const std::int64_t source =
            from[static_cast<std::size_t>(((t - 1) * budgets + j) * arms + arm)];
        if (source != arm) --j;
        arm = source;
    }
    return result;
}

inline double tracking_regret(const Trace& trace, const ExpertLossTable& table,
                              std::int64_t max_switches) {
    return trace.cumulative_loss(1, trace.horizon()) -
           best_compound_loss(table, max_switches).loss;
}

// ---------------------------------------------------------------------------
// Guarantee evaluators (log = log2 throughout)

// 4/(2^a - 1) * C * |I|^a + 40 * log2(s+1) * sqrt(|I|) for I = [q,s].
inline double interval_regret_bound(const RegretBoundSpec& spec, std::int64_t start,
                                    std::int64_t end) {
    if (start < 1 || end < start)
        throw std::invalid_argument("interval_regret_bound: bad interval");
    const double length = static_cast<double>(end - start + 1);
    const double lead = 4.0 / (std::pow(2.0, spec.exponent) - 1.0);
    return lead * spec.coefficient * std::pow(length, spec.exponent) +
           40.0 * std::log2(static_cast<double>(end) + 1.0) * std::sqrt(length);
}

// 5 * log2(s+1) * sqrt(|I|) for a covering block I = [q,s].
inline double covered_interval_bound(const DyadicInterval& interval) {
    if (!is_covering_interval(interval.start, interval.end) ||
        interval.length() != std::int64_t{1} << interval.level)
        throw std::invalid_argument("covered_interval_bound: interval not in the covering");
    return 5.0 * std::log2(static_cast<double>(interval.end) + 1.0) *
           std::sqrt(static_cast<double>(interval.length()));
}

// t * (log2(t) + 1), the cap on the pseudo-weight total at round t.
inline double potential_bound(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("potential_bound: t must be >= 1");
    return static_cast<double>(t) * (std::log2(static_cast<double>(t)) + 1.0);
}

// C * T^a * m^(1-a), the tracking guarantee implied by a per-window bound
// C * w^a.
inline double tracking_regret_bound(const RegretBoundSpec& spec, std::int64_t horizon,
                                    std::int64_t max_switches) {
    if (max_switches < 1)
        throw std::invalid_argument("tracking_regret_bound: need at least one switch");
    if (horizon < 1) throw std::invalid_argument("tracking_regret_bound: bad horizon");
    return spec.coefficient * std::pow(static_cast<double>(horizon), spec.exponent) *
           std::pow(static_cast<double>(max_switches), 1.0 - spec.exponent);
}

// The per-window coefficient implied by the interval guarantee once the
// log2(s+1) term is folded at s = T: 4/(2^a - 1) * C + 40 * log2(T+1).
inline double folded_window_coefficient(const RegretBoundSpec& spec, std::int64_t horizon) {
    return 4.0 / (std::pow(2.0, spec.exponent) - 1.0) * spec.coefficient +
           40.0 * std::log2(static_cast<double>(horizon) + 1.0);
}

// ---------------------------------------------------------------------------
// Regret report

struct RegretReport {
    struct WindowRow {
        std::int64_t window = 1;
        double regret = 0.0;
        std::int64_t argmax_start = 1;
        std::int64_t argmax_end = 1;
        double bound = 0.0;
        bool pass = true;
    };
    struct TrackingRow {
        std::int64_t max_switches = 1;
        double regret = 0.0;
        double bound = 0.0;
        bool pass = true;
    };

    std::vector<WindowRow> windows;
    std::vector<TrackingRow> tracking;
    bool bounds_checked = false;

    bool all_pass() const {
        if (!bounds_checked) return true;
        for (const WindowRow& row : windows)
            if (!row.pass) return false;
        for (const TrackingRow& row : tracking)
            if (!row.pass) return false;
        return true;
    }
};

// Largest regret-minus-bound margin over every window of the given length;
// nonpositive means every window of that length satisfies its own bound.
inline double worst_window_margin(const Trace& trace, const RegretOracle& oracle,
                                  std::int64_t window, const RegretBoundSpec& bound_spec) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::int64_t start = 1; start + window - 1 <= trace.horizon(); ++start) {
        const std::int64_t end = start + window - 1;
        worst = std::max(worst, interval_regret(trace, oracle, start, end) -
                                    interval_regret_bound(bound_spec, start, end));
    }
    return worst;
}

inline RegretReport build_regret_report(const Trace& trace, const RegretOracle& oracle,
                                        const std::vector<std::int64_t>& window_grid,
                                        const RegretBoundSpec& bound_spec, bool check_bounds,
                                        const std::vector<std::int64_t>& tracking_switches = {}) {
    RegretReport report;
    report.bounds_checked = check_bounds;
    for (const SaRegretEntry& entry : sa_regret_profile(trace, oracle, window_grid)) {
        RegretReport::WindowRow row;
        row.window = entry.window;
        row.regret = entry.regret;
        row.argmax_start = entry.argmax_start;
        row.argmax_end = entry.argmax_end;
        row.bound = interval_regret_bound(bound_spec, entry.argmax_start, entry.argmax_end);
        row.pass = !check_bounds ||
                   worst_window_margin(trace, oracle, entry.window, bound_spec) <= 0.0;
        report.windows.push_back(row);
    }
    if (!tracking_switches.empty()) {
        const ExpertLossTable* table = oracle.experts();
        if (table == nullptr)
            throw std::invalid_argument("build_regret_report: tracking needs an experts scenario");
        const RegretBoundSpec folded{folded_window_coefficient(bound_spec, trace.horizon()),
                                     bound_spec.exponent};
        for (std::int64_t switches : tracking_switches) {
            RegretReport::TrackingRow row;
            row.max_switches = switches;
            row.regret = tracking_regret(trace, *table, switches);
            row.bound = tracking_regret_bound(folded, trace.horizon(), switches);
            row.pass = !check_bounds || row.regret <= row.bound;
            report.tracking.push_back(row);
        }
    }
    return report;
}

inline void write_regret_report_csv(const RegretReport& report, std::ostream& out) {
    out << "tau,max_regret,argmax_q,argmax_s,theorem1_bound,pass\n";
    for (const RegretReport::WindowRow& row : report.windows)
        out << row.window << ',' << format_double(row.regret) << ',' << row.argmax_start << ','
            << row.argmax_end << ',' << format_double(row.bound) << ',' << (row.pass ? 1 : 0)
            << '\n';
}

inline void write_tracking_report_csv(const RegretReport& report, std::ostream& out) {
    out << "m,tracking_regret,tracking_bound,pass\n";
    for (const RegretReport::TrackingRow& row : report.tracking)
        out << row.max_switches << ',' << format_double(row.regret) << ','
            << format_double(row.bound) << ',' << (row.pass ? 1 : 0) << '\n';
}

} // namespace saol
