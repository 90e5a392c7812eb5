#pragma once
/*
Test-only reference oracles, kept deliberately naive and independent of the
library's fast paths: direct definition-chasing enumeration for the covering,
direct summation for regrets, and boundary-set enumeration for switch-limited
action sequences. Expected values in the test suites are frozen from these.
*/

#include <cstdint>
#include <limits>
#include <vector>

#include "saol/core.hpp"
#include "saol/environments.hpp"
#include "saol/intervals.hpp"
#include "saol/trace.hpp"

namespace brute {

// Covering membership straight from the definition: scan levels and block
// indexes and keep blocks containing t.
inline std::vector<saol::DyadicInterval> naive_active_set(std::int64_t t) {
    std::vector<saol::DyadicInterval> blocks;
    for (int level = 0; (std::int64_t{1} << level) <= t; ++level) {
        const std::int64_t len = std::int64_t{1} << level;
        for (std::int64_t index = 1; index * len <= t; ++index) {
            const std::int64_t start = index * len;
            const std::int64_t end = start + len - 1;
            if (start <= t && t <= end) blocks.push_back(saol::DyadicInterval{start, end, level});
        }
    }
    return blocks;
}

// Per-arm loss over [start,end] by direct summation.
inline double direct_arm_loss(const std::vector<saol::Round>& rounds, std::int64_t arm,
                              std::int64_t start, std::int64_t end) {
    double total = 0.0;
    for (std::int64_t t = start; t <= end; ++t)
        total += std::get<saol::ExpertLosses>(rounds[static_cast<std::size_t>(t - 1)].loss)
                     .values[static_cast<std::size_t>(arm)];
    return total;
}

inline double direct_best_fixed(const std::vector<saol::Round>& rounds, std::int64_t arms,
                                std::int64_t start, std::int64_t end) {
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t arm = 0; arm < arms; ++arm)
        best = std::min(best, direct_arm_loss(rounds, arm, start, end));
    return best;
}

inline double direct_trace_loss(const saol::Trace& trace, std::int64_t start, std::int64_t end) {
    double total = 0.0;
    for (std::int64_t t = start; t <= end; ++t) total += trace.record(t).realized_loss;
    return total;
}

// Worst regret over all windows of one length, all by direct summation.
inline double naive_window_regret(const saol::Trace& trace,
                                  const std::vector<saol::Round>& rounds, std::int64_t arms,
                                  std::int64_t window) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::int64_t start = 1; start + window - 1 <= trace.horizon(); ++start) {
        const std::int64_t end = start + window - 1;
        worst = std::max(worst, direct_trace_loss(trace, start, end) -
                                    direct_best_fixed(rounds, arms, start, end));
    }
    return worst;
}

// Exhaustive minimum over arm sequences with at most max_switches switches,
// enumerated as (boundary set, per-segment arm) pairs.
inline double enumerate_compound_best(const std::vector<saol::Round>& rounds, std::int64_t arms,
                                      std::int64_t max_switches) {
    const std::int64_t horizon = static_cast<std::int64_t>(rounds.size());
    // Segment-sum table by direct summation.
    std::vector<std::vector<double>> prefix(static_cast<std::size_t>(arms));
    for (std::int64_t arm = 0; arm < arms; ++arm) {
        prefix[static_cast<std::size_t>(arm)].assign(static_cast<std::size_t>(horizon + 1), 0.0);
        for (std::int64_t t = 1; t <= horizon; ++t)
            prefix[static_cast<std::size_t>(arm)][static_cast<std::size_t>(t)] =
                prefix[static_cast<std::size_t>(arm)][static_cast<std::size_t>(t - 1)] +
                std::get<saol::ExpertLosses>(rounds[static_cast<std::size_t>(t - 1)].loss)
                    .values[static_cast<std::size_t>(arm)];
    }
    const auto segment = [&](std::int64_t arm, std::int64_t start, std::int64_t end) {
        return prefix[static_cast<std::size_t>(arm)][static_cast<std::size_t>(end)] -
               prefix[static_cast<std::size_t>(arm)][static_cast<std::size_t>(start - 1)];
    };

    double best = std::numeric_limits<double>::infinity();
    // Explore: the segment beginning at `start` takes `arm`; it either runs to
    // the horizon or a new segment with a different arm begins at `boundary`.
    const auto explore = [&](auto&& self, std::int64_t start, std::int64_t previous_arm,
                             std::int64_t switches_left, double loss_so_far) -> void {
        for (std::int64_t arm = 0; arm < arms; ++arm) {
            if (arm == previous_arm) continue;
            best = std::min(best, loss_so_far + segment(arm, start, horizon));
            if (switches_left > 0)
                for (std::int64_t boundary = start + 1; boundary <= horizon; ++boundary)
                    self(self, boundary, arm, switches_left - 1,
                         loss_so_far + segment(arm, start, boundary - 1));
        }
    };
    explore(explore, 1, -1, max_switches, 0.0);
    return best;
}

// Central finite differences of a convex loss, for checking the closed-form
// subgradients on interior points.
inline std::vector<double> finite_difference_gradient(const saol::ConvexLoss& loss,
                                                      std::vector<double> point,
                                                      double h = 1e-6) {
    std::vector<double> grad(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        const double original = point[i];
        point[i] = original + h;
        const double up = saol::convex_value(loss, point);
        point[i] = original - h;
        const double down = saol::convex_value(loss, point);
        point[i] = original;
        grad[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

} // namespace brute
