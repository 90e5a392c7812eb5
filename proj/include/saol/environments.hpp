#pragma once
/*
Seeded environment generators.

Each generator is a pure function of its parameters and seed and materializes
the whole loss sequence up front. All produced values are guaranteed inside
[0,1]; parameterizations that could leave the range are rejected up front, not
clamped at generation time.

Experts environments draw per-arm losses mean + noise*(u - 1/2) with u uniform
in [0,1). The switching environment gives the designated arm of each segment a
strictly lower mean than every other arm. The drifting convex environment
emits one loss per round from a single family: scaled quadratics
|x - c_t|^2 / B^2 whose center random-walks inside the feasible set, or affine
losses 1/2 + <g_t, x> whose slope direction drifts on the sphere with
|g_t| = G.
*/

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "saol/baselines.hpp"
#include "saol/core.hpp"
#include "saol/rng.hpp"

namespace saol {

struct StationaryExpertsSpec {
    std::vector<double> mean_losses;
    double noise = 0.0; // full width of the uniform jitter around each mean
};

struct SwitchSegment {
    std::int64_t start = 1;
    std::int64_t end = 1;
    std::int64_t best_arm = 0;
};

struct SwitchingExpertsSpec {
    std::int64_t arms = 2;
    std::vector<SwitchSegment> segments; // must partition [1, horizon]
    double base = 0.1;                   // mean loss of the designated arm
    double gap = 0.5;                    // extra mean loss of every other arm
    double noise = 0.0;
};

struct AdversarialExpertsSpec {
    std::int64_t arms = 2; // iid uniform [0,1) losses, an arbitrary seeded matrix
};

enum class OcoLossFamily { Quadratic, Affine };

struct DriftingOcoSpec {
    OcoLossFamily family = OcoLossFamily::Quadratic;
    double drift = 0.05; // per-round movement of the minimizer
};

using EnvironmentKind = std::variant<StationaryExpertsSpec, SwitchingExpertsSpec,
                                     AdversarialExpertsSpec, DriftingOcoSpec>;

struct EnvironmentSpec {
    EnvironmentKind kind;
    std::int64_t horizon = 1;
    std::uint64_t seed = 0;
};

inline bool is_experts_environment(const EnvironmentSpec& spec) {
    return !std::holds_alternative<DriftingOcoSpec>(spec.kind);
}

// Evenly sized segments with the designated best arm cycling through the
// arms, one segment per switch plus one.
inline std::vector<SwitchSegment> even_segments(std::int64_t horizon, std::int64_t switches,
                                                std::int64_t arms) {
    if (horizon < switches + 1)
        throw std::invalid_argument("even_segments: horizon too short for the switch count");
    std::vector<SwitchSegment> segments;
    const std::int64_t pieces = switches + 1;
    for (std::int64_t i = 0; i < pieces; ++i) {
        const std::int64_t start = i * horizon / pieces + 1;
        const std::int64_t end = (i + 1) * horizon / pieces;
        segments.push_back(SwitchSegment{start, end, i % arms});
    }
    return segments;
}

namespace detail {

inline void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

inline double jitter(CounterRng& rng, double mean, double noise) {
    return mean + noise * (rng.next_unit() - 0.5);
}

inline std::vector<Round> experts_rounds(std::int64_t horizon,
                                         const std::function<void(std::int64_t, std::vector<double>&)>& fill,
                                         std::size_t arms) {
    std::vector<Round> rounds;
    rounds.reserve(static_cast<std::size_t>(horizon));
    for (std::int64_t t = 1; t <= horizon; ++t) {
        std::vector<double> values(arms);
        fill(t, values);
        rounds.push_back(Round{t, {}, ExpertLosses{std::move(values)}});
    }
    return rounds;
}

} // namespace detail

inline std::vector<Round> generate_environment(const EnvironmentSpec& spec,
                                               const FeasibleSet* set = nullptr) {
    detail::require(spec.horizon >= 1, "environment: horizon must be >= 1");
    CounterRng rng = make_rng(spec.seed, RngStream::Environment);

    if (const auto* stationary = std::get_if<StationaryExpertsSpec>(&spec.kind)) {
        detail::require(!stationary->mean_losses.empty(), "environment: means must be non-empty");
        detail::require(stationary->noise >= 0.0, "environment: noise must be >= 0");
        for (double mean : stationary->mean_losses) {
            detail::require(mean - stationary->noise / 2 >= -kLossRangeTol &&
                                mean + stationary->noise / 2 <= 1.0 + kLossRangeTol,
                            "environment: means +- noise/2 must stay inside [0,1]");
        }
        return detail::experts_rounds(
            spec.horizon,
            [&](std::int64_t, std::vector<double>& values) {
                for (std::size_t i = 0; i < values.size(); ++i)
                    values[i] = detail::jitter(rng, stationary->mean_losses[i], stationary->noise);
            },
            stationary->mean_losses.size());
    }

    if (const auto* switching = std::get_if<SwitchingExpertsSpec>(&spec.kind)) {
        detail::require(switching->arms >= 2, "environment: switching needs at least two arms");
        detail::require(!switching->segments.empty(), "environment: segments must be non-empty");
        detail::require(switching->gap > 0.0, "environment: gap must be positive");
        detail::require(switching->noise >= 0.0, "environment: noise must be >= 0");
        detail::require(switching->base - switching->noise / 2 >= -kLossRangeTol,
                        "environment: base - noise/2 must be >= 0");
        detail::require(switching->base + switching->gap + switching->noise / 2 <=
                            1.0 + kLossRangeTol,
                        "environment: base + gap + noise/2 must be <= 1");
        std::int64_t expected_start = 1;
        for (const SwitchSegment& segment : switching->segments) {
            detail::require(segment.start == expected_start && segment.end >= segment.start,
                            "environment: segments must partition [1,T] consecutively");
            detail::require(segment.best_arm >= 0 && segment.best_arm < switching->arms,
                            "environment: segment best_arm out of range");
            expected_start = segment.end + 1;
        }
        detail::require(expected_start == spec.horizon + 1,
                        "environment: segments must cover exactly [1,T]");
        std::size_t index = 0;
        return detail::experts_rounds(
            spec.horizon,
            [&](std::int64_t t, std::vector<double>& values) {
                while (t > switching->segments[index].end) ++index;
                const std::int64_t best = switching->segments[index].best_arm;
                for (std::int64_t i = 0; i < switching->arms; ++i) {
                    const double mean =
                        i == best ? switching->base : switching->base + switching->gap;
                    values[static_cast<std::size_t>(i)] =
                        detail::jitter(rng, mean, switching->noise);
                }
            },
            static_cast<std::size_t>(switching->arms));
    }

    if (const auto* adversarial = std::get_if<AdversarialExpertsSpec>(&spec.kind)) {
        detail::require(adversarial->arms >= 1, "environment: arms must be >= 1");
        return detail::experts_rounds(
            spec.horizon,
            [&](std::int64_t, std::vector<double>& values) {
                for (double& v : values) v = rng.next_unit();
            },
            static_cast<std::size_t>(adversarial->arms));
    }

    const auto& drifting = std::get<DriftingOcoSpec>(spec.kind);
    detail::require(set != nullptr, "environment: drifting losses need a feasible set");
    detail::require(drifting.drift >= 0.0, "environment: drift must be >= 0");
    const std::size_t dim = set_dimension(*set);
    std::vector<Round> rounds;
    rounds.reserve(static_cast<std::size_t>(spec.horizon));

    if (drifting.family == OcoLossFamily::Quadratic) {
        const double scale = 1.0 / (set->diameter * set->diameter);
        detail::require(set->lipschitz + 1e-12 >= 2.0 / set->diameter,
                        "environment: declared G must be >= 2/B for quadratic losses");
        std::vector<double> center = set_center(*set);
        for (std::int64_t t = 1; t <= spec.horizon; ++t) {
            rounds.push_back(Round{t, {}, ConvexLoss{QuadraticLoss{center, scale}}});
            for (double& c : center) c += drifting.drift * (2.0 * rng.next_unit() - 1.0);
            center = project(std::move(center), *set);
        }
        return rounds;
    }

    // Affine family: the set must be symmetric about the origin so that
    // 1/2 + <g,x> stays inside [0,1] whenever |g| * sup|x| <= 1/2.
    double reach = 0.0;
    if (const auto* box = std::get_if<Box>(&set->shape)) {
        double sq = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            detail::require(std::abs(box->lower[i] + box->upper[i]) < 1e-12,
                            "environment: affine losses need an origin-symmetric box");
            sq += box->upper[i] * box->upper[i];
        }
        reach = std::sqrt(sq);
    } else {
        const auto& ball = std::get<Ball>(set->shape);
        for (double c : ball.center)
            detail::require(std::abs(c) < 1e-12,
                            "environment: affine losses need an origin-centered ball");
        reach = ball.radius;
    }
    detail::require(set->lipschitz * reach <= 0.5 + kLossRangeTol,
                    "environment: need G * sup|x| <= 1/2 for affine losses");

    std::vector<double> direction(dim, 0.0);
    direction[0] = 1.0;
    for (std::int64_t t = 1; t <= spec.horizon; ++t) {
        std::vector<double> slope(dim);
        for (std::size_t i = 0; i < dim; ++i) slope[i] = set->lipschitz * direction[i];
        rounds.push_back(Round{t, {}, ConvexLoss{AffineLoss{std::move(slope), 0.5}}});
        double sq = 0.0;
        for (double& d : direction) {
            d += drifting.drift * (2.0 * rng.next_unit() - 1.0);
            sq += d * d;
        }
        const double norm = std::sqrt(sq);
        if (norm > 0.0)
            for (double& d : direction) d /= norm;
        else
            direction[0] = 1.0;
    }
    return rounds;
}

// Per-round per-arm losses of an experts environment as a dense row-major
// horizon x arms matrix.
inline std::vector<double> loss_matrix(const std::vector<Round>& rounds, std::int64_t& arms_out) {
    if (rounds.empty()) throw std::invalid_argument("loss_matrix: empty round sequence");
    const auto* first = std::get_if<ExpertLosses>(&rounds.front().loss);
    if (first == nullptr) throw std::invalid_argument("loss_matrix: not an experts environment");
    const std::size_t arms = first->values.size();
    std::vector<double> matrix;
    matrix.reserve(rounds.size() * arms);
    for (const Round& round : rounds) {
        const auto& values = std::get<ExpertLosses>(round.loss).values;
        if (values.size() != arms) throw std::invalid_argument("loss_matrix: ragged arm counts");
        matrix.insert(matrix.end(), values.begin(), values.end());
    }
    arms_out = static_cast<std::int64_t>(arms);
    return matrix;
}

} // namespace saol
