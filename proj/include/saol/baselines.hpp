#pragma once
/*
Black-box low-regret learners.

MwLearner plays p_i proportional to exp(-eta_t * L_i), where L_i is the arm's
accumulated loss on this instance. The default rate is the anytime schedule
eta_t = sqrt(ln(N)/t) with t the instance-local round count; a fixed-horizon
rate sqrt(ln(N)/H) is available when the instance's lifetime H is known up
front. Either way the regret stays O(sqrt(t ln N)).

OgdLearner plays its current iterate and, on each revealed convex loss, steps
against a subgradient with step size B/(G sqrt(t)) and projects back onto the
feasible set, for regret O(BG sqrt(t)).

Both keep an instance-local clock so a fresh instance can be dropped onto any
window of rounds.
*/

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "saol/core.hpp"

namespace saol {

// Parameters (C, alpha) of a regret guarantee of the form C * t^alpha.
struct RegretBoundSpec {
    double coefficient = 1.0; // C > 0
    double exponent = 0.5;    // alpha in (0,1)
};

inline RegretBoundSpec make_regret_bound_spec(double coefficient, double exponent) {
    if (!(coefficient > 0.0))
        throw std::invalid_argument("regret bound: coefficient must be positive");
    if (!(exponent > 0.0) || !(exponent < 1.0))
        throw std::invalid_argument("regret bound: exponent must lie in (0,1)");
    return RegretBoundSpec{coefficient, exponent};
}

// Normalized exponential weights exp(-eta * L_i) / sum_j exp(-eta * L_j),
// computed with a common shift so large accumulated losses cannot underflow
// all entries at once.
inline std::vector<double> exponential_weights(std::span<const double> cumulative_losses,
                                               double eta) {
    if (cumulative_losses.empty())
        throw std::invalid_argument("exponential_weights: empty loss vector");
    const double low = *std::min_element(cumulative_losses.begin(), cumulative_losses.end());
    std::vector<double> weights(cumulative_losses.size());
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        weights[i] = std::exp(-eta * (cumulative_losses[i] - low));
        total += weights[i];
    }
    for (double& w : weights) w /= total;
    return weights;
}

enum class MwRate { Anytime, FixedHorizon };

class MwLearner final : public Learner {
public:
    using Learner::predict;

    explicit MwLearner(std::int64_t arms, MwRate rate = MwRate::Anytime,
                       std::int64_t horizon = 0)
        : arms_(arms), rate_(rate), horizon_(horizon) {
        if (arms < 1) throw std::invalid_argument("MwLearner: need at least one arm");
        if (rate == MwRate::FixedHorizon && horizon < 1)
            throw std::invalid_argument("MwLearner: fixed-horizon rate needs a horizon");
        reset();
    }

    void reset() override {
        cumulative_.assign(static_cast<std::size_t>(arms_), 0.0);
        updates_ = 0;
    }

    Decision predict(const std::any&) override {
        return ExpertDistribution{exponential_weights(cumulative_, current_rate())};
    }

    void update(const LossEvent& loss) override {
        const auto* arms = std::get_if<ExpertLosses>(&loss);
        if (arms == nullptr)
            throw std::invalid_argument("MwLearner: expected expert losses");
        if (arms->values.size() != cumulative_.size())
            throw std::invalid_argument("MwLearner: arm count mismatch");
        for (std::size_t i = 0; i < cumulative_.size(); ++i)
            cumulative_[i] += arms->values[i];
        ++updates_;
    }

    double current_rate() const {
        const double log_arms = std::log(static_cast<double>(arms_));
        if (rate_ == MwRate::FixedHorizon)
            return std::sqrt(log_arms / static_cast<double>(horizon_));
        return std::sqrt(log_arms / static_cast<double>(std::max<std::int64_t>(updates_, 1)));
    }

    std::span<const double> cumulative_losses() const { return cumulative_; }
    std::int64_t local_rounds() const { return updates_; }

private:
    std::int64_t arms_;
    MwRate rate_;
    std::int64_t horizon_;
    std::vector<double> cumulative_;
    std::int64_t updates_ = 0;
};

// Euclidean projection: componentwise clamp onto a box, radial rescale toward
// the center onto a ball. Interior points are returned unchanged.
inline std::vector<double> project(std::vector<double> point, const FeasibleSet& set) {
    if (point.size() != set_dimension(set))
        throw std::invalid_argument("project: dimension mismatch");
    if (const auto* box = std::get_if<Box>(&set.shape)) {
        for (std::size_t i = 0; i < point.size(); ++i)
            point[i] = std::clamp(point[i], box->lower[i], box->upper[i]);
        return point;
    }
    const auto& ball = std::get<Ball>(set.shape);
    double sq = 0.0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        const double d = point[i] - ball.center[i];
        sq += d * d;
    }
    const double dist = std::sqrt(sq);
    if (dist <= ball.radius) return point;
    const double shrink = ball.radius / dist;
    for (std::size_t i = 0; i < point.size(); ++i)
        point[i] = ball.center[i] + shrink * (point[i] - ball.center[i]);
    return point;
}

// One projected subgradient step, project(x - eta * g).
inline std::vector<double> gradient_step(std::span<const double> x, std::span<const double> grad,
                                         double eta, const FeasibleSet& set) {
    if (x.size() != grad.size())
        throw std::invalid_argument("gradient_step: dimension mismatch");
    std::vector<double> next(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) next[i] = x[i] - eta * grad[i];
    return project(std::move(next), set);
}

class OgdLearner final : public Learner {
public:
    using Learner::predict;

    explicit OgdLearner(FeasibleSet set) : set_(std::move(set)) {
        if (!(set_.lipschitz > 0.0))
            throw std::invalid_argument("OgdLearner: declared Lipschitz bound must be positive");
        reset();
    }

    void reset() override {
        iterate_ = set_center(set_);
        updates_ = 0;
    }

    Decision predict(const std::any&) override { return PointDecision{iterate_}; }

    void update(const LossEvent& loss) override {
        const auto* convex = std::get_if<ConvexLoss>(&loss);
        if (convex == nullptr)
            throw std::invalid_argument("OgdLearner: expected a convex loss");
        std::vector<double> grad = subgradient(*convex, iterate_);
        double sq = 0.0;
        for (double g : grad) sq += g * g;
        const double norm = std::sqrt(sq);
        if (norm > set_.lipschitz * (1.0 + 1e-9) + 1e-12)
            throw std::domain_error("OgdLearner: subgradient norm exceeds the declared bound");
        ++updates_;
        const double eta =
            set_.diameter / (set_.lipschitz * std::sqrt(static_cast<double>(updates_)));
        iterate_ = gradient_step(iterate_, grad, eta, set_);
    }

    std::span<const double> iterate() const { return iterate_; }
    std::int64_t local_rounds() const { return updates_; }
    const FeasibleSet& feasible_set() const { return set_; }

private:
    FeasibleSet set_;
    std::vector<double> iterate_;
    std::int64_t updates_ = 0;
};

} // namespace saol
