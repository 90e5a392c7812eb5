#pragma once
/*
Learning-scenario primitives shared by every other header.

Two context-free scenarios are modeled. In the experts scenario a decision is
a probability vector over N arms and a loss event is a vector in [0,1]^N; the
loss of a mixed decision is the expected loss <p, l>, so loss is linear in the
decision. In the convex scenario a decision is a point of a convex feasible
set and a loss event is a convex function into [0,1] with closed-form
subgradients (affine and scaled-quadratic families).

Losses are required to land in [0,1]. Values outside the range beyond a small
tolerance are treated as a malformed environment and rejected, never clamped,
so downstream inequality checks stay sound. A context slot is carried on each
round for future contextual scenarios; nothing implemented here reads it.
*/

#include <any>
#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace saol {

inline constexpr double kLossRangeTol = 1e-9;
inline constexpr double kDistributionTol = 1e-9;

// ---------------------------------------------------------------------------
// Decisions

struct ExpertDistribution {
    std::vector<double> probabilities;
};

struct PointDecision {
    std::vector<double> coordinates;
};

using Decision = std::variant<ExpertDistribution, PointDecision>;

inline void validate_distribution(const ExpertDistribution& decision) {
    double total = 0.0;
    for (double p : decision.probabilities) {
        if (p < -kDistributionTol)
            throw std::invalid_argument("distribution entry is negative");
        total += p;
    }
    if (std::abs(total - 1.0) > kDistributionTol)
        throw std::invalid_argument("distribution does not sum to 1");
}

// ---------------------------------------------------------------------------
// Loss events

struct ExpertLosses {
    std::vector<double> values; // one entry per arm, each in [0,1]
};

// l(x) = offset + <slope, x>
struct AffineLoss {
    std::vector<double> slope;
    double offset = 0.0;
};

// l(x) = scale * |x - center|^2
struct QuadraticLoss {
    std::vector<double> center;
    double scale = 1.0;
};

using ConvexLoss = std::variant<AffineLoss, QuadraticLoss>;
using LossEvent = std::variant<ExpertLosses, ConvexLoss>;

inline double convex_value(const ConvexLoss& loss, std::span<const double> x) {
    if (const auto* affine = std::get_if<AffineLoss>(&loss)) {
        if (affine->slope.size() != x.size())
            throw std::invalid_argument("convex_value: dimension mismatch");
        double value = affine->offset;
        for (std::size_t i = 0; i < x.size(); ++i) value += affine->slope[i] * x[i];
        return value;
    }
    const auto& quad = std::get<QuadraticLoss>(loss);
    if (quad.center.size() != x.size())
        throw std::invalid_argument("convex_value: dimension mismatch");
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - quad.center[i];
        sq += d * d;
    }
    return quad.scale * sq;
}

inline std::vector<double> subgradient(const ConvexLoss& loss, std::span<const double> x) {
    if (const auto* affine = std::get_if<AffineLoss>(&loss)) {
        if (affine->slope.size() != x.size())
            throw std::invalid_argument("subgradient: dimension mismatch");
        return affine->slope;
    }
    const auto& quad = std::get<QuadraticLoss>(loss);
    if (quad.center.size() != x.size())
        throw std::invalid_argument("subgradient: dimension mismatch");
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        grad[i] = 2.0 * quad.scale * (x[i] - quad.center[i]);
    return grad;
}

// ---------------------------------------------------------------------------
// Feasible sets

struct Box {
    std::vector<double> lower;
    std::vector<double> upper;
};

struct Ball {
    std::vector<double> center;
    double radius = 1.0;
};

struct FeasibleSet {
    std::variant<Box, Ball> shape;
    double diameter = 0.0;  // Euclidean diameter of the set
    double lipschitz = 0.0; // declared bound on subgradient norms of the losses
};

inline FeasibleSet make_box_set(std::vector<double> lower, std::vector<double> upper,
                                double lipschitz) {
    if (lower.size() != upper.size() || lower.empty())
        throw std::invalid_argument("make_box_set: bounds must be non-empty and equal-sized");
    double sq = 0.0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (lower[i] > upper[i])
            throw std::invalid_argument("make_box_set: lower bound exceeds upper bound");
        const double side = upper[i] - lower[i];
        sq += side * side;
    }
    return FeasibleSet{Box{std::move(lower), std::move(upper)}, std::sqrt(sq), lipschitz};
}

inline FeasibleSet make_ball_set(std::vector<double> center, double radius, double lipschitz) {
    if (center.empty()) throw std::invalid_argument("make_ball_set: center must be non-empty");
    if (!(radius > 0.0)) throw std::invalid_argument("make_ball_set: radius must be positive");
    return FeasibleSet{Ball{std::move(center), radius}, 2.0 * radius, lipschitz};
}

inline std::size_t set_dimension(const FeasibleSet& set) {
    if (const auto* box = std::get_if<Box>(&set.shape)) return box->lower.size();
    return std::get<Ball>(set.shape).center.size();
}

inline std::vector<double> set_center(const FeasibleSet& set) {
    if (const auto* box = std::get_if<Box>(&set.shape)) {
        std::vector<double> center(box->lower.size());
        for (std::size_t i = 0; i < center.size(); ++i)
            center[i] = 0.5 * (box->lower[i] + box->upper[i]);
        return center;
    }
    return std::get<Ball>(set.shape).center;
}

inline bool set_contains(const FeasibleSet& set, std::span<const double> point,
                         double tol = 1e-12) {
    if (point.size() != set_dimension(set)) return false;
    if (const auto* box = std::get_if<Box>(&set.shape)) {
        for (std::size_t i = 0; i < point.size(); ++i)
            if (point[i] < box->lower[i] - tol || point[i] > box->upper[i] + tol) return false;
        return true;
    }
    const auto& ball = std::get<Ball>(set.shape);
    double sq = 0.0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        const double d = point[i] - ball.center[i];
        sq += d * d;
    }
    return std::sqrt(sq) <= ball.radius + tol;
}

// ---------------------------------------------------------------------------
// Rounds

struct Round {
    std::int64_t t = 1;
    std::any context; // opaque; carried but unread by the implemented scenarios
    LossEvent loss;
};

// ---------------------------------------------------------------------------
// Loss evaluation

inline double evaluate_loss(const LossEvent& loss, const Decision& decision) {
    double value = 0.0;
    if (const auto* arms = std::get_if<ExpertLosses>(&loss)) {
        const auto* dist = std::get_if<ExpertDistribution>(&decision);
        if (dist == nullptr)
            throw std::invalid_argument("evaluate_loss: expert losses need a distribution decision");
        if (dist->probabilities.size() != arms->values.size())
            throw std::invalid_argument("evaluate_loss: arm count mismatch");
        for (std::size_t i = 0; i < arms->values.size(); ++i)
            value += dist->probabilities[i] * arms->values[i];
    } else {
        const auto* point = std::get_if<PointDecision>(&decision);
        if (point == nullptr)
            throw std::invalid_argument("evaluate_loss: convex loss needs a point decision");
        value = convex_value(std::get<ConvexLoss>(loss), point->coordinates);
    }
    if (value < -kLossRangeTol || value > 1.0 + kLossRangeTol)
        throw std::domain_error("evaluate_loss: loss value " + std::to_string(value) +
                                " outside [0,1]; malformed environment");
    return value;
}

// ---------------------------------------------------------------------------
// Black-box learner contract

class Learner {
public:
    virtual ~Learner() = default;

    // Forget everything; the instance restarts its local clock.
    virtual void reset() = 0;

    // Decision for the upcoming round. Must be called before update() each
    // round. The context is opaque plumbing and may be empty.
    virtual Decision predict(const std::any& context) = 0;
    Decision predict() { return predict(std::any{}); }

    // Reveal the round's loss event.
    virtual void update(const LossEvent& loss) = 0;
};

} // namespace saol
