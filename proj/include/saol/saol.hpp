#pragma once
/*
Meta-learner that runs a fresh black-box instance on every block of the
dyadic covering and mixes the instances multiplicatively.

Instance I = [q,s] enters at round q with learning rate
eta_I = min(1/2, 1/sqrt(|I|)) and weight eta_I. After each round of its
lifetime the weight is multiplied by (1 + eta_I * r_t(I)), where
r_t(I) = l_t(x_t) - l_t(x_t(I)) is the meta-learner's instantaneous regret
against the instance. Since r_t(I) is in [-1,1] and eta_I <= 1/2, every factor
lies in [1/2, 3/2] and live weights stay strictly positive.

Weights are carried as eta_I times a pseudo-weight that enters at 1, follows
the same multiplicative recurrence, and is frozen when the instance retires.
The running total of pseudo-weights (live plus frozen) is the potential; each
round it changes by the number of entering blocks plus sum_I w_t(I) * r_t(I),
so it never exceeds t * (log2(t) + 1).

Play modes: Sample draws one instance per round from p_t(I) = w_t(I) / W_t
and follows it; Expected plays the p_t-mixture of the instance predictions
(valid in both scenarios: mixtures of arm distributions are distributions,
and convex combinations stay inside a convex feasible set) and makes a run
fully deterministic. r_t(I) is always computed from the realized loss of the
mode in effect.

Pseudo-weights are stored in linear scale by default; factors are bounded in
[1/2, 3/2], so linear scale is safe for any desk-scale horizon. For very long
horizons a log-scale carrier is available that accumulates log1p(eta_I * r)
and normalizes p_t with a max shift.
*/

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "saol/core.hpp"
#include "saol/intervals.hpp"
#include "saol/rng.hpp"
#include "saol/trace.hpp"

namespace saol {

// eta_I = min(1/2, 1/sqrt(|I|)).
inline double instance_learning_rate(const DyadicInterval& interval) {
    return std::min(0.5, 1.0 / std::sqrt(static_cast<double>(interval.length())));
}

enum class PlayMode { Sample, Expected };
enum class WeightScale { Linear, Log };

struct SaolOptions {
    PlayMode mode = PlayMode::Expected;
    std::uint64_t seed = 0;
    bool diagnostics = true; // keep the retired pseudo-weight ledger
    WeightScale weight_scale = WeightScale::Linear;
};

// Spawns a black-box instance for a covering block; the block is passed so a
// learner may use its length as a known horizon.
using LearnerFactory = std::function<std::unique_ptr<Learner>(const DyadicInterval&)>;

struct ExpertSlot {
    DyadicInterval interval;
    double eta = 0.5;
    double pseudo_weight = 1.0;     // linear carrier
    double log_pseudo_weight = 0.0; // log carrier
    std::unique_ptr<Learner> learner;
};

class SaolLearner {
public:
    SaolLearner(LearnerFactory factory, SaolOptions options)
        : factory_(std::move(factory)), options_(options) {
        if (!factory_) throw std::invalid_argument("SaolLearner: factory must be callable");
        reset();
    }

    void reset() {
        slots_.clear();
        retired_pseudo_mass_ = 0.0;
        rounds_done_ = 0;
        rng_ = make_rng(options_.seed, RngStream::ActionSampling);
    }

    std::int64_t rounds_done() const { return rounds_done_; }
    const SaolOptions& options() const { return options_; }
    const std::vector<ExpertSlot>& slots() const { return slots_; }

    // Live pseudo-weight of a slot in linear scale, whichever carrier is active.
    double slot_pseudo_weight(const ExpertSlot& slot) const {
        return options_.weight_scale == WeightScale::Linear ? slot.pseudo_weight
                                                            : std::exp(slot.log_pseudo_weight);
    }

    double slot_weight(const ExpertSlot& slot) const {
        return slot.eta * slot_pseudo_weight(slot);
    }

    // Total pseudo-weight: live slots plus the frozen mass of retired ones.
    // Inside a round (after entries, before the update) this is the potential
    // for the current round.
    double potential() const {
        if (!options_.diagnostics)
            throw std::logic_error("SaolLearner::potential: pseudo-weight ledger disabled");
        double total = retired_pseudo_mass_;
        for (const ExpertSlot& slot : slots_) total += slot_pseudo_weight(slot);
        return total;
    }

    // Current mixture over live slots, proportional to their weights.
    std::vector<std::pair<DyadicInterval, double>> distribution() const {
        if (slots_.empty())
            throw std::logic_error("SaolLearner::distribution: no live instances");
        std::vector<double> weights(slots_.size());
        normalized_weights(weights);
        std::vector<std::pair<DyadicInterval, double>> dist;
        dist.reserve(slots_.size());
        for (std::size_t i = 0; i < slots_.size(); ++i)
            dist.emplace_back(slots_[i].interval, weights[i]);
        return dist;
    }

    // Play one round: refresh the live set for round.t, form p_t, act, then
    // fold the revealed loss into every live instance and weight.
    TraceRecord step(const Round& round) {
        if (round.t != rounds_done_ + 1)
            throw std::invalid_argument("SaolLearner::step: rounds must be consecutive from 1");
        advance_live_set(round.t);

        TraceRecord record;
        record.t = round.t;
        record.potential = options_.diagnostics ? potential()
                                                : std::numeric_limits<double>::quiet_NaN();

        std::vector<Decision> predictions;
        predictions.reserve(slots_.size());
        for (ExpertSlot& slot : slots_) predictions.push_back(slot.learner->predict(round.context));

        std::vector<double> probabilities(slots_.size());
        record.total_weight = normalized_weights(probabilities);

        if (options_.mode == PlayMode::Sample) {
            const std::size_t pick = sample_index(probabilities);
            record.chosen = slots_[pick].interval;
            record.action = predictions[pick];
        } else {
            record.action = mixture(predictions, probabilities);
        }
        record.realized_loss = evaluate_loss(round.loss, record.action);

        record.slots.reserve(slots_.size());
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            ExpertSlot& slot = slots_[i];
            const double slot_loss = evaluate_loss(round.loss, predictions[i]);
            record.slots.push_back(SlotRecord{slot.interval, probabilities[i],
                                              slot_weight(slot), slot_loss});
            const double instant_regret = record.realized_loss - slot_loss;
            if (options_.weight_scale == WeightScale::Linear)
                slot.pseudo_weight *= 1.0 + slot.eta * instant_regret;
            else
                slot.log_pseudo_weight += std::log1p(slot.eta * instant_regret);
            slot.learner->update(round.loss);
        }

        rounds_done_ = round.t;
        return record;
    }

private:
    // Rebuild the live set for round t: retire blocks that ended at t-1,
    // keep the rest, spawn every block entering at t. The result is exactly
    // the set of covering blocks containing t, by increasing level.
    void advance_live_set(std::int64_t t) {
        std::vector<ExpertSlot> next;
        const std::vector<DyadicInterval> active = active_set(t);
        next.reserve(active.size());
        std::size_t cursor = 0;
        for (const DyadicInterval& interval : active) {
            while (cursor < slots_.size() && slots_[cursor].interval.level < interval.level)
                retire(slots_[cursor++]);
            if (cursor < slots_.size() && slots_[cursor].interval == interval) {
                next.push_back(std::move(slots_[cursor++]));
                continue;
            }
            if (interval.start != t)
                throw std::logic_error("SaolLearner: live set out of sync with the covering");
            ExpertSlot slot;
            slot.interval = interval;
            slot.eta = instance_learning_rate(interval);
            slot.pseudo_weight = 1.0;
            slot.log_pseudo_weight = 0.0;
            slot.learner = factory_(interval);
            slot.learner->reset();
            next.push_back(std::move(slot));
        }
        while (cursor < slots_.size()) retire(slots_[cursor++]);
        slots_ = std::move(next);
    }

    void retire(ExpertSlot& slot) {
        if (options_.diagnostics) retired_pseudo_mass_ += slot_pseudo_weight(slot);
        slot.learner.reset();
    }

    // Fill probabilities with p_t and return W_t. In log scale the entries are
    // shifted by the max log pseudo-weight before exponentiating; the returned
    // total is then the shifted sum, which only feeds diagnostics.
    double normalized_weights(std::vector<double>& probabilities) const {
        double total = 0.0;
        if (options_.weight_scale == WeightScale::Linear) {
            for (std::size_t i = 0; i < slots_.size(); ++i) {
                probabilities[i] = slots_[i].eta * slots_[i].pseudo_weight;
                total += probabilities[i];
            }
        } else {
            double shift = -std::numeric_limits<double>::infinity();
            for (const ExpertSlot& slot : slots_)
                shift = std::max(shift, slot.log_pseudo_weight);
            for (std::size_t i = 0; i < slots_.size(); ++i) {
                probabilities[i] =
                    slots_[i].eta * std::exp(slots_[i].log_pseudo_weight - shift);
                total += probabilities[i];
            }
        }
        if (!(total > 0.0))
            throw std::logic_error("SaolLearner: total weight vanished");
        for (double& p : probabilities) p /= total;
        return total;
    }

    std::size_t sample_index(const std::vector<double>& probabilities) {
        const double u = rng_.next_unit();
        double cumulative = 0.0;
        for (std::size_t i = 0; i < probabilities.size(); ++i) {
            cumulative += probabilities[i];
            if (u < cumulative) return i;
        }
        return probabilities.size() - 1;
    }

    static Decision mixture(const std::vector<Decision>& predictions,
                            const std::vector<double>& probabilities) {
        if (std::holds_alternative<ExpertDistribution>(predictions.front())) {
            const std::size_t arms =
                std::get<ExpertDistribution>(predictions.front()).probabilities.size();
            std::vector<double> mixed(arms, 0.0);
            for (std::size_t i = 0; i < predictions.size(); ++i) {
                const auto& dist = std::get<ExpertDistribution>(predictions[i]);
                for (std::size_t a = 0; a < arms; ++a)
                    mixed[a] += probabilities[i] * dist.probabilities[a];
            }
            return ExpertDistribution{std::move(mixed)};
        }
        const std::size_t dim =
            std::get<PointDecision>(predictions.front()).coordinates.size();
        std::vector<double> mixed(dim, 0.0);
        for (std::size_t i = 0; i < predictions.size(); ++i) {
            const auto& point = std::get<PointDecision>(predictions[i]);
            for (std::size_t c = 0; c < dim; ++c)
                mixed[c] += probabilities[i] * point.coordinates[c];
        }
        return PointDecision{std::move(mixed)};
    }

    LearnerFactory factory_;
    SaolOptions options_;
    std::vector<ExpertSlot> slots_;
    double retired_pseudo_mass_ = 0.0;
    std::int64_t rounds_done_ = 0;
    CounterRng rng_;
};

} // namespace saol
