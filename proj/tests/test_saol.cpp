#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "saol/environments.hpp"
#include "saol/evaluation.hpp"
#include "saol/rng.hpp"
#include "saol/saol.hpp"

using namespace saol;

namespace {

// Plays a fixed arm distribution; lets round outcomes be crafted by hand.
class StubLearner final : public Learner {
public:
    explicit StubLearner(std::vector<double> distribution)
        : distribution_(std::move(distribution)) {}
    void reset() override {}
    Decision predict(const std::any&) override { return ExpertDistribution{distribution_}; }
    void update(const LossEvent&) override {}

private:
    std::vector<double> distribution_;
};

LearnerFactory stub_factory() {
    // Length-1 blocks bet on arm 0, longer blocks on arm 1.
    return [](const DyadicInterval& interval) -> std::unique_ptr<Learner> {
        if (interval.length() == 1)
            return std::make_unique<StubLearner>(std::vector<double>{1.0, 0.0});
        return std::make_unique<StubLearner>(std::vector<double>{0.0, 1.0});
    };
}

LearnerFactory mw_factory(std::int64_t arms) {
    return [arms](const DyadicInterval&) { return std::make_unique<MwLearner>(arms); };
}

Trace run_saol(std::int64_t arms, std::int64_t horizon, std::uint64_t seed, SaolOptions options,
               const EnvironmentKind& kind) {
    const EnvironmentSpec spec{kind, horizon, seed};
    const std::vector<Round> rounds = generate_environment(spec);
    SaolLearner learner(mw_factory(arms), options);
    Trace trace;
    for (const Round& round : rounds) trace.push(learner.step(round));
    trace.finalize();
    return trace;
}

} // namespace

TEST_CASE("instance learning rate is min(1/2, 1/sqrt(length))") {
    CHECK(instance_learning_rate({1, 1, 0}) == 0.5);
    CHECK(instance_learning_rate({4, 7, 2}) == 0.5);
    CHECK(instance_learning_rate({8, 15, 3}) == Catch::Approx(0.35355).margin(1e-5));
}

TEST_CASE("the first round coincides with the lone instance") {
    SaolLearner learner(mw_factory(2), SaolOptions{});
    const TraceRecord record = learner.step(Round{1, {}, ExpertLosses{{0.3, 0.7}}});

    REQUIRE(record.slots.size() == 1);
    CHECK(record.slots[0].interval == DyadicInterval{1, 1, 0});
    CHECK(record.slots[0].probability == 1.0);
    CHECK(record.slots[0].weight == 0.5); // entry weight is eta = 1/2
    // The action is the base learner's own first prediction, so the
    // instantaneous regret vanishes.
    const auto& action = std::get<ExpertDistribution>(record.action);
    CHECK(action.probabilities == std::vector<double>{0.5, 0.5});
    CHECK(record.realized_loss == Catch::Approx(record.slots[0].loss));

    // After the update the carried weight is still eta * 1.
    CHECK(learner.slots()[0].pseudo_weight == Catch::Approx(1.0));
    CHECK(learner.slot_weight(learner.slots()[0]) == Catch::Approx(0.5));
}

TEST_CASE("one application of the weight recurrence") {
    SaolOptions options;
    SaolLearner learner(stub_factory(), options);
    learner.step(Round{1, {}, ExpertLosses{{0.5, 0.5}}});

    // Round 2: blocks [2,2] and [2,3] enter fresh with weight 1/2 each; the
    // stubs predict opposite arms, so the mixture is (1/2, 1/2).
    const TraceRecord second = learner.step(Round{2, {}, ExpertLosses{{1.0, 0.0}}});
    REQUIRE(second.slots.size() == 2);
    CHECK(second.slots[0].interval == DyadicInterval{2, 2, 0});
    CHECK(second.slots[1].interval == DyadicInterval{2, 3, 1});
    CHECK(second.slots[0].probability == Catch::Approx(0.5));
    CHECK(second.slots[1].probability == Catch::Approx(0.5));
    const auto& mixed = std::get<ExpertDistribution>(second.action);
    CHECK(mixed.probabilities[0] == Catch::Approx(0.5));
    CHECK(mixed.probabilities[1] == Catch::Approx(0.5));
    CHECK(second.realized_loss == Catch::Approx(0.5));

    // r([2,3]) = 0.5 - 0.0 = 1/2, so w <- 1/2 * (1 + 1/2 * 1/2) = 0.625;
    // the partner block drops to 0.375.
    const TraceRecord third = learner.step(Round{3, {}, ExpertLosses{{0.5, 0.5}}});
    REQUIRE(third.slots.size() == 2);
    CHECK(third.slots[1].interval == DyadicInterval{2, 3, 1});
    CHECK(third.slots[1].weight == Catch::Approx(0.625));
    CHECK(third.slots[0].interval == DyadicInterval{3, 3, 0});
    CHECK(third.slots[0].weight == Catch::Approx(0.5)); // fresh entry
}

TEST_CASE("rounds must be consecutive and the mixture needs live instances") {
    SaolLearner learner(mw_factory(2), SaolOptions{});
    CHECK_THROWS_AS(learner.distribution(), std::logic_error);
    CHECK_THROWS_AS(learner.step(Round{2, {}, ExpertLosses{{0.1, 0.2}}}),
                    std::invalid_argument);
    learner.step(Round{1, {}, ExpertLosses{{0.1, 0.2}}});
    const auto dist = learner.distribution();
    REQUIRE(dist.size() == 1);
    CHECK(dist[0].first == DyadicInterval{1, 1, 0});
    CHECK(dist[0].second == 1.0);
}

TEST_CASE("live instances are exactly the active covering blocks") {
    SaolOptions options;
    SaolLearner learner(stub_factory(), options);
    CounterRng rng(23, static_cast<std::uint64_t>(RngStream::Testing));
    for (std::int64_t t = 1; t <= (1 << 14); ++t) {
        const TraceRecord record =
            learner.step(Round{t, {}, ExpertLosses{{rng.next_unit(), rng.next_unit()}}});
        const std::vector<DyadicInterval> active = active_set(t);
        REQUIRE(record.slots.size() == active.size());
        for (std::size_t i = 0; i < active.size(); ++i) {
            REQUIRE(record.slots[i].interval == active[i]);
            REQUIRE(record.slots[i].weight > 0.0);
        }
    }
}

TEST_CASE("probabilities renormalize the live weights") {
    const Trace trace =
        run_saol(3, 200, 5, SaolOptions{}, AdversarialExpertsSpec{3});
    for (const TraceRecord& record : trace.records()) {
        double total = 0.0;
        for (const SlotRecord& slot : record.slots) total += slot.weight;
        REQUIRE(total == Catch::Approx(record.total_weight));
        double prob_total = 0.0;
        for (const SlotRecord& slot : record.slots) {
            REQUIRE(slot.probability == Catch::Approx(slot.weight / total).margin(1e-15));
            prob_total += slot.probability;
        }
        REQUIRE(prob_total == Catch::Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("recorded weights replay the multiplicative recurrence") {
    const Trace trace = run_saol(3, 300, 9, SaolOptions{}, AdversarialExpertsSpec{3});
    std::map<std::pair<std::int64_t, std::int64_t>, double> carried;
    for (const TraceRecord& record : trace.records()) {
        for (const SlotRecord& slot : record.slots) {
            const auto key = std::make_pair(slot.interval.start, slot.interval.end);
            const double eta = instance_learning_rate(slot.interval);
            if (slot.interval.start == record.t) {
                REQUIRE(slot.weight == Catch::Approx(eta).margin(1e-15));
                carried[key] = eta;
            } else {
                REQUIRE(carried.count(key) == 1);
                REQUIRE(slot.weight == Catch::Approx(carried[key]).epsilon(1e-12));
            }
            carried[key] = slot.weight * (1.0 + eta * (record.realized_loss - slot.loss));
        }
    }
}

TEST_CASE("weights and pseudo-weights keep the eta ratio exactly") {
    SaolLearner learner(mw_factory(4), SaolOptions{});
    CounterRng rng(29, static_cast<std::uint64_t>(RngStream::Testing));
    for (std::int64_t t = 1; t <= 512; ++t) {
        std::vector<double> losses(4);
        for (double& v : losses) v = rng.next_unit();
        learner.step(Round{t, {}, ExpertLosses{losses}});
        for (const ExpertSlot& slot : learner.slots()) {
            REQUIRE(slot.pseudo_weight > 0.0);
            REQUIRE(learner.slot_weight(slot) ==
                    Catch::Approx(slot.eta * slot.pseudo_weight).epsilon(1e-12));
        }
    }
}

TEST_CASE("potential ledger") {
    SECTION("starts at one") {
        SaolLearner learner(mw_factory(2), SaolOptions{});
        const TraceRecord record = learner.step(Round{1, {}, ExpertLosses{{0.2, 0.8}}});
        CHECK(record.potential == 1.0);
    }

    SECTION("counts spawned blocks when every instantaneous regret is zero") {
        // With a single arm every instance predicts identically, so all
        // multiplicative factors are 1 and the potential counts entries.
        SaolLearner learner(mw_factory(1), SaolOptions{});
        std::int64_t spawned = 0;
        for (std::int64_t t = 1; t <= 128; ++t) {
            spawned += static_cast<std::int64_t>(entering_set(t).size());
            const TraceRecord record = learner.step(Round{t, {}, ExpertLosses{{0.4}}});
            REQUIRE(record.potential == Catch::Approx(static_cast<double>(spawned)));
        }
    }

    SECTION("stays under t (log2 t + 1) on random environments") {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Trace trace =
                run_saol(10, 1 << 10, seed, SaolOptions{}, AdversarialExpertsSpec{10});
            for (const TraceRecord& record : trace.records())
                REQUIRE(record.potential <= potential_bound(record.t));
            REQUIRE(trace.record(64).potential <= 448.0);
        }
    }

    SECTION("is unavailable when diagnostics are off") {
        SaolOptions options;
        options.diagnostics = false;
        SaolLearner learner(mw_factory(2), options);
        const TraceRecord record = learner.step(Round{1, {}, ExpertLosses{{0.2, 0.8}}});
        CHECK(std::isnan(record.potential));
        CHECK_THROWS_AS(learner.potential(), std::logic_error);
    }
}

TEST_CASE("weighted instantaneous regrets cancel in expected play") {
    const Trace trace = run_saol(5, 512, 3, SaolOptions{}, AdversarialExpertsSpec{5});
    for (const TraceRecord& record : trace.records()) {
        double weighted = 0.0;
        for (const SlotRecord& slot : record.slots)
            weighted += slot.weight * (record.realized_loss - slot.loss);
        REQUIRE(std::abs(weighted) <= 1e-9 * std::max(1.0, record.total_weight));
    }
}

TEST_CASE("expected play is deterministic and sampling is seed-deterministic") {
    SaolOptions expected;
    const Trace a = run_saol(4, 256, 11, expected, AdversarialExpertsSpec{4});
    const Trace b = run_saol(4, 256, 11, expected, AdversarialExpertsSpec{4});
    for (std::int64_t t = 1; t <= 256; ++t) {
        REQUIRE(a.record(t).realized_loss == b.record(t).realized_loss);
        REQUIRE_FALSE(a.record(t).chosen.has_value());
    }

    SaolOptions sampling;
    sampling.mode = PlayMode::Sample;
    sampling.seed = 11;
    const Trace c = run_saol(4, 256, 11, sampling, AdversarialExpertsSpec{4});
    const Trace d = run_saol(4, 256, 11, sampling, AdversarialExpertsSpec{4});
    bool any_long_block = false;
    for (std::int64_t t = 1; t <= 256; ++t) {
        REQUIRE(c.record(t).chosen.has_value());
        REQUIRE(*c.record(t).chosen == *d.record(t).chosen);
        REQUIRE(c.record(t).realized_loss == d.record(t).realized_loss);
        any_long_block = any_long_block || c.record(t).chosen->length() > 1;
    }
    CHECK(any_long_block);
}

TEST_CASE("log-scale weights agree with the linear carrier") {
    SaolOptions linear;
    SaolOptions logs;
    logs.weight_scale = WeightScale::Log;
    const Trace a = run_saol(3, 256, 21, linear, AdversarialExpertsSpec{3});
    const Trace b = run_saol(3, 256, 21, logs, AdversarialExpertsSpec{3});
    for (std::int64_t t = 1; t <= 256; ++t) {
        REQUIRE(a.record(t).realized_loss ==
                Catch::Approx(b.record(t).realized_loss).margin(1e-9));
        REQUIRE(a.record(t).potential == Catch::Approx(b.record(t).potential).epsilon(1e-9));
    }
}

TEST_CASE("convex scenario mixes points inside the feasible set") {
    const FeasibleSet box = make_box_set({-1.0, -1.0}, {1.0, 1.0}, 2.0 / std::sqrt(8.0));
    const EnvironmentSpec spec{DriftingOcoSpec{OcoLossFamily::Quadratic, 0.08}, 200, 31};
    const std::vector<Round> rounds = generate_environment(spec, &box);
    SaolLearner learner(
        [&box](const DyadicInterval&) { return std::make_unique<OgdLearner>(box); },
        SaolOptions{});
    for (const Round& round : rounds) {
        const TraceRecord record = learner.step(round);
        const auto& point = std::get<PointDecision>(record.action);
        REQUIRE(set_contains(box, point.coordinates, 1e-9));
        // Convexity: the mixture's loss never beats the mixed instance losses.
        double mixed_loss = 0.0;
        for (const SlotRecord& slot : record.slots)
            mixed_loss += slot.probability * slot.loss;
        REQUIRE(record.realized_loss <= mixed_loss + 1e-12);
        REQUIRE(record.potential <= potential_bound(record.t));
    }
}
