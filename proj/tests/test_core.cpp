#include <catch2/catch_amalgamated.hpp>

#include "saol/core.hpp"
#include "saol/rng.hpp"
#include "saol/trace.hpp"

#include "brute_force.hpp"

using namespace saol;

TEST_CASE("evaluate_loss on expert losses is the expected loss") {
    CHECK(evaluate_loss(ExpertLosses{{0.0, 1.0}}, ExpertDistribution{{1.0, 0.0}}) == 0.0);
    CHECK(evaluate_loss(ExpertLosses{{0.2, 0.6}}, ExpertDistribution{{0.5, 0.5}}) ==
          Catch::Approx(0.4).margin(1e-15));
}

TEST_CASE("evaluate_loss on a convex loss evaluates at the point") {
    const LossEvent quadratic = ConvexLoss{QuadraticLoss{{0.0}, 1.0}};
    CHECK(evaluate_loss(quadratic, PointDecision{{0.0}}) == 0.0);
    CHECK(evaluate_loss(quadratic, PointDecision{{0.5}}) == Catch::Approx(0.25));
}

TEST_CASE("evaluate_loss rejects mismatches and malformed environments") {
    CHECK_THROWS_AS(evaluate_loss(ExpertLosses{{0.5}}, PointDecision{{0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_loss(ConvexLoss{QuadraticLoss{{0.0}, 1.0}},
                                  ExpertDistribution{{1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_loss(ExpertLosses{{0.1, 0.2}}, ExpertDistribution{{1.0}}),
                    std::invalid_argument);
    // Values outside [0,1] signal a malformed environment and are rejected.
    CHECK_THROWS_AS(evaluate_loss(ExpertLosses{{1.5, 0.0}}, ExpertDistribution{{1.0, 0.0}}),
                    std::domain_error);
    CHECK_THROWS_AS(evaluate_loss(ConvexLoss{QuadraticLoss{{0.0}, 4.0}}, PointDecision{{1.0}}),
                    std::domain_error);
}

TEST_CASE("expected loss is linear in the distribution") {
    CounterRng rng(7, static_cast<std::uint64_t>(RngStream::Testing));
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t arms = 1 + rng.next_below(6);
        std::vector<double> losses(arms);
        std::vector<double> first(arms);
        std::vector<double> second(arms);
        double first_total = 0.0;
        double second_total = 0.0;
        for (std::size_t i = 0; i < arms; ++i) {
            losses[i] = rng.next_unit();
            first[i] = rng.next_unit();
            second[i] = rng.next_unit();
            first_total += first[i];
            second_total += second[i];
        }
        for (std::size_t i = 0; i < arms; ++i) {
            first[i] /= first_total;
            second[i] /= second_total;
        }
        const double alpha = rng.next_unit();
        std::vector<double> blend(arms);
        for (std::size_t i = 0; i < arms; ++i)
            blend[i] = alpha * first[i] + (1.0 - alpha) * second[i];
        const LossEvent event = ExpertLosses{losses};
        const double mixed = evaluate_loss(event, ExpertDistribution{blend});
        const double split = alpha * evaluate_loss(event, ExpertDistribution{first}) +
                             (1.0 - alpha) * evaluate_loss(event, ExpertDistribution{second});
        REQUIRE(mixed == Catch::Approx(split).margin(1e-12));
    }
}

TEST_CASE("distribution validation") {
    CHECK_NOTHROW(validate_distribution(ExpertDistribution{{0.25, 0.75}}));
    CHECK_THROWS_AS(validate_distribution(ExpertDistribution{{-0.1, 1.1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_distribution(ExpertDistribution{{0.4, 0.4}}),
                    std::invalid_argument);
}

TEST_CASE("closed-form subgradients match central finite differences") {
    CounterRng rng(11, static_cast<std::uint64_t>(RngStream::Testing));
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 1 + rng.next_below(4);
        std::vector<double> point(dim);
        for (double& c : point) c = rng.next_range(-0.5, 0.5);

        std::vector<double> slope(dim);
        for (double& g : slope) g = rng.next_range(-0.2, 0.2);
        const ConvexLoss affine = AffineLoss{slope, 0.5};

        std::vector<double> center(dim);
        for (double& c : center) c = rng.next_range(-0.5, 0.5);
        const ConvexLoss quadratic = QuadraticLoss{center, rng.next_range(0.05, 0.2)};

        for (const ConvexLoss& loss : {affine, quadratic}) {
            const std::vector<double> grad = subgradient(loss, point);
            const std::vector<double> numeric = brute::finite_difference_gradient(loss, point);
            for (std::size_t i = 0; i < dim; ++i) {
                const double scale = std::max(1.0, std::abs(grad[i]));
                REQUIRE(std::abs(grad[i] - numeric[i]) / scale < 1e-5);
            }
        }
    }
}

TEST_CASE("feasible set constructors compute the Euclidean diameter") {
    const FeasibleSet box = make_box_set({-1.0, -1.0}, {1.0, 1.0}, 1.0);
    CHECK(box.diameter == Catch::Approx(2.0 * std::sqrt(2.0)));
    const FeasibleSet ball = make_ball_set({0.0, 0.0, 0.0}, 1.5, 1.0);
    CHECK(ball.diameter == Catch::Approx(3.0));
    CHECK_THROWS_AS(make_box_set({1.0}, {-1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_ball_set({0.0}, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("set centers and membership") {
    const FeasibleSet box = make_box_set({-1.0, 0.0}, {1.0, 4.0}, 1.0);
    CHECK(set_center(box) == std::vector<double>{0.0, 2.0});
    CHECK(set_contains(box, std::vector<double>{0.5, 3.0}));
    CHECK_FALSE(set_contains(box, std::vector<double>{0.5, 4.5}));
    const FeasibleSet ball = make_ball_set({1.0, 1.0}, 1.0, 1.0);
    CHECK(set_contains(ball, std::vector<double>{1.0, 1.9}));
    CHECK_FALSE(set_contains(ball, std::vector<double>{2.0, 2.0}));
}

namespace {

Trace make_trace(const std::vector<double>& losses) {
    Trace trace;
    for (std::size_t i = 0; i < losses.size(); ++i) {
        TraceRecord record;
        record.t = static_cast<std::int64_t>(i) + 1;
        record.realized_loss = losses[i];
        trace.push(std::move(record));
    }
    trace.finalize();
    return trace;
}

} // namespace

TEST_CASE("cumulative loss over an interval") {
    const Trace trace = make_trace({0.1, 0.2, 0.3});
    CHECK(trace.cumulative_loss(1, 3) == Catch::Approx(0.6).margin(1e-15));
    CHECK(trace.cumulative_loss(2, 2) == Catch::Approx(0.2));
    CHECK(make_trace({0.0, 0.0, 0.0, 0.0}).cumulative_loss(2, 4) == 0.0);
    CHECK_THROWS_AS(trace.cumulative_loss(0, 2), std::out_of_range);
    CHECK_THROWS_AS(trace.cumulative_loss(2, 4), std::out_of_range);
}

TEST_CASE("cumulative loss is additive over adjacent intervals") {
    CounterRng rng(13, static_cast<std::uint64_t>(RngStream::Testing));
    std::vector<double> losses(97);
    for (double& v : losses) v = rng.next_unit();
    const Trace trace = make_trace(losses);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t start = 1 + static_cast<std::int64_t>(rng.next_below(97));
        const std::int64_t end = start + static_cast<std::int64_t>(
                                             rng.next_below(static_cast<std::uint64_t>(98 - start)));
        if (start == end) continue;
        const std::int64_t mid =
            start + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(end - start)));
        REQUIRE(trace.cumulative_loss(start, end) ==
                Catch::Approx(trace.cumulative_loss(start, mid) +
                              trace.cumulative_loss(mid + 1, end))
                    .margin(1e-12));
    }
}

TEST_CASE("traces demand consecutive rounds and in-range losses") {
    Trace trace;
    TraceRecord record;
    record.t = 2;
    record.realized_loss = 0.5;
    CHECK_THROWS_AS(trace.push(std::move(record)), std::invalid_argument);
    TraceRecord bad;
    bad.t = 1;
    bad.realized_loss = 1.5;
    CHECK_THROWS_AS(trace.push(std::move(bad)), std::domain_error);
}
