#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "disbet/neuro.hpp"
#include "helpers.hpp"

using namespace disbet;

namespace {
constexpr double kLn3 = 1.0986122886681097;
}

TEST_CASE("evidence must be finite, accumulation is a running sum") {
    CHECK_THROWS_AS(EvidenceSequence({0.5, std::nan("")}), InvalidScenario);
    CHECK_THROWS_AS(EvidenceSequence({INFINITY}), InvalidScenario);
    CHECK_THROWS_AS(accumulate_llr(EvidenceSequence({})), EmptyEvidence);

    const auto trajectory = accumulate_llr(EvidenceSequence({0.5, -0.3, 0.5}));
    REQUIRE(trajectory.size() == 3);
    CHECK(trajectory[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(trajectory[1] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(trajectory[2] == doctest::Approx(0.7).epsilon(1e-15));

    CHECK(accumulate_llr(EvidenceSequence({0.0, 0.0})) ==
          std::vector<double>{0.0, 0.0});
    CHECK(accumulate_llr(EvidenceSequence({-1.25})) == std::vector<double>{-1.25});
}

TEST_CASE("concatenated evidence continues the first trajectory exactly") {
    const std::vector<double> first = {0.4, -0.2, 0.9};
    const std::vector<double> second = {-0.5, 0.3};
    std::vector<double> joined = first;
    joined.insert(joined.end(), second.begin(), second.end());

    const auto t_first = accumulate_llr(EvidenceSequence(first));
    const auto t_joined = accumulate_llr(EvidenceSequence(joined));
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(t_joined[i] == t_first[i]);
    double carried = t_first.back();
    for (std::size_t j = 0; j < second.size(); ++j) {
        carried += second[j];
        CHECK(t_joined[first.size() + j] == carried);
    }
}

TEST_CASE("threshold decisions pick the first crossing by sign") {
    const std::vector<double> trajectory = {0.5, 0.2, 0.7};
    const Decision in = threshold_decision(trajectory, 0.6);
    CHECK(in.choice == Choice::kIn);
    CHECK(in.step == 3);
    CHECK(in.value == 0.7);

    const Decision out = threshold_decision({-0.7}, 0.6);
    CHECK(out.choice == Choice::kOut);
    CHECK(out.step == 1);

    const Decision undecided = threshold_decision({0.1, 0.2}, 0.6);
    CHECK(undecided.choice == Choice::kUndecided);
    CHECK(undecided.step == 0);

    // Reaching the threshold exactly counts as a crossing.
    CHECK(threshold_decision({0.6}, 0.6).choice == Choice::kIn);
    CHECK_THROWS_AS(threshold_decision(trajectory, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(threshold_decision(trajectory, -1.0), std::invalid_argument);
}

TEST_CASE("binary disagreements validate their probabilities") {
    CHECK_THROWS_AS(BinaryDisagreement(0.0, 0.5), InvalidScenario);
    CHECK_THROWS_AS(BinaryDisagreement(1.0, 0.5), InvalidScenario);
    CHECK_THROWS_AS(BinaryDisagreement(0.5, -0.1), InvalidScenario);
    CHECK_THROWS_AS(BinaryDisagreement(std::nan(""), 0.5), InvalidScenario);
    CHECK(BinaryDisagreement(0.75, 0.5).b_in() == 0.75);
}

TEST_CASE("payoff log-ratio: zero at agreement, frozen values, 1/R scaling") {
    for (double r : {0.5, 1.0, 2.0}) {
        CHECK(binary_payoff_log_ratio(BinaryDisagreement(0.3, 0.3), RiskAversion(r)) ==
              0.0);
    }
    const BinaryDisagreement d(0.75, 0.5);
    CHECK(std::abs(binary_payoff_log_ratio(d, RiskAversion(1.0)) - kLn3) <= 1e-15);
    CHECK(std::abs(binary_payoff_log_ratio(d, RiskAversion(2.0)) - kLn3 / 2.0) <= 1e-15);
}

TEST_CASE("the binary relation is a corollary of the general payoff machinery") {
    std::mt19937_64 gen(89);
    std::uniform_real_distribution<double> prob(0.05, 0.95);
    std::uniform_real_distribution<double> risk(0.5, 3.0);
    const auto space = OutcomeSpace::make({"in", "out"});
    for (int trial = 0; trial < 300; ++trial) {
        const BinaryDisagreement d(prob(gen), prob(gen));
        const RiskAversion r(risk(gen));
        const auto b = helpers::dist_on(space, {d.b_in(), 1.0 - d.b_in()});
        const auto m = helpers::dist_on(space, {d.m_in(), 1.0 - d.m_in()});
        const Payoff f = optimal_payoff(b, m, r);
        const double from_payoff = std::log(f[0]) - std::log(f[1]);
        CHECK(std::abs(binary_payoff_log_ratio(d, r) - from_payoff) <= 1e-12);
        // R times the log-ratio is the R-independent disagreement itself.
        const double scaled = binary_payoff_log_ratio(d, r) * r.value();
        const double base = binary_payoff_log_ratio(d, RiskAversion(1.0));
        CHECK(std::abs(scaled - base) <= 1e-12);
    }
}

TEST_CASE("a flat market turns belief ratios into likelihood ratios") {
    const auto [f_in, f_out] = likelihood_from_flat_prior(BinaryDisagreement(0.75, 0.5));
    CHECK(f_in == 1.5);
    CHECK(f_out == 0.5);
    const auto [g_in, g_out] = likelihood_from_flat_prior(BinaryDisagreement(0.5, 0.5));
    CHECK(g_in == 1.0);
    CHECK(g_out == 1.0);
    CHECK_THROWS_AS(likelihood_from_flat_prior(BinaryDisagreement(0.75, 0.6)),
                    NotFlatMarket);

    // Bayes reconstruction: b = f * m holds exactly against the flat market.
    std::mt19937_64 gen(97);
    std::uniform_real_distribution<double> prob(0.01, 0.99);
    for (int trial = 0; trial < 100; ++trial) {
        const double b_in = prob(gen);
        const auto [h_in, h_out] = likelihood_from_flat_prior(BinaryDisagreement(b_in, 0.5));
        CHECK(h_in * 0.5 == b_in);
        CHECK(h_out * 0.5 == 1.0 - b_in);
    }
}
