#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "disbet/market.hpp"
#include "helpers.hpp"

using namespace disbet;

namespace {

constexpr double kLeaderRate = 0.0050936119312244779;
constexpr double kFollowerRate = -0.015041901619464396;

Investor investor(const std::string& name, const Distribution& belief, double r,
                  double budget) {
    return Investor(name, belief, RiskAversion(r), budget);
}

}  // namespace

TEST_CASE("investors validate their name and budget") {
    const auto b = helpers::dist({0.6, 0.4});
    CHECK_THROWS_AS(investor("", b, 1.0, 1.0), InvalidScenario);
    CHECK_THROWS_AS(investor("a", b, 1.0, 0.0), InvalidScenario);
    CHECK_THROWS_AS(investor("a", b, 1.0, -2.0), InvalidScenario);
    CHECK_THROWS_AS(investor("a", b, 1.0, INFINITY), InvalidScenario);
    CHECK_THROWS_AS(investor("a", b, 1.0, std::nan("")), InvalidScenario);
    CHECK(investor("a", b, 2.0, 3.0).budget() == 3.0);
}

TEST_CASE("market formation pools beliefs by budget") {
    const auto b1 = helpers::dist({0.6, 0.4});
    const auto space = b1.space();
    const auto b2 = helpers::dist_on(space, {0.3, 0.7});

    CHECK_THROWS_AS(form_market({}), EmptyPool);

    const Distribution solo = form_market({investor("only", b1, 1.0, 5.0)});
    CHECK(solo[0] == b1[0]);
    CHECK(solo[1] == b1[1]);

    const Distribution split =
        form_market({investor("yes", helpers::dist_on(space, {1.0, 0.0}), 1.0, 1.0),
                     investor("no", helpers::dist_on(space, {0.0, 1.0}), 1.0, 1.0)});
    CHECK(split[0] == 0.5);
    CHECK(split[1] == 0.5);

    const Distribution weighted =
        form_market({investor("big", b1, 1.0, 2.0), investor("small", b2, 1.0, 1.0)});
    CHECK(weighted[0] == 0.5);
    CHECK(weighted[1] == 0.5);
}

TEST_CASE("only growth-optimizing pools admit the closed form") {
    const auto b = helpers::dist({0.6, 0.4});
    CHECK_THROWS_AS(
        form_market({investor("ok", b, 1.0, 1.0), investor("risky", b, 2.0, 1.0)}),
        UnsupportedRiskAversion);
}

TEST_CASE("mixing across different outcome spaces is rejected") {
    const auto b1 = helpers::dist({0.6, 0.4});
    const auto other = make_distribution(OutcomeSpace::make({"l", "r"}), {0.5, 0.5});
    CHECK_THROWS_AS(
        form_market({investor("a", b1, 1.0, 1.0), investor("b", other, 1.0, 1.0)}),
        SpaceMismatch);
}

TEST_CASE("rescaling all budgets leaves the market unchanged") {
    std::mt19937_64 gen(79);
    std::uniform_real_distribution<double> budget(0.1, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto space = OutcomeSpace::indexed(2 + trial % 5);
        std::vector<Investor> pool, scaled;
        for (int i = 0; i < 4; ++i) {
            const auto belief = helpers::random_dist(space, gen);
            const double w = budget(gen);
            pool.push_back(investor("i" + std::to_string(i), belief, 1.0, w));
            scaled.push_back(investor("i" + std::to_string(i), belief, 1.0, w * 7.25));
        }
        const Distribution m1 = form_market(pool);
        const Distribution m2 = form_market(scaled);
        double total = 0.0;
        for (std::size_t i = 0; i < m1.size(); ++i) {
            CHECK(std::abs(m1[i] - m2[i]) <= 1e-15);
            total += m1[i];
        }
        CHECK(std::abs(total - 1.0) <= 1e-15);
    }
}

TEST_CASE("per-investor rates follow the general law against the mixture") {
    const auto b1 = helpers::dist({0.6, 0.4});
    const auto space = b1.space();
    const auto b2 = helpers::dist_on(space, {0.5, 0.5});
    const std::vector<Investor> pool = {investor("leader", b1, 1.0, 1.0),
                                        investor("follower", b2, 1.0, 1.0)};
    const Distribution m = form_market(pool);
    CHECK(m[0] == 0.55);
    CHECK(m[1] == 0.45);

    const auto rates = per_investor_rates(pool, m, b1);
    REQUIRE(rates.size() == 2);
    CHECK(rates[0].first == "leader");
    CHECK(rates[1].first == "follower");
    CHECK(std::abs(rates[0].second - kLeaderRate) <= 1e-15);
    CHECK(std::abs(rates[1].second - kFollowerRate) <= 1e-15);
    CHECK(rates[0].second > rates[1].second);
}

TEST_CASE("at the mixture's own view every member expects a nonpositive rate") {
    std::mt19937_64 gen(83);
    for (int trial = 0; trial < 30; ++trial) {
        const auto space = OutcomeSpace::indexed(2 + trial % 5);
        std::vector<Investor> pool;
        for (int i = 0; i < 3; ++i) {
            pool.push_back(
                investor("i" + std::to_string(i), helpers::random_dist(space, gen), 1.0,
                         0.5 + i));
        }
        const Distribution m = form_market(pool);
        double weighted_sum = 0.0, total_budget = 0.0;
        for (const auto& [name, rate] : per_investor_rates(pool, m, m)) {
            CHECK(rate <= 1e-12);
            (void)name;
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            weighted_sum += pool[i].budget() *
                            general_rate_law(m, pool[i].belief(), m, RiskAversion(1.0));
            total_budget += pool[i].budget();
        }
        CHECK(weighted_sum / total_budget <= 1e-12);
    }
}

TEST_CASE("identical beliefs mean zero rates at their common truth") {
    const auto b = helpers::dist({0.7, 0.3});
    const std::vector<Investor> pool = {investor("a", b, 1.0, 1.0),
                                        investor("b", b, 1.0, 2.0)};
    const Distribution m = form_market(pool);
    for (const auto& [name, rate] : per_investor_rates(pool, m, b)) {
        CHECK(std::abs(rate) <= 1e-12);
        (void)name;
    }
}
