#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "disbet/divergence.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace disbet;

namespace {

// Frozen reference values (direct high-precision sums, binary example
// b = (0.6, 0.4) against the even market).
constexpr double kDHalf = 0.010153423432867996;
constexpr double kDOne = 0.020135513550688873;
constexpr double kDTwo = 0.039220713153281296;
constexpr double kKlSkewedVsUniform3 = 0.058891517828191727;
constexpr double kLn2 = 0.6931471805599453;

Distribution binary_b() { return helpers::dist({0.6, 0.4}); }
Distribution binary_m() { return helpers::dist_on(binary_b().space(), {0.5, 0.5}); }

}  // namespace

TEST_CASE("extended rates carry nats, bits, and infinity") {
    const ExtendedRate r(kLn2);
    CHECK(r.finite());
    CHECK(r.nats() == kLn2);
    CHECK(r.bits() == r.nats() / kLn2);
    CHECK(r.bits() == doctest::Approx(1.0).epsilon(1e-15));

    const ExtendedRate inf = ExtendedRate::infinity();
    CHECK(!inf.finite());
    CHECK(std::isinf(inf.bits()));

    // Sub-rounding negative residue clamps to zero; real negatives are bugs.
    CHECK(ExtendedRate(-1e-12).nats() == 0.0);
    CHECK_THROWS_AS(ExtendedRate(-1e-3), std::logic_error);
    CHECK_THROWS_AS(ExtendedRate(std::nan("")), std::logic_error);
}

TEST_CASE("binary example hits the frozen divergence values") {
    const auto b = binary_b();
    const auto m = helpers::dist_on(b.space(), {0.5, 0.5});
    CHECK(std::abs(renyi_divergence(b, m, 0.5).nats() - kDHalf) <= 1e-15);
    CHECK(std::abs(renyi_divergence(b, m, 1.0).nats() - kDOne) <= 1e-15);
    CHECK(std::abs(renyi_divergence(b, m, 2.0).nats() - kDTwo) <= 1e-15);
    CHECK(std::abs(relative_entropy(b, m).nats() - kDOne) <= 1e-15);
    // D_2 against the even binary market is exactly ln of the second moment.
    CHECK(renyi_divergence(b, m, 2.0).nats() ==
          doctest::Approx(std::log(1.04)).epsilon(1e-14));
}

TEST_CASE("three-outcome relative entropy matches the direct sum") {
    const auto b = helpers::dist({0.5, 0.25, 0.25});
    const auto m = helpers::dist_on(b.space(), {1.0, 1.0, 1.0}, /*normalize=*/true);
    CHECK(std::abs(relative_entropy(b, m).nats() - kKlSkewedVsUniform3) <= 1e-15);
}

TEST_CASE("divergence order must be positive") {
    const auto b = binary_b();
    const auto m = helpers::dist_on(b.space(), {0.5, 0.5});
    CHECK_THROWS_AS(renyi_divergence(b, m, 0.0), NonPositiveAlpha);
    CHECK_THROWS_AS(renyi_divergence(b, m, -1.0), NonPositiveAlpha);
    CHECK_THROWS_AS(renyi_divergence(b, m, std::nan("")), NonPositiveAlpha);
}

TEST_CASE("orders within the unit window reuse the relative-entropy limit") {
    const auto b = binary_b();
    const auto m = helpers::dist_on(b.space(), {0.5, 0.5});
    const double kl = relative_entropy(b, m).nats();
    CHECK(renyi_divergence(b, m, 1.0 + 1e-10).nats() == kl);
    CHECK(renyi_divergence(b, m, 1.0 - 1e-10).nats() == kl);
    // Just outside the window the generic formula must still be continuous.
    CHECK(renyi_divergence(b, m, 1.0 + 1e-6).nats() == doctest::Approx(kl).epsilon(1e-5));
    CHECK(renyi_divergence(b, m, 1.0 - 1e-6).nats() == doctest::Approx(kl).epsilon(1e-5));
}

TEST_CASE("zero-mass conventions") {
    const auto space = OutcomeSpace::indexed(2);
    const auto point = helpers::dist_on(space, {1.0, 0.0});
    const auto even = helpers::dist_on(space, {0.5, 0.5});
    const auto other_point = helpers::dist_on(space, {0.0, 1.0});

    // Zero belief mass drops the term: D_alpha((1,0)||even) = ln 2 for all alpha.
    for (double alpha : {0.25, 0.5, 1.0, 2.0, 5.0}) {
        CHECK(renyi_divergence(point, even, alpha).nats() ==
              doctest::Approx(kLn2).epsilon(1e-14));
    }

    // Belief mass where the market has none: infinite from order 1 upward,
    // finite below.
    CHECK(!renyi_divergence(even, point, 1.0).finite());
    CHECK(!renyi_divergence(even, point, 2.0).finite());
    CHECK(renyi_divergence(even, point, 0.5).finite());
    CHECK(renyi_divergence(even, point, 0.5).nats() ==
          doctest::Approx(kLn2).epsilon(1e-14));

    // Disjoint supports: infinite at every order.
    for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
        CHECK(!renyi_divergence(point, other_point, alpha).finite());
    }
}

TEST_CASE("divergences agree with the naive oracle on random instances") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto space = OutcomeSpace::indexed(2 + trial % 5);
        const auto b = helpers::random_dist(space, gen);
        const auto m = helpers::random_dist(space, gen);
        for (double alpha : {0.25, 0.5, 0.9, 1.0, 1.1, 2.0, 3.0}) {
            const double got = renyi_divergence(b, m, alpha).nats();
            const double want =
                static_cast<double>(oracle::renyi(b.mass(), m.mass(), alpha));
            CHECK(std::abs(got - want) <= 1e-12 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("divergence is nonnegative, zero at equality, nondecreasing in order") {
    std::mt19937_64 gen(37);
    const std::vector<double> alphas = {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0};
    for (int trial = 0; trial < 100; ++trial) {
        const auto space = OutcomeSpace::indexed(2 + trial % 5);
        const auto b = helpers::random_dist(space, gen);
        const auto m = helpers::random_dist(space, gen);
        double prev = -1.0;
        for (double alpha : alphas) {
            const double d = renyi_divergence(b, m, alpha).nats();
            CHECK(d >= 0.0);
            CHECK(d >= prev - 1e-12);
            prev = d;
        }
        for (double alpha : alphas) {
            CHECK(renyi_divergence(b, b, alpha).nats() <= 1e-12);
        }
    }
}

TEST_CASE("profiles validate their grid and evaluate pointwise") {
    const auto b = binary_b();
    const auto m = helpers::dist_on(b.space(), {0.5, 0.5});
    CHECK_THROWS_AS(divergence_profile(b, m, {1.0, 0.5}), UnsortedAlphas);
    CHECK_THROWS_AS(divergence_profile(b, m, {0.5, 0.5}), UnsortedAlphas);

    const DivergenceProfile profile = divergence_profile(b, m, {0.5, 1.0, 2.0});
    REQUIRE(profile.size() == 3);
    CHECK(profile.alphas()[1] == 1.0);
    CHECK(profile.values()[0].nats() == renyi_divergence(b, m, 0.5).nats());
    CHECK(profile.values()[2].nats() == renyi_divergence(b, m, 2.0).nats());
}

TEST_CASE("phi divergence recovers relative entropy and affine zero") {
    std::mt19937_64 gen(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto space = OutcomeSpace::indexed(2 + trial % 5);
        const auto b = helpers::random_dist(space, gen);
        const auto m = helpers::random_dist(space, gen);
        const double as_kl = phi_divergence(b, m, [](double u) { return -std::log(u); });
        CHECK(std::abs(as_kl - relative_entropy(b, m).nats()) <= 1e-12);
        const double affine = phi_divergence(b, m, [](double u) { return u - 1.0; });
        CHECK(std::abs(affine) <= 1e-12);
    }
    const auto with_zero = helpers::dist({1.0, 0.0});
    const auto even = helpers::dist_on(with_zero.space(), {0.5, 0.5});
    CHECK_THROWS_AS(phi_divergence(with_zero, even, [](double u) { return u; }),
                    ZeroBeliefMass);
}
