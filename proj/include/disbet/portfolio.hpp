#pragma once

// Payoff pricing, the risk-aversion-optimal payoff construction, realized and
// expected logarithmic rates, and CRRA expected utility.

#include <vector>

#include "disbet/core.hpp"

namespace disbet {

// Positive floor substituted for f^(1/R) on outcomes the belief rules out.
// Keeps ln F finite so total-loss bets stay representable; the perturbation
// is below every displayed precision.
inline constexpr double kPayoffFloor = 1e-12;

// Arrow-Pratt relative risk aversion, R = -F U''/U'. Dimensionless, > 0.
class RiskAversion {
public:
    // Errors: UnsupportedRiskAversion (R <= 0, NaN, or infinite).
    explicit RiskAversion(double r);

    double value() const noexcept { return r_; }
    // The empirically confirmed band 1 <= R <= 2.5.
    bool natural() const noexcept { return r_ >= 1.0 && r_ <= 2.5; }
    // Log utility (the growth-optimizing investor).
    bool log_utility() const noexcept { return r_ == 1.0; }

private:
    double r_;
};

// Reward per unit invested, one value per outcome; strictly positive, finite.
class Payoff {
public:
    // Throws std::invalid_argument on non-positive or non-finite values or a
    // length mismatch with the space.
    Payoff(SpacePtr space, std::vector<double> values);

    const SpacePtr& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    const double* data() const noexcept { return values_.data(); }

private:
    SpacePtr space_;
    std::vector<double> values_;
};

// Price[F] = sum_x F(x) m(x): the market maker's quote for the payoff.
// Errors: SpaceMismatch.
double price(const Payoff& f, const Distribution& m);

// What to do when the belief assigns zero mass to some outcome.
enum class ZeroBeliefPolicy {
    kFloor,   // substitute kPayoffFloor for f^(1/R) on that outcome
    kReject,  // throw ZeroBeliefMass
};

// The utility-maximizing payoff F(x) = f(x)^(1/R) / Price[f^(1/R)], where
// f = b/m. Always prices to 1 within rounding. R = 1 gives the normalized
// ratio f itself.
// Errors: ZeroMarketMass; ZeroBeliefMass (kReject policy only).
Payoff optimal_payoff(const Distribution& b, const Distribution& m, RiskAversion r,
                      ZeroBeliefPolicy policy = ZeroBeliefPolicy::kFloor);

// Expected logarithmic rate of return sum_x p(x) ln(F(x)/Price[F]) where the
// price is quoted against m and the expectation runs over p.
// Errors: SpaceMismatch.
double expected_rate(const Payoff& f, const Distribution& m, const Distribution& p);

// CRRA expected utility sum_x b(x) U(F(x)) with U = ln F for R = 1 and
// U = F^(1-R)/(1-R) otherwise.
// Errors: SpaceMismatch.
double expected_utility(const Payoff& f, const Distribution& b, RiskAversion r);

// Worst-case deviation of the discrete payoff elasticity from 1/R: the max
// over outcome pairs with f(x) != f(y) of
// |(ln F(x) - ln F(y)) / (ln f(x) - ln f(y)) - 1/R|.
// Errors: ZeroMarketMass, ZeroBeliefMass, DegenerateRatio (f constant).
double elasticity_residual(const Payoff& f, const Distribution& b,
                           const Distribution& m, RiskAversion r);

}  // namespace disbet
