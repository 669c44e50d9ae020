#pragma once

// Closed-form expected-rate laws, the rate-drop identity, inversion of the
// rate curve back to a risk aversion, and multi-run compounding.

#include <vector>

#include "disbet/divergence.hpp"
#include "disbet/portfolio.hpp"

namespace disbet {

// Expected rate of return as a function of risk aversion, nats per run.
class RateCurve {
public:
    RateCurve(std::vector<double> r_values, std::vector<double> rates);

    const std::vector<double>& r_values() const noexcept { return r_values_; }
    const std::vector<double>& rates() const noexcept { return rates_; }
    std::size_t size() const noexcept { return r_values_.size(); }

private:
    std::vector<double> r_values_;
    std::vector<double> rates_;
};

// Expected log-rate of the optimal payoff when the belief is correct:
// (1/R) D_1(b||m) + ((R-1)/R) D_{1/R}(b||m), in nats per run.
// Errors: ZeroMarketMass, plus propagated divergence errors.
double expected_rate_closed_form(const Distribution& b, const Distribution& m,
                                 RiskAversion r);

// Expected log-rate of the optimal payoff under an arbitrary realized
// distribution p: (1/R)(D_1(p||m) - D_1(p||b)) + ((R-1)/R) D_{1/R}(b||m).
// Reduces to the closed form above at p = b.
// Errors: ZeroMarketMass, ZeroBeliefMass, plus propagated.
double general_rate_law(const Distribution& p, const Distribution& b,
                        const Distribution& m, RiskAversion r);

// Shortfall below the growth-optimal rate: (|R-1|/R) |D_1 - D_{1/R}|.
// Equals relative_entropy(b, m) - expected_rate_closed_form(b, m, R).
// Errors: ZeroMarketMass, plus propagated.
double rate_drop(const Distribution& b, const Distribution& m, RiskAversion r);

// Pointwise closed-form rates over a strictly increasing grid of risk
// aversions. Errors: UnsortedGrid, plus propagated (non-positive grid entries
// surface as UnsupportedRiskAversion).
RateCurve rate_curve(const Distribution& b, const Distribution& m,
                     const std::vector<double>& r_grid);

// Smallest R in [1, 2.5] whose closed-form rate matches target_rate, found by
// bisection on the nonincreasing segment of the curve.
// Errors: TargetOutOfRange (target above the R=1 rate or below the R=2.5
// rate), plus propagated.
RiskAversion implied_risk_aversion(const Distribution& b, const Distribution& m,
                                   double target_rate);

// Capital multiple after n_runs runs at a fixed log-rate: exp(n * rate).
double compound_growth(double rate_per_run, std::size_t n_runs);

}  // namespace disbet
