#pragma once

// Market formation: pool several growth-optimizing investors' beliefs and
// budgets into the mixture distribution the market quotes, and evaluate each
// investor's expected rate against it.

#include <string>
#include <utility>
#include <vector>

#include "disbet/performance.hpp"
#include "disbet/portfolio.hpp"

namespace disbet {

// One market participant: a named belief with a risk aversion and a budget.
class Investor {
public:
    // Errors: InvalidScenario (empty name, or budget not positive and finite).
    Investor(std::string name, Distribution belief, RiskAversion risk_aversion,
             double budget);

    const std::string& name() const noexcept { return name_; }
    const Distribution& belief() const noexcept { return belief_; }
    RiskAversion risk_aversion() const noexcept { return risk_aversion_; }
    double budget() const noexcept { return budget_; }

private:
    std::string name_;
    Distribution belief_;
    RiskAversion risk_aversion_;
    double budget_;
};

// The budget-weighted mixture m(x) = sum_i w_i b_i(x) / sum_k w_k. Only pools
// of growth-optimizing investors (R = 1) admit this closed form; others are
// rejected rather than approximated.
// Errors: EmptyPool, UnsupportedRiskAversion (any R != 1), SpaceMismatch.
Distribution form_market(const std::vector<Investor>& investors);

// Each investor's expected log-rate against the market under the realized
// distribution true_p, via the general rate law with that investor's own R.
// Returned in input order.
// Errors: ZeroMarketMass, SpaceMismatch, plus propagated.
std::vector<std::pair<std::string, double>> per_investor_rates(
    const std::vector<Investor>& investors, const Distribution& m,
    const Distribution& true_p);

}  // namespace disbet
