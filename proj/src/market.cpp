#include "disbet/market.hpp"

#include <cmath>

#include "disbet/kernels.hpp"

namespace disbet {

Investor::Investor(std::string name, Distribution belief, RiskAversion risk_aversion,
                   double budget)
    : name_(std::move(name)),
      belief_(std::move(belief)),
      risk_aversion_(risk_aversion),
      budget_(budget) {
    if (name_.empty()) throw InvalidScenario("investor name must not be empty");
    if (!std::isfinite(budget_) || budget_ <= 0.0) {
        throw InvalidScenario("investor '" + name_ + "': budget must be positive, got " +
                              std::to_string(budget_));
    }
}

Distribution form_market(const std::vector<Investor>& investors) {
    if (investors.empty()) throw EmptyPool("form_market: no investors");
    const SpacePtr& space = investors.front().belief().space();
    for (const Investor& inv : investors) {
        require_same_space(space, inv.belief().space(), "form_market");
        if (!inv.risk_aversion().log_utility()) {
            throw UnsupportedRiskAversion(
                "form_market: investor '" + inv.name() + "' has R = " +
                std::to_string(inv.risk_aversion().value()) +
                "; the closed-form mixture needs R = 1 throughout");
        }
    }
    const std::size_t n = space->size();
    std::vector<double> acc(n, 0.0);
    double total_budget = 0.0;
    for (const Investor& inv : investors) {
        kernels::active().scale_add(acc.data(), inv.belief().data(), inv.budget(), n);
        total_budget += inv.budget();
    }
    for (double& v : acc) v /= total_budget;
    return make_distribution(space, std::move(acc), /*normalize=*/true);
}

std::vector<std::pair<std::string, double>> per_investor_rates(
    const std::vector<Investor>& investors, const Distribution& m,
    const Distribution& true_p) {
    if (investors.empty()) throw EmptyPool("per_investor_rates: no investors");
    std::vector<std::pair<std::string, double>> rates;
    rates.reserve(investors.size());
    for (const Investor& inv : investors) {
        rates.emplace_back(inv.name(),
                           general_rate_law(true_p, inv.belief(), m, inv.risk_aversion()));
    }
    return rates;
}

}  // namespace disbet
