#include "disbet/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "disbet/kernels.hpp"

namespace disbet {

RiskAversion::RiskAversion(double r) : r_(r) {
    if (!std::isfinite(r_) || r_ <= 0.0) {
        throw UnsupportedRiskAversion("R = " + std::to_string(r) + ", need finite R > 0");
    }
}

Payoff::Payoff(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_ || space_->size() != values_.size()) {
        throw std::invalid_argument("Payoff: value count does not match outcome space");
    }
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("Payoff: values must be positive and finite");
        }
    }
}

double price(const Payoff& f, const Distribution& m) {
    require_same_space(f.space(), m.space(), "price");
    return kernels::active().dot(f.data(), m.data(), f.size());
}

Payoff optimal_payoff(const Distribution& b, const Distribution& m, RiskAversion r,
                      ZeroBeliefPolicy policy) {
    require_same_space(b.space(), m.space(), "optimal_payoff");
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i] == 0.0) {
            throw ZeroMarketMass("optimal_payoff: market mass is zero at outcome '" +
                                 m.space()->label(i) + "'");
        }
    }
    const double inv_r = 1.0 / r.value();
    std::vector<double> t(n);
    if (b.strictly_positive()) {
        kernels::active().pow_ratio(b.data(), m.data(), inv_r, t.data(), n);
    } else {
        if (policy == ZeroBeliefPolicy::kReject) {
            throw ZeroBeliefMass("optimal_payoff: belief assigns zero mass");
        }
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = b[i] > 0.0 ? std::pow(b[i] / m[i], inv_r) : 0.0;
        }
    }
    for (double& v : t) v = std::max(v, kPayoffFloor);
    const double quote = kernels::active().dot(t.data(), m.data(), n);
    for (double& v : t) v /= quote;
    return Payoff(b.space(), std::move(t));
}

double expected_rate(const Payoff& f, const Distribution& m, const Distribution& p) {
    require_same_space(f.space(), p.space(), "expected_rate");
    const double quote = price(f, m);
    const double mean_log_payoff =
        kernels::active().weighted_log_sum(p.data(), f.data(), p.size());
    return mean_log_payoff - std::log(quote);
}

double expected_utility(const Payoff& f, const Distribution& b, RiskAversion r) {
    require_same_space(f.space(), b.space(), "expected_utility");
    const std::size_t n = f.size();
    const auto& k = kernels::active();
    if (r.log_utility()) return k.weighted_log_sum(b.data(), f.data(), n);
    std::vector<double> u(n);
    k.pow_scale(f.data(), 1.0 - r.value(), u.data(), n);
    return k.dot(b.data(), u.data(), n) / (1.0 - r.value());
}

double elasticity_residual(const Payoff& f, const Distribution& b,
                           const Distribution& m, RiskAversion r) {
    require_same_space(f.space(), b.space(), "elasticity_residual");
    require_same_space(f.space(), m.space(), "elasticity_residual");
    if (!b.strictly_positive()) {
        throw ZeroBeliefMass("elasticity_residual: belief must be strictly positive");
    }
    const RatioFunction ratio = belief_ratio(b, m);
    const std::size_t n = f.size();
    const double inv_r = 1.0 / r.value();
    double residual = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (ratio[i] == ratio[j]) continue;
            const double slope = (std::log(f[i]) - std::log(f[j])) /
                                 (std::log(ratio[i]) - std::log(ratio[j]));
            residual = std::max(residual, std::abs(slope - inv_r));
        }
    }
    if (residual < 0.0) {
        throw DegenerateRatio(
            "elasticity_residual: belief ratio is constant, no pair to test");
    }
    return residual;
}

}  // namespace disbet
