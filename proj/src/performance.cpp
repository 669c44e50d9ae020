#include "disbet/performance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace disbet {

namespace {

// Monotonicity slack for floating-point comparisons along curves.
constexpr double kCurveSlack = 1e-12;
// Bisection stops when the bracket is this narrow (round-trips demand 1e-6).
constexpr double kBisectWidth = 1e-9;
// A rate matching the target this closely counts as an exact hit.
constexpr double kRateTol = 1e-10;
constexpr int kBisectCap = 200;

void require_strictly_positive_market(const Distribution& m, const char* where) {
    if (!m.strictly_positive()) {
        throw ZeroMarketMass(std::string(where) + ": market mass must be strictly positive");
    }
}

}  // namespace

RateCurve::RateCurve(std::vector<double> r_values, std::vector<double> rates)
    : r_values_(std::move(r_values)), rates_(std::move(rates)) {
    if (r_values_.size() != rates_.size()) {
        throw std::logic_error("RateCurve: grid/rate length mismatch");
    }
    for (std::size_t i = 1; i < r_values_.size(); ++i) {
        if (!(r_values_[i] > r_values_[i - 1])) {
            throw UnsortedGrid("risk-aversion grid must be strictly increasing");
        }
        if (r_values_[i - 1] >= 1.0 && rates_[i] > rates_[i - 1] + kCurveSlack) {
            throw std::logic_error("RateCurve: rates increase along R >= 1");
        }
    }
}

double expected_rate_closed_form(const Distribution& b, const Distribution& m,
                                 RiskAversion r) {
    require_strictly_positive_market(m, "expected_rate_closed_form");
    if (r.log_utility()) return relative_entropy(b, m).nats();
    const double rr = r.value();
    const double kelly = relative_entropy(b, m).nats();
    const double shifted = renyi_divergence(b, m, 1.0 / rr).nats();
    return kelly / rr + (rr - 1.0) / rr * shifted;
}

double general_rate_law(const Distribution& p, const Distribution& b,
                        const Distribution& m, RiskAversion r) {
    require_strictly_positive_market(m, "general_rate_law");
    if (!b.strictly_positive()) {
        throw ZeroBeliefMass("general_rate_law: belief must be strictly positive");
    }
    const double rr = r.value();
    const double edge = relative_entropy(p, m).nats() - relative_entropy(p, b).nats();
    if (r.log_utility()) return edge;
    const double shifted = renyi_divergence(b, m, 1.0 / rr).nats();
    return edge / rr + (rr - 1.0) / rr * shifted;
}

double rate_drop(const Distribution& b, const Distribution& m, RiskAversion r) {
    require_strictly_positive_market(m, "rate_drop");
    if (r.log_utility()) return 0.0;
    const double rr = r.value();
    const double kelly = relative_entropy(b, m).nats();
    const double shifted = renyi_divergence(b, m, 1.0 / rr).nats();
    return std::abs(rr - 1.0) / rr * std::abs(kelly - shifted);
}

RateCurve rate_curve(const Distribution& b, const Distribution& m,
                     const std::vector<double>& r_grid) {
    for (std::size_t i = 1; i < r_grid.size(); ++i) {
        if (!(r_grid[i] > r_grid[i - 1])) {
            throw UnsortedGrid("risk-aversion grid must be strictly increasing");
        }
    }
    std::vector<double> rates;
    rates.reserve(r_grid.size());
    for (double r : r_grid) {
        rates.push_back(expected_rate_closed_form(b, m, RiskAversion(r)));
    }
    return RateCurve(r_grid, std::move(rates));
}

RiskAversion implied_risk_aversion(const Distribution& b, const Distribution& m,
                                   double target_rate) {
    constexpr double kRLo = 1.0, kRHi = 2.5;
    const double rate_at_lo = expected_rate_closed_form(b, m, RiskAversion(kRLo));
    const double rate_at_hi = expected_rate_closed_form(b, m, RiskAversion(kRHi));
    if (target_rate > rate_at_lo + kCurveSlack) {
        throw TargetOutOfRange("target rate " + std::to_string(target_rate) +
                               " exceeds the growth-optimal rate " +
                               std::to_string(rate_at_lo));
    }
    if (target_rate < rate_at_hi - kCurveSlack) {
        throw TargetOutOfRange("target rate " + std::to_string(target_rate) +
                               " is below the R=2.5 rate " + std::to_string(rate_at_hi));
    }
    // Smallest matching R: the curve is nonincreasing on [1, 2.5], so check
    // the left endpoint first, then bisect toward the leftmost crossing.
    if (std::abs(rate_at_lo - target_rate) <= kRateTol) return RiskAversion(kRLo);
    double lo = kRLo, hi = kRHi;
    for (int iter = 0; iter < kBisectCap && hi - lo > kBisectWidth; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double rate = expected_rate_closed_form(b, m, RiskAversion(mid));
        if (rate > target_rate) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return RiskAversion(0.5 * (lo + hi));
}

double compound_growth(double rate_per_run, std::size_t n_runs) {
    return std::exp(static_cast<double>(n_runs) * rate_per_run);
}

}  // namespace disbet
