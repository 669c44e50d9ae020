#pragma once

// Renyi divergence family, relative entropy, disagreement profiles, and
// phi-divergences. All rates are in nats; +infinity is a first-class value
// (non-absolutely-continuous pairs), never an error.

#include <functional>
#include <limits>
#include <vector>

#include "disbet/core.hpp"

namespace disbet {

// Divergence orders closer to 1 than this are evaluated via the relative
// entropy limit; the generic formula divides by alpha-1 and would amplify
// log-sum rounding noise unboundedly as alpha -> 1.
inline constexpr double kAlphaOneWindow = 1e-9;

// A nonnegative rate in nats, possibly +infinity, never NaN.
class ExtendedRate {
public:
    explicit ExtendedRate(double nats);
    static ExtendedRate infinity() {
        return ExtendedRate(std::numeric_limits<double>::infinity());
    }

    double nats() const noexcept { return nats_; }
    double bits() const noexcept;
    bool finite() const noexcept { return nats_ != std::numeric_limits<double>::infinity(); }

    friend bool operator==(ExtendedRate a, ExtendedRate b) { return a.nats_ == b.nats_; }
    friend bool operator<(ExtendedRate a, ExtendedRate b) { return a.nats_ < b.nats_; }

private:
    double nats_;
};

// D_alpha(b||m). Conventions for zero mass: terms with b(x)=0 contribute
// nothing; b(x)>0 with m(x)=0 gives +infinity for alpha >= 1 and drops the
// term for alpha < 1. Computed in the log domain.
// Errors: SpaceMismatch, NonPositiveAlpha.
ExtendedRate renyi_divergence(const Distribution& b, const Distribution& m, double alpha);

// D_1(b||m) = sum_x b ln(b/m), the alpha -> 1 limit.
ExtendedRate relative_entropy(const Distribution& b, const Distribution& m);

// The disagreement profile alpha -> D_alpha(b||m).
class DivergenceProfile {
public:
    DivergenceProfile(std::vector<double> alphas, std::vector<ExtendedRate> values);

    const std::vector<double>& alphas() const noexcept { return alphas_; }
    const std::vector<ExtendedRate>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return alphas_.size(); }

private:
    std::vector<double> alphas_;
    std::vector<ExtendedRate> values_;
};

// Errors: UnsortedAlphas, plus anything renyi_divergence raises.
DivergenceProfile divergence_profile(const Distribution& b, const Distribution& m,
                                     const std::vector<double>& alphas);

// sum_x b(x) * phi(m(x)/b(x)). Requires b strictly positive.
// Errors: SpaceMismatch, ZeroBeliefMass.
double phi_divergence(const Distribution& b, const Distribution& m,
                      const std::function<double(double)>& phi);

}  // namespace disbet
