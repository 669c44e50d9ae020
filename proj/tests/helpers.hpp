#pragma once

// Shared construction shortcuts and deterministic random-instance generators
// for the test suite.

#include <random>
#include <vector>

#include "disbet/core.hpp"

namespace helpers {

inline disbet::Distribution dist(const std::vector<double>& mass, bool normalize = false) {
    return disbet::make_distribution(disbet::OutcomeSpace::indexed(mass.size()), mass,
                                     normalize);
}

inline disbet::Distribution dist_on(const disbet::SpacePtr& space,
                                    const std::vector<double>& mass,
                                    bool normalize = false) {
    return disbet::make_distribution(space, mass, normalize);
}

// Strictly positive random distribution on `space`; masses bounded away from
// zero so every tested divergence stays finite and moderate.
inline disbet::Distribution random_dist(const disbet::SpacePtr& space,
                                        std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> w(space->size());
    for (double& v : w) v = u(gen);
    return disbet::make_distribution(space, std::move(w), /*normalize=*/true);
}

// Random payoff with price 1 against m: positive values scaled by their quote.
inline std::vector<double> random_unit_price_payoff(const std::vector<double>& m,
                                                    std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.1, 2.0);
    std::vector<double> g(m.size());
    for (double& v : g) v = u(gen);
    double quote = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) quote += g[i] * m[i];
    for (double& v : g) v /= quote;
    return g;
}

}  // namespace helpers
