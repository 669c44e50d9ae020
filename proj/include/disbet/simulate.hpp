#pragma once

// Seeded Monte Carlo repetition of the betting game: each path reinvests its
// returns run after run, and realized log-growth is checked against the
// closed-form rate laws.

#include <cstdint>
#include <vector>

#include "disbet/market.hpp"

namespace disbet {

// One repeated-game experiment. The payoff is built once from the investor's
// belief and held fixed across runs, matching a market that does not re-quote.
struct Scenario {
    Distribution market;
    Distribution true_p;
    Investor investor;
    std::size_t n_runs = 1;
    std::size_t n_paths = 1;
    std::uint64_t seed = 0;
};

struct SimResult {
    // ln of each path's final capital (paths start at capital 1).
    std::vector<double> log_capital;
    // exp(log_capital); may overflow to +infinity for extreme scenarios.
    std::vector<double> final_capital;
    // log_capital / n_runs: each path's mean log-rate in nats per run.
    std::vector<double> path_rate;
    double mean_rate = 0.0;
    // Standard error of the mean over paths; 0 when fewer than 2 paths.
    double std_error = 0.0;
    std::size_t n_runs = 0;
    std::uint64_t seed = 0;
};

// Convergence report for a simulation against a predicted rate.
struct SimReport {
    double mean = 0.0;
    double std_error = 0.0;
    double predicted = 0.0;
    double z = 0.0;
    bool pass = false;
};

// Runs every path: draws outcomes from true_p on the path's own RNG stream
// (stream index = path index under the scenario seed) and accumulates
// ln F(outcome) in log space. Results are byte-identical for a fixed scenario
// regardless of n_workers; n_workers = 0 picks a hardware-based count.
// Errors: ZeroMarketMass, SpaceMismatch, InvalidScenario (zero runs/paths),
// plus propagated payoff-construction errors.
SimResult run_repeated_game(const Scenario& scenario, unsigned n_workers = 0);

// z-scores the simulated mean log-rate against predicted_rate; passes at
// |z| <= 3. Errors: TooFewPaths (need >= 2 paths for a standard error).
SimReport summarize(const SimResult& result, double predicted_rate);

}  // namespace disbet
