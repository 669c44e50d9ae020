#include "disbet/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "disbet/kernels.hpp"
#include "disbet/portfolio.hpp"

namespace disbet {

namespace {

// Guards the z-score denominator when every path lands on the same rate
// (degenerate deterministic scenarios); any real dispersion dwarfs this.
constexpr double kSeFloor = 1e-12;

void run_paths(const Distribution& true_p, const std::vector<double>& log_payoff,
               std::size_t n_runs, std::uint64_t seed, std::size_t first,
               std::size_t last, std::vector<double>& log_capital) {
    for (std::size_t path = first; path < last; ++path) {
        RngState rng(seed, path);
        double log_cap = 0.0;
        for (std::size_t run = 0; run < n_runs; ++run) {
            log_cap += log_payoff[sample_outcome(true_p, rng)];
        }
        log_capital[path] = log_cap;
    }
}

}  // namespace

SimResult run_repeated_game(const Scenario& scenario, unsigned n_workers) {
    if (scenario.n_runs == 0) throw InvalidScenario("simulation needs n_runs >= 1");
    if (scenario.n_paths == 0) throw InvalidScenario("simulation needs n_paths >= 1");
    require_same_space(scenario.market.space(), scenario.true_p.space(),
                       "run_repeated_game");
    require_same_space(scenario.market.space(), scenario.investor.belief().space(),
                       "run_repeated_game");
    const Payoff payoff = optimal_payoff(scenario.investor.belief(), scenario.market,
                                         scenario.investor.risk_aversion());
    std::vector<double> log_payoff(payoff.size());
    for (std::size_t i = 0; i < payoff.size(); ++i) log_payoff[i] = std::log(payoff[i]);

    const std::size_t n_paths = scenario.n_paths;
    SimResult result;
    result.n_runs = scenario.n_runs;
    result.seed = scenario.seed;
    result.log_capital.resize(n_paths);

    if (n_workers == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        n_workers = std::max(1u, hw);
    }
    n_workers = static_cast<unsigned>(
        std::min<std::size_t>(n_workers, n_paths));
    if (n_workers <= 1) {
        run_paths(scenario.true_p, log_payoff, scenario.n_runs, scenario.seed, 0,
                  n_paths, result.log_capital);
    } else {
        // Each worker owns a contiguous block of path indices and writes only
        // its own slots, so the result is independent of scheduling.
        std::vector<std::thread> workers;
        workers.reserve(n_workers);
        const std::size_t per_worker = (n_paths + n_workers - 1) / n_workers;
        for (unsigned w = 0; w < n_workers; ++w) {
            const std::size_t first = std::min<std::size_t>(w * per_worker, n_paths);
            const std::size_t last = std::min<std::size_t>(first + per_worker, n_paths);
            if (first == last) break;
            workers.emplace_back([&, first, last] {
                run_paths(scenario.true_p, log_payoff, scenario.n_runs, scenario.seed,
                          first, last, result.log_capital);
            });
        }
        for (std::thread& t : workers) t.join();
    }

    result.final_capital.resize(n_paths);
    result.path_rate.resize(n_paths);
    const double runs = static_cast<double>(scenario.n_runs);
    for (std::size_t i = 0; i < n_paths; ++i) {
        result.final_capital[i] = std::exp(result.log_capital[i]);
        result.path_rate[i] = result.log_capital[i] / runs;
    }
    result.mean_rate = kernels::active().sum(result.path_rate.data(), n_paths) /
                       static_cast<double>(n_paths);
    if (n_paths >= 2) {
        double ss = 0.0;
        for (double r : result.path_rate) {
            const double d = r - result.mean_rate;
            ss += d * d;
        }
        const double variance = ss / static_cast<double>(n_paths - 1);
        result.std_error = std::sqrt(variance / static_cast<double>(n_paths));
    }
    return result;
}

SimReport summarize(const SimResult& result, double predicted_rate) {
    if (result.path_rate.size() < 2) {
        throw TooFewPaths("summarize needs at least 2 paths, got " +
                          std::to_string(result.path_rate.size()));
    }
    SimReport report;
    report.mean = result.mean_rate;
    report.std_error = result.std_error;
    report.predicted = predicted_rate;
    report.z = (result.mean_rate - predicted_rate) / std::max(result.std_error, kSeFloor);
    report.pass = std::abs(report.z) <= 3.0;
    return report;
}

}  // namespace disbet
