#pragma once

// JSON scenario documents: the on-disk description of an outcome space, an
// optional market and realized distribution, an investor pool, and the grids
// a command may need.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disbet/market.hpp"
#include "disbet/simulate.hpp"

namespace disbet {

struct SimulationBlock {
    std::size_t n_runs = 0;
    std::size_t n_paths = 0;
    std::uint64_t seed = 0;
};

struct ScenarioDocument {
    SpacePtr space;
    std::optional<Distribution> market;
    std::optional<Distribution> true_p;
    std::vector<Investor> investors;
    std::vector<double> alphas;
    std::vector<double> r_grid;
    std::optional<SimulationBlock> simulation;
};

// Parses and validates a scenario from JSON text. Distribution-shaped arrays
// go through make_distribution, so mass errors surface under their own names;
// structural problems surface as InvalidScenario.
ScenarioDocument parse_scenario(const std::string& json_text);

// Reads the file and parses it. Errors: IoError, plus parse errors.
ScenarioDocument load_scenario(const std::string& path);

// The named investor. Errors: UnknownInvestor.
const Investor& find_investor(const ScenarioDocument& doc, const std::string& name);

// The explicit market if present; otherwise forms one from the investor pool
// when every investor is growth-optimizing (R = 1).
// Errors: MissingMarket (no market and no formable pool).
Distribution resolve_market(const ScenarioDocument& doc);

}  // namespace disbet
