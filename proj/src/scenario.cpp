#include "disbet/scenario.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace disbet {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& node, const std::string& key) {
    if (!node.is_array()) {
        throw InvalidScenario("'" + key + "' must be an array of numbers");
    }
    std::vector<double> values;
    values.reserve(node.size());
    for (const json& v : node) {
        if (!v.is_number()) {
            throw InvalidScenario("'" + key + "' must contain only numbers");
        }
        values.push_back(v.get<double>());
    }
    return values;
}

Distribution mass_array(const json& node, const std::string& key, const SpacePtr& space) {
    return make_distribution(space, number_array(node, key));
}

Investor parse_investor(const json& node, const SpacePtr& space) {
    if (!node.is_object()) throw InvalidScenario("each investor must be an object");
    if (!node.contains("name") || !node["name"].is_string()) {
        throw InvalidScenario("investor needs a string 'name'");
    }
    const std::string name = node["name"].get<std::string>();
    if (!node.contains("belief")) {
        throw InvalidScenario("investor '" + name + "' needs a 'belief' array");
    }
    double r = 1.0;
    if (node.contains("risk_aversion")) {
        if (!node["risk_aversion"].is_number()) {
            throw InvalidScenario("investor '" + name + "': risk_aversion must be a number");
        }
        r = node["risk_aversion"].get<double>();
    }
    double budget = 1.0;
    if (node.contains("budget")) {
        if (!node["budget"].is_number()) {
            throw InvalidScenario("investor '" + name + "': budget must be a number");
        }
        budget = node["budget"].get<double>();
    }
    return Investor(name, mass_array(node["belief"], "belief", space), RiskAversion(r),
                    budget);
}

SimulationBlock parse_simulation(const json& node) {
    if (!node.is_object()) throw InvalidScenario("'simulation' must be an object");
    SimulationBlock block;
    for (const char* key : {"n_runs", "n_paths"}) {
        if (!node.contains(key) || !node[key].is_number_unsigned() ||
            node[key].get<std::uint64_t>() == 0) {
            throw InvalidScenario(std::string("simulation needs a positive integer '") +
                                  key + "'");
        }
    }
    block.n_runs = node["n_runs"].get<std::size_t>();
    block.n_paths = node["n_paths"].get<std::size_t>();
    if (node.contains("seed")) {
        if (!node["seed"].is_number_unsigned()) {
            throw InvalidScenario("simulation 'seed' must be a nonnegative integer");
        }
        block.seed = node["seed"].get<std::uint64_t>();
    }
    return block;
}

}  // namespace

ScenarioDocument parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidScenario(std::string("not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw InvalidScenario("top level must be a JSON object");
    if (!root.contains("outcomes")) throw InvalidScenario("missing 'outcomes' array");

    ScenarioDocument doc;
    std::vector<std::string> labels;
    for (const json& v : root["outcomes"]) {
        if (!v.is_string()) throw InvalidScenario("'outcomes' must contain strings");
        labels.push_back(v.get<std::string>());
    }
    doc.space = OutcomeSpace::make(std::move(labels));

    if (root.contains("market")) {
        doc.market = mass_array(root["market"], "market", doc.space);
    }
    if (root.contains("true_p")) {
        doc.true_p = mass_array(root["true_p"], "true_p", doc.space);
    }
    if (root.contains("investors")) {
        if (!root["investors"].is_array()) {
            throw InvalidScenario("'investors' must be an array");
        }
        std::unordered_set<std::string> seen;
        for (const json& node : root["investors"]) {
            Investor inv = parse_investor(node, doc.space);
            if (!seen.insert(inv.name()).second) {
                throw InvalidScenario("duplicate investor name '" + inv.name() + "'");
            }
            doc.investors.push_back(std::move(inv));
        }
    }
    if (root.contains("alphas")) doc.alphas = number_array(root["alphas"], "alphas");
    if (root.contains("r_grid")) doc.r_grid = number_array(root["r_grid"], "r_grid");
    if (root.contains("simulation")) doc.simulation = parse_simulation(root["simulation"]);
    return doc;
}

ScenarioDocument load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad()) throw IoError("failed reading scenario file '" + path + "'");
    return parse_scenario(text.str());
}

const Investor& find_investor(const ScenarioDocument& doc, const std::string& name) {
    for (const Investor& inv : doc.investors) {
        if (inv.name() == name) return inv;
    }
    throw UnknownInvestor("no investor named '" + name + "' in the scenario");
}

Distribution resolve_market(const ScenarioDocument& doc) {
    if (doc.market) return *doc.market;
    if (!doc.investors.empty()) {
        bool all_log = true;
        for (const Investor& inv : doc.investors) {
            if (!inv.risk_aversion().log_utility()) all_log = false;
        }
        if (all_log) return form_market(doc.investors);
        throw MissingMarket(
            "no explicit market, and the pool has non-growth-optimizing investors "
            "(R != 1), so one cannot be formed");
    }
    throw MissingMarket("scenario has neither an explicit market nor investors");
}

}  // namespace disbet
