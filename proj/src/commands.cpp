#include "disbet/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "disbet/divergence.hpp"
#include "disbet/neuro.hpp"
#include "disbet/performance.hpp"

namespace disbet {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kLn2 = 0.6931471805599453094172321214581766;

std::string finish(std::string text, const std::string& out_path) {
    if (!out_path.empty()) write_text_file(out_path, text);
    return text;
}

std::string dump(const ordered_json& j, const std::string& out_path) {
    return finish(j.dump(2) + "\n", out_path);
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

double round_for_emission(double v) {
    if (!std::isfinite(v)) return v;
    return std::strtod(format_number(v).c_str(), nullptr);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing output file '" + path + "'");
}

std::string cmd_profile(const ScenarioDocument& doc, const std::string& investor_name,
                        const std::string& out_path,
                        const std::vector<double>& alphas_override) {
    const Investor& inv = find_investor(doc, investor_name);
    const Distribution m = resolve_market(doc);
    const std::vector<double>& alphas =
        alphas_override.empty() ? doc.alphas : alphas_override;
    if (alphas.empty()) {
        throw InvalidScenario(
            "no alpha grid: add 'alphas' to the scenario or pass --alphas");
    }
    const DivergenceProfile profile = divergence_profile(inv.belief(), m, alphas);
    std::string csv = "alpha,divergence_nats,divergence_bits\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const ExtendedRate& d = profile.values()[i];
        csv += format_number(profile.alphas()[i]) + "," + format_number(d.nats()) +
               "," + format_number(d.bits()) + "\n";
    }
    return finish(std::move(csv), out_path);
}

std::string cmd_rate_curve(const ScenarioDocument& doc, const std::string& investor_name,
                           const std::string& out_path,
                           const std::vector<double>& r_grid_override) {
    const Investor& inv = find_investor(doc, investor_name);
    const Distribution m = resolve_market(doc);
    const std::vector<double>& grid = r_grid_override.empty() ? doc.r_grid : r_grid_override;
    if (grid.empty()) {
        throw InvalidScenario("no R grid: add 'r_grid' to the scenario or pass --r-grid");
    }
    const RateCurve curve = rate_curve(inv.belief(), m, grid);
    std::string csv = "R,alpha,expected_rate_nats,rate_drop_nats,natural\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const RiskAversion r(curve.r_values()[i]);
        csv += format_number(r.value()) + "," + format_number(1.0 / r.value()) + "," +
               format_number(curve.rates()[i]) + "," +
               format_number(rate_drop(inv.belief(), m, r)) + "," +
               (r.natural() ? "true" : "false") + "\n";
    }
    return finish(std::move(csv), out_path);
}

std::string cmd_simulate(const ScenarioDocument& doc, const std::string& investor_name,
                         const std::string& out_path,
                         std::optional<std::uint64_t> seed_override,
                         const std::string& paths_out_path, unsigned n_workers) {
    const Investor& inv = find_investor(doc, investor_name);
    if (!doc.simulation) {
        throw InvalidScenario("scenario has no 'simulation' block");
    }
    if (!doc.true_p) {
        throw MissingTrueDistribution("simulation needs 'true_p', the realized distribution");
    }
    const Distribution m = resolve_market(doc);
    Scenario scenario{m, *doc.true_p, inv, doc.simulation->n_runs,
                      doc.simulation->n_paths,
                      seed_override ? *seed_override : doc.simulation->seed};
    const double predicted =
        general_rate_law(*doc.true_p, inv.belief(), m, inv.risk_aversion());
    const SimResult result = run_repeated_game(scenario, n_workers);
    const SimReport report = summarize(result, predicted);

    ordered_json j;
    j["investor"] = inv.name();
    j["risk_aversion"] = round_for_emission(inv.risk_aversion().value());
    j["n_paths"] = scenario.n_paths;
    j["n_runs"] = scenario.n_runs;
    j["seed"] = scenario.seed;
    j["mean_rate_nats"] = round_for_emission(report.mean);
    j["mean_rate_bits"] = round_for_emission(report.mean / kLn2);
    j["std_error_nats"] = round_for_emission(report.std_error);
    j["std_error_bits"] = round_for_emission(report.std_error / kLn2);
    j["predicted_rate_nats"] = round_for_emission(report.predicted);
    j["predicted_rate_bits"] = round_for_emission(report.predicted / kLn2);
    j["z"] = round_for_emission(report.z);
    j["pass"] = report.pass;

    if (!paths_out_path.empty()) {
        std::string csv = "path,rate_nats\n";
        for (std::size_t i = 0; i < result.path_rate.size(); ++i) {
            csv += std::to_string(i) + "," + format_number(result.path_rate[i]) + "\n";
        }
        write_text_file(paths_out_path, csv);
    }
    return dump(j, out_path);
}

std::string cmd_market(const ScenarioDocument& doc, const std::string& out_path) {
    const Distribution m = resolve_market(doc);
    std::string csv = "outcome,mass\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        csv += m.space()->label(i) + "," + format_number(m[i]) + "\n";
    }
    return finish(std::move(csv), out_path);
}

std::string cmd_payoff(const ScenarioDocument& doc, const std::string& investor_name,
                       const std::string& out_path) {
    const Investor& inv = find_investor(doc, investor_name);
    const Distribution m = resolve_market(doc);
    const Payoff payoff = optimal_payoff(inv.belief(), m, inv.risk_aversion());
    ordered_json j;
    j["investor"] = inv.name();
    j["risk_aversion"] = round_for_emission(inv.risk_aversion().value());
    ordered_json values;
    for (std::size_t i = 0; i < payoff.size(); ++i) {
        values[payoff.space()->label(i)] = round_for_emission(payoff[i]);
    }
    j["payoff"] = std::move(values);
    j["price"] = round_for_emission(price(payoff, m));
    return dump(j, out_path);
}

std::string cmd_solve_r(const ScenarioDocument& doc, const std::string& investor_name,
                        double target_rate_nats, const std::string& out_path) {
    const Investor& inv = find_investor(doc, investor_name);
    const Distribution m = resolve_market(doc);
    const RiskAversion r = implied_risk_aversion(inv.belief(), m, target_rate_nats);
    ordered_json j;
    j["investor"] = inv.name();
    j["target_rate_nats"] = round_for_emission(target_rate_nats);
    j["target_rate_bits"] = round_for_emission(target_rate_nats / kLn2);
    j["implied_risk_aversion"] = round_for_emission(r.value());
    return dump(j, out_path);
}

std::string cmd_neuro(const std::vector<double>& evidence_llrs, double theta,
                      const std::string& out_path) {
    const EvidenceSequence evidence(evidence_llrs);
    const std::vector<double> trajectory = accumulate_llr(evidence);
    const Decision decision = threshold_decision(trajectory, theta);
    ordered_json j;
    j["theta_nats"] = round_for_emission(theta);
    j["theta_bits"] = round_for_emission(theta / kLn2);
    ordered_json nats = ordered_json::array();
    ordered_json bits = ordered_json::array();
    for (double v : trajectory) {
        nats.push_back(round_for_emission(v));
        bits.push_back(round_for_emission(v / kLn2));
    }
    j["trajectory_nats"] = std::move(nats);
    j["trajectory_bits"] = std::move(bits);
    switch (decision.choice) {
        case Choice::kIn: j["decision"] = "in"; break;
        case Choice::kOut: j["decision"] = "out"; break;
        case Choice::kUndecided: j["decision"] = "undecided"; break;
    }
    j["step"] = decision.step;
    return dump(j, out_path);
}

}  // namespace disbet
