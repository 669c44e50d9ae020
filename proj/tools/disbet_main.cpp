// Command-line front end: scenario in, CSV/JSON artifacts out. Exit status is
// 0 iff no error; failures print `error: <Name>: <detail>` on stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "disbet/commands.hpp"
#include "disbet/kernels.hpp"

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

std::vector<double> read_evidence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw disbet::IoError("cannot open evidence file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw disbet::InvalidScenario(std::string("evidence file is not valid JSON: ") +
                                      e.what());
    }
    if (!root.is_array()) {
        throw disbet::InvalidScenario("evidence file must hold a JSON array of numbers");
    }
    std::vector<double> values;
    for (const auto& v : root) {
        if (!v.is_number()) {
            throw disbet::InvalidScenario("evidence file must hold only numbers");
        }
        values.push_back(v.get<double>());
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "disbet: price probabilistic disagreements as bets: divergence "
        "profiles, optimal payoffs, rate curves, market formation, and seeded "
        "Monte Carlo verification"};
    app.require_subcommand(1);

    std::string kernels = "auto";
    app.add_option("--kernels", kernels, "kernel set (default: best available)")
        ->check(CLI::IsMember({"scalar", "avx2", "auto"}));
    std::string units = "nats";
    app.add_option("--units", units,
                   "unit for rate-valued inputs (--target, --theta, evidence); "
                   "artifacts always label their own units")
        ->check(CLI::IsMember({"nats", "bits"}));

    std::string scenario_path, investor, out_path, paths_out, evidence_path;
    std::vector<double> alphas, r_grid;
    std::optional<std::uint64_t> seed;
    unsigned workers = 0;
    double target = 0.0, theta = 0.0;

    CLI::App* profile = app.add_subcommand("profile", "disagreement profile CSV");
    profile->add_option("--scenario", scenario_path, "scenario JSON")->required();
    profile->add_option("--investor", investor, "investor name")->required();
    profile->add_option("--alphas", alphas, "comma-separated divergence orders")
        ->delimiter(',');
    profile->add_option("--out", out_path, "output file (also echoed to stdout)");

    CLI::App* rate_curve = app.add_subcommand("rate-curve", "rate vs risk aversion CSV");
    rate_curve->add_option("--scenario", scenario_path, "scenario JSON")->required();
    rate_curve->add_option("--investor", investor, "investor name")->required();
    rate_curve->add_option("--r-grid", r_grid, "comma-separated risk aversions")
        ->delimiter(',');
    rate_curve->add_option("--out", out_path, "output file (also echoed to stdout)");

    CLI::App* simulate = app.add_subcommand("simulate", "repeated-game JSON report");
    simulate->add_option("--scenario", scenario_path, "scenario JSON")->required();
    simulate->add_option("--investor", investor, "investor name")->required();
    simulate->add_option("--seed", seed, "override the scenario seed");
    simulate->add_option("--paths-out", paths_out, "also write per-path rates CSV here");
    simulate->add_option("--workers", workers, "worker threads (0 = auto)");
    simulate->add_option("--out", out_path, "output file (also echoed to stdout)");

    CLI::App* market = app.add_subcommand("market", "formed/explicit market CSV");
    market->add_option("--scenario", scenario_path, "scenario JSON")->required();
    market->add_option("--out", out_path, "output file (also echoed to stdout)");

    CLI::App* payoff = app.add_subcommand("payoff", "optimal payoff JSON");
    payoff->add_option("--scenario", scenario_path, "scenario JSON")->required();
    payoff->add_option("--investor", investor, "investor name")->required();
    payoff->add_option("--out", out_path, "output file (also echoed to stdout)");

    CLI::App* solve_r = app.add_subcommand(
        "solve-r", "risk aversion implied by a target rate (JSON)");
    solve_r->add_option("--scenario", scenario_path, "scenario JSON")->required();
    solve_r->add_option("--investor", investor, "investor name")->required();
    solve_r->add_option("--target", target, "target expected rate (see --units)")
        ->required();
    solve_r->add_option("--out", out_path, "output file (also echoed to stdout)");

    CLI::App* neuro = app.add_subcommand(
        "neuro", "evidence-accumulation trajectory and decision (JSON)");
    neuro->add_option("--evidence", evidence_path,
                      "JSON file with an array of per-observation log-likelihood "
                      "ratios (see --units)")
        ->required();
    neuro->add_option("--theta", theta, "decision threshold (> 0, see --units)")
        ->required();
    neuro->add_option("--out", out_path, "output file (also echoed to stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        disbet::kernels::force(kernels);
        const double to_nats = units == "bits" ? kLn2 : 1.0;

        std::string artifact;
        if (profile->parsed()) {
            const auto doc = disbet::load_scenario(scenario_path);
            artifact = disbet::cmd_profile(doc, investor, out_path, alphas);
        } else if (rate_curve->parsed()) {
            const auto doc = disbet::load_scenario(scenario_path);
            artifact = disbet::cmd_rate_curve(doc, investor, out_path, r_grid);
        } else if (simulate->parsed()) {
            const auto doc = disbet::load_scenario(scenario_path);
            artifact = disbet::cmd_simulate(doc, investor, out_path, seed, paths_out,
                                            workers);
        } else if (market->parsed()) {
            const auto doc = disbet::load_scenario(scenario_path);
            artifact = disbet::cmd_market(doc, out_path);
        } else if (payoff->parsed()) {
            const auto doc = disbet::load_scenario(scenario_path);
            artifact = disbet::cmd_payoff(doc, investor, out_path);
        } else if (solve_r->parsed()) {
            const auto doc = disbet::load_scenario(scenario_path);
            artifact = disbet::cmd_solve_r(doc, investor, target * to_nats, out_path);
        } else if (neuro->parsed()) {
            std::vector<double> evidence = read_evidence_file(evidence_path);
            for (double& v : evidence) v *= to_nats;
            artifact = disbet::cmd_neuro(evidence, theta * to_nats, out_path);
        }
        std::cout << artifact;
    } catch (const disbet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
