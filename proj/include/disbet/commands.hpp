#pragma once

// Command implementations behind the CLI: each builds a machine-readable text
// artifact (CSV or JSON) from a scenario document, returns it, and optionally
// writes it to a file. All rates are in nats internally; columns and keys
// carry explicit unit suffixes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disbet/scenario.hpp"

namespace disbet {

// CSV `alpha,divergence_nats,divergence_bits`: the disagreement profile of
// the named investor's belief against the market. Non-finite divergences
// render as `inf`. Grid: alphas_override if non-empty, else the scenario's.
// Errors: MissingMarket, UnknownInvestor, InvalidScenario (no grid), IoError.
std::string cmd_profile(const ScenarioDocument& doc, const std::string& investor_name,
                        const std::string& out_path = "",
                        const std::vector<double>& alphas_override = {});

// CSV `R,alpha,expected_rate_nats,rate_drop_nats,natural` with alpha = 1/R;
// `natural` is true on rows with 1 <= R <= 2.5. Grid: r_grid_override if
// non-empty, else the scenario's.
// Errors: as cmd_profile, plus propagated rate-law errors.
std::string cmd_rate_curve(const ScenarioDocument& doc, const std::string& investor_name,
                           const std::string& out_path = "",
                           const std::vector<double>& r_grid_override = {});

// JSON report of the repeated game: simulated mean log-rate with standard
// error, the general-rate-law prediction, and the |z| <= 3 verdict. When
// paths_out_path is non-empty, also writes a CSV `path,rate_nats` of per-path
// rates there.
// Errors: MissingTrueDistribution, InvalidScenario (no simulation block),
// plus propagated.
std::string cmd_simulate(const ScenarioDocument& doc, const std::string& investor_name,
                         const std::string& out_path = "",
                         std::optional<std::uint64_t> seed_override = std::nullopt,
                         const std::string& paths_out_path = "",
                         unsigned n_workers = 0);

// CSV `outcome,mass` of the market the scenario quotes (explicit or formed
// from the pool). Errors: MissingMarket, propagated.
std::string cmd_market(const ScenarioDocument& doc, const std::string& out_path = "");

// JSON with the named investor's optimal payoff per outcome and its price.
// Errors: MissingMarket, UnknownInvestor, propagated.
std::string cmd_payoff(const ScenarioDocument& doc, const std::string& investor_name,
                       const std::string& out_path = "");

// JSON with the smallest natural-range risk aversion whose closed-form rate
// matches target_rate_nats. Errors: TargetOutOfRange, propagated.
std::string cmd_solve_r(const ScenarioDocument& doc, const std::string& investor_name,
                        double target_rate_nats, const std::string& out_path = "");

// JSON with the cumulative log-likelihood-ratio trajectory of the evidence
// and the first threshold crossing. Evidence and theta are in nats.
// Errors: EmptyEvidence, propagated.
std::string cmd_neuro(const std::vector<double>& evidence_llrs, double theta,
                      const std::string& out_path = "");

// Shared emission helpers (10 significant digits; infinities as `inf`).
std::string format_number(double v);
// The double closest to the 10-digit rendering; keeps JSON numerics at the
// same precision as CSV text.
double round_for_emission(double v);
// Overwrites path with text. Errors: IoError.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace disbet
