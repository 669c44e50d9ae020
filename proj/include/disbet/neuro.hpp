#pragma once

// Binary-outcome evidence accumulation: log-likelihood-ratio trajectories,
// threshold stopping, and the payoff log-ratio that the two-outcome optimal
// bet induces from a disagreement.

#include <string>
#include <utility>
#include <vector>

#include "disbet/portfolio.hpp"

namespace disbet {

// Per-observation log-likelihood-ratio contributions in nats, "in" minus
// "out", assuming observations are conditionally independent given the truth.
class EvidenceSequence {
public:
    // Errors: InvalidScenario (non-finite entries).
    explicit EvidenceSequence(std::vector<double> shape_llrs);

    const std::vector<double>& shape_llrs() const noexcept { return shape_llrs_; }
    std::size_t size() const noexcept { return shape_llrs_.size(); }

private:
    std::vector<double> shape_llrs_;
};

// Belief and market probabilities of the "in" outcome of a binary variable.
class BinaryDisagreement {
public:
    // Errors: InvalidScenario (probabilities outside the open interval (0,1)).
    BinaryDisagreement(double b_in, double m_in);

    double b_in() const noexcept { return b_in_; }
    double m_in() const noexcept { return m_in_; }

private:
    double b_in_;
    double m_in_;
};

// Running sum of the per-observation contributions: trajectory[k] is the
// cumulative LLR after k+1 observations. Errors: EmptyEvidence.
std::vector<double> accumulate_llr(const EvidenceSequence& evidence);

enum class Choice { kIn, kOut, kUndecided };

struct Decision {
    Choice choice = Choice::kUndecided;
    // 1-based index of the first crossing; 0 when undecided.
    std::size_t step = 0;
    // Trajectory value at the crossing; 0 when undecided.
    double value = 0.0;
};

// First index where |trajectory| reaches theta decides: positive crossing
// chooses "in", negative chooses "out"; no crossing leaves it undecided.
// Throws std::invalid_argument unless theta > 0.
Decision threshold_decision(const std::vector<double>& trajectory, double theta);

// ln(F_in/F_out) of the optimal two-outcome payoff:
// (1/R) ln[(b_in/m_in) / ((1-b_in)/(1-m_in))].
double binary_payoff_log_ratio(const BinaryDisagreement& d, RiskAversion r);

// With a flat market m_in = 0.5, the belief ratio doubles as the likelihood
// ratio: returns (f_in, f_out) = (2 b_in, 2 (1 - b_in)).
// Errors: NotFlatMarket (m_in != 0.5).
std::pair<double, double> likelihood_from_flat_prior(const BinaryDisagreement& d);

}  // namespace disbet
