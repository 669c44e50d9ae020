#include "disbet/neuro.hpp"

#include <cmath>
#include <stdexcept>

namespace disbet {

EvidenceSequence::EvidenceSequence(std::vector<double> shape_llrs)
    : shape_llrs_(std::move(shape_llrs)) {
    for (double v : shape_llrs_) {
        if (!std::isfinite(v)) {
            throw InvalidScenario("evidence contributions must be finite");
        }
    }
}

BinaryDisagreement::BinaryDisagreement(double b_in, double m_in)
    : b_in_(b_in), m_in_(m_in) {
    if (!(b_in_ > 0.0 && b_in_ < 1.0)) {
        throw InvalidScenario("b_in must lie strictly between 0 and 1, got " +
                              std::to_string(b_in));
    }
    if (!(m_in_ > 0.0 && m_in_ < 1.0)) {
        throw InvalidScenario("m_in must lie strictly between 0 and 1, got " +
                              std::to_string(m_in));
    }
}

std::vector<double> accumulate_llr(const EvidenceSequence& evidence) {
    if (evidence.size() == 0) {
        throw EmptyEvidence("accumulate_llr needs at least one observation");
    }
    std::vector<double> trajectory(evidence.size());
    double total = 0.0;
    for (std::size_t i = 0; i < evidence.size(); ++i) {
        total += evidence.shape_llrs()[i];
        trajectory[i] = total;
    }
    return trajectory;
}

Decision threshold_decision(const std::vector<double>& trajectory, double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument("threshold_decision: theta must be positive");
    }
    Decision decision;
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        if (std::abs(trajectory[i]) >= theta) {
            decision.choice = trajectory[i] > 0.0 ? Choice::kIn : Choice::kOut;
            decision.step = i + 1;
            decision.value = trajectory[i];
            return decision;
        }
    }
    return decision;
}

double binary_payoff_log_ratio(const BinaryDisagreement& d, RiskAversion r) {
    const double log_ratio_in = std::log(d.b_in() / d.m_in());
    const double log_ratio_out = std::log((1.0 - d.b_in()) / (1.0 - d.m_in()));
    return (log_ratio_in - log_ratio_out) / r.value();
}

std::pair<double, double> likelihood_from_flat_prior(const BinaryDisagreement& d) {
    if (d.m_in() != 0.5) {
        throw NotFlatMarket("likelihood_from_flat_prior needs m_in = 0.5, got " +
                            std::to_string(d.m_in()));
    }
    return {2.0 * d.b_in(), 2.0 * (1.0 - d.b_in())};
}

}  // namespace disbet
