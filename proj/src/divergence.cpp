#include "disbet/divergence.hpp"

#include <cmath>
#include <stdexcept>

#include "disbet/kernels.hpp"

namespace disbet {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

// Anything below this in magnitude is log-sum rounding residue around an
// exact zero, not a genuinely negative divergence.
constexpr double kNegativeResidue = -1e-9;

ExtendedRate kl_divergence(const Distribution& b, const Distribution& m) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i] > 0.0 && m[i] == 0.0) return ExtendedRate::infinity();
    }
    const double v =
        kernels::active().weighted_log_ratio_sum(b.data(), b.data(), m.data(), n);
    return ExtendedRate(v);
}

}  // namespace

ExtendedRate::ExtendedRate(double nats) : nats_(nats) {
    if (std::isnan(nats_)) throw std::logic_error("ExtendedRate: NaN rate");
    if (nats_ < 0.0) {
        if (nats_ < kNegativeResidue) {
            throw std::logic_error("ExtendedRate: negative divergence " +
                                   std::to_string(nats_));
        }
        nats_ = 0.0;
    }
}

double ExtendedRate::bits() const noexcept { return nats_ / kLn2; }

ExtendedRate renyi_divergence(const Distribution& b, const Distribution& m, double alpha) {
    require_same_space(b.space(), m.space(), "renyi_divergence");
    if (!(alpha > 0.0)) {
        throw NonPositiveAlpha("alpha = " + std::to_string(alpha) + ", need alpha > 0");
    }
    if (std::abs(alpha - 1.0) <= kAlphaOneWindow) return kl_divergence(b, m);

    const std::size_t n = b.size();
    std::vector<double> bc, mc;
    bc.reserve(n);
    mc.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i] == 0.0) continue;
        if (m[i] == 0.0) {
            if (alpha > 1.0) return ExtendedRate::infinity();
            continue;  // alpha < 1: the term vanishes
        }
        bc.push_back(b[i]);
        mc.push_back(m[i]);
    }
    if (bc.empty()) return ExtendedRate::infinity();  // disjoint supports

    const auto& k = kernels::active();
    std::vector<double> t(bc.size());
    k.renyi_exponents(bc.data(), mc.data(), alpha, t.data(), t.size());
    const double shift = k.vmax(t.data(), t.size());
    const double log_sum = shift + std::log(k.sum_exp_shifted(t.data(), shift, t.size()));
    return ExtendedRate(log_sum / (alpha - 1.0));
}

ExtendedRate relative_entropy(const Distribution& b, const Distribution& m) {
    require_same_space(b.space(), m.space(), "relative_entropy");
    return kl_divergence(b, m);
}

DivergenceProfile::DivergenceProfile(std::vector<double> alphas,
                                     std::vector<ExtendedRate> values)
    : alphas_(std::move(alphas)), values_(std::move(values)) {
    if (alphas_.size() != values_.size()) {
        throw std::logic_error("DivergenceProfile: grid/value length mismatch");
    }
    for (std::size_t i = 1; i < alphas_.size(); ++i) {
        if (!(alphas_[i] > alphas_[i - 1])) {
            throw UnsortedAlphas("alpha grid must be strictly increasing");
        }
        if (values_[i].nats() < values_[i - 1].nats() - 1e-12) {
            throw std::logic_error("DivergenceProfile: values decrease along alpha");
        }
    }
}

DivergenceProfile divergence_profile(const Distribution& b, const Distribution& m,
                                     const std::vector<double>& alphas) {
    for (std::size_t i = 1; i < alphas.size(); ++i) {
        if (!(alphas[i] > alphas[i - 1])) {
            throw UnsortedAlphas("alpha grid must be strictly increasing");
        }
    }
    std::vector<ExtendedRate> values;
    values.reserve(alphas.size());
    for (double a : alphas) values.push_back(renyi_divergence(b, m, a));
    return DivergenceProfile(alphas, std::move(values));
}

double phi_divergence(const Distribution& b, const Distribution& m,
                      const std::function<double(double)>& phi) {
    require_same_space(b.space(), m.space(), "phi_divergence");
    if (!b.strictly_positive()) {
        throw ZeroBeliefMass("phi_divergence needs b > 0 everywhere (m/b must be defined)");
    }
    const std::size_t n = b.size();
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = phi(m[i] / b[i]);
    return kernels::active().dot(b.data(), t.data(), n);
}

}  // namespace disbet
