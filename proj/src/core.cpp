#include "disbet/core.hpp"

#include <cmath>
#include <unordered_set>

#include "disbet/kernels.hpp"

namespace disbet {

std::shared_ptr<const OutcomeSpace> OutcomeSpace::make(std::vector<std::string> labels) {
    if (labels.size() < 2) {
        throw InvalidScenario("outcome space needs at least 2 outcomes, got " +
                              std::to_string(labels.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw InvalidScenario("duplicate outcome label '" + l + "'");
        }
    }
    return std::shared_ptr<const OutcomeSpace>(new OutcomeSpace(std::move(labels)));
}

std::shared_ptr<const OutcomeSpace> OutcomeSpace::indexed(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    return make(std::move(labels));
}

bool OutcomeSpace::same_as(const OutcomeSpace& other) const noexcept {
    return this == &other || labels_ == other.labels_;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* where) {
    if (a == b) return;
    if (!a || !b || !a->same_as(*b)) {
        throw SpaceMismatch(std::string(where) + ": operands live on different outcome spaces");
    }
}

bool Distribution::strictly_positive() const noexcept {
    for (double v : mass_) {
        if (v <= 0.0) return false;
    }
    return true;
}

Distribution make_distribution(SpacePtr space, std::vector<double> weights, bool normalize) {
    if (!space) throw InvalidScenario("make_distribution: null outcome space");
    if (weights.size() != space->size()) {
        throw SpaceMismatch("make_distribution: " + std::to_string(weights.size()) +
                            " weights for " + std::to_string(space->size()) + " outcomes");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (std::isnan(weights[i]) || weights[i] < 0.0) {
            throw NegativeMass("mass[" + std::to_string(i) + "] = " +
                               std::to_string(weights[i]));
        }
        if (std::isinf(weights[i])) {
            throw NegativeMass("mass[" + std::to_string(i) + "] is not finite");
        }
    }
    const double total = kernels::active().sum(weights.data(), weights.size());
    if (total == 0.0) throw ZeroTotal("all mass entries are zero");
    if (!normalize && std::abs(total - 1.0) > kNormalizationTol) {
        throw NotNormalized("mass sums to " + std::to_string(total) +
                            "; pass normalize=true to rescale");
    }
    if (total != 1.0) {
        for (double& w : weights) w /= total;
    }
    return Distribution(std::move(space), std::move(weights));
}

RatioFunction::RatioFunction(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    for (double v : values_) {
        if (!(v >= 0.0) || std::isinf(v)) {
            throw ZeroMarketMass("ratio value is not finite and nonnegative");
        }
    }
}

RatioFunction belief_ratio(const Distribution& b, const Distribution& m) {
    require_same_space(b.space(), m.space(), "belief_ratio");
    std::vector<double> values(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (m[i] == 0.0) {
            throw ZeroMarketMass("market mass is zero on outcome '" +
                                 m.space()->label(i) + "'");
        }
        values[i] = b[i] / m[i];
    }
    return RatioFunction(b.space(), std::move(values));
}

namespace {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

}  // namespace

RngState::RngState(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), base_(mix64(seed ^ mix64(stream * kGamma))) {}

std::uint64_t RngState::next_u64() {
    ++counter_;
    return mix64(base_ + counter_ * kGamma);
}

double RngState::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t sample_outcome(const Distribution& dist, RngState& rng) {
    const double u = rng.next_unit();
    double cum = 0.0;
    const std::size_t n = dist.size();
    for (std::size_t i = 0; i < n; ++i) {
        cum += dist[i];
        if (u < cum) return i;
    }
    // Rounding can leave cum fractionally below 1; credit the last live outcome.
    for (std::size_t i = n; i-- > 0;) {
        if (dist[i] > 0.0) return i;
    }
    return n - 1;
}

}  // namespace disbet
