#pragma once

// Outcome spaces, validated probability distributions, belief ratios, and
// deterministic sampling. All types are immutable after construction and safe
// to share across threads; sampling mutates only its private RngState.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "disbet/errors.hpp"

namespace disbet {

// Input normalization tolerance: a mass vector whose sum is further than this
// from 1 is rejected unless the caller asked for renormalization.
inline constexpr double kNormalizationTol = 1e-9;

class OutcomeSpace {
public:
    // Throws InvalidScenario on fewer than 2 labels or duplicates.
    static std::shared_ptr<const OutcomeSpace> make(std::vector<std::string> labels);

    // Convenience space with labels "x0", "x1", ...
    static std::shared_ptr<const OutcomeSpace> indexed(std::size_t n);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    bool same_as(const OutcomeSpace& other) const noexcept;

private:
    explicit OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {}
    std::vector<std::string> labels_;
};

using SpacePtr = std::shared_ptr<const OutcomeSpace>;

// Nonnegative mass per outcome, summing to 1. Construct via make_distribution.
class Distribution {
public:
    const SpacePtr& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return mass_.size(); }
    const std::vector<double>& mass() const noexcept { return mass_; }
    double operator[](std::size_t i) const { return mass_[i]; }
    const double* data() const noexcept { return mass_.data(); }

    bool strictly_positive() const noexcept;

    friend Distribution make_distribution(SpacePtr space, std::vector<double> weights,
                                          bool normalize);

private:
    Distribution(SpacePtr space, std::vector<double> mass)
        : space_(std::move(space)), mass_(std::move(mass)) {}
    SpacePtr space_;
    std::vector<double> mass_;
};

// Validates weights and renormalizes them to machine precision.
// Errors: NegativeMass, ZeroTotal, NotNormalized (normalize=false and the sum
// is off by more than kNormalizationTol), SpaceMismatch on length mismatch.
Distribution make_distribution(SpacePtr space, std::vector<double> weights,
                               bool normalize = false);

// Pointwise belief/market ratio f(x) = b(x)/m(x).
class RatioFunction {
public:
    RatioFunction(SpacePtr space, std::vector<double> values);

    const SpacePtr& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    SpacePtr space_;
    std::vector<double> values_;
};

// Errors: SpaceMismatch, ZeroMarketMass (some m(x) == 0).
RatioFunction belief_ratio(const Distribution& b, const Distribution& m);

// Counter-based generator: draw k of stream s under master seed g is a fixed
// mix of (g, s, k), so identical (seed, stream) always reproduce the same
// sequence, independent of how many other streams exist or which thread runs
// them. The mixing function is SplitMix64 (Steele/Lea/Flood finalizer) with
// the stream folded into the starting state.
class RngState {
public:
    RngState(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    // Uniform on [0, 1), 53 random bits.
    double next_unit();

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

// Draws index i with probability dist.mass()[i]; advances rng by one draw.
std::size_t sample_outcome(const Distribution& dist, RngState& rng);

// Shared-space check with pointer fast path, then label comparison.
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* where);

}  // namespace disbet
