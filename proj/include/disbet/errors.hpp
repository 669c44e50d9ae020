#pragma once

#include <stdexcept>
#include <string>

namespace disbet {

// Base for all library errors. Every throw site uses one of the named
// subclasses below; name() is what the CLI prints on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define DISBET_DEFINE_ERROR(NAME)                                     \
    class NAME final : public Error {                                 \
    public:                                                           \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

// core
DISBET_DEFINE_ERROR(NegativeMass);
DISBET_DEFINE_ERROR(ZeroTotal);
DISBET_DEFINE_ERROR(NotNormalized);
DISBET_DEFINE_ERROR(ZeroMarketMass);
DISBET_DEFINE_ERROR(SpaceMismatch);

// divergence
DISBET_DEFINE_ERROR(NonPositiveAlpha);
DISBET_DEFINE_ERROR(UnsortedAlphas);
DISBET_DEFINE_ERROR(ZeroBeliefMass);

// portfolio
DISBET_DEFINE_ERROR(DegenerateRatio);

// performance
DISBET_DEFINE_ERROR(UnsortedGrid);
DISBET_DEFINE_ERROR(TargetOutOfRange);

// market
DISBET_DEFINE_ERROR(EmptyPool);
DISBET_DEFINE_ERROR(UnsupportedRiskAversion);

// simulate
DISBET_DEFINE_ERROR(TooFewPaths);

// neuro
DISBET_DEFINE_ERROR(EmptyEvidence);
DISBET_DEFINE_ERROR(NotFlatMarket);

// cli / scenario
DISBET_DEFINE_ERROR(MissingMarket);
DISBET_DEFINE_ERROR(MissingTrueDistribution);
DISBET_DEFINE_ERROR(UnknownInvestor);
DISBET_DEFINE_ERROR(InvalidScenario);
DISBET_DEFINE_ERROR(IoError);

#undef DISBET_DEFINE_ERROR

}  // namespace disbet
