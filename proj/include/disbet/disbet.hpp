#pragma once

// Umbrella header pulling in the full public API.

#include "disbet/commands.hpp"
#include "disbet/core.hpp"
#include "disbet/divergence.hpp"
#include "disbet/errors.hpp"
#include "disbet/kernels.hpp"
#include "disbet/market.hpp"
#include "disbet/neuro.hpp"
#include "disbet/performance.hpp"
#include "disbet/portfolio.hpp"
#include "disbet/scenario.hpp"
#include "disbet/simulate.hpp"
