#pragma once

#include "herdlab/config.hpp"
#include "herdlab/ensemble.hpp"
#include "herdlab/errors.hpp"
#include "herdlab/histogram.hpp"
#include "herdlab/rng.hpp"
#include "herdlab/sample_path.hpp"
#include "herdlab/simulate.hpp"
#include "herdlab/stationary.hpp"
#include "herdlab/stats.hpp"
#include "herdlab/sweep.hpp"
#include "herdlab/three_state.hpp"
#include "herdlab/two_state.hpp"
#include "herdlab/version.hpp"
