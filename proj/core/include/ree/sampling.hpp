#pragma once

// Seeded random inputs shared by the verification command and the
// acceptance runner.

#include "ree/monogamy.hpp"
#include "ree/random.hpp"
#include "ree/xfamily.hpp"

namespace ree {

/// Uniform on the probability simplex, rejecting points with any
/// coordinate at or below `margin`.
XState sample_interior_xstate(SplitMix64& rng, double margin = 1e-3);

/// Squared amplitudes uniform on the simplex.
WParams sample_wparams(SplitMix64& rng);

}  // namespace ree
