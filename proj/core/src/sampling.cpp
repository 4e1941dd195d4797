#include "ree/sampling.hpp"

#include <utility>

namespace ree {

namespace {

std::pair<double, double> simplex_pair(SplitMix64& rng) {
  double u1 = rng.uniform();
  double u2 = rng.uniform();
  if (u1 + u2 > 1.0) {
    u1 = 1.0 - u1;
    u2 = 1.0 - u2;
  }
  return {u1, u2};
}

}  // namespace

XState sample_interior_xstate(SplitMix64& rng, double margin) {
  while (true) {
    const auto [b, c] = simplex_pair(rng);
    const double a = 1.0 - b - c;
    if (a > margin && b > margin && c > margin) return XState::make(a, b, c);
  }
}

WParams sample_wparams(SplitMix64& rng) {
  const auto [beta_sq, gamma_sq] = simplex_pair(rng);
  return WParams::from_squares(1.0 - beta_sq - gamma_sq, beta_sq, gamma_sq);
}

}  // namespace ree
