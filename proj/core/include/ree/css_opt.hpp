#pragma once

// Numerical routes to the relative entropy of entanglement and closest
// separable state checks:
//
//  * the two-angle objective g(theta1, theta2) over separable candidates with
//    a singular partial transpose, minimized by grid search plus
//    golden-section coordinate descent (restricted oracle);
//  * a minimization of S(rho||sigma) over explicit mixtures of product
//    states, valid for any two-qubit rho (general oracle, an upper bound);
//  * certificates for a candidate sigma (positivity, PPT, boundary gap).

#include <cstdint>
#include <span>
#include <vector>

#include "ree/qmat.hpp"
#include "ree/xfamily.hpp"

namespace ree {

inline constexpr double kHalfPi = 1.57079632679489661923;

/// Angles parametrizing a boundary candidate:
/// (x, u, v, y) = (c1^2 c2^2, s1^2 c2^2, c1^2 s2^2, s1^2 s2^2).
struct AngleParams {
  double theta1;
  double theta2;

  /// Throws OutOfRange unless both angles lie in [0, pi/2].
  static AngleParams make(double theta1, double theta2);
};

/// Separable two-qubit state with populations x, u, v, y on |00>, |01>,
/// |10>, |11> and coherence r e^{i theta} between |01> and |10>.
struct SeparableCandidate {
  double x;
  double u;
  double v;
  double y;
  double r;
  double theta;

  /// Throws InvalidState when the populations do not sum to 1 or when
  /// uv - r^2 or xy - r^2 is below -1e-12.
  static SeparableCandidate make(double x, double u, double v, double y, double r, double theta);

  ComplexMatrix matrix() const;
  DensityMatrix density() const;
};

struct CssReport {
  double ppt_min_eigenvalue;
  double sigma_min_eigenvalue;
  double boundary_gap;
  double relative_entropy_value;
};

/// g(theta1, theta2) in nats, kInfinite when a log argument drops below
/// 1e-300. Throws DegenerateInput for non-interior states.
double g_objective(const XState& s, AngleParams angles);

struct GMinimum {
  AngleParams angles;
  double value;
};

/// 256x256 grid over [0, pi/2]^2 followed by golden-section coordinate
/// descent. Throws DegenerateInput for non-interior states.
GMinimum minimize_g(const XState& s);

/// Boundary candidate with r = sqrt(xy) and zero phase.
SeparableCandidate css_from_angles(AngleParams angles);

/// minimize_g for interior states, the analytic branches otherwise.
double ree_numeric_restricted(const XState& s);

/// Throws DimensionMismatch unless rho is a two-qubit state.
CssReport verify_css(const DensityMatrix& rho, const SeparableCandidate& sigma);

/// Fixed populations used by the epsilon probe.
struct ProbeReference {
  double x;
  double u;
  double v;
};

/// f(theta, eps) = -a ln x - (1-a) ln[b u + 2 sqrt(bc) sqrt(uv - eps) cos(theta) + c v]
/// for each eps. Throws OutOfRange when an eps leaves [0, uv] or the list is
/// not ascending; DegenerateInput for non-interior states.
std::vector<double> epsilon_monotonicity_probe(const XState& s, double theta, const ProbeReference& reference,
                                               std::span<const double> epsilons);

/// Single-qubit pure state cos(polar/2)|0> + e^{i azimuth} sin(polar/2)|1>.
struct BlochAngles {
  double polar;
  double azimuth;
};

struct ProductTerm {
  BlochAngles first;
  BlochAngles second;
};

/// Convex combination of product pure states; separable by construction.
struct ProductMixtureAnsatz {
  std::vector<double> weights;
  std::vector<ProductTerm> terms;

  std::size_t size() const noexcept { return terms.size(); }
  ComplexMatrix matrix() const;
};

struct GeneralOracleConfig {
  int k = 16;
  int restarts = 8;
  std::uint64_t seed = 20120731;
  int max_iters = 1000;
  double tol = 1e-6;
};

struct GeneralOracleResult {
  double value = kInfinite;
  /// False when the last restart still moved the running best by more
  /// than tol: the value is usable but may not be converged.
  bool converged = true;
  std::vector<double> restart_values;
  /// Objective after each iteration of the winning restart (non-increasing).
  std::vector<double> trace;
  ProductMixtureAnsatz best;
};

/// min S(rho||sigma) over k-term product mixtures: an upper bound on the
/// REE of any two-qubit rho. Deterministic for a given seed.
GeneralOracleResult ree_numeric_general(const DensityMatrix& rho, const GeneralOracleConfig& cfg = {});

}  // namespace ree
