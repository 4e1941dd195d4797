#include "ree/css_opt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "ree/errors.hpp"

namespace ree {

namespace {

constexpr int kGridPoints = 256;
constexpr double kGoldenWidth = 1e-12;
constexpr int kMaxDescentSweeps = 2000;
constexpr double kLogFloor = 1e-300;

// cos(theta) as sin(pi/2 - theta): exactly zero at theta = pi/2.
double cos_quarter(double theta) { return std::sin(kHalfPi - theta); }

void require_interior(const XState& s) {
  if (!s.is_interior()) throw DegenerateInput("objective needs an interior state (a in (0,1), b, c > 0)");
}

// g without argument validation, for the minimizer's inner loops.
class GObjective {
 public:
  explicit GObjective(const XState& s)
      : a_(s.a()),
        one_minus_a_(s.b() + s.c()),
        sqrt_b_(std::sqrt(s.b())),
        sqrt_c_(std::sqrt(s.c())),
        offset_(a_ * std::log(a_) + 2.0 * one_minus_a_ * std::log(one_minus_a_)) {}

  double operator()(double theta1, double theta2) const {
    const double c1 = cos_quarter(theta1);
    const double s1 = std::sin(theta1);
    const double c2 = cos_quarter(theta2);
    const double s2 = std::sin(theta2);
    const double x = c1 * c1 * c2 * c2;
    const double amplitude = sqrt_b_ * s1 * c2 + sqrt_c_ * c1 * s2;
    const double overlap = amplitude * amplitude;
    if (x < kLogFloor || overlap < kLogFloor) return kInfinite;
    return offset_ - a_ * std::log(x) - one_minus_a_ * std::log(overlap);
  }

 private:
  double a_;
  double one_minus_a_;
  double sqrt_b_;
  double sqrt_c_;
  double offset_;
};

}  // namespace

AngleParams AngleParams::make(double theta1, double theta2) {
  const auto in_domain = [](double t) { return t >= 0.0 && t <= kHalfPi; };
  if (!in_domain(theta1) || !in_domain(theta2)) throw OutOfRange("angles must lie in [0, pi/2]");
  return AngleParams{theta1, theta2};
}

SeparableCandidate SeparableCandidate::make(double x, double u, double v, double y, double r, double theta) {
  constexpr double tol = 1e-12;
  if (x < -tol || u < -tol || v < -tol || y < -tol || r < 0.0) {
    throw InvalidState("separable candidate has a negative population or coherence");
  }
  if (std::abs(x + u + v + y - 1.0) > tol) throw InvalidState("separable candidate populations do not sum to 1");
  if (u * v - r * r < -tol) throw InvalidState("separable candidate is not positive (uv < r^2)");
  if (x * y - r * r < -tol) throw InvalidState("separable candidate is not PPT (xy < r^2)");
  return SeparableCandidate{x, u, v, y, r, theta};
}

ComplexMatrix SeparableCandidate::matrix() const {
  ComplexMatrix m(4);
  m(0, 0) = x;
  m(1, 1) = u;
  m(2, 2) = v;
  m(3, 3) = y;
  m(1, 2) = std::polar(r, theta);
  m(2, 1) = std::polar(r, -theta);
  return m;
}

DensityMatrix SeparableCandidate::density() const { return DensityMatrix(matrix()); }

double g_objective(const XState& s, AngleParams angles) {
  require_interior(s);
  angles = AngleParams::make(angles.theta1, angles.theta2);
  return GObjective(s)(angles.theta1, angles.theta2);
}

GMinimum minimize_g(const XState& s) {
  require_interior(s);
  const GObjective g(s);

  const double step = kHalfPi / (kGridPoints - 1);
  double best1 = 0.0;
  double best2 = 0.0;
  double best = kInfinite;
  for (int i = 0; i < kGridPoints; ++i) {
    for (int j = 0; j < kGridPoints; ++j) {
      const double t1 = i == kGridPoints - 1 ? kHalfPi : i * step;
      const double t2 = j == kGridPoints - 1 ? kHalfPi : j * step;
      const double value = g(t1, t2);
      if (value < best) {
        best = value;
        best1 = t1;
        best2 = t2;
      }
    }
  }

  // Coordinate descent: golden section along each axis within one grid cell
  // of the incumbent, accepting only improvements.
  const auto bracket = [&](double centre) {
    return std::pair{std::max(0.0, centre - step), std::min(kHalfPi, centre + step)};
  };
  for (int sweep = 0; sweep < kMaxDescentSweeps; ++sweep) {
    const double start1 = best1;
    const double start2 = best2;
    const double start_value = best;

    auto [lo1, hi1] = bracket(best1);
    const auto line1 = detail::golden_section([&](double t) { return g(t, best2); }, lo1, hi1, kGoldenWidth);
    if (line1.value < best) {
      best = line1.value;
      best1 = line1.x;
    }
    auto [lo2, hi2] = bracket(best2);
    const auto line2 = detail::golden_section([&](double t) { return g(best1, t); }, lo2, hi2, kGoldenWidth);
    if (line2.value < best) {
      best = line2.value;
      best2 = line2.x;
    }

    // Pattern move along the sweep's net displacement; it follows curved
    // valleys that pure axis steps cross slowly.
    const double d1 = best1 - start1;
    const double d2 = best2 - start2;
    if (d1 != 0.0 || d2 != 0.0) {
      double reach = 4.0;
      if (d1 > 0.0) reach = std::min(reach, (kHalfPi - best1) / d1);
      if (d1 < 0.0) reach = std::min(reach, -best1 / d1);
      if (d2 > 0.0) reach = std::min(reach, (kHalfPi - best2) / d2);
      if (d2 < 0.0) reach = std::min(reach, -best2 / d2);
      const double width = kGoldenWidth / std::max(std::hypot(d1, d2), 1e-300);
      if (reach > width) {
        const auto line = detail::golden_section(
            [&](double t) { return g(best1 + t * d1, best2 + t * d2); }, 0.0, reach, width);
        if (line.value < best) {
          best = line.value;
          best1 = std::clamp(best1 + line.x * d1, 0.0, kHalfPi);
          best2 = std::clamp(best2 + line.x * d2, 0.0, kHalfPi);
        }
      }
    }

    const bool moved = std::abs(best1 - start1) > kGoldenWidth || std::abs(best2 - start2) > kGoldenWidth;
    if (!moved || start_value - best <= 0.0) break;
  }
  return GMinimum{AngleParams{best1, best2}, best};
}

SeparableCandidate css_from_angles(AngleParams angles) {
  angles = AngleParams::make(angles.theta1, angles.theta2);
  const double c1 = cos_quarter(angles.theta1);
  const double s1 = std::sin(angles.theta1);
  const double c2 = cos_quarter(angles.theta2);
  const double s2 = std::sin(angles.theta2);
  const double x = c1 * c1 * c2 * c2;
  const double u = s1 * s1 * c2 * c2;
  const double v = c1 * c1 * s2 * s2;
  const double y = s1 * s1 * s2 * s2;
  // r^2 = xy = uv by construction.
  const double r = c1 * c2 * s1 * s2;
  return SeparableCandidate::make(x, u, v, y, r, 0.0);
}

double ree_numeric_restricted(const XState& s) {
  if (!s.is_interior()) return ree_closed_form(s);
  return minimize_g(s).value;
}

CssReport verify_css(const DensityMatrix& rho, const SeparableCandidate& sigma) {
  if (rho.dim() != 4) throw DimensionMismatch("verify_css needs a two-qubit rho");
  const DensityMatrix sigma_state = sigma.density();
  CssReport report{};
  report.ppt_min_eigenvalue = min_eigenvalue(partial_transpose(sigma_state.matrix(), Subsystem::A));
  report.sigma_min_eigenvalue = min_eigenvalue(sigma_state.matrix());
  report.boundary_gap = std::min(report.ppt_min_eigenvalue, report.sigma_min_eigenvalue);
  report.relative_entropy_value = relative_entropy(rho, sigma_state);
  return report;
}

std::vector<double> epsilon_monotonicity_probe(const XState& s, double theta, const ProbeReference& reference,
                                               std::span<const double> epsilons) {
  require_interior(s);
  const double uv = reference.u * reference.v;
  if (reference.x <= 0.0 || reference.u < 0.0 || reference.v < 0.0) {
    throw OutOfRange("probe reference needs x > 0 and u, v >= 0");
  }
  const double a = s.a();
  const double one_minus_a = s.b() + s.c();
  const double coupling = 2.0 * std::sqrt(s.b() * s.c()) * std::cos(theta);

  std::vector<double> values;
  values.reserve(epsilons.size());
  double previous = -kInfinite;
  for (double eps : epsilons) {
    if (!(eps >= 0.0 && eps <= uv)) throw OutOfRange("epsilon " + std::to_string(eps) + " outside [0, uv]");
    if (eps < previous) throw OutOfRange("epsilons must be ascending");
    previous = eps;
    const double overlap =
        s.b() * reference.u + coupling * std::sqrt(uv - eps) + s.c() * reference.v;
    values.push_back(overlap > 0.0 ? -a * std::log(reference.x) - one_minus_a * std::log(overlap) : kInfinite);
  }
  return values;
}

}  // namespace ree
