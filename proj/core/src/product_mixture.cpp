#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <numeric>
#include <numbers>

#include "detail.hpp"
#include "ree/css_opt.hpp"
#include "ree/errors.hpp"
#include "ree/random.hpp"

namespace ree {

namespace {

// Per term: weight amplitude, then (polar, azimuth) for each qubit.
constexpr std::size_t kParamsPerTerm = 5;
constexpr std::size_t kHistory = 8;
constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;
constexpr int kStallLimit = 5;

using Vec2 = std::array<Complex, 2>;
using Vec4 = std::array<Complex, 4>;

Vec2 bloch(double polar, double azimuth) {
  return {Complex(std::cos(0.5 * polar)), std::polar(std::sin(0.5 * polar), azimuth)};
}
Vec2 bloch_d_polar(double polar, double azimuth) {
  return {Complex(-0.5 * std::sin(0.5 * polar)), std::polar(0.5 * std::cos(0.5 * polar), azimuth)};
}
Vec2 bloch_d_azimuth(double polar, double azimuth) {
  return {Complex(0.0), Complex(0.0, 1.0) * std::polar(std::sin(0.5 * polar), azimuth)};
}
Vec4 kron(const Vec2& first, const Vec2& second) {
  return {first[0] * second[0], first[0] * second[1], first[1] * second[0], first[1] * second[1]};
}

double dot(std::span<const double> lhs, std::span<const double> rhs) {
  return std::inner_product(lhs.begin(), lhs.end(), rhs.begin(), 0.0);
}

class MixtureObjective {
 public:
  MixtureObjective(const RelativeEntropyTarget& target, std::size_t terms) : target_(target), terms_(terms) {}

  std::size_t size() const noexcept { return terms_ * kParamsPerTerm; }

  ComplexMatrix sigma(std::span<const double> params) const {
    const double norm = weight_norm(params);
    ComplexMatrix out(4);
    for (std::size_t k = 0; k < terms_; ++k) {
      const double* p = &params[k * kParamsPerTerm];
      const double weight = p[0] * p[0] / norm;
      const Vec4 psi = kron(bloch(p[1], p[2]), bloch(p[3], p[4]));
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) += weight * psi[i] * std::conj(psi[j]);
    }
    return out;
  }

  double value(std::span<const double> params) const {
    if (weight_norm(params) <= 0.0) return kInfinite;
    return target_(sigma(params));
  }

  double value_and_gradient(std::span<const double> params, std::span<double> grad) const {
    const double norm = weight_norm(params);
    if (norm <= 0.0) return kInfinite;
    ComplexMatrix g(4);
    const double f = target_.value_and_gradient(sigma(params), g);
    if (is_infinite(f)) return f;

    // dS = tr(G dsigma); for a term w |p><p|, d<p|G|p> = 2 Re <dp|G p>.
    std::vector<double> term_slope(terms_);
    double mean_slope = 0.0;
    for (std::size_t k = 0; k < terms_; ++k) {
      const double* p = &params[k * kParamsPerTerm];
      double* out = &grad[k * kParamsPerTerm];
      const double weight = p[0] * p[0] / norm;
      const Vec2 first = bloch(p[1], p[2]);
      const Vec2 second = bloch(p[3], p[4]);
      const Vec4 psi = kron(first, second);
      Vec4 g_psi{};
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) g_psi[i] += g(i, j) * psi[j];

      const auto directional = [&](const Vec4& dpsi) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < 4; ++i) acc += std::conj(dpsi[i]) * g_psi[i];
        return 2.0 * weight * acc.real();
      };
      out[1] = directional(kron(bloch_d_polar(p[1], p[2]), second));
      out[2] = directional(kron(bloch_d_azimuth(p[1], p[2]), second));
      out[3] = directional(kron(first, bloch_d_polar(p[3], p[4])));
      out[4] = directional(kron(first, bloch_d_azimuth(p[3], p[4])));

      Complex slope = 0.0;
      for (std::size_t i = 0; i < 4; ++i) slope += std::conj(psi[i]) * g_psi[i];
      term_slope[k] = slope.real();
      mean_slope += weight * term_slope[k];
    }
    // w_k = s_k^2 / sum s^2  =>  dS/ds_k = 2 s_k (slope_k - mean) / sum s^2.
    for (std::size_t k = 0; k < terms_; ++k) {
      const double amplitude = params[k * kParamsPerTerm];
      grad[k * kParamsPerTerm] = 2.0 * amplitude * (term_slope[k] - mean_slope) / norm;
    }
    return f;
  }

  ProductMixtureAnsatz ansatz(std::span<const double> params) const {
    const double norm = weight_norm(params);
    ProductMixtureAnsatz out;
    for (std::size_t k = 0; k < terms_; ++k) {
      const double* p = &params[k * kParamsPerTerm];
      out.weights.push_back(p[0] * p[0] / norm);
      out.terms.push_back(ProductTerm{BlochAngles{p[1], p[2]}, BlochAngles{p[3], p[4]}});
    }
    return out;
  }

 private:
  double weight_norm(std::span<const double> params) const {
    double norm = 0.0;
    for (std::size_t k = 0; k < terms_; ++k) norm += params[k * kParamsPerTerm] * params[k * kParamsPerTerm];
    return norm;
  }

  const RelativeEntropyTarget& target_;
  std::size_t terms_;
};

struct RestartOutcome {
  double value = kInfinite;
  std::vector<double> params;
  std::vector<double> trace;
};

std::vector<double> initial_point(std::size_t terms, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> params(terms * kParamsPerTerm);
  for (std::size_t k = 0; k < terms; ++k) {
    double* p = &params[k * kParamsPerTerm];
    p[0] = rng.uniform(0.5, 1.0);
    // Haar-uniform single-qubit states.
    p[1] = std::acos(1.0 - 2.0 * rng.uniform());
    p[2] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    p[3] = std::acos(1.0 - 2.0 * rng.uniform());
    p[4] = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  return params;
}

// Limited-memory BFGS with Armijo backtracking; every accepted step lowers
// the objective, so the recorded trace is non-increasing.
RestartOutcome run_restart(const MixtureObjective& objective, std::uint64_t seed, int max_iters) {
  const std::size_t n = objective.size();
  RestartOutcome out;
  std::vector<double> x;
  std::vector<double> grad(n);
  double f = kInfinite;
  for (std::uint64_t attempt = 0; attempt < 16 && is_infinite(f); ++attempt) {
    x = initial_point(n / kParamsPerTerm, SplitMix64::derive(seed, attempt));
    f = objective.value_and_gradient(x, grad);
  }
  out.value = f;
  out.params = x;
  if (is_infinite(f)) return out;

  std::deque<std::pair<std::vector<double>, std::vector<double>>> history;  // (s, y)
  std::vector<double> direction(n);
  std::vector<double> trial(n);
  std::vector<double> trial_grad(n);
  std::vector<double> alpha(kHistory);
  int stalled = 0;

  for (int iter = 0; iter < max_iters; ++iter) {
    // Two-loop recursion: direction = -H grad.
    std::copy(grad.begin(), grad.end(), direction.begin());
    for (std::size_t i = history.size(); i-- > 0;) {
      const auto& [s, y] = history[i];
      alpha[i] = dot(s, direction) / dot(y, s);
      for (std::size_t j = 0; j < n; ++j) direction[j] -= alpha[i] * y[j];
    }
    if (!history.empty()) {
      const auto& [s, y] = history.back();
      const double gamma = dot(s, y) / dot(y, y);
      for (double& d : direction) d *= gamma;
    }
    for (std::size_t i = 0; i < history.size(); ++i) {
      const auto& [s, y] = history[i];
      const double beta = dot(y, direction) / dot(y, s);
      for (std::size_t j = 0; j < n; ++j) direction[j] += (alpha[i] - beta) * s[j];
    }
    for (double& d : direction) d = -d;

    double slope = dot(grad, direction);
    if (!(slope < 0.0)) {
      history.clear();
      for (std::size_t j = 0; j < n; ++j) direction[j] = -grad[j];
      slope = dot(grad, direction);
    }
    const double grad_norm = std::sqrt(dot(grad, grad));
    if (grad_norm < 1e-13) break;

    double step = history.empty() ? std::min(1.0, 0.1 / grad_norm) : 1.0;
    double trial_f = kInfinite;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt, step *= 0.5) {
      for (std::size_t j = 0; j < n; ++j) trial[j] = x[j] + step * direction[j];
      trial_f = objective.value_and_gradient(trial, trial_grad);
      if (!is_infinite(trial_f) && trial_f <= f + kArmijo * step * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted || !(trial_f < f)) {
      if (history.empty()) break;
      history.clear();
      continue;
    }

    std::vector<double> s(n);
    std::vector<double> y(n);
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = trial[j] - x[j];
      y[j] = trial_grad[j] - grad[j];
    }
    if (dot(s, y) > 1e-18 * std::sqrt(dot(s, s) * dot(y, y))) {
      history.emplace_back(std::move(s), std::move(y));
      if (history.size() > kHistory) history.pop_front();
    }

    const double decrease = f - trial_f;
    x.swap(trial);
    grad.swap(trial_grad);
    f = trial_f;
    out.trace.push_back(f);

    stalled = decrease <= 1e-15 * std::max(1.0, std::abs(f)) ? stalled + 1 : 0;
    if (stalled >= kStallLimit) break;
  }
  out.value = f;
  out.params = std::move(x);
  return out;
}

}  // namespace

ComplexMatrix ProductMixtureAnsatz::matrix() const {
  ComplexMatrix out(4);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Vec4 psi = kron(bloch(terms[k].first.polar, terms[k].first.azimuth),
                          bloch(terms[k].second.polar, terms[k].second.azimuth));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) out(i, j) += weights[k] * psi[i] * std::conj(psi[j]);
  }
  return out;
}

GeneralOracleResult ree_numeric_general(const DensityMatrix& rho, const GeneralOracleConfig& cfg) {
  if (rho.dim() != 4) throw WrongDimension("the product-mixture oracle is two-qubit");
  if (cfg.k < 1 || cfg.restarts < 1 || cfg.max_iters < 0 || cfg.tol < 0.0) {
    throw OutOfRange("oracle config needs k >= 1, restarts >= 1, max_iters >= 0, tol >= 0");
  }
  const RelativeEntropyTarget target(rho);
  const MixtureObjective objective(target, static_cast<std::size_t>(cfg.k));

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  detail::parallel_for(outcomes.size(), [&](std::size_t r) {
    outcomes[r] = run_restart(objective, SplitMix64::derive(cfg.seed, r), cfg.max_iters);
  });

  GeneralOracleResult result;
  double previous_best = kInfinite;
  std::size_t winner = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    result.restart_values.push_back(outcomes[r].value);
    previous_best = result.value;
    if (outcomes[r].value < result.value) {
      result.value = outcomes[r].value;
      winner = r;
    }
  }
  if (outcomes.size() >= 2) {
    const double change = previous_best - result.value;
    result.converged = is_infinite(previous_best) ? false : change <= cfg.tol;
  }
  result.trace = outcomes[winner].trace;
  result.best = objective.ansatz(outcomes[winner].params);
  return result;
}

}  // namespace ree
