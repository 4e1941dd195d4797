#include "ree/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "ree/css_opt.hpp"
#include "ree/errors.hpp"

namespace ree {

namespace {

constexpr double kNormTol = 1e-12;

double engine_ree(const XState& s, Engine engine) {
  return engine == Engine::ClosedForm ? ree_closed_form(s) : ree_numeric_restricted(s);
}

double binary_entropy(double p) {
  const std::array<double, 2> probabilities{p, 1.0 - p};
  return shannon_entropy(probabilities);
}

}  // namespace

WParams::WParams(double alpha_sq, double beta_sq, double gamma_sq)
    : alpha_sq_(alpha_sq),
      beta_sq_(beta_sq),
      gamma_sq_(gamma_sq),
      alpha_(std::sqrt(alpha_sq)),
      beta_(std::sqrt(beta_sq)),
      gamma_(std::sqrt(gamma_sq)) {}

WParams WParams::make(double alpha, double beta, double gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) {
    throw InvalidState("W amplitudes must be finite");
  }
  return from_squares(alpha * alpha, beta * beta, gamma * gamma);
}

WParams WParams::from_squares(double alpha_sq, double beta_sq, double gamma_sq) {
  if (!(alpha_sq >= 0.0 && beta_sq >= 0.0 && gamma_sq >= 0.0)) {
    throw InvalidState("squared W amplitudes must be non-negative");
  }
  const double norm = alpha_sq + beta_sq + gamma_sq;
  if (std::abs(norm - 1.0) > kNormTol) {
    throw InvalidState("W amplitudes have squared norm " + std::to_string(norm) + ", expected 1");
  }
  return WParams(alpha_sq, beta_sq, gamma_sq);
}

std::array<Complex, 8> w_state_vector(const WParams& w) {
  std::array<Complex, 8> psi{};
  psi[0b001] = w.alpha();
  psi[0b010] = w.beta();
  psi[0b100] = w.gamma();
  return psi;
}

DensityMatrix w_state_density(const WParams& w) {
  const auto psi = w_state_vector(w);
  return DensityMatrix::pure(psi);
}

XState reduced_ab(const WParams& w) { return XState::make(w.alpha_sq(), w.beta_sq(), w.gamma_sq()); }

XState reduced_ac(const WParams& w) { return XState::make(w.beta_sq(), w.alpha_sq(), w.gamma_sq()); }

double ree_a_bc(const WParams& w) { return binary_entropy(w.gamma_sq()); }

MonogamyRecord delta(const WParams& w, Engine engine) {
  MonogamyRecord record{};
  record.alpha_sq = w.alpha_sq();
  record.beta_sq = w.beta_sq();
  record.gamma_sq = w.gamma_sq();
  record.e_ab = engine_ree(reduced_ab(w), engine);
  record.e_ac = engine_ree(reduced_ac(w), engine);
  record.e_abc = ree_a_bc(w);
  record.delta = record.e_abc - record.e_ab - record.e_ac;
  return record;
}

CkwReport concurrence_ckw_check(const WParams& w) {
  // Concurrence of the X reduction is 2|coherence| = 2 sqrt(bc).
  CkwReport report{};
  report.c2_ab = 4.0 * w.beta_sq() * w.gamma_sq();
  report.c2_ac = 4.0 * w.alpha_sq() * w.gamma_sq();
  report.c2_abc = 4.0 * w.gamma_sq() * (1.0 - w.gamma_sq());
  report.slack = report.c2_abc - report.c2_ab - report.c2_ac;
  return report;
}

std::vector<MonogamyRecord> sweep(int n, Engine engine) {
  if (n < 2) throw OutOfRange("sweep resolution must be at least 2");
  std::vector<std::pair<int, int>> grid;
  grid.reserve(sweep_size(n));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) grid.emplace_back(i, j);

  const double scale = static_cast<double>(n);
  std::vector<MonogamyRecord> records(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t idx) {
    const auto [i, j] = grid[idx];
    const WParams w = WParams::from_squares((n - i - j) / scale, i / scale, j / scale);
    records[idx] = delta(w, engine);
  });
  return records;
}

}  // namespace ree
