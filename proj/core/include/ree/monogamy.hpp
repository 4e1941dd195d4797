#pragma once

// Generalized W states alpha|001> + beta|010> + gamma|100> (qubits A, B, C
// from the left), their two-qubit reductions and the monogamy gap
//
//   delta = E(A:BC) - E(A:B) - E(A:C)
//
// with every term measured by the relative entropy of entanglement.

#include <array>
#include <cstddef>
#include <vector>

#include "ree/qmat.hpp"
#include "ree/xfamily.hpp"

namespace ree {

class WParams {
 public:
  /// Canonicalizes to non-negative amplitudes (sign flips are local
  /// unitaries). Throws InvalidState unless the squares sum to 1 within 1e-12.
  static WParams make(double alpha, double beta, double gamma);
  /// From the squared amplitudes; each must be a probability.
  static WParams from_squares(double alpha_sq, double beta_sq, double gamma_sq);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }
  double alpha_sq() const noexcept { return alpha_sq_; }
  double beta_sq() const noexcept { return beta_sq_; }
  double gamma_sq() const noexcept { return gamma_sq_; }

 private:
  WParams(double alpha_sq, double beta_sq, double gamma_sq);

  double alpha_sq_;
  double beta_sq_;
  double gamma_sq_;
  double alpha_;
  double beta_;
  double gamma_;
};

struct MonogamyRecord {
  double alpha_sq;
  double beta_sq;
  double gamma_sq;
  double e_ab;
  double e_ac;
  double e_abc;
  double delta;
};

struct CkwReport {
  double c2_ab;
  double c2_ac;
  double c2_abc;
  double slack;
};

enum class Engine { ClosedForm, RestrictedNumeric };

std::array<Complex, 8> w_state_vector(const WParams& w);
DensityMatrix w_state_density(const WParams& w);

/// tr_C |psi_W><psi_W| as (alpha^2, beta^2, gamma^2).
XState reduced_ab(const WParams& w);
/// tr_B |psi_W><psi_W| as (beta^2, alpha^2, gamma^2).
XState reduced_ac(const WParams& w);

/// Binary entropy of gamma^2: the entanglement of A with BC.
double ree_a_bc(const WParams& w);

MonogamyRecord delta(const WParams& w, Engine engine = Engine::ClosedForm);

CkwReport concurrence_ckw_check(const WParams& w);

/// Number of points of the triangular grid at resolution n.
constexpr std::size_t sweep_size(int n) noexcept {
  return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

/// beta^2 = i/n, gamma^2 = j/n over i + j <= n, row-major in (i, j).
/// Throws OutOfRange for n < 2.
std::vector<MonogamyRecord> sweep(int n, Engine engine = Engine::ClosedForm);

}  // namespace ree
