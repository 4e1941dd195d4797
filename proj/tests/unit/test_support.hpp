#pragma once

// Seeded generators shared by the unit tests.

#include <cmath>
#include <complex>
#include <vector>

#include "ree/monogamy.hpp"
#include "ree/qmat.hpp"
#include "ree/random.hpp"
#include "ree/xfamily.hpp"

namespace ree::testing {

inline Complex random_complex(SplitMix64& rng) { return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}; }

inline ComplexMatrix random_hermitian(SplitMix64& rng, std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = rng.uniform(-1.0, 1.0);
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = random_complex(rng);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// A A^dagger / tr for a random complex A: full rank almost surely.
inline DensityMatrix random_density(SplitMix64& rng, std::size_t dim) {
  ComplexMatrix a(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = random_complex(rng);
  ComplexMatrix rho = a * a.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Re-symmetrize so rounding in the product cannot break Hermiticity.
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return DensityMatrix(rho);
}

/// Haar-ish unitary by Gram-Schmidt on random columns (independent of the
/// eigensolver).
inline ComplexMatrix random_unitary(SplitMix64& rng, std::size_t dim) {
  std::vector<std::vector<Complex>> cols;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Complex> v(dim);
    for (auto& z : v) z = random_complex(rng);
    for (const auto& q : cols) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(q[i]) * v[i];
      for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * q[i];
    }
    double norm = 0.0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : v) z /= norm;
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) u(i, k) = cols[k][i];
  return u;
}

/// Uniform point of the probability simplex, kept clear of the faces.
inline XState random_interior_xstate(SplitMix64& rng, double margin = 1e-3) {
  while (true) {
    double u1 = rng.uniform();
    double u2 = rng.uniform();
    if (u1 + u2 > 1.0) {
      u1 = 1.0 - u1;
      u2 = 1.0 - u2;
    }
    const double a = 1.0 - u1 - u2;
    if (a > margin && u1 > margin && u2 > margin) return XState::make(a, u1, u2);
  }
}

inline WParams random_wparams(SplitMix64& rng) {
  double u1 = rng.uniform();
  double u2 = rng.uniform();
  if (u1 + u2 > 1.0) {
    u1 = 1.0 - u1;
    u2 = 1.0 - u2;
  }
  return WParams::from_squares(1.0 - u1 - u2, u1, u2);
}

/// Literal textbook evaluation of the closed form (no rearrangement);
/// reliable away from the simplex faces.
inline double literal_closed_form(double a, double b, double c) {
  const double disc = (b - c) * (b - c) + 4 * a * a * b * c;
  const double m = (std::sqrt(disc) + b - c - 2 * a * a * b) / (2 * a * b * (1 + a));
  const double n = (std::sqrt(disc) - b + c - 2 * a * a * c) / (2 * a * c * (1 + a));
  return a * std::log(a) + 2 * (1 - a) * std::log(1 - a) + std::log((1 + m) * (1 + n)) -
         (b + c) * std::log(b * m + 2 * std::sqrt(b * c * m * n) + c * n);
}

/// (1-l) ln(1-l) + (l-2) ln(1-l/2), evaluated directly.
inline double vedral_plenio_reference(double lambda) {
  const double first = lambda < 1.0 ? (1 - lambda) * std::log(1 - lambda) : 0.0;
  return first + (lambda - 2) * std::log(1 - lambda / 2);
}

inline double binary_entropy_reference(double p) {
  double h = 0.0;
  if (p > 0) h -= p * std::log(p);
  if (p < 1) h -= (1 - p) * std::log(1 - p);
  return h;
}

}  // namespace ree::testing
