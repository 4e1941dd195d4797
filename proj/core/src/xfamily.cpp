#include "ree/xfamily.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ree/errors.hpp"

namespace ree {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double clamp_probability(double p, const char* name) {
  if (!std::isfinite(p) || p < -kSimplexTol) {
    throw InvalidState(std::string("parameter ") + name + " = " + std::to_string(p) + " is not a probability");
  }
  return std::max(p, 0.0);
}

void require_simplex(double a, double b, double c) {
  if (std::abs(a + b + c - 1.0) > kSimplexTol) {
    throw InvalidState("a + b + c = " + std::to_string(a + b + c) + " is not 1 within 1e-12");
  }
}

}  // namespace

XState XState::make(double a, double b, double c) {
  a = clamp_probability(a, "a");
  b = clamp_probability(b, "b");
  c = clamp_probability(c, "c");
  require_simplex(a, b, c);
  return XState(a, b, c);
}

bool XState::is_interior() const noexcept {
  return a_ >= kDegenerateTol && a_ <= 1.0 - kDegenerateTol && b_ >= kDegenerateTol && c_ >= kDegenerateTol;
}

UxConjugateState UxConjugateState::make(double a, double b, double c, double f) {
  a = clamp_probability(a, "a");
  b = clamp_probability(b, "b");
  c = clamp_probability(c, "c");
  require_simplex(a, b, c);
  if (!std::isfinite(f) || f * f > b * c + kSimplexTol) {
    throw InvalidState("coherence f violates f^2 <= bc");
  }
  return UxConjugateState(a, b, c, f);
}

DensityMatrix to_density(const XState& s) {
  ComplexMatrix m(4);
  m(0, 0) = s.a();
  m(1, 1) = s.b();
  m(2, 2) = s.c();
  m(1, 2) = m(2, 1) = std::sqrt(s.b() * s.c());
  return DensityMatrix(m);
}

DensityMatrix to_density(const UxConjugateState& s) {
  ComplexMatrix m(4);
  m(0, 0) = s.b();
  m(1, 1) = s.a();
  m(3, 3) = s.c();
  m(0, 3) = m(3, 0) = s.f();
  return DensityMatrix(m);
}

XState from_density(const DensityMatrix& rho, double tol) {
  if (tol < 0.0) throw OutOfRange("tolerance must be non-negative");
  if (rho.dim() != 4) throw WrongDimension("X-state pattern is two-qubit");

  const double a = rho(0, 0).real();
  const double b = rho(1, 1).real();
  const double c = rho(2, 2).real();
  const double coherence = std::sqrt(std::max(b, 0.0) * std::max(c, 0.0));

  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Complex expected = 0.0;
      if (i == j && i < 3) expected = rho(i, j).real();
      if ((i == 1 && j == 2) || (i == 2 && j == 1)) expected = coherence;
      worst = std::max(worst, std::abs(rho(i, j) - expected));
    }
  if (worst > tol) {
    throw NotInFamily("matrix deviates from the rank-2 X-state pattern by " + std::to_string(worst), worst);
  }
  const double total = a + b + c;
  return XState::make(a / total, b / total, c / total);
}

ClosedFormParts closed_form_parts(const XState& s) {
  if (!s.is_interior()) {
    throw DegenerateInput("closed-form parameters need a in (0,1) and b, c > 0");
  }
  const double a = s.a();
  const double b = s.b();
  const double c = s.c();
  const double one_minus_a = b + c;
  const double disc = (b - c) * (b - c) + 4.0 * a * a * b * c;
  const double root = std::sqrt(disc);
  const double total = b + c + root;

  // The textbook expressions for M and N cancel catastrophically as
  // a -> 0 or a -> 1; these are the same quantities rearranged so every
  // term is non-negative. The smaller of the pair uses the product
  // M N = 4 b c (1-a)^2 / (b + c + sqrt(disc))^2.
  const double wide = root + std::abs(b - c);
  const double large = one_minus_a * wide / (a * total);
  const double small = 4.0 * a * b * c * one_minus_a / (total * wide);
  return b >= c ? ClosedFormParts{disc, large, small} : ClosedFormParts{disc, small, large};
}

double ree_closed_form(const XState& s) {
  const double a = s.a();
  const double b = s.b();
  const double c = s.c();
  if (a > 1.0 - kDegenerateTol) return 0.0;
  if (b < kDegenerateTol || c < kDegenerateTol) return 0.0;  // diagonal, hence separable
  if (a < kDegenerateTol) {
    // pure state: entanglement entropy of the Schmidt weights (b, c)
    const double total = b + c;
    return -xlogx(b / total) - xlogx(c / total);
  }

  const ClosedFormParts parts = closed_form_parts(s);
  const double one_minus_a = b + c;
  const double root = std::sqrt(parts.delta_disc);
  // b M + 2 sqrt(b c M N) + c N with sqrt(M N) in closed form.
  const double mixed = 4.0 * b * c * one_minus_a / (b + c + root);
  const double overlap = b * parts.m_param + c * parts.n_param + mixed;

  const double value = xlogx(a) + 2.0 * xlogx(one_minus_a) + std::log1p(parts.m_param) +
                       std::log1p(parts.n_param) - one_minus_a * std::log(overlap);
  return std::max(value, 0.0);
}

double ree_vedral_plenio(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw OutOfRange("lambda must lie in [0, 1]");
  return xlogx(1.0 - lambda) + (lambda - 2.0) * std::log1p(-0.5 * lambda);
}

XState ux_conjugate_to_ux(const UxConjugateState& s) {
  if (std::abs(s.f() - std::sqrt(s.b() * s.c())) > 1e-10) {
    throw UnsupportedCoherence("only the rank-2 case f = sqrt(bc) maps onto the X family");
  }
  // X on qubit B relabels |q_A q_B> -> |q_A (1-q_B)>, i.e. index i -> i ^ 1.
  const DensityMatrix corner = to_density(s);
  ComplexMatrix flipped(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) flipped(i ^ 1u, j ^ 1u) = corner(i, j);
  return from_density(DensityMatrix(flipped), 1e-10);
}

}  // namespace ree
