#pragma once

// The rank-2 two-qubit family
//
//        | a  0        0        0 |
//   rho =| 0  b        sqrt(bc) 0 |      a + b + c = 1,
//        | 0  sqrt(bc) c        0 |
//        | 0  0        0        0 |
//
// (the two-qubit reductions of generalized W states) and its closed-form
// relative entropy of entanglement.

#include "ree/qmat.hpp"

namespace ree {

/// Parameters below this are treated as exact zeros by the closed form.
inline constexpr double kDegenerateTol = 1e-12;
inline constexpr double kSimplexTol = 1e-12;

class XState {
 public:
  /// Throws InvalidState unless a, b, c >= 0 and a + b + c = 1 within 1e-12.
  static XState make(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  /// a, b, c all clear of the degenerate threshold and a < 1.
  bool is_interior() const noexcept;

  friend bool operator==(const XState&, const XState&) = default;

 private:
  XState(double a, double b, double c) : a_(a), b_(b), c_(c) {}

  double a_;
  double b_;
  double c_;
};

/// Discriminant and the two auxiliary parameters of the closed form.
struct ClosedFormParts {
  double delta_disc;  // (b-c)^2 + 4 a^2 b c
  double m_param;
  double n_param;
};

/// The corner-coherence form obtained from the X state by a bit flip on B:
/// diag blocks b, a, 0, c with f at positions (0,3) and (3,0).
class UxConjugateState {
 public:
  /// Throws InvalidState unless a+b+c = 1 and f^2 <= bc + 1e-12.
  static UxConjugateState make(double a, double b, double c, double f);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double f() const noexcept { return f_; }

 private:
  UxConjugateState(double a, double b, double c, double f) : a_(a), b_(b), c_(c), f_(f) {}

  double a_;
  double b_;
  double c_;
  double f_;
};

DensityMatrix to_density(const XState& s);
DensityMatrix to_density(const UxConjugateState& s);

/// Reads (a, b, c) back from a two-qubit matrix. Throws NotInFamily carrying
/// the largest entry deviation when the pattern (including the sqrt(bc)
/// coherence) is violated beyond tol.
XState from_density(const DensityMatrix& rho, double tol);

/// Throws DegenerateInput unless a in (0,1) and b, c > 0.
ClosedFormParts closed_form_parts(const XState& s);

/// Closed-form REE in nats, total on the simplex.
double ree_closed_form(const XState& s);

/// (1-l) ln(1-l) + (l-2) ln(1-l/2); throws OutOfRange outside [0, 1].
double ree_vedral_plenio(double lambda);

/// Bit flip on qubit B mapping the corner form onto the X form.
/// Throws UnsupportedCoherence unless f = sqrt(bc) within 1e-10.
XState ux_conjugate_to_ux(const UxConjugateState& s);

}  // namespace ree
