#pragma once

// Dense complex matrices on one to three qubits, Hermitian eigensystems,
// partial trace / transpose and the entropy functionals.
//
// Basis convention: qubit 0 is the leftmost label, so in |q0 q1 q2> the
// basis index is q0*4 + q1*2 + q2.

#include <array>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace ree {

using Complex = std::complex<double>;

/// +infinity sentinel for relative entropies and objectives that leave the
/// domain. Ordered above every finite value; never replaced by a large float.
inline constexpr double kInfinite = std::numeric_limits<double>::infinity();

inline bool is_infinite(double value) noexcept { return value == kInfinite; }

/// Tolerances shared by the state types.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
/// Eigenvalues at or below this magnitude count as exact zeros in entropies.
inline constexpr double kZeroEigenvalue = 1e-14;
/// Support threshold used by relative_entropy.
inline constexpr double kSupportTol = 1e-12;

class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 8;

  /// Zero matrix. Throws WrongDimension unless dim is 2, 4 or 8.
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> entries);
  /// |psi><psi| (psi is used as given, no normalization).
  static ComplexMatrix projector(std::span<const Complex> psi);

  std::size_t dim() const noexcept { return dim_; }
  int qubits() const noexcept;

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * kMaxDim + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * kMaxDim + col];
  }
  /// Bounds-checked access; throws IndexOutOfRange.
  const Complex& at(std::size_t row, std::size_t col) const;

  ComplexMatrix adjoint() const;
  Complex trace() const noexcept;
  bool is_hermitian(double tol = kHermitianTol) const noexcept;
  /// max_ij |A_ij - B_ij|; throws DimensionMismatch.
  double max_abs_diff(const ComplexMatrix& other) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) noexcept { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) noexcept { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs) noexcept;

 private:
  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Eigenvalues ascending, eigenvectors stored as the matching columns.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. Throws NotHermitian when |M_ij - conj(M_ji)| > 1e-12.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Ascending eigenvalues only.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// A validated quantum state: Hermitian, unit trace, positive semidefinite
/// (up to kPsdTol).
class DensityMatrix {
 public:
  /// Throws InvalidState (or NotHermitian) when an invariant fails.
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix pure(std::span<const Complex> psi);
  static DensityMatrix maximally_mixed(int qubits);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  int qubits() const noexcept { return matrix_.qubits(); }
  Complex operator()(std::size_t row, std::size_t col) const noexcept { return matrix_(row, col); }

 private:
  ComplexMatrix matrix_;
};

/// Traces out one qubit (0 = leftmost). Throws IndexOutOfRange, WrongDimension.
DensityMatrix partial_trace(const DensityMatrix& rho, int traced_qubit);

enum class Subsystem { A, B };

/// Partial transpose of a two-qubit operator. Throws WrongDimension.
ComplexMatrix partial_transpose(const ComplexMatrix& m, Subsystem subsystem);

double min_eigenvalue(const ComplexMatrix& m);

/// Peres test: min eigenvalue of rho^{T_A} >= -tol.
bool is_ppt(const DensityMatrix& rho, double tol);

/// Von Neumann entropy in nats.
double von_neumann_entropy(const DensityMatrix& rho);

/// -sum p ln p over a probability list, with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// S(rho||sigma) = tr(rho ln rho - rho ln sigma) in nats, or kInfinite when
/// rho has weight on the kernel of sigma. Throws DimensionMismatch.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(rho||.) with rho's spectrum precomputed, for objectives that evaluate
/// many candidate sigmas against one fixed rho. Candidates are not validated.
class RelativeEntropyTarget {
 public:
  explicit RelativeEntropyTarget(const DensityMatrix& rho);

  const DensityMatrix& rho() const noexcept { return rho_; }
  /// tr(rho ln rho).
  double negative_entropy() const noexcept { return negative_entropy_; }

  double operator()(const ComplexMatrix& sigma) const;

  /// S(rho||sigma) together with its gradient with respect to sigma,
  /// G = -Dlog(sigma)[rho], so that dS = tr(G dsigma). The gradient is only
  /// written when the value is finite.
  double value_and_gradient(const ComplexMatrix& sigma, ComplexMatrix& gradient) const;

 private:
  double evaluate(const ComplexMatrix& sigma, ComplexMatrix* gradient) const;

  DensityMatrix rho_;
  double negative_entropy_;
};

}  // namespace ree
