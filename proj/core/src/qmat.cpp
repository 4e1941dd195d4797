#include "ree/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ree/errors.hpp"

namespace ree {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiOffDiagonalTol = 1e-14;

bool valid_dim(std::size_t dim) { return dim == 2 || dim == 4 || dim == 8; }

void require_same_dim(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw DimensionMismatch("matrix dimensions differ: " + std::to_string(lhs.dim()) + " vs " +
                            std::to_string(rhs.dim()));
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the unitary G = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on the (p,q) plane: a <- G^dagger a G, v <- v G.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;

  const Complex phase = apq / magnitude;  // e^{i phi}
  const Complex phase_conj = std::conj(phase);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double t = 0.5 * std::atan2(2.0 * magnitude, aqq - app);
  const double c = std::cos(t);
  const double s = std::sin(t);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_conj * akq;
    a(k, q) = s * akp + c * phase_conj * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_conj * vkq;
    v(k, q) = s * vkp + c * phase_conj * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

double clamp_eigenvalue(double lambda) { return lambda < 0.0 ? 0.0 : lambda; }

// Divided difference of the logarithm, (ln x - ln y)/(x - y).
double log_divided_difference(double x, double y) {
  const double diff = x - y;
  const double scale = std::max(x, y);
  if (std::abs(diff) <= 1e-8 * scale) {
    const double mean = 0.5 * (x + y);
    const double rel = diff / mean;
    return (1.0 + rel * rel / 12.0) / mean;
  }
  return std::log(x / y) / diff;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  if (!valid_dim(dim)) throw WrongDimension("matrix dimension must be 2, 4 or 8, got " + std::to_string(dim));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> psi) {
  ComplexMatrix m(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return m;
}

int ComplexMatrix::qubits() const noexcept { return dim_ == 2 ? 1 : dim_ == 4 ? 2 : 3; }

const Complex& ComplexMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) {
    throw IndexOutOfRange("entry (" + std::to_string(row) + "," + std::to_string(col) +
                          ") outside a " + std::to_string(dim_) + "x" + std::to_string(dim_) + " matrix");
  }
  return (*this)(row, col);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

bool ComplexMatrix::is_hermitian(double tol) const noexcept {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other);
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - other(i, j)));
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) += rhs(i, j);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) -= rhs(i, j);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  return out;
}

bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs) noexcept {
  if (lhs.dim_ != rhs.dim_) return false;
  for (std::size_t i = 0; i < lhs.dim_; ++i)
    for (std::size_t j = 0; j < lhs.dim_; ++j)
      if (lhs(i, j) != rhs(i, j)) return false;
  return true;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (!m.is_hermitian(kHermitianTol)) throw NotHermitian("matrix is not Hermitian within 1e-12");

  const std::size_t n = m.dim();
  // Work on the exactly Hermitian part so the rotations see a consistent matrix.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kJacobiOffDiagonalTol * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t lhs, std::size_t rhs) { return a(lhs, lhs).real() < a(rhs, rhs).real(); });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eigensystem(m).values; }

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(m) {
  if (!matrix_.is_hermitian(kHermitianTol)) throw NotHermitian("density matrix is not Hermitian within 1e-12");
  const Complex tr = matrix_.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTol || std::abs(tr.imag()) > kTraceTol) {
    throw InvalidState("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
  }
  const double lowest = hermitian_eigenvalues(matrix_).front();
  if (lowest < -kPsdTol) {
    throw InvalidState("density matrix has negative eigenvalue " + std::to_string(lowest));
  }
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi) { return DensityMatrix(ComplexMatrix::projector(psi)); }

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
  const std::size_t dim = std::size_t{1} << qubits;
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(m);
}

DensityMatrix partial_trace(const DensityMatrix& rho, int traced_qubit) {
  const int n = rho.qubits();
  if (n < 2) throw WrongDimension("partial trace needs at least two qubits");
  if (traced_qubit < 0 || traced_qubit >= n) {
    throw IndexOutOfRange("qubit index " + std::to_string(traced_qubit) + " out of range for " +
                          std::to_string(n) + " qubits");
  }
  const std::size_t pos = static_cast<std::size_t>(n - 1 - traced_qubit);
  const std::size_t low_mask = (std::size_t{1} << pos) - 1;
  const auto expand = [&](std::size_t reduced, std::size_t bit) {
    return ((reduced >> pos) << (pos + 1)) | (bit << pos) | (reduced & low_mask);
  };

  const std::size_t out_dim = rho.dim() / 2;
  ComplexMatrix out(out_dim);
  for (std::size_t i = 0; i < out_dim; ++i)
    for (std::size_t j = 0; j < out_dim; ++j)
      for (std::size_t bit = 0; bit < 2; ++bit) out(i, j) += rho(expand(i, bit), expand(j, bit));
  return DensityMatrix(out);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, Subsystem subsystem) {
  if (m.dim() != 4) throw WrongDimension("partial transpose is defined for two-qubit operators");
  ComplexMatrix out(4);
  for (std::size_t a1 = 0; a1 < 2; ++a1)
    for (std::size_t b1 = 0; b1 < 2; ++b1)
      for (std::size_t a2 = 0; a2 < 2; ++a2)
        for (std::size_t b2 = 0; b2 < 2; ++b2) {
          const std::size_t row = 2 * a1 + b1;
          const std::size_t col = 2 * a2 + b2;
          if (subsystem == Subsystem::A) {
            out(2 * a2 + b1, 2 * a1 + b2) = m(row, col);
          } else {
            out(2 * a1 + b2, 2 * a2 + b1) = m(row, col);
          }
        }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigenvalues(m).front(); }

bool is_ppt(const DensityMatrix& rho, double tol) {
  if (tol < 0.0) throw OutOfRange("PPT tolerance must be non-negative");
  return min_eigenvalue(partial_transpose(rho.matrix(), Subsystem::A)) >= -tol;
}

double shannon_entropy(std::span<const double> probabilities) {
  double sum = 0.0;
  for (double p : probabilities) {
    const double q = clamp_eigenvalue(p);
    if (q > kZeroEigenvalue) sum -= q * std::log(q);
  }
  return sum;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto values = hermitian_eigenvalues(rho.matrix());
  return shannon_entropy(values);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("relative entropy of states with different dimensions");
  return RelativeEntropyTarget(rho)(sigma.matrix());
}

RelativeEntropyTarget::RelativeEntropyTarget(const DensityMatrix& rho)
    : rho_(rho), negative_entropy_(-von_neumann_entropy(rho)) {}

double RelativeEntropyTarget::operator()(const ComplexMatrix& sigma) const { return evaluate(sigma, nullptr); }

double RelativeEntropyTarget::value_and_gradient(const ComplexMatrix& sigma, ComplexMatrix& gradient) const {
  return evaluate(sigma, &gradient);
}

double RelativeEntropyTarget::evaluate(const ComplexMatrix& sigma, ComplexMatrix* gradient) const {
  if (sigma.dim() != rho_.dim()) throw DimensionMismatch("relative entropy of states with different dimensions");
  const std::size_t n = sigma.dim();
  const EigenSystem es = hermitian_eigensystem(sigma);
  const ComplexMatrix rotated = es.vectors.adjoint() * rho_.matrix() * es.vectors;  // V^dagger rho V

  // -tr(rho ln sigma) = -sum_j <s_j|rho|s_j> ln mu_j; a kernel direction of
  // sigma carrying weight of rho makes the divergence infinite.
  double cross = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double weight = rotated(j, j).real();
    const double mu = es.values[j];
    if (mu <= kSupportTol) {
      if (weight > kSupportTol) return kInfinite;
      continue;
    }
    cross -= weight * std::log(mu);
  }
  const double value = std::max(0.0, negative_entropy_ + cross);
  if (gradient == nullptr) return value;

  ComplexMatrix inner(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mi = std::max(es.values[i], 1e-300);
    for (std::size_t j = 0; j < n; ++j) {
      const double mj = std::max(es.values[j], 1e-300);
      inner(i, j) = -log_divided_difference(mi, mj) * rotated(i, j);
    }
  }
  *gradient = es.vectors * inner * es.vectors.adjoint();
  return value;
}

}  // namespace ree
