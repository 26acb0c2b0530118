#include "binom/hilbert.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace binom {
namespace {

void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

StateVector::StateVector(Index dim) {
  if (dim < 1) throw DimensionError("StateVector: dimension must be >= 1");
  amp_ = CVector::Zero(dim);
}

StateVector::StateVector(CVector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() < 1) throw DimensionError("StateVector: dimension must be >= 1");
}

StateVector StateVector::basis(Index dim, Index k) {
  if (k < 0 || k >= dim) throw DimensionError("StateVector::basis: index out of range");
  CVector v = CVector::Zero(dim);
  v(k) = 1.0;
  return StateVector(std::move(v));
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(amp_.squaredNorm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  const double n = amp_.norm();
  if (n == 0.0) throw std::domain_error("StateVector::normalized: zero vector");
  return StateVector(CVector(amp_ / n));
}

StateVector StateVector::resized(Index dim) const {
  if (dim < 1) throw DimensionError("StateVector::resized: dimension must be >= 1");
  CVector v = CVector::Zero(dim);
  const Index keep = std::min(dim, amp_.size());
  v.head(keep) = amp_.head(keep);
  return StateVector(std::move(v));
}

StateVector operator+(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "StateVector +");
  return StateVector(CVector(a.amp_ + b.amp_));
}

StateVector operator-(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "StateVector -");
  return StateVector(CVector(a.amp_ - b.amp_));
}

StateVector operator*(Complex s, const StateVector& v) { return StateVector(CVector(s * v.amp_)); }

OperatorMatrix::OperatorMatrix(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw DimensionError("OperatorMatrix: matrix is not square");
  if (m_.rows() < 1) throw DimensionError("OperatorMatrix: dimension must be >= 1");
}

OperatorMatrix OperatorMatrix::identity(Index dim) {
  return OperatorMatrix(CMatrix::Identity(dim, dim));
}

OperatorMatrix OperatorMatrix::zero(Index dim) { return OperatorMatrix(CMatrix::Zero(dim, dim)); }

OperatorMatrix OperatorMatrix::diagonal(const CVector& diag) {
  return OperatorMatrix(CMatrix(diag.asDiagonal()));
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "OperatorMatrix +");
  return OperatorMatrix(CMatrix(a.m_ + b.m_));
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "OperatorMatrix -");
  return OperatorMatrix(CMatrix(a.m_ - b.m_));
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "OperatorMatrix *");
  return OperatorMatrix(CMatrix(a.m_ * b.m_));
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& a) {
  return OperatorMatrix(CMatrix(s * a.m_));
}

Complex inner(const StateVector& u, const StateVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  return u.amplitudes().dot(v.amplitudes());  // Eigen's dot conjugates the left operand
}

StateVector apply(const OperatorMatrix& a, const StateVector& v) {
  require_same_dim(a.dim(), v.dim(), "apply");
  return StateVector(CVector(a.entries() * v.amplitudes()));
}

OperatorMatrix adjoint(const OperatorMatrix& a) { return OperatorMatrix(a.entries().adjoint()); }

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "commutator");
  return OperatorMatrix(CMatrix(a.entries() * b.entries() - b.entries() * a.entries()));
}

OperatorMatrix expm(const OperatorMatrix& a) {
  const CMatrix& g = a.entries();
  const double scale = g.cwiseAbs().maxCoeff();
  if (!std::isfinite(scale)) throw std::domain_error("expm: non-finite entries");
  if (scale == 0.0) return OperatorMatrix::identity(a.dim());

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double skew_residual = (g + g.adjoint()).cwiseAbs().maxCoeff();
  if (skew_residual <= 64.0 * eps * scale) {
    // g = iH with H Hermitian, so exp(g) = V diag(exp(i lambda)) V^dagger.
    CMatrix h = Complex(0.0, -1.0) * g;
    h = 0.5 * (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("expm: eigendecomposition failed");
    CVector phases(es.eigenvalues().size());
    for (Index k = 0; k < phases.size(); ++k) {
      phases(k) = std::exp(Complex(0.0, es.eigenvalues()(k)));
    }
    const CMatrix& v = es.eigenvectors();
    return OperatorMatrix(CMatrix(v * phases.asDiagonal() * v.adjoint()));
  }
  return OperatorMatrix(CMatrix(g.exp()));
}

double fidelity(const StateVector& u, const StateVector& v) { return std::norm(inner(u, v)); }

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

double frobenius_distance(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "frobenius_distance");
  return (a.entries() - b.entries()).norm();
}

StateVector fix_global_phase(const StateVector& v) {
  const CVector& amp = v.amplitudes();
  const double largest = amp.cwiseAbs().maxCoeff();
  if (largest == 0.0) return v;
  for (Index n = 0; n < amp.size(); ++n) {
    const double mag = std::abs(amp(n));
    if (mag > 1e-10 * largest) {
      const Complex phase = std::conj(amp(n)) / mag;
      CVector out = phase * amp;
      out(n) = mag;
      return StateVector(std::move(out));
    }
  }
  return v;
}

StateVector align_phase(const StateVector& v, const StateVector& reference) {
  const Complex overlap = inner(reference, v);
  const double mag = std::abs(overlap);
  if (mag == 0.0) return v;
  return (std::conj(overlap) / mag) * v;
}

}  // namespace binom
