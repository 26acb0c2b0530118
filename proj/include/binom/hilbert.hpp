// Dense complex linear algebra on truncated Fock / Dicke spaces.
//
// StateVector and OperatorMatrix are thin value types over Eigen storage that
// enforce the dimension contracts of the rest of the library.  All
// dimension mismatches throw DimensionError.
#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace binom {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Default absolute tolerance for identity checks.
inline constexpr double kDefaultTolerance = 1e-10;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StateVector {
 public:
  /// Zero vector of the given dimension.
  explicit StateVector(Index dim);
  explicit StateVector(CVector amplitudes);

  /// The orthonormal basis vector e_k.
  static StateVector basis(Index dim, Index k);

  Index dim() const { return amp_.size(); }
  const CVector& amplitudes() const { return amp_; }
  Complex operator[](Index n) const { return amp_(n); }

  double norm() const { return amp_.norm(); }
  bool is_normalized(double tol = 1e-12) const;
  StateVector normalized() const;

  /// Copy embedded in a larger space (zero padded) or cut to a smaller one.
  StateVector resized(Index dim) const;

  friend StateVector operator+(const StateVector& a, const StateVector& b);
  friend StateVector operator-(const StateVector& a, const StateVector& b);
  friend StateVector operator*(Complex s, const StateVector& v);

 private:
  CVector amp_;
};

class OperatorMatrix {
 public:
  /// Throws DimensionError unless `entries` is square and non-empty.
  explicit OperatorMatrix(CMatrix entries);

  static OperatorMatrix identity(Index dim);
  static OperatorMatrix zero(Index dim);
  static OperatorMatrix diagonal(const CVector& diag);

  Index dim() const { return m_.rows(); }
  const CMatrix& entries() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(Complex s, const OperatorMatrix& a);

 private:
  CMatrix m_;
};

/// <u|v>, conjugate-linear in u.
Complex inner(const StateVector& u, const StateVector& v);

StateVector apply(const OperatorMatrix& a, const StateVector& v);

OperatorMatrix adjoint(const OperatorMatrix& a);

/// AB - BA.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Matrix exponential.
///
/// Anti-Hermitian input (the rotation generators used throughout) goes
/// through a Hermitian eigendecomposition, which keeps the result unitary to
/// machine precision; everything else uses Pade scaling-and-squaring.
OperatorMatrix expm(const OperatorMatrix& a);

/// |<u|v>|^2 for normalized u, v; insensitive to global phases.
double fidelity(const StateVector& u, const StateVector& v);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

double frobenius_distance(const OperatorMatrix& a, const OperatorMatrix& b);

/// Multiplies v by the global phase that makes its first non-negligible
/// amplitude real and positive.  Amplitudes below 1e-10 of the largest one
/// count as negligible.
StateVector fix_global_phase(const StateVector& v);

/// v times the unit phase that makes <reference|v> real and non-negative,
/// i.e. the global phase that brings v closest to `reference`.
StateVector align_phase(const StateVector& v, const StateVector& reference);

}  // namespace binom
