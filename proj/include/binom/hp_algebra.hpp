// Holstein-Primakoff pseudo-angular-momentum operators on the (N+1)-level
// Fock space, Bloch rotations built from them, and the rotated operator set
// whose top eigenvector is |N, p, phi>.
#pragma once

#include "binom/gbs.hpp"
#include "binom/hilbert.hpp"

namespace binom {

/// J3, J+, J- and the Casimir J^2 on span{|0>, ..., |N>}.
struct PseudoSpinSet {
  int max_photons;
  OperatorMatrix j3;
  OperatorMatrix j_plus;
  OperatorMatrix j_minus;
  OperatorMatrix j_sq;
};

/// Bosonic annihilation / creation operators truncated to `dim` levels.
OperatorMatrix annihilation(Index dim);
OperatorMatrix creation(Index dim);

/// J3 = a^dag a - N/2, J+ = a^dag sqrt(N - a^dag a), J- = J+^dag.
PseudoSpinSet hp_operators(int max_photons);

/// A Bloch direction together with eta = (theta/2) e^{-i varphi} and
/// tau = tan(theta/2) e^{-i varphi}.
class RotationSpec {
 public:
  explicit RotationSpec(const BlochAngles& angles);

  const BlochAngles& angles() const { return angles_; }
  Complex eta() const { return eta_; }
  /// Diverges (huge modulus) at theta = pi.
  Complex tau() const { return tau_; }

 private:
  BlochAngles angles_;
  Complex eta_;
  Complex tau_;
};

/// exp(-eta J+ + conj(eta) J-) for any ladder pair.
OperatorMatrix rotation_from_generator(const OperatorMatrix& j_plus, const OperatorMatrix& j_minus,
                                       Complex eta);

/// R(theta, varphi) on the (N+1)-level space.
OperatorMatrix rotation_operator(int max_photons, const RotationSpec& spec);

/// X -> R X R^dagger applied to each member of the set.
PseudoSpinSet conjugated(const PseudoSpinSet& ops, const OperatorMatrix& rotation);

/// Rotated set written directly in terms of (p, phi):
///   J3' = (2p-1) J3 + sqrt(p(1-p)) [e^{i phi} J+ + e^{-i phi} J-]
///   J+' = e^{-i phi} [p e^{i phi} J+ - (1-p) e^{-i phi} J- - 2 sqrt(p(1-p)) J3]
/// J-' is the adjoint of J+' and j_sq is built from the rotated members.
PseudoSpinSet rotated_operators(int max_photons, double p, double phi);

/// T = R(b) R(a)^dagger, mapping |a> onto |b> up to a global phase.
OperatorMatrix link_operator(int max_photons, const GbsParams& a, const GbsParams& b);

/// Closed-form composition of two rotations into a phase times a single
/// rotation R(Theta, Phi).  This is only a candidate decomposition: use
/// composition_discrepancy to see how far it is from the exact product.
struct CompositionAngles {
  double big_theta;  // [theta^2 + theta'^2 - 2 theta theta' cos(varphi - varphi')]^{1/2}
  double big_phi;    // atan2(theta' sin varphi' - theta sin varphi, theta' cos varphi' - theta cos varphi)
  Complex phase;     // exp(i theta theta' sin(varphi - varphi') / 4)
};

CompositionAngles composition_angles(const BlochAngles& a, const BlochAngles& b);

/// Frobenius distance between R(b) R(a)^dagger and phase * R(Theta, Phi).
double composition_discrepancy(int max_photons, const BlochAngles& a, const BlochAngles& b);

}  // namespace binom
