// Coherent atomic states of N two-level atoms.
//
// The production path works in the (2J+1)-dimensional Dicke ladder
// |J, -J+n>, n = 0..2J.  TensorAtomSpace builds the same collective
// operators on the full 2^N product space from single-atom matrices and
// serves as a brute-force oracle for small atom numbers.
//
// CAS code uses the atomic azimuth convention e^{-i n varphi}; the GBS
// phase enters only through gbs_to_cas.
#pragma once

#include <memory>
#include <vector>

#include "binom/gbs.hpp"
#include "binom/hilbert.hpp"
#include "binom/resolution.hpp"

namespace binom {

/// Angular momentum quantum number J, held as the integer 2J.
class SpinJ {
 public:
  /// Throws std::domain_error if two_j < 0.
  explicit SpinJ(int two_j);

  int two_j() const { return two_j_; }
  double value() const { return 0.5 * two_j_; }
  Index dim() const { return two_j_ + 1; }

 private:
  int two_j_;
};

/// Collective operators restricted to the spin-J block.
struct SpinJOperators {
  SpinJ j;
  OperatorMatrix jz;
  OperatorMatrix j_plus;
  OperatorMatrix j_minus;
  OperatorMatrix j_sq;
};

SpinJOperators spin_j_operators(SpinJ j);

inline constexpr int kMaxTensorAtoms = 12;

/// Collective spin operators on the 2^N product space, built as sums of
/// single-atom Pauli / raising matrices.  Basis index bits give the atomic
/// states with atom 0 as the most significant bit; bit value 1 means
/// excited.
struct TensorAtomSpace {
  int atoms;
  OperatorMatrix jx;
  OperatorMatrix jy;
  OperatorMatrix jz;
  OperatorMatrix j_plus;
  OperatorMatrix j_minus;
  OperatorMatrix j_sq;
};

/// Memoized per atom count; safe to call from several threads.
/// Throws std::out_of_range unless 1 <= atoms <= kMaxTensorAtoms.
std::shared_ptr<const TensorAtomSpace> tensor_atom_space(int atoms);

/// |k_1 k_2 ... k_N> with excited[j] selecting |e> for atom j.
StateVector product_state(const std::vector<bool>& excited);

/// Symmetric Dicke states |N/2, -N/2+n>, n = 0..N, generated from the
/// all-ground state by C(N,n)^{-1/2} J+^n / n!.
std::vector<StateVector> dicke_states_tensor(int atoms);

/// Ladder coefficients <J,-J+n|psi> of a product-space state.
StateVector project_onto_dicke(const StateVector& tensor_state, const std::vector<StateVector>& dicke);

struct CasParams {
  SpinJ j;
  BlochAngles angles;
};

/// Maps (N, p, phi) to J = N/2 and the Bloch angles of the same direction.
CasParams gbs_to_cas(const GbsParams& params);

/// Ladder coefficients [C(2J,n) cos^{2n}(theta/2) sin^{2(2J-n)}(theta/2)]^{1/2} e^{-i n varphi}.
StateVector cas_state(const CasParams& params);

/// exp(-xi J+ + conj(xi) J-), xi = (theta/2) e^{-i varphi}, by direct exponential.
OperatorMatrix cas_rotation(SpinJ j, const BlochAngles& angles);

/// e^{tau* J-} e^{-ln(1+|tau|^2) Jz} e^{-tau J+} with tau = tan(theta/2) e^{-i varphi}.
///
/// The three factors have closed-form entries, and near theta = pi their
/// product cancels catastrophically in double precision, so the inner sum
/// is accumulated in 113-bit floating point before rounding.  Throws
/// std::domain_error at theta = pi where tau diverges; use cas_rotation.
OperatorMatrix disentangled_rotation(SpinJ j, const BlochAngles& angles);

/// Rotated set written in closed form:
///   J'z = Jz cos theta + sin theta (J+ e^{-i varphi} + J- e^{i varphi}) / 2
///   J'+ = e^{i varphi} [J+ e^{-i varphi} cos^2(theta/2) - J- e^{i varphi} sin^2(theta/2) - Jz sin theta]
SpinJOperators rotated_cas_operators(SpinJ j, const BlochAngles& angles);

/// Great-circle angle between two Bloch directions, in [0, pi].
double great_circle_angle(const BlochAngles& a, const BlochAngles& b);

/// |<a|b>|^2 = cos(Theta/2)^{4J} with Theta the great-circle angle.
double cas_overlap_modulus_sq(SpinJ j, const BlochAngles& a, const BlochAngles& b);

/// The same CAS reached from the ground state: R(pi - theta, varphi + pi) |J,-J>.
StateVector cas_from_ground(const CasParams& params);

/// R(theta, varphi) |e e ... e> evaluated on the 2^N product space.
StateVector tensor_cas_state(int atoms, const BlochAngles& angles);

/// (2J+1) integral dOmega/4pi |theta,varphi><theta,varphi| on the grid.
IdentityResolution cas_identity_resolution(SpinJ j, const SphereQuadrature& quad);

/// f(tau*) = sum_n c_n C(2J,n)^{1/2} (tau*)^n = [1+|tau|^2]^J <theta,varphi|c>
/// with tau = cot(theta/2) e^{-i varphi}, the same variable as the GBS
/// expansion.  tau and both forms of f are absent at theta = 0.
ExpansionAmplitude cas_expansion_amplitude(const StateVector& c, const CasParams& params);

/// c rebuilt from its CAS expansion (2J+1) integral dOmega/4pi <theta,varphi|c> |theta,varphi>.
StateVector cas_reconstruct(SpinJ j, const StateVector& c, const SphereQuadrature& quad);

}  // namespace binom
