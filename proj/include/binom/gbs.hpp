// N-photon generalized binomial states |N, p, phi>.
//
// Amplitudes are sqrt(C(N,n) p^n (1-p)^(N-n)) e^{i n phi} on the number
// states n = 0..N.  Binomial weights are evaluated in log space so N in the
// hundreds is fine.
#pragma once

#include "binom/hilbert.hpp"

namespace binom {

/// (N, p, phi): maximum photon number, single-photon probability, mean phase.
/// The phase is stored wrapped to [0, 2pi).
class GbsParams {
 public:
  /// Throws std::domain_error if N < 0 or p is outside [0, 1].
  GbsParams(int max_photons, double p, double phi);

  int max_photons() const { return n_; }
  double p() const { return p_; }
  double phi() const { return phi_; }

 private:
  int n_;
  double p_;
  double phi_;
};

/// Polar and azimuthal angles of a Bloch-sphere direction.
class BlochAngles {
 public:
  /// Throws std::domain_error if theta is outside [0, pi]; varphi is wrapped.
  BlochAngles(double theta, double varphi);

  double theta() const { return theta_; }
  double varphi() const { return varphi_; }

 private:
  double theta_;
  double varphi_;
};

/// |N, p, phi> embedded in a Fock space of dimension `dim` >= N + 1.
StateVector gbs_state(const GbsParams& params, Index dim);
inline StateVector gbs_state(const GbsParams& params) {
  return gbs_state(params, params.max_photons() + 1);
}

/// Closed-form <a|b>.  Throws std::invalid_argument if the N differ.
Complex gbs_overlap(const GbsParams& a, const GbsParams& b);

/// The unique GBS orthogonal to `params`: (N, 1 - p, phi + pi).
GbsParams orthogonal_partner(const GbsParams& params);

/// theta = 2 arccos(sqrt p), varphi = 2pi - phi.
BlochAngles params_to_angles(const GbsParams& params);
/// p = cos^2(theta / 2), phi = 2pi - varphi.
GbsParams angles_to_params(const BlochAngles& angles, int max_photons);

/// Smallest Fock dimension accepted by coherent_state_truncated for |alpha|.
Index coherent_min_dim(Complex alpha);

/// Glauber coherent state truncated to `dim` levels and renormalized.
/// Throws std::invalid_argument if dim < coherent_min_dim(alpha).
StateVector coherent_state_truncated(Complex alpha, Index dim);

}  // namespace binom
