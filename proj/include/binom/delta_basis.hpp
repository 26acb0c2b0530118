// Orthonormal "Delta" basis: eigenvectors of the rotated J3' obtained by
// climbing from the orthogonal partner |N, 1-p, phi+pi> (m = 0) to
// |N, p, phi> (m = N) with the rotated raising operator.
//
// Every state is renormalized and phase-fixed so that its first
// non-negligible amplitude is real and positive.
#pragma once

#include <vector>

#include "binom/hilbert.hpp"

namespace binom {

struct DeltaBasis {
  int max_photons;
  double p;
  double phi;
  /// states[m] carries the labels (N/2, m - N/2).
  std::vector<StateVector> states;
};

/// Built by the normalized step recursion
///   |m> = J+' |m-1> / sqrt(m (N - m + 1)).
/// At p = 1 the basis is the number basis e_m, at p = 0 the reversed one.
DeltaBasis delta_basis(int max_photons, double p, double phi);

/// Single member from the closed form C(N,m)^{-1/2} (J+')^m / m! applied to
/// the orthogonal partner.  Throws std::out_of_range unless 0 <= m <= N.
StateVector delta_state(int max_photons, int m, double p, double phi);

}  // namespace binom
