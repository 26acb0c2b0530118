// The GBS family as an over-complete basis of span{|0>, ..., |N>}.
//
// Integrals over the Bloch sphere are done with Gauss-Legendre nodes in
// u = cos(theta) and a uniform azimuthal grid.  With at least ceil((N+1)/2)
// polar nodes and N+1 azimuthal nodes the rules below are exact up to
// roundoff: the azimuthal sum kills every e^{i(m-n)phi} with 0 < |m-n| <= N
// and the remaining integrand is a degree-N polynomial in u.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "binom/gbs.hpp"
#include "binom/hilbert.hpp"

namespace binom {

struct GaussNode {
  double u;       // cos(theta) in (-1, 1)
  double weight;  // weights integrate du over [-1, 1]
};

/// Gauss-Legendre rule with `count` >= 1 nodes, ascending in u.
std::vector<GaussNode> gauss_legendre(int count);

class SphereQuadrature {
 public:
  /// Throws std::invalid_argument unless both counts are >= 1.
  SphereQuadrature(int theta_nodes, int phi_nodes);

  /// ceil((N+1)/2) + 2 polar nodes and N + 3 azimuthal nodes.
  static SphereQuadrature default_for(int max_photons);

  const std::vector<GaussNode>& theta_nodes() const { return nodes_; }
  int phi_nodes() const { return phi_count_; }

  /// True when the grid meets the exactness threshold for degree N.
  bool resolves(int max_photons) const;

  /// Sum over the grid of w * f(theta, varphi) with dOmega / (4 pi)
  /// weights, so a constant integrand of 1 returns 1.  Partial sums are
  /// reduced pairwise over the polar nodes.
  CMatrix integrate(const std::function<CMatrix(double theta, double varphi)>& f) const;

 private:
  std::vector<GaussNode> nodes_;
  int phi_count_;
};

struct IdentityResolution {
  OperatorMatrix op;
  /// Set when the grid is below the exactness threshold; the result is then
  /// only an approximation of the identity.
  bool under_resolved;
};

/// (N+1) * integral dOmega/4pi |N,p,phi><N,p,phi| over the quadrature grid.
IdentityResolution identity_resolution(int max_photons, const SphereQuadrature& quad);

struct ExpansionAmplitude {
  /// tau = e^{i phi} sqrt(p/(1-p)); absent at p = 1 where it diverges.
  std::optional<Complex> tau;
  /// A(tau*) = [1 + |tau|^2]^{N/2} <N,p,phi|psi>; absent at p = 1.
  std::optional<Complex> value;
  /// A(tau*) from the polynomial sum_n c_n C(N,n)^{1/2} (tau*)^n.
  std::optional<Complex> polynomial_value;
  /// <N,p,phi|psi> = A / [1 + |tau|^2]^{N/2}; finite everywhere.
  Complex overlap;
};

/// Throws DimensionError if psi.dim() < N + 1.
ExpansionAmplitude expansion_amplitude(const StateVector& psi, const GbsParams& params);

/// psi rebuilt as (N+1) integral dOmega/4pi <N,p,phi|psi> |N,p,phi>.
/// The weight is taken in overlap form so nothing diverges at p = 1.
/// Throws std::invalid_argument if psi has weight above level N.
StateVector reconstruct(const StateVector& psi, int max_photons, const SphereQuadrature& quad);

}  // namespace binom
