#include "binom/delta_basis.hpp"

#include <cmath>
#include <stdexcept>

#include "binom/gbs.hpp"
#include "binom/hp_algebra.hpp"
#include "binom/numerics.hpp"

namespace binom {
namespace {

StateVector tidy(const StateVector& v) { return fix_global_phase(v.normalized()); }

StateVector partner_state(int max_photons, double p, double phi) {
  return gbs_state(orthogonal_partner(GbsParams(max_photons, p, phi)));
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("delta basis: p outside [0, 1]");
}

}  // namespace

DeltaBasis delta_basis(int max_photons, double p, double phi) {
  check_p(p);
  if (max_photons < 0) throw std::domain_error("delta_basis: N must be >= 0");
  const Index dim = max_photons + 1;
  DeltaBasis basis{max_photons, p, wrap_angle(phi), {}};
  basis.states.reserve(static_cast<std::size_t>(dim));

  if (p == 0.0 || p == 1.0) {
    for (int m = 0; m <= max_photons; ++m) {
      basis.states.push_back(StateVector::basis(dim, p == 1.0 ? m : max_photons - m));
    }
    return basis;
  }

  const OperatorMatrix raise = rotated_operators(max_photons, p, phi).j_plus;
  StateVector current = partner_state(max_photons, p, phi);
  basis.states.push_back(tidy(current));
  for (int m = 1; m <= max_photons; ++m) {
    const double norm = std::sqrt(static_cast<double>(m) * (max_photons - m + 1));
    current = Complex(1.0 / norm) * apply(raise, current);
    basis.states.push_back(tidy(current));
  }
  return basis;
}

StateVector delta_state(int max_photons, int m, double p, double phi) {
  check_p(p);
  if (m < 0 || m > max_photons) throw std::out_of_range("delta_state: m outside [0, N]");
  if (p == 0.0 || p == 1.0) {
    return StateVector::basis(max_photons + 1, p == 1.0 ? m : max_photons - m);
  }
  const OperatorMatrix raise = rotated_operators(max_photons, p, phi).j_plus;
  StateVector v = partner_state(max_photons, p, phi);
  for (int k = 1; k <= m; ++k) v = Complex(1.0 / k) * apply(raise, v);
  v = Complex(std::exp(-0.5 * log_binomial(max_photons, m))) * v;
  return tidy(v);
}

}  // namespace binom
