#include "binom/gbs.hpp"

#include <cmath>
#include <string>

#include "binom/numerics.hpp"

namespace binom {

GbsParams::GbsParams(int max_photons, double p, double phi)
    : n_(max_photons), p_(p), phi_(wrap_angle(phi)) {
  if (max_photons < 0) throw std::domain_error("GbsParams: N must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("GbsParams: p = " + std::to_string(p) + " outside [0, 1]");
  }
  if (!std::isfinite(phi)) throw std::domain_error("GbsParams: phi must be finite");
}

BlochAngles::BlochAngles(double theta, double varphi) : theta_(theta), varphi_(wrap_angle(varphi)) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::domain_error("BlochAngles: theta = " + std::to_string(theta) + " outside [0, pi]");
  }
  if (!std::isfinite(varphi)) throw std::domain_error("BlochAngles: varphi must be finite");
}

StateVector gbs_state(const GbsParams& params, Index dim) {
  const int n_max = params.max_photons();
  if (dim < n_max + 1) {
    throw DimensionError("gbs_state: dimension " + std::to_string(dim) + " < N + 1 = " +
                         std::to_string(n_max + 1));
  }
  const double p = params.p();
  const double q = 1.0 - p;
  CVector amp = CVector::Zero(dim);
  for (int n = 0; n <= n_max; ++n) {
    const double log_weight = log_binomial(n_max, n) + xlogy(n, p) + xlogy(n_max - n, q);
    const double mag = std::exp(0.5 * log_weight);
    amp(n) = mag == 0.0 ? Complex(0.0) : std::polar(mag, n * params.phi());
  }
  return StateVector(std::move(amp));
}

Complex gbs_overlap(const GbsParams& a, const GbsParams& b) {
  if (a.max_photons() != b.max_photons()) {
    throw std::invalid_argument("gbs_overlap: mismatched N");
  }
  const int n_max = a.max_photons();
  const double pp = a.p() * b.p();
  const double qq = (1.0 - a.p()) * (1.0 - b.p());
  const double dphi = b.phi() - a.phi();
  Complex sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double log_term = log_binomial(n_max, n) + xlogy(0.5 * n, pp) + xlogy(0.5 * (n_max - n), qq);
    const double mag = std::exp(log_term);
    if (mag != 0.0) sum += std::polar(mag, n * dphi);
  }
  return sum;
}

GbsParams orthogonal_partner(const GbsParams& params) {
  return GbsParams(params.max_photons(), 1.0 - params.p(), params.phi() + kPi);
}

BlochAngles params_to_angles(const GbsParams& params) {
  // atan2 form of 2 arccos(sqrt p); better conditioned near p = 1.
  const double theta = 2.0 * std::atan2(std::sqrt(1.0 - params.p()), std::sqrt(params.p()));
  return BlochAngles(theta, kTwoPi - params.phi());
}

GbsParams angles_to_params(const BlochAngles& angles, int max_photons) {
  const double c = std::cos(0.5 * angles.theta());
  return GbsParams(max_photons, std::min(1.0, c * c), kTwoPi - angles.varphi());
}

Index coherent_min_dim(Complex alpha) {
  const double r = std::abs(alpha);
  return static_cast<Index>(std::ceil(r * r + 10.0 * r + 20.0));
}

StateVector coherent_state_truncated(Complex alpha, Index dim) {
  if (dim < coherent_min_dim(alpha)) {
    throw std::invalid_argument("coherent_state_truncated: dimension " + std::to_string(dim) +
                                " too small, need " + std::to_string(coherent_min_dim(alpha)));
  }
  const double r = std::abs(alpha);
  const double arg = std::arg(alpha);
  CVector amp = CVector::Zero(dim);
  for (Index n = 0; n < dim; ++n) {
    const double log_mag = -0.5 * r * r + xlogy(static_cast<double>(n), r) - 0.5 * std::lgamma(n + 1.0);
    amp(n) = std::polar(std::exp(log_mag), static_cast<double>(n) * arg);
  }
  return StateVector(std::move(amp)).normalized();
}

}  // namespace binom
