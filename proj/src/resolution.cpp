#include "binom/resolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "binom/numerics.hpp"

namespace binom {
namespace {

CMatrix pairwise_sum(std::vector<CMatrix>& parts, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(parts, lo, mid) + pairwise_sum(parts, mid, hi);
}

StateVector gbs_at(int max_photons, double theta, double varphi, Index dim) {
  return gbs_state(angles_to_params(BlochAngles(theta, varphi), max_photons), dim);
}

}  // namespace

std::vector<GaussNode> gauss_legendre(int count) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  std::vector<GaussNode> nodes(static_cast<std::size_t>(count));
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Three-term recurrence for P_count(x) and its derivative.
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 4e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = {-x, w};
    nodes[static_cast<std::size_t>(count - 1 - i)] = {x, w};
  }
  if (count % 2 == 1) nodes[static_cast<std::size_t>(count / 2)].u = 0.0;
  return nodes;
}

SphereQuadrature::SphereQuadrature(int theta_nodes, int phi_nodes) : phi_count_(phi_nodes) {
  if (theta_nodes < 1 || phi_nodes < 1) {
    throw std::invalid_argument("SphereQuadrature: node counts must be >= 1");
  }
  nodes_ = gauss_legendre(theta_nodes);
}

SphereQuadrature SphereQuadrature::default_for(int max_photons) {
  return SphereQuadrature((max_photons + 2) / 2 + 2, max_photons + 3);
}

bool SphereQuadrature::resolves(int max_photons) const {
  const int needed_theta = (max_photons + 2) / 2;  // ceil((N+1)/2)
  return static_cast<int>(nodes_.size()) >= needed_theta && phi_count_ >= max_photons + 1;
}

CMatrix SphereQuadrature::integrate(const std::function<CMatrix(double, double)>& f) const {
  std::vector<CMatrix> parts;
  parts.reserve(nodes_.size());
  for (const GaussNode& node : nodes_) {
    const double theta = std::acos(node.u);
    const double w = node.weight / (2.0 * phi_count_);
    CMatrix ring;
    for (int j = 0; j < phi_count_; ++j) {
      const CMatrix value = f(theta, kTwoPi * j / phi_count_);
      if (j == 0) {
        ring = value;
      } else {
        ring += value;
      }
    }
    parts.push_back(w * ring);
  }
  return pairwise_sum(parts, 0, parts.size());
}

IdentityResolution identity_resolution(int max_photons, const SphereQuadrature& quad) {
  if (max_photons < 0) throw std::domain_error("identity_resolution: N must be >= 0");
  const Index dim = max_photons + 1;
  const CMatrix sum = quad.integrate([&](double theta, double varphi) {
    const CVector v = gbs_at(max_photons, theta, varphi, dim).amplitudes();
    return CMatrix(v * v.adjoint());
  });
  return {OperatorMatrix(CMatrix(static_cast<double>(dim) * sum)), !quad.resolves(max_photons)};
}

ExpansionAmplitude expansion_amplitude(const StateVector& psi, const GbsParams& params) {
  const int n_max = params.max_photons();
  if (psi.dim() < n_max + 1) {
    throw DimensionError("expansion_amplitude: state dimension " + std::to_string(psi.dim()) +
                         " < N + 1");
  }
  ExpansionAmplitude out;
  out.overlap = inner(gbs_state(params, psi.dim()), psi);
  const double p = params.p();
  if (p == 1.0) return out;

  // The state is rotated up from |0>, so the natural variable is
  // sqrt(p/(1-p)); with sqrt((1-p)/p) the polynomial would run in N - n.
  const Complex tau = std::polar(std::sqrt(p / (1.0 - p)), params.phi());
  out.tau = tau;
  // 1 + |tau|^2 = 1/(1-p).
  out.value = std::pow(1.0 - p, -0.5 * n_max) * out.overlap;
  Complex poly = 0.0;
  Complex tau_power = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    poly += psi[n] * std::exp(0.5 * log_binomial(n_max, n)) * tau_power;
    tau_power *= std::conj(tau);
  }
  out.polynomial_value = poly;
  return out;
}

StateVector reconstruct(const StateVector& psi, int max_photons, const SphereQuadrature& quad) {
  if (max_photons < 0) throw std::domain_error("reconstruct: N must be >= 0");
  if (psi.dim() < max_photons + 1) throw DimensionError("reconstruct: state dimension < N + 1");
  const CVector& amp = psi.amplitudes();
  const Index tail = psi.dim() - (max_photons + 1);
  if (tail > 0 && amp.tail(tail).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, psi.norm())) {
    throw std::invalid_argument("reconstruct: state has weight above level N");
  }
  const CMatrix sum = quad.integrate([&](double theta, double varphi) {
    const StateVector g = gbs_at(max_photons, theta, varphi, psi.dim());
    return CMatrix(inner(g, psi) * g.amplitudes());
  });
  return StateVector(CVector(static_cast<double>(max_photons + 1) * sum.col(0)));
}

}  // namespace binom
