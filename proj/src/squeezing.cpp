#include "binom/squeezing.hpp"

#include <cmath>
#include <stdexcept>

#include "binom/gbs.hpp"
#include "binom/hp_algebra.hpp"
#include "binom/numerics.hpp"

namespace binom {
namespace {

// sum_{n=0}^{N-shift} [C(N,n) C(N-shift,n)]^{1/2} p^n (1-p)^{N-shift-n}
double shifted_binomial_sum(int n_max, int shift, double p) {
  const int top = n_max - shift;
  if (top < 0) return 0.0;
  const double q = 1.0 - p;
  double sum = 0.0;
  for (int n = 0; n <= top; ++n) {
    const double log_term = 0.5 * (log_binomial(n_max, n) + log_binomial(top, n)) + xlogy(n, p) +
                            xlogy(top - n, q);
    sum += std::exp(log_term);
  }
  return sum;
}

double expectation(const OperatorMatrix& op, const StateVector& psi) {
  return inner(psi, apply(op, psi)).real();
}

}  // namespace

QuadratureOps quadrature_ops(Index dim) {
  if (dim < 2) throw DimensionError("quadrature_ops: dimension must be >= 2");
  const OperatorMatrix a = annihilation(dim);
  const OperatorMatrix a_dag = adjoint(a);
  return {a + a_dag, Complex(0.0, -1.0) * (a - a_dag)};
}

QuadratureStats direct_stats(const StateVector& psi) {
  if (!psi.is_normalized(1e-10)) throw std::invalid_argument("direct_stats: state is not normalized");
  const Index dim = psi.dim();
  if (dim < 3) throw DimensionError("direct_stats: dimension must be >= 3");
  if (psi.amplitudes().tail(2).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("direct_stats: state has weight on the top two truncation levels");
  }
  const QuadratureOps q = quadrature_ops(dim);
  QuadratureStats s{};
  s.mean_x = expectation(q.a_x, psi);
  s.mean_p = expectation(q.a_p, psi);
  s.var_x = expectation(q.a_x * q.a_x, psi) - s.mean_x * s.mean_x;
  s.var_p = expectation(q.a_p * q.a_p, psi) - s.mean_p * s.mean_p;
  s.s_x = 1.0 - s.var_x;
  s.s_p = 1.0 - s.var_p;
  return s;
}

SqueezingTerms squeezing_terms(int max_photons, double p) {
  if (max_photons < 0) throw std::domain_error("squeezing_terms: N must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("squeezing_terms: p outside [0, 1]");
  if (p == 0.0 || p == 1.0) return {0.0, 0.0};
  const double n = max_photons;
  const double pq = p * (1.0 - p);
  const double a = max_photons >= 2
                       ? 2.0 * std::sqrt(n * (n - 1.0)) * pq * shifted_binomial_sum(max_photons, 2, p)
                       : 0.0;
  const double b = max_photons >= 1 ? 2.0 * std::sqrt(n * pq) * shifted_binomial_sum(max_photons, 1, p) : 0.0;
  return {a, b};
}

SqueezingIndexes closed_form_indexes(int max_photons, double p, double phi) {
  const SqueezingTerms t = squeezing_terms(max_photons, p);
  const double base = -2.0 * max_photons * p;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double c2 = std::cos(2.0 * phi);
  const double b2 = t.b_term * t.b_term;
  return {base - t.a_term * c2 + b2 * c * c, base + t.a_term * c2 + b2 * s * s};
}

std::vector<SqueezeRow> squeeze_scan(int max_photons, const std::vector<double>& p_grid,
                                     const std::vector<double>& phi_grid, SqueezeSource source) {
  if (p_grid.empty() || phi_grid.empty()) throw std::invalid_argument("squeeze_scan: empty grid");
  std::vector<SqueezeRow> rows;
  rows.reserve(p_grid.size() * phi_grid.size());
  for (double p : p_grid) {
    for (double phi : phi_grid) {
      SqueezeRow row{max_photons, p, phi, 0.0, 0.0, source};
      if (source == SqueezeSource::closed_form) {
        const SqueezingIndexes s = closed_form_indexes(max_photons, p, phi);
        row.s_x = s.s_x;
        row.s_p = s.s_p;
      } else {
        const QuadratureStats s = direct_stats(gbs_state(GbsParams(max_photons, p, phi), max_photons + 3));
        row.s_x = s.s_x;
        row.s_p = s.s_p;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace binom
