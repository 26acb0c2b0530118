// Quadrature squeezing of generalized binomial states.
//
// Quadratures are a_X = a + a^dag and a_P = (a - a^dag)/i, the squeezing
// index of K in {X, P} is S_K = 1 - <Delta a_K^2>, and S_K > 0 means
// sub-vacuum fluctuations.
#pragma once

#include <vector>

#include "binom/hilbert.hpp"

namespace binom {

struct QuadratureOps {
  OperatorMatrix a_x;
  OperatorMatrix a_p;
};

/// Truncated quadratures.  [a_X, a_P] = 2i holds except in the last
/// row/column, which the truncation corrupts.  Throws for dim < 2.
QuadratureOps quadrature_ops(Index dim);

struct QuadratureStats {
  double mean_x;
  double mean_p;
  double var_x;
  double var_p;
  double s_x;
  double s_p;
};

/// Moments by expectation values in psi's own space.
///
/// psi must be normalized (to 1e-10) and have no weight on its top two
/// levels, otherwise <a_K^2> would see the truncation; both violations
/// throw std::invalid_argument.
QuadratureStats direct_stats(const StateVector& psi);

/// The two auxiliary sums of the closed form,
///   A(N,p) = 2 sqrt(N(N-1)) p(1-p) sum_{n=0}^{N-2} [C(N,n) C(N-2,n)]^{1/2} p^n (1-p)^{N-2-n}
///   B(N,p) = 2 sqrt(N p(1-p)) sum_{n=0}^{N-1} [C(N,n) C(N-1,n)]^{1/2} p^n (1-p)^{N-1-n}
struct SqueezingTerms {
  double a_term;
  double b_term;
};

SqueezingTerms squeezing_terms(int max_photons, double p);

struct SqueezingIndexes {
  double s_x;
  double s_p;
};

/// S_X = -2Np - A cos 2phi + B^2 cos^2 phi
/// S_P = -2Np + A cos 2phi + B^2 sin^2 phi
SqueezingIndexes closed_form_indexes(int max_photons, double p, double phi);

enum class SqueezeSource { closed_form, direct };

struct SqueezeRow {
  int max_photons;
  double p;
  double phi;
  double s_x;
  double s_p;
  SqueezeSource source;
};

/// Rows ordered p-major (p outer, phi inner).  The direct source embeds each
/// GBS in N + 3 levels.
std::vector<SqueezeRow> squeeze_scan(int max_photons, const std::vector<double>& p_grid,
                                     const std::vector<double>& phi_grid, SqueezeSource source);

}  // namespace binom
