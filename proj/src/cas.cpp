#include "binom/cas.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include <Eigen/Sparse>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <unsupported/Eigen/KroneckerProduct>

#include "binom/hp_algebra.hpp"
#include "binom/numerics.hpp"

namespace binom {
namespace {

using SparseC = Eigen::SparseMatrix<Complex>;
using Quad = boost::multiprecision::cpp_bin_float_quad;

SparseC sparse_identity(Index dim) {
  SparseC id(dim, dim);
  id.setIdentity();
  return id;
}

// Single-atom operator `op` acting on atom `j` of `atoms`.
SparseC embed(const SparseC& op, int j, int atoms) {
  const Index left = Index{1} << j;
  const Index right = Index{1} << (atoms - j - 1);
  SparseC tmp = Eigen::kroneckerProduct(sparse_identity(left), op);
  return Eigen::kroneckerProduct(tmp, sparse_identity(right));
}

TensorAtomSpace build_tensor_space(int atoms) {
  SparseC sigma_plus(2, 2);  // |e><g| with |g> = index 0, |e> = index 1
  sigma_plus.insert(1, 0) = 1.0;
  SparseC sigma_z(2, 2);
  sigma_z.insert(0, 0) = -1.0;
  sigma_z.insert(1, 1) = 1.0;

  const Index dim = Index{1} << atoms;
  SparseC jp(dim, dim);
  SparseC jz(dim, dim);
  for (int j = 0; j < atoms; ++j) {
    jp += embed(sigma_plus, j, atoms);
    jz += Complex(0.5) * embed(sigma_z, j, atoms);
  }
  const SparseC jm = SparseC(jp.adjoint());
  const SparseC jx = Complex(0.5) * (jp + jm);
  const SparseC jy = Complex(0.0, -0.5) * (jp - jm);
  const SparseC jsq = SparseC(jx * jx) + SparseC(jy * jy) + SparseC(jz * jz);
  auto dense = [](const SparseC& s) { return OperatorMatrix(CMatrix(s)); };
  return {atoms, dense(jx), dense(jy), dense(jz), dense(jp), dense(jm), dense(jsq)};
}

Quad quad_factorial(int n) {
  Quad f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Quad quad_power(const Quad& x, int e) {
  Quad r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

SpinJ::SpinJ(int two_j) : two_j_(two_j) {
  if (two_j < 0) throw std::domain_error("SpinJ: 2J must be >= 0");
}

SpinJOperators spin_j_operators(SpinJ j) {
  const Index dim = j.dim();
  const double jv = j.value();
  CMatrix jz = CMatrix::Zero(dim, dim);
  CMatrix jp = CMatrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) {
    const double m = -jv + static_cast<double>(n);
    jz(n, n) = m;
    if (n + 1 < dim) jp(n + 1, n) = std::sqrt((jv - m) * (jv + m + 1.0));
  }
  OperatorMatrix j_plus(std::move(jp));
  OperatorMatrix j_minus = adjoint(j_plus);
  OperatorMatrix j_z(std::move(jz));
  OperatorMatrix j_sq = j_z * j_z + Complex(0.5) * (j_plus * j_minus + j_minus * j_plus);
  return {j, std::move(j_z), std::move(j_plus), std::move(j_minus), std::move(j_sq)};
}

std::shared_ptr<const TensorAtomSpace> tensor_atom_space(int atoms) {
  if (atoms < 1 || atoms > kMaxTensorAtoms) {
    throw std::out_of_range("tensor_atom_space: atom count " + std::to_string(atoms) +
                            " outside [1, " + std::to_string(kMaxTensorAtoms) + "]");
  }
  static std::shared_mutex mutex;
  static std::map<int, std::shared_ptr<const TensorAtomSpace>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(atoms); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const TensorAtomSpace>(build_tensor_space(atoms));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(atoms, std::move(built));
  return it->second;
}

StateVector product_state(const std::vector<bool>& excited) {
  const int atoms = static_cast<int>(excited.size());
  if (atoms < 1 || atoms > kMaxTensorAtoms) throw std::out_of_range("product_state: bad atom count");
  Index index = 0;
  for (int j = 0; j < atoms; ++j) {
    if (excited[static_cast<std::size_t>(j)]) index |= Index{1} << (atoms - j - 1);
  }
  return StateVector::basis(Index{1} << atoms, index);
}

std::vector<StateVector> dicke_states_tensor(int atoms) {
  const auto space = tensor_atom_space(atoms);
  std::vector<StateVector> states;
  states.reserve(static_cast<std::size_t>(atoms + 1));
  // w = J+^n / n! |g...g>, then scaled by C(N,n)^{-1/2}.
  StateVector w = product_state(std::vector<bool>(static_cast<std::size_t>(atoms), false));
  for (int n = 0; n <= atoms; ++n) {
    if (n > 0) w = Complex(1.0 / n) * apply(space->j_plus, w);
    states.push_back(Complex(std::exp(-0.5 * log_binomial(atoms, n))) * w);
  }
  return states;
}

StateVector project_onto_dicke(const StateVector& tensor_state, const std::vector<StateVector>& dicke) {
  if (dicke.empty()) throw std::invalid_argument("project_onto_dicke: empty Dicke basis");
  CVector c(static_cast<Index>(dicke.size()));
  for (std::size_t n = 0; n < dicke.size(); ++n) c(static_cast<Index>(n)) = inner(dicke[n], tensor_state);
  return StateVector(std::move(c));
}

CasParams gbs_to_cas(const GbsParams& params) {
  return {SpinJ(params.max_photons()), params_to_angles(params)};
}

StateVector cas_state(const CasParams& params) {
  const int two_j = params.j.two_j();
  const double c2 = std::pow(std::cos(0.5 * params.angles.theta()), 2);
  const double s2 = std::pow(std::sin(0.5 * params.angles.theta()), 2);
  CVector amp = CVector::Zero(two_j + 1);
  for (int n = 0; n <= two_j; ++n) {
    const double log_weight = log_binomial(two_j, n) + xlogy(n, c2) + xlogy(two_j - n, s2);
    const double mag = std::exp(0.5 * log_weight);
    amp(n) = mag == 0.0 ? Complex(0.0) : std::polar(mag, -n * params.angles.varphi());
  }
  return StateVector(std::move(amp));
}

OperatorMatrix cas_rotation(SpinJ j, const BlochAngles& angles) {
  const SpinJOperators ops = spin_j_operators(j);
  return rotation_from_generator(ops.j_plus, ops.j_minus, RotationSpec(angles).eta());
}

OperatorMatrix disentangled_rotation(SpinJ j, const BlochAngles& angles) {
  if (angles.theta() == kPi) {
    throw std::domain_error("disentangled_rotation: tau diverges at theta = pi; use cas_rotation");
  }
  const int two_j = j.two_j();
  const Index dim = j.dim();
  const double t = std::tan(0.5 * angles.theta());
  const double varphi = angles.varphi();

  // Entry (m, n) of L D U factors as e^{i varphi (n - m)} * pref(m) pref(n) *
  // (1 + t^2)^J * S(m, n), where pref(k) = sqrt((2J-k)! / k!) and
  //   S(m, n) = sum_{k >= max(m,n)} (-1)^{k-n} t^{2k-m-n} (1+t^2)^{-k} k! / ((2J-k)! (k-m)! (k-n)!).
  const Quad tq = t;
  const Quad one_plus = 1 + tq * tq;
  std::vector<double> pref(static_cast<std::size_t>(dim));
  for (int k = 0; k <= two_j; ++k) {
    pref[static_cast<std::size_t>(k)] = std::exp(0.5 * (std::lgamma(two_j - k + 1.0) - std::lgamma(k + 1.0)));
  }
  const double scale = std::pow(1.0 + t * t, j.value());

  CMatrix out(dim, dim);
  for (int m = 0; m <= two_j; ++m) {
    for (int n = 0; n <= two_j; ++n) {
      Quad sum = 0;
      for (int k = std::max(m, n); k <= two_j; ++k) {
        Quad term = quad_power(tq, 2 * k - m - n) / quad_power(one_plus, k);
        term *= quad_factorial(k);
        term /= quad_factorial(two_j - k) * quad_factorial(k - m) * quad_factorial(k - n);
        if ((k - n) % 2 != 0) term = -term;
        sum += term;
      }
      const double magnitude = static_cast<double>(sum) * scale * pref[static_cast<std::size_t>(m)] *
                               pref[static_cast<std::size_t>(n)];
      out(m, n) = std::polar(1.0, varphi * (n - m)) * magnitude;
    }
  }
  return OperatorMatrix(std::move(out));
}

SpinJOperators rotated_cas_operators(SpinJ j, const BlochAngles& angles) {
  const SpinJOperators ops = spin_j_operators(j);
  const double th = angles.theta();
  const Complex e_minus = std::polar(1.0, -angles.varphi());
  const Complex e_plus = std::conj(e_minus);
  const double c_half = std::cos(0.5 * th);
  const double s_half = std::sin(0.5 * th);

  OperatorMatrix jz = Complex(std::cos(th)) * ops.jz +
                      Complex(0.5 * std::sin(th)) * (e_minus * ops.j_plus + e_plus * ops.j_minus);
  OperatorMatrix jp = e_plus * (Complex(c_half * c_half) * e_minus * ops.j_plus -
                                Complex(s_half * s_half) * e_plus * ops.j_minus -
                                Complex(std::sin(th)) * ops.jz);
  OperatorMatrix jm = adjoint(jp);
  OperatorMatrix jsq = jz * jz + Complex(0.5) * (jp * jm + jm * jp);
  return {j, std::move(jz), std::move(jp), std::move(jm), std::move(jsq)};
}

double great_circle_angle(const BlochAngles& a, const BlochAngles& b) {
  const double c = std::cos(a.theta()) * std::cos(b.theta()) +
                   std::sin(a.theta()) * std::sin(b.theta()) * std::cos(a.varphi() - b.varphi());
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double cas_overlap_modulus_sq(SpinJ j, const BlochAngles& a, const BlochAngles& b) {
  // cos^2(Theta/2) = (1 + cos Theta) / 2 keeps the antipodal case exact.
  const double cos_theta = std::cos(a.theta()) * std::cos(b.theta()) +
                           std::sin(a.theta()) * std::sin(b.theta()) * std::cos(a.varphi() - b.varphi());
  const double half = std::max(0.0, 0.5 * (1.0 + cos_theta));
  return std::pow(half, j.two_j());
}

StateVector cas_from_ground(const CasParams& params) {
  const BlochAngles flipped(kPi - params.angles.theta(), params.angles.varphi() + kPi);
  return apply(cas_rotation(params.j, flipped), StateVector::basis(params.j.dim(), 0));
}

StateVector tensor_cas_state(int atoms, const BlochAngles& angles) {
  const auto space = tensor_atom_space(atoms);
  const OperatorMatrix r = rotation_from_generator(space->j_plus, space->j_minus, RotationSpec(angles).eta());
  return apply(r, product_state(std::vector<bool>(static_cast<std::size_t>(atoms), true)));
}

IdentityResolution cas_identity_resolution(SpinJ j, const SphereQuadrature& quad) {
  const CMatrix sum = quad.integrate([&](double theta, double varphi) {
    const CVector v = cas_state({j, BlochAngles(theta, varphi)}).amplitudes();
    return CMatrix(v * v.adjoint());
  });
  return {OperatorMatrix(CMatrix(static_cast<double>(j.dim()) * sum)), !quad.resolves(j.two_j())};
}

ExpansionAmplitude cas_expansion_amplitude(const StateVector& c, const CasParams& params) {
  const int two_j = params.j.two_j();
  if (c.dim() != params.j.dim()) throw DimensionError("cas_expansion_amplitude: dimension != 2J + 1");
  ExpansionAmplitude out;
  out.overlap = inner(cas_state(params), c);
  const double theta = params.angles.theta();
  if (theta == 0.0) return out;
  // Reciprocal of the disentangling variable: these states hang off |J,J>.
  const Complex tau = std::polar(1.0 / std::tan(0.5 * theta), -params.angles.varphi());
  out.tau = tau;
  out.value = std::pow(1.0 + std::norm(tau), params.j.value()) * out.overlap;
  Complex poly = 0.0;
  Complex tau_power = 1.0;
  for (int n = 0; n <= two_j; ++n) {
    poly += c[n] * std::exp(0.5 * log_binomial(two_j, n)) * tau_power;
    tau_power *= std::conj(tau);
  }
  out.polynomial_value = poly;
  return out;
}

StateVector cas_reconstruct(SpinJ j, const StateVector& c, const SphereQuadrature& quad) {
  if (c.dim() != j.dim()) throw DimensionError("cas_reconstruct: dimension != 2J + 1");
  const CMatrix sum = quad.integrate([&](double theta, double varphi) {
    const StateVector s = cas_state({j, BlochAngles(theta, varphi)});
    return CMatrix(inner(s, c) * s.amplitudes());
  });
  return StateVector(CVector(static_cast<double>(j.dim()) * sum.col(0)));
}

}  // namespace binom
