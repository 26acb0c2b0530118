#include "binom/hp_algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "binom/numerics.hpp"

namespace binom {
namespace {

OperatorMatrix casimir(const OperatorMatrix& j3, const OperatorMatrix& jp, const OperatorMatrix& jm) {
  return j3 * j3 + Complex(0.5) * (jp * jm + jm * jp);
}

}  // namespace

OperatorMatrix annihilation(Index dim) {
  CMatrix a = CMatrix::Zero(dim, dim);
  for (Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return OperatorMatrix(std::move(a));
}

OperatorMatrix creation(Index dim) { return adjoint(annihilation(dim)); }

PseudoSpinSet hp_operators(int max_photons) {
  if (max_photons < 0) throw std::domain_error("hp_operators: N must be >= 0");
  const Index dim = max_photons + 1;
  const double n_max = max_photons;
  CMatrix j3 = CMatrix::Zero(dim, dim);
  CMatrix jp = CMatrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) {
    j3(n, n) = static_cast<double>(n) - 0.5 * n_max;
    if (n + 1 < dim) jp(n + 1, n) = std::sqrt((n_max - n) * (n + 1.0));
  }
  OperatorMatrix j_plus(std::move(jp));
  OperatorMatrix j_minus = adjoint(j_plus);
  OperatorMatrix j_3(std::move(j3));
  OperatorMatrix j_sq = casimir(j_3, j_plus, j_minus);
  return {max_photons, std::move(j_3), std::move(j_plus), std::move(j_minus), std::move(j_sq)};
}

RotationSpec::RotationSpec(const BlochAngles& angles)
    : angles_(angles),
      eta_(std::polar(0.5 * angles.theta(), -angles.varphi())),
      tau_(std::polar(std::tan(0.5 * angles.theta()), -angles.varphi())) {}

OperatorMatrix rotation_from_generator(const OperatorMatrix& j_plus, const OperatorMatrix& j_minus,
                                       Complex eta) {
  return expm(-eta * j_plus + std::conj(eta) * j_minus);
}

OperatorMatrix rotation_operator(int max_photons, const RotationSpec& spec) {
  const PseudoSpinSet ops = hp_operators(max_photons);
  return rotation_from_generator(ops.j_plus, ops.j_minus, spec.eta());
}

PseudoSpinSet conjugated(const PseudoSpinSet& ops, const OperatorMatrix& rotation) {
  const OperatorMatrix r_dag = adjoint(rotation);
  auto conj_by = [&](const OperatorMatrix& x) { return rotation * x * r_dag; };
  return {ops.max_photons, conj_by(ops.j3), conj_by(ops.j_plus), conj_by(ops.j_minus),
          conj_by(ops.j_sq)};
}

PseudoSpinSet rotated_operators(int max_photons, double p, double phi) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("rotated_operators: p outside [0, 1]");
  const PseudoSpinSet ops = hp_operators(max_photons);
  const double s = std::sqrt(p * (1.0 - p));
  const Complex e_plus = std::polar(1.0, phi);
  const Complex e_minus = std::conj(e_plus);

  OperatorMatrix j3 = Complex(2.0 * p - 1.0) * ops.j3 + Complex(s) * (e_plus * ops.j_plus + e_minus * ops.j_minus);
  OperatorMatrix jp = e_minus * (Complex(p) * e_plus * ops.j_plus - Complex(1.0 - p) * e_minus * ops.j_minus -
                                 Complex(2.0 * s) * ops.j3);
  OperatorMatrix jm = adjoint(jp);
  OperatorMatrix jsq = casimir(j3, jp, jm);
  return {max_photons, std::move(j3), std::move(jp), std::move(jm), std::move(jsq)};
}

OperatorMatrix link_operator(int max_photons, const GbsParams& a, const GbsParams& b) {
  if (a.max_photons() != max_photons || b.max_photons() != max_photons) {
    throw std::invalid_argument("link_operator: mismatched N");
  }
  const OperatorMatrix ra = rotation_operator(max_photons, RotationSpec(params_to_angles(a)));
  const OperatorMatrix rb = rotation_operator(max_photons, RotationSpec(params_to_angles(b)));
  return rb * adjoint(ra);
}

CompositionAngles composition_angles(const BlochAngles& a, const BlochAngles& b) {
  const double t1 = a.theta();
  const double t2 = b.theta();
  const double v1 = a.varphi();
  const double v2 = b.varphi();
  const double radicand = t1 * t1 + t2 * t2 - 2.0 * t1 * t2 * std::cos(v1 - v2);
  const double big_theta = std::sqrt(std::max(0.0, radicand));
  const double y = t2 * std::sin(v2) - t1 * std::sin(v1);
  const double x = t2 * std::cos(v2) - t1 * std::cos(v1);
  const double big_phi = (x == 0.0 && y == 0.0) ? 0.0 : wrap_angle(std::atan2(y, x));
  const Complex phase = std::polar(1.0, 0.25 * t1 * t2 * std::sin(v1 - v2));
  return {big_theta, big_phi, phase};
}

double composition_discrepancy(int max_photons, const BlochAngles& a, const BlochAngles& b) {
  const PseudoSpinSet ops = hp_operators(max_photons);
  const OperatorMatrix ra = rotation_from_generator(ops.j_plus, ops.j_minus, RotationSpec(a).eta());
  const OperatorMatrix rb = rotation_from_generator(ops.j_plus, ops.j_minus, RotationSpec(b).eta());
  const CompositionAngles c = composition_angles(a, b);
  // Theta may exceed pi here, so the generator is formed directly.
  const Complex eta = std::polar(0.5 * c.big_theta, -c.big_phi);
  const OperatorMatrix composed = c.phase * rotation_from_generator(ops.j_plus, ops.j_minus, eta);
  return frobenius_distance(rb * adjoint(ra), composed);
}

}  // namespace binom
