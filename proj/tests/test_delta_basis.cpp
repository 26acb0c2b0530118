#include <doctest.h>

#include "binom/delta_basis.hpp"
#include "binom/gbs.hpp"
#include "binom/hp_algebra.hpp"
#include "binom/numerics.hpp"
#include "oracles.hpp"

using namespace binom;

namespace {

double orthonormality_error(const DeltaBasis& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < b.states.size(); ++i) {
    for (std::size_t j = 0; j < b.states.size(); ++j) {
      const double target = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner(b.states[i], b.states[j]) - target));
    }
  }
  return worst;
}

StateVector middle_state_formula(double p, double phi) {
  const double s = std::sqrt(2.0 * p * (1.0 - p));
  CVector c(3);
  c << s, (2.0 * p - 1.0) * std::polar(1.0, phi), -s * std::polar(1.0, 2.0 * phi);
  return StateVector(c);
}

}  // namespace

TEST_CASE("basis is orthonormal, complete and diagonalizes the rotated J3") {
  oracle::Rng rng(41);
  for (int n : {0, 1, 2, 3, 7, 15, 30}) {
    for (int i = 0; i < 4; ++i) {
      const double p = rng.uniform(0.01, 0.99);
      const double phi = rng.uniform(0, kTwoPi);
      const auto b = delta_basis(n, p, phi);
      REQUIRE(b.states.size() == static_cast<std::size_t>(n + 1));
      CHECK(orthonormality_error(b) <= 1e-10);

      CMatrix sum = CMatrix::Zero(n + 1, n + 1);
      for (const auto& s : b.states) sum += s.amplitudes() * s.amplitudes().adjoint();
      CHECK((sum - CMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff() <= 1e-10);

      const auto rot = rotated_operators(n, p, phi);
      for (int m = 0; m <= n; ++m) {
        const auto& v = b.states[m];
        CHECK(max_abs_diff(apply(rot.j3, v), Complex(m - 0.5 * n) * v) <= 1e-9);
      }
      const GbsParams params(n, p, phi);
      CHECK(fidelity(b.states.front(), gbs_state(orthogonal_partner(params))) >= 1.0 - 1e-10);
      CHECK(fidelity(b.states.back(), gbs_state(params)) >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("first significant amplitude of each member is real positive") {
  const auto b = delta_basis(6, 0.37, 2.2);
  for (const auto& s : b.states) {
    for (Index n = 0; n < s.dim(); ++n) {
      if (std::abs(s[n]) > 1e-10) {
        CHECK(s[n].imag() == 0.0);
        CHECK(s[n].real() > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("two-photon middle state") {
  oracle::Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    const double p = rng.uniform(0.0, 1.0);
    const double phi = rng.uniform(0, kTwoPi);
    const auto b = delta_basis(2, p, phi);
    CHECK(max_abs_diff(b.states[1], middle_state_formula(p, phi)) <= 1e-12);
  }
  const auto b = delta_basis(2, 0.5, 0.0);
  CHECK(std::abs(b.states[1][0] - 1.0 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(b.states[1][1]) <= 1e-15);
  CHECK(std::abs(b.states[1][2] + 1.0 / std::sqrt(2.0)) <= 1e-15);
}

TEST_CASE("degenerate probabilities give the number basis") {
  const auto top = delta_basis(4, 1.0, 0.6);
  const auto bottom = delta_basis(4, 0.0, 0.6);
  for (int m = 0; m <= 4; ++m) {
    CHECK(max_abs_diff(top.states[m], StateVector::basis(5, m)) == 0.0);
    CHECK(max_abs_diff(bottom.states[m], StateVector::basis(5, 4 - m)) == 0.0);
  }
  const auto near = delta_basis(4, 1.0 - 1e-10, 0.6);
  for (int m = 0; m <= 4; ++m) CHECK(fidelity(near.states[m], StateVector::basis(5, m)) >= 1.0 - 1e-8);
}

TEST_CASE("closed-form member agrees with the recursion") {
  oracle::Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    const int n = rng.integer(0, 25);
    const double p = rng.uniform(0.0, 1.0);
    const double phi = rng.uniform(0, kTwoPi);
    const auto b = delta_basis(n, p, phi);
    for (int m = 0; m <= n; ++m) CHECK(fidelity(delta_state(n, m, p, phi), b.states[m]) >= 1.0 - 1e-10);
  }
  const GbsParams params(5, 0.3, 1.0);
  CHECK(fidelity(delta_state(5, 0, 0.3, 1.0), gbs_state(orthogonal_partner(params))) >= 1.0 - 1e-12);
  CHECK(fidelity(delta_state(5, 5, 0.3, 1.0), gbs_state(params)) >= 1.0 - 1e-12);
  CHECK(fidelity(delta_state(1, 1, 0.5, 0.0), StateVector(CVector::Constant(2, 1.0 / std::sqrt(2.0)))) >=
        1.0 - 1e-14);
  CHECK_THROWS_AS(delta_state(3, 4, 0.5, 0.0), std::out_of_range);
  CHECK_THROWS_AS(delta_state(3, -1, 0.5, 0.0), std::out_of_range);
}

TEST_CASE("members are the columns of the rotation up to phases") {
  oracle::Rng rng(44);
  for (int i = 0; i < 10; ++i) {
    const GbsParams params(rng.integer(1, 20), rng.uniform(0, 1), rng.uniform(0, kTwoPi));
    const int n = params.max_photons();
    const auto r = rotation_operator(n, RotationSpec(params_to_angles(params)));
    const auto b = delta_basis(n, params.p(), params.phi());
    for (int m = 0; m <= n; ++m) {
      CHECK(fidelity(apply(r, StateVector::basis(n + 1, m)), b.states[m]) >= 1.0 - 1e-10);
    }
  }
}
