#include <doctest.h>

#include "binom/hilbert.hpp"
#include "oracles.hpp"

using namespace binom;

namespace {
StateVector random_state(oracle::Rng& rng, Index dim) { return StateVector(rng.unit_vector(dim)); }
}  // namespace

TEST_CASE("state vectors reject empty dimensions") {
  CHECK_THROWS_AS(StateVector(0), DimensionError);
  CHECK_THROWS_AS(StateVector(CVector(0)), DimensionError);
  CHECK_THROWS_AS(StateVector::basis(3, 3), DimensionError);
  CHECK(StateVector(4).norm() == 0.0);
}

TEST_CASE("operators must be square") {
  CHECK_THROWS_AS(OperatorMatrix(CMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(OperatorMatrix(CMatrix(0, 0)), DimensionError);
  CHECK_THROWS_AS(OperatorMatrix::identity(2) * OperatorMatrix::identity(3), DimensionError);
}

TEST_CASE("inner product on basis vectors") {
  const auto e0 = StateVector::basis(2, 0);
  const auto e1 = StateVector::basis(2, 1);
  CHECK(std::abs(inner(e0, e0) - 1.0) == 0.0);
  CHECK(std::abs(inner(e0, e1)) == 0.0);
  const StateVector plus = Complex(1.0 / std::sqrt(2.0)) * (e0 + e1);
  CHECK(std::abs(inner(plus, e1) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK_THROWS_AS(inner(e0, StateVector::basis(3, 0)), DimensionError);
}

TEST_CASE("inner product is conjugate symmetric and antilinear in the bra") {
  oracle::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Index dim = rng.integer(1, 12);
    const auto u = random_state(rng, dim);
    const auto v = random_state(rng, dim);
    CHECK(std::abs(inner(u, v) - std::conj(inner(v, u))) < 1e-14);
    const Complex s(0.3, -1.2);
    CHECK(std::abs(inner(s * u, v) - std::conj(s) * inner(u, v)) < 1e-14);
  }
}

TEST_CASE("apply with identity, zero and diagonal operators") {
  oracle::Rng rng(12);
  const auto v = random_state(rng, 5);
  CHECK(max_abs_diff(apply(OperatorMatrix::identity(5), v), v) == 0.0);
  CHECK(apply(OperatorMatrix::zero(5), v).norm() == 0.0);
  CVector d(5);
  for (int k = 0; k < 5; ++k) d(k) = k;
  const auto diag = OperatorMatrix::diagonal(d);
  for (int k = 0; k < 5; ++k) {
    CHECK(max_abs_diff(apply(diag, StateVector::basis(5, k)), Complex(k) * StateVector::basis(5, k)) == 0.0);
  }
  CHECK_THROWS_AS(apply(diag, StateVector(4)), DimensionError);
}

TEST_CASE("adjoint and commutator basics") {
  oracle::Rng rng(13);
  CMatrix raw(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) raw(i, j) = rng.gaussian();
  const OperatorMatrix a(raw);
  CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
  CHECK(adjoint(a)(1, 2) == std::conj(a(2, 1)));
  CHECK(max_abs_diff(commutator(a, a), OperatorMatrix::zero(4)) < 1e-15);
  CVector d1(4), d2(4);
  for (int k = 0; k < 4; ++k) {
    d1(k) = rng.gaussian();
    d2(k) = rng.gaussian();
  }
  CHECK(max_abs_diff(commutator(OperatorMatrix::diagonal(d1), OperatorMatrix::diagonal(d2)),
                     OperatorMatrix::zero(4)) == 0.0);
}

TEST_CASE("expm of zero and diagonal matrices") {
  CHECK(max_abs_diff(expm(OperatorMatrix::zero(3)), OperatorMatrix::identity(3)) == 0.0);
  CVector d(3);
  d << Complex(0.5, 0.0), Complex(-1.0, 2.0), Complex(0.0, -0.7);
  const auto e = expm(OperatorMatrix::diagonal(d));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(e(k, k) - std::exp(d(k))) < 1e-14);
  CHECK(std::abs(e(0, 1)) < 1e-15);
}

TEST_CASE("expm matches the power series on anti-Hermitian generators") {
  oracle::Rng rng(14);
  for (int i = 0; i < 40; ++i) {
    const Index dim = rng.integer(2, 12);
    // Norms up to about pi * dim, the range the rotations use.
    const CMatrix g = rng.anti_hermitian(dim, rng.uniform(0.1, 3.0));
    const CMatrix ref = oracle::taylor_expm(g);
    const CMatrix got = expm(OperatorMatrix(g)).entries();
    CHECK((got - ref).norm() / ref.norm() <= 1e-12);
  }
}

TEST_CASE("expm matches the power series on general matrices") {
  oracle::Rng rng(15);
  for (int i = 0; i < 20; ++i) {
    CMatrix m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = rng.gaussian();
    const CMatrix ref = oracle::taylor_expm(m);
    CHECK((expm(OperatorMatrix(m)).entries() - ref).norm() / ref.norm() <= 1e-12);
  }
}

TEST_CASE("exponentials of anti-Hermitian generators are unitary and norm preserving") {
  oracle::Rng rng(16);
  for (int i = 0; i < 30; ++i) {
    const Index dim = rng.integer(1, 40);
    const OperatorMatrix u = expm(OperatorMatrix(rng.anti_hermitian(dim, 2.0)));
    CHECK(frobenius_distance(u * adjoint(u), OperatorMatrix::identity(dim)) <= 1e-10);
    const auto v = random_state(rng, dim);
    CHECK(std::abs(apply(u, v).norm() - 1.0) <= 1e-10);
  }
}

TEST_CASE("normalization helpers") {
  StateVector v(CVector::Constant(4, Complex(1.0, 1.0)));
  CHECK_FALSE(v.is_normalized());
  CHECK(v.normalized().is_normalized());
  CHECK_THROWS(StateVector(3).normalized());
  const auto r = v.resized(6);
  CHECK(r.dim() == 6);
  CHECK(r[5] == Complex(0.0));
  CHECK(v.resized(2).dim() == 2);
}

TEST_CASE("fidelity ignores global phases") {
  oracle::Rng rng(17);
  const auto u = random_state(rng, 6);
  const auto v = Complex(std::polar(1.0, 2.1)) * u;
  CHECK(std::abs(fidelity(u, v) - 1.0) < 1e-14);
}

TEST_CASE("global phase fix makes the first significant amplitude real positive") {
  CVector c(3);
  c << Complex(1e-14, 1e-14), Complex(0.0, -0.6), Complex(0.8, 0.0);
  const auto fixed = fix_global_phase(StateVector(c));
  CHECK(std::abs(fixed[1] - 0.6) < 1e-15);
  CHECK(fixed[1].imag() == 0.0);
  CHECK(std::abs(fixed[2] - Complex(0.0, 0.8)) < 1e-15);
  // the zero vector is left alone
  CHECK(fix_global_phase(StateVector(2)).norm() == 0.0);
}

TEST_CASE("phase alignment against a reference") {
  oracle::Rng rng(18);
  const auto u = random_state(rng, 7);
  const auto v = Complex(std::polar(1.0, -0.9)) * u;
  CHECK(max_abs_diff(align_phase(v, u), u) < 1e-15);
  const auto aligned = align_phase(random_state(rng, 7), u);
  CHECK(std::abs(inner(u, aligned).imag()) < 1e-15);
  CHECK(inner(u, aligned).real() >= 0.0);
  CHECK(max_abs_diff(align_phase(StateVector::basis(2, 0), StateVector::basis(2, 1)), StateVector::basis(2, 0)) == 0.0);
}
