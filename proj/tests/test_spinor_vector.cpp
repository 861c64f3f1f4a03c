#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "bqdirac/generators.hpp"
#include "bqdirac/spinor_vector.hpp"

using namespace bqtest;

namespace {

const DiracSpinor kPsi(Complex(1, 2), Complex(3, -1), Complex(0.5, 0.25), Complex(-1, 4));
const FourVectorC kG(Complex(0.5, 2), Complex(3, 4), Complex(-1, 1), Complex(1, 0.25));

}  // namespace

TEST_CASE("G of a fixed spinor") {
  const TrinomialBasis b = canonical_basis();
  CHECK(near(g_vector(kPsi, b), kG));
  const HalfSpinorPair pair = to_vectors(kPsi, b);
  CHECK(near(pair.B, FourVectorR(kG.real())));
  CHECK(near(pair.N, FourVectorR(kG.imag())));
  CHECK(near(to_spinor(pair, b), kPsi));
  const RLDecomposition rl = rl_from_g(kG, b);
  CHECK(near(rl.R + rl.L, kPsi));
  CHECK(near(rl_decompose(kPsi, b).R, rl.R));
}

TEST_CASE("slot layout of the basis spinors") {
  const TrinomialBasis b = canonical_basis();
  const HalfSpinorPair phi = to_vectors(b.phi, b);
  const HalfSpinorPair f = to_vectors(b.f, b);
  CHECK(phi.B == FourVectorR(0, 0, 0, 1));
  CHECK(phi.N == FourVectorR(0, 0, 0, 0));
  CHECK(f.B == FourVectorR(0, 0, 0, 0));
  CHECK(f.N == FourVectorR(0, 0, 0, 1));
  for (int mu = 0; mu < 4; ++mu) {
    HalfSpinorPair unit;
    unit.B(mu) = 1.0;
    const DiracSpinor psi = to_spinor(unit, b);
    CHECK(to_vectors(psi, b).B == unit.B);
    CHECK(to_vectors(psi, b).N == unit.N);
  }
}

TEST_CASE("complex avatars are rejected") {
  const TrinomialBasis b = canonical_basis();
  CHECK_THROWS_AS(to_spinor(FourVectorC(Complex(1, 0.5), 0, 0, 0), FourVectorC{}, b), NonRealInput);
  CHECK_NOTHROW(to_spinor(FourVectorC(1, 0, 0, 0), FourVectorC(0, 2, 0, 0), b));
}

TEST_CASE("round trip in moved frames") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng(4, 8, t);
    const TrinomialBasis b = random_basis(rng);
    const DiracSpinor psi = random_spinor(rng);
    const DiracSpinor back = to_spinor(to_vectors(psi, b), b);
    CHECK(max_abs(back - psi) <= 1e-10 * (1 + max_abs(psi)));
    const FourVectorC g = g_vector(psi, b);
    const RLDecomposition rl = rl_from_g(g, b);
    CHECK(max_abs(rl.R + rl.L - psi) <= 1e-10 * (1 + max_abs(psi)));
  }
}

TEST_CASE("triality cycle") {
  Rng rng(12, 3);
  const TrinomialBasis b = canonical_basis();
  const TrialityTriple x{random_real_vector(rng), {random_real_vector(rng), random_real_vector(rng)}};
  const TrialityTriple y = ding_J(x);
  CHECK(y.V == x.pair.N);
  CHECK(y.pair.B == x.V);
  CHECK(y.pair.N == x.pair.B);
  const TrialityTriple z = ding_J(ding_J(y));
  CHECK(z.V == x.V);
  CHECK(z.pair.B == x.pair.B);
  CHECK(z.pair.N == x.pair.N);

  const Forms fx = forms(x.V, x.pair, b);
  const Forms fy = forms(y.V, y.pair, b);
  CHECK(std::abs(std::abs(fx.cubic) - std::abs(fy.cubic)) <= 1e-12 * (1 + std::abs(fx.cubic)));
  CHECK(std::abs(fx.cubic.imag()) <= 1e-12 * (1 + std::abs(fx.cubic)));
  CHECK(fx.q_1.real() == doctest::Approx(-minkowski_dot(x.pair.B, x.pair.B)).epsilon(1e-12));
}

TEST_CASE("half spinors and duality") {
  const TrinomialBasis b = canonical_basis();
  const FourVectorR B(1, 2, 0, -1), N(0.5, 0, 3, 1);
  CHECK(near(DiracSpinor{half_spinor_b(B, b) + half_spinor_n(N, b)}, to_spinor(HalfSpinorPair{B, N}, b)));
  const DualResult d = dual_transform({B, N}, 1.5);
  CHECK(d.pair.B == N);
  CHECK(d.pair.N == FourVectorR(-B));
  CHECK(d.m == -1.5);
}

TEST_CASE("G field agrees with pointwise G") {
  Rng rng(21, 4);
  const TrinomialBasis b = random_basis(rng);
  const SpinorField psi = random_spinor_field(rng, 3);
  const VectorField g = g_field(psi, b);
  for (int i = 0; i < 5; ++i) {
    const FourVectorR x = random_point(rng);
    CHECK(max_abs(g(x) - g_vector(psi(x), b)) <= 1e-10);
  }
}
