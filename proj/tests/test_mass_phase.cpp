#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <string>

#include "bqdirac/generators.hpp"
#include "bqdirac/mass_phase.hpp"

using namespace bqtest;

namespace {

const DiracSpinor kPsi(Complex(1, 2), Complex(3, -1), Complex(0.5, 0.25), Complex(-1, 4));

}  // namespace

TEST_CASE("K of fixed spinors") {
  const TrinomialBasis b = canonical_basis();
  const KVector k = k_vector(kPsi, b);
  const FourVectorC expected(Complex(-0.17557111782144594, -0.5780107018622709),
                             Complex(-0.08965333675988728, 0.14450267546556772),
                             Complex(-0.05161858783145026, -0.4575918056409644),
                             Complex(-0.08693656897928463, -1.0446339247198333));
  CHECK(near(k.K, expected));
  CHECK(near(minkowski_dot(k.K, k.K), Complex(1)));
  CHECK(near(k.re, FourVectorR(expected.real())));
  CHECK(near(k.im, FourVectorR(expected.imag())));
  CHECK(near(k_vector(b.phi, b).K, FourVectorC(1, 0, 0, 0)));
  CHECK(near(k_vector(b.f, b).K, FourVectorC(-1, 0, 0, 0)));

  const KIdentityResidual r = k_identities(kPsi, b);
  CHECK(r.slash_r < 1e-12);
  CHECK(r.slash_l < 1e-12);
  CHECK(r.unit < 1e-12);
  CHECK(r.trilinear < 1e-12);
  CHECK(r.mass < 1e-12);
}

TEST_CASE("K is blind to a common factor") {
  const TrinomialBasis b = canonical_basis();
  const Complex theta = std::polar(2.5, 1.1);
  CHECK(near(k_vector(DiracSpinor{theta * kPsi}, b).K, k_vector(kPsi, b).K));
}

TEST_CASE("pure chirality has no K") {
  const TrinomialBasis b = canonical_basis();
  const NullBasis n = null_basis(b);
  CHECK_THROWS_AS(k_vector(n.r, b), DegenerateChirality);
  CHECK_THROWS_AS(k_vector(DiracSpinor{Complex(0.3, 2) * n.l}, b), DegenerateChirality);
  CHECK_THROWS_AS(split_K(n.r, b, structure_constants(b)), DegenerateChirality);
  // Weak mixing passes the chirality test but leaves the current nearly null.
  const DiracSpinor weak{n.r + 1e-6 * n.l};
  CHECK_NOTHROW(k_vector(weak, b));
  CHECK_THROWS_AS(split_K(weak, b, structure_constants(b)), DegenerateCurrent);
}

TEST_CASE("split K") {
  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng rng(61, 2, t);
    const TrinomialBasis b = random_basis(rng);
    const StructureTensors s = structure_constants(b);
    const DiracSpinor psi = random_spinor(rng);
    const SplitK k = split_K(psi, b, s);
    const KVector kv = k_vector(psi, b);
    CHECK(max_abs(k.re - kv.re) <= 1e-9 * (1 + max_abs(kv.re)));
    CHECK(max_abs(k.im - kv.im) <= 1e-9 * (1 + max_abs(kv.re)));
    CHECK(max_abs(k.pi - k.pi_g) <= 1e-10 * (1 + max_abs(k.pi)));
    CHECK(max_abs(k.pi5 - k.pi5_g) <= 1e-10 * (1 + max_abs(k.pi5)));
    CHECK(std::abs(minkowski_dot(kv.re, kv.im)) <= 1e-9 * (1 + max_abs(kv.re) * max_abs(kv.im)));
  }
}

TEST_CASE("rest frame and moving plane waves") {
  Rng rng(5, 5);
  const TrinomialBasis b = random_basis(rng);
  const Real m = 1.7;
  const DiracSpinor u = plane_wave_spinor(FourVectorR(m, 0, 0, 0), m, Eigen::Vector2cd(Complex(0.3, 1), -0.4));
  const KVector k = k_vector(u, b);
  CHECK(max_abs(FourVectorR{m * k.re} - FourVectorR(m, 0, 0, 0)) <= 1e-12);
  CHECK(max_abs(k.im) <= 1e-12);
  const FourVectorR p = random_momentum(rng, m);
  const KVector kp = k_vector(plane_wave_spinor(p, m, Eigen::Vector2cd(1, 0)), b);
  CHECK(max_abs(FourVectorR{m * kp.re} - p) <= 1e-10 * (1 + max_abs(p)));
}

TEST_CASE("massless rewriting") {
  Rng rng(9, 9);
  const TrinomialBasis b = random_basis(rng);
  Jet<DiracSpinor> j;
  j.value = kPsi;
  for (auto& d : j.d) d = random_spinor(rng);
  const FourVectorC a = complexify(random_real_vector(rng));
  const OperatorIdentityResidual op = massless_operator_identity(j, a, 0.4, 1.2, b);
  CHECK(std::max({op.r, op.l, op.psi}) < 1e-10);
  const ModifiedLagrangian l1 = modified_lagrangian(j, a, 0.4, 1.2, b, std::polar(3.0, 0.2));
  const ModifiedLagrangian l2 = modified_lagrangian(j, a, 0.4, 1.2, b, std::polar(0.1, -2.0));
  CHECK(near(l1.standard, l1.re_k, 1e-10));
  CHECK(near(l1.standard, l1.factored, 1e-10));
  CHECK(near(l1.factored, l2.factored, 1e-10));
  CHECK_THROWS_AS(modified_lagrangian(j, a, 0.4, 1.2, b, 0.0), ZeroParameter);
}

TEST_CASE("massless factor of a plane wave") {
  Rng rng(13, 1);
  const TrinomialBasis b = random_basis(rng);
  const Real m = 0.9, e = 0.6;
  const FourVectorR a0(0.3, -0.2, 0.1, 0.4);
  const SpinorField psi = gauged_plane_wave(random_momentum(rng, m), m, Eigen::Vector2cd(1, kI), a0, e);
  const GaugeField a = constant_gauge_field(a0, e);
  const SpinorField psi0 = massless_factor(psi, a, m, b);
  REQUIRE(psi0.terms().size() == 1);
  CHECK(max_abs(psi0.terms()[0].p) < 1e-12);
  const FactorCheck fc = massless_factor_check(psi, a, m, b, {random_point(rng), random_point(rng)});
  CHECK(fc.massless_residual < 1e-10);
  CHECK(fc.operator_residual < 1e-10);

  CHECK_THROWS_AS(massless_factor(psi + psi.conj(), a, m, b), std::invalid_argument);
  CHECK_THROWS_AS(massless_factor(psi, random_gauge_field(rng, 1, e), m, b), std::invalid_argument);
  CHECK_THROWS_AS(massless_factor(SpinorField::plane_wave(kPsi, FourVectorR(1, 0, 0, 0)), a, m, b),
                  std::invalid_argument);
}

TEST_CASE("line integrals") {
  Rng rng(77, 3);
  const TrinomialBasis b = canonical_basis();
  const Real m = 1.4;
  const SpinorField rest =
      SpinorField::plane_wave(plane_wave_spinor(FourVectorR(m, 0, 0, 0), m, Eigen::Vector2cd(1, 0)),
                              FourVectorR(m, 0, 0, 0));
  const PathPolyline seg{{FourVectorR{}, FourVectorR(2.5, 0, 0, 0)}, false};
  const LineIntegral open = line_integral(seg, GaugeField{}, k_field(rest, b), m, 64);
  CHECK(open.phase == doctest::Approx(-m * 2.5).epsilon(1e-12));
  CHECK(std::abs(open.log_scale) < 1e-12);

  const FourVectorR a0(0.2, 0.1, -0.3, 0.05);
  const SpinorField psi = gauged_plane_wave(random_momentum(rng, m), m, Eigen::Vector2cd(0.5, 1), a0, 0.8);
  const PathPolyline loop = square_loop(FourVectorR(0.1, 0.2, 0.3, 0.4), 0, 2, 1.5);
  CHECK(loop.closed);
  CHECK(loop.vertices.size() == 5);
  const LineIntegral li = line_integral(loop, constant_gauge_field(a0, 0.8), k_field(psi, b), m, 64);
  CHECK(std::abs(li.phase) < 1e-8);
  CHECK(std::abs(li.log_scale) < 1e-8);
}

TEST_CASE("line integral argument errors") {
  const TrinomialBasis b = canonical_basis();
  const KField k = k_field(SpinorField::plane_wave(kPsi, FourVectorR(1, 0, 0, 0)), b);
  const PathPolyline seg{{FourVectorR{}, FourVectorR(1, 0, 0, 0)}, false};
  CHECK_THROWS_AS(line_integral(seg, GaugeField{}, k, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(line_integral(PathPolyline{{FourVectorR{}}, false}, GaugeField{}, k, 1.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(line_integral(PathPolyline{seg.vertices, true}, GaugeField{}, k, 1.0, 8), std::invalid_argument);

  const KField singular = [](const FourVectorR&) -> KVector { throw DegenerateChirality("bar(R) L vanishes"); };
  try {
    line_integral(seg, GaugeField{}, singular, 1.0, 2);
    FAIL("expected DegenerateChirality");
  } catch (const DegenerateChirality& err) {
    CHECK(std::string(err.what()).find("at node (0.25, 0, 0, 0)") != std::string::npos);
  }
}
