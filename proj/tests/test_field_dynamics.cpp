#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "bqdirac/field_dynamics.hpp"
#include "bqdirac/generators.hpp"
#include "bqdirac/spinor_vector.hpp"

using namespace bqtest;

namespace {

const DiracSpinor kPsi(Complex(1, 2), Complex(3, -1), Complex(0.5, 0.25), Complex(-1, 4));
const FourVectorR kP(1.2, 0.3, -0.4, 0.5);
const FourVectorR kA(0.1, -0.2, 0.3, 0.05);
const FourVectorR kX(0.4, -1.0, 0.25, 2.0);
constexpr Real kE = 0.7;
constexpr Real kM = 1.3;

}  // namespace

TEST_CASE("fixed plane wave: Lagrangian and residual") {
  const SpinorField psi = SpinorField::plane_wave(kPsi, kP);
  const GaugeField a = constant_gauge_field(kA, kE);
  const Complex lag = spinor_lagrangian(psi, a, kM, kX);
  CHECK(near(lag, Complex(34.648125, 0), 1e-12));

  const DiracSpinor res = spinor_dirac_residual(psi.jet(kX), a.at(kX), kE, kM);
  const DiracSpinor expected(Complex(0.6950881092612737, -0.5645997102935745),
                             Complex(-1.0134481596978802, 2.118915778789941),
                             Complex(-0.17968366447277928, 0.8219002559444994),
                             Complex(2.6452098700430287, -9.3656881617651));
  CHECK(near(res, expected, 1e-12));

  const TrinomialBasis b = canonical_basis();
  const StructureTensors s = structure_constants(b);
  const VectorField g = g_field(psi, b);
  CHECK(near(vector_lagrangian(g, a, kM, s, kX), lag, 1e-12));
  CHECK(near(vector_dirac_residual(g, a, kM, s, kX), FourVectorC{g_vector(res, b).conjugate()}, 1e-12));
}

TEST_CASE("spinor and vector forms agree in moved frames") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    Rng rng(31, 1, t);
    const TrinomialBasis b = random_basis(rng);
    const StructureTensors s = structure_constants(b);
    const SpinorField psi = random_spinor_field(rng, 2);
    const GaugeField a = random_gauge_field(rng, 1, 0.8);
    const VectorField g = g_field(psi, b);
    const FourVectorR x = random_point(rng);
    const Complex ls = spinor_lagrangian(psi, a, 0.9, x);
    CHECK(std::abs(ls - vector_lagrangian(g, a, 0.9, s, x)) <= 1e-10 * (1 + std::abs(ls)));

    const auto [bf, nf] = split_real_imag(g);
    const RealFormResidual rf = real_form_residual(bf, nf, constant_gauge_field(FourVectorR(a.at(x).real()), a.e),
                                                   0.9, s, x);
    const FourVectorC vr = vector_dirac_residual(g, constant_gauge_field(FourVectorR(a.at(x).real()), a.e), 0.9, s, x);
    CHECK(max_abs(rf.res_B + kI * rf.res_N - vr) <= 1e-10 * (1 + max_abs(vr)));
  }
}

TEST_CASE("solutions satisfy every form") {
  Rng rng(7, 7);
  const TrinomialBasis b = random_basis(rng);
  const StructureTensors s = structure_constants(b);
  const Real m = 1.1;
  const SpinorField free = random_on_shell_field(rng, m, 3);
  const VectorField g = g_field(free, b);
  const FourVectorR x = random_point(rng);
  CHECK(max_abs(spinor_dirac_residual(free.jet(x), FourVectorC{}, 0.0, m)) < 1e-10);
  CHECK(max_abs(vector_dirac_residual(g.jet(x), FourVectorC{}, 0.0, m, s)) < 1e-10);
  const SelfDualResidual sd = selfdual_residual(g, m, s, x);
  CHECK(std::abs(sd.divergence) < 1e-10);
  CHECK(max_abs(sd.dual) < 1e-10);

  const FourVectorR a0(0.2, -0.1, 0.4, 0.3);
  const SpinorField gauged = gauged_plane_wave(random_momentum(rng, m), m, Eigen::Vector2cd(1, Complex(0, 1)), a0, 0.6);
  const GaugeField a = constant_gauge_field(a0, 0.6);
  CHECK(max_abs(spinor_dirac_residual(gauged.jet(x), a.at(x), a.e, m)) < 1e-10);
  const auto [bf, nf] = split_real_imag(g_field(gauged, b));
  const RealFormResidual rf = real_form_residual(bf, nf, a, m, s, x);
  CHECK(max_abs(rf.res_B) < 1e-10);
  CHECK(max_abs(rf.res_N) < 1e-10);
  const PrimedFormResidual pf = primed_form_residual(bf.jet(x), nf.jet(x), a.at(x), a.e, m, s);
  CHECK(std::abs(pf.div_N) < 1e-10);
  CHECK(std::abs(pf.div_B) < 1e-10);
  CHECK(max_abs(pf.duality) < 1e-10);
}

TEST_CASE("wrong mass is detected") {
  Rng rng(8, 1);
  const StructureTensors s = structure_constants(canonical_basis());
  const SpinorField free = random_on_shell_field(rng, 1.0, 2);
  const VectorField g = g_field(free, canonical_basis());
  const FourVectorR x = random_point(rng);
  CHECK(max_abs(vector_dirac_residual(g.jet(x), FourVectorC{}, 0.0, 1.5, s)) > 1e-3);
  const SelfDualResidual sd = selfdual_residual(g, 1.5, s, x);
  CHECK(std::max(std::abs(sd.divergence), max_abs(sd.dual)) > 1e-3);
}

TEST_CASE("field strength identities") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    Rng rng(44, 2, t);
    const StructureTensors s = structure_constants(random_basis(rng));
    const VectorField g = random_vector_field(rng, 2);
    const FourVectorR x = random_point(rng);
    CHECK(bianchi_residual(field_strength(g, 0.8, s), 0.8, s, x) < 1e-9);
    const ChernSimons cs = chern_simons_check(g, 0.8, s, x);
    const Real scale = 1 + std::abs(cs.lhs);
    CHECK(std::abs(cs.lhs - cs.rhs) < 1e-9 * scale);
    CHECK(std::abs(cs.lhs - cs.rhs_real) < 1e-9 * scale);
    // The opposite sign of the mass term does not close.
    CHECK(std::abs(cs.lhs - cs.rhs_real_plus_mass) > 1e-3 * scale);
  }
}

TEST_CASE("field strength is built from the self-dual definition") {
  Rng rng(2, 2);
  const StructureTensors s = structure_constants(canonical_basis());
  const VectorField g = random_vector_field(rng, 2);
  const FourVectorR x = random_point(rng);
  const Matrix4C direct = field_strength_at(g.jet(x), 0.5, s);
  const FieldStrength fs = field_strength(g, 0.5, s);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      CHECK(std::abs(fs.G[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)](x) - direct(mu, nu)) < 1e-12);
      CHECK(std::abs(direct(mu, nu) + direct(nu, mu)) < 1e-12);
    }
}
