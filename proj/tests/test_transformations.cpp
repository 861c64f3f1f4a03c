#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <numbers>

#include "bqdirac/gamma.hpp"
#include "bqdirac/generators.hpp"
#include "bqdirac/transformations.hpp"

using namespace bqtest;

namespace {

const DiracSpinor kPsi(Complex(1, 2), Complex(3, -1), Complex(0.5, 0.25), Complex(-1, 4));
const FourVectorC kG(Complex(0.5, 2), Complex(3, 4), Complex(-1, 1), Complex(1, 0.25));

}  // namespace

TEST_CASE("unit biquaternion validation") {
  CHECK_NOTHROW(UnitBiquaternion(FourVectorC(kI, 0, 0, 0)));
  CHECK_THROWS_AS(UnitBiquaternion(FourVectorC(1, 0, 0, 0)), NonUnitQ);
  CHECK_NOTHROW(UnitBiquaternion(FourVectorC(1, 0, 0, 0), QNorm::PlusOne));
  CHECK_THROWS_AS(UnitBiquaternion(FourVectorC(0, 0, 0, 0)), NonUnitQ);
  const UnitBiquaternion q(FourVectorC(Complex(0, 1.25), Complex(0, 0.75), 0, 0));
  CHECK(near(minkowski_dot(q.conj().q(), q.conj().q()), Complex(-1)));
}

TEST_CASE("maps for q = i k") {
  const StructureTensors s = structure_constants(canonical_basis());
  const UnitBiquaternion q(FourVectorC(kI, 0, 0, 0));
  CHECK(near(s_left(q, kG, s), FourVectorC(Complex(0.25, -1), Complex(-1, 1), Complex(-3, -4), Complex(2, -0.5))));
  CHECK(near(s_right(q, kG, s), FourVectorC(Complex(0.25, -1), Complex(1, -1), Complex(3, 4), Complex(2, -0.5))));
  CHECK(near(lorentz_from_q(q, s), Matrix4R(Eigen::Vector4d(1, -1, -1, 1).asDiagonal())));
  CHECK(near(FourVectorC{s1_matrix(q, s) * kG}, s_right(q, kG, s)));
  CHECK(near(FourVectorC{s2_matrix(q, s) * kG}, s_left(q, kG, s)));
  CHECK(near(apply_c5(s, kG), FourVectorC(Complex(1, 0.25), Complex(-1, -1), Complex(4, -3), Complex(0.5, 2))));
}

TEST_CASE("induced Lorentz maps") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    Rng rng(17, 5, t);
    const StructureTensors s = structure_constants(random_basis(rng));
    const UnitBiquaternion q1 = random_unit_q(rng), q2 = random_unit_q(rng);
    const Matrix4R l1 = lorentz_from_q(q1, s, 1e-9);
    CHECK(max_abs(l1.transpose() * metric() * l1 - metric()) <= 1e-10 * (1 + max_abs(l1) * max_abs(l1)));
    CHECK(l1.determinant() > 0);
    CHECK(l1(0, 0) >= 1 - 1e-12);
    const FourVectorC g = random_complex_vector(rng);
    CHECK(std::abs(minkowski_dot(s_left(q1, g, s), s_left(q1, g, s)) - minkowski_dot(g, g)) <
          1e-10 * (1 + std::pow(max_abs(q1.q()), 4)));
    const CovarianceResidual cv = covariance_check(q1, s);
    const Real scale = 1 + std::pow(max_abs(q1.q()), 4);
    CHECK(cv.c / scale < 1e-9);
    CHECK(cv.c_check / scale < 1e-9);
    const Matrix4C prod = lorentz_from_q_complex(q1, s) * lorentz_from_q_complex(q2, s);
    const Matrix4C comp = lorentz_from_q_complex(UnitBiquaternion(otimes_check(q2.q(), q1.q(), s)), s);
    CHECK(max_abs(prod - comp) <= 1e-10 * (1 + max_abs(prod)));
  }
}

TEST_CASE("Lambda is real for complex angles") {
  const StructureTensors s = structure_constants(canonical_basis());
  const Complex th(0.4, 0.3);
  const UnitBiquaternion q(FourVectorC(kI * std::cos(th), std::sin(th), 0, 0));
  CHECK(max_abs(lorentz_from_q_complex(q, s).imag()) < 1e-12);
  const Matrix4R lam = lorentz_from_q(q, s);
  CHECK(max_abs(lam.transpose() * metric() * lam - metric()) < 1e-12);

  StructureTensors broken = s;
  broken.c_check(0, 0, 0) += Complex(0, 0.1);
  CHECK_THROWS_AS(lorentz_from_q(q, broken), NonRealInput);
}

TEST_CASE("U(1) rotation of G") {
  const TrinomialBasis b = canonical_basis();
  const StructureTensors s = structure_constants(b);
  CHECK(near(vector_u1(kG, 0.3, s),
             FourVectorC(Complex(0.4037881928974681, 2.2061931849125513), Complex(3.1615296740381575, 3.5258257498410845),
                         Complex(-0.0687758691415874, 2.137417315770964),
                         Complex(0.3642960758029269, 0.38659422561207124))));
  CHECK(near(vector_u1(kG, 0.3, s), g_vector(DiracSpinor{std::exp(0.3 * kI) * kPsi}, b)));
  CHECK(near(vector_u1(kG, std::numbers::pi / 2, s), FourVectorC{kI * apply_c5(s, kG)}));
  CHECK(near(vector_u1(kG, 0.0, s), kG));
  const Matrix4C u = u1_matrix(0.3, s);
  Matrix4C p = Matrix4C::Identity();
  for (int n = 1; n <= 8; ++n) {
    p = p * u;
    CHECK(near(p, u1_matrix(0.3 * n, s), 1e-12));
  }
  const HalfSpinorPair r = vector_u1_real(to_vectors(kPsi, b), 0.3, b);
  const HalfSpinorPair d = to_vectors(DiracSpinor{std::exp(0.3 * kI) * kPsi}, b);
  CHECK(near(r.B, d.B));
  CHECK(near(r.N, d.N));
}

TEST_CASE("local gauge transformation") {
  Rng rng(3, 3);
  Jet<DiracSpinor> psi;
  psi.value = kPsi;
  for (auto& d : psi.d) d = random_spinor(rng);
  const FourVectorC a = complexify(random_real_vector(rng));
  Jet<Complex> alpha;
  alpha.value = 0.7;
  alpha.d = {0.1, -0.3, 0.2, 0.5};
  const GaugedSpinor t = u1_gauge(psi, a, 0.5, alpha);
  CHECK(near(t.A, FourVectorC{a + FourVectorC(0.2, 0.6, -0.4, -1.0)}));
  CHECK(near(spinor_lagrangian(t.psi, t.A, 0.5, 1.2), spinor_lagrangian(psi, a, 0.5, 1.2), 1e-12));
  CHECK_THROWS_AS(u1_gauge(psi, a, 0.0, alpha), ZeroParameter);
}

TEST_CASE("chiral rotation") {
  const TrinomialBasis b = canonical_basis();
  CHECK(near(chiral(kPsi, 0.0), kPsi));
  CHECK(near(chiral(kPsi, std::numbers::pi), DiracSpinor{-kPsi}));
  CHECK(near(chiral_vector(kG, 0.4), g_vector(chiral(kPsi, 0.4), b)));
  CHECK(near(mass_form(kG), Complex(-2.3125)));
  CHECK(near(mass_form(kG), bilinear(kPsi, kPsi)));
  CHECK(std::abs(mass_form(chiral_vector(kG, std::numbers::pi / 4)) - mass_form(kG)) > 1e-3);
  CHECK(near(mass_form(vector_u1(kG, 1.1, structure_constants(b))), mass_form(kG)));
}

TEST_CASE("representation change of G") {
  const TrinomialBasis b = canonical_basis();
  const StructureTensors s = structure_constants(b);
  const FourVectorC gt = representation_change_vector(kG, 2.0, s);
  CHECK(near(gt, FourVectorC(Complex(1.375, 2.6875), Complex(3, 4.25), Complex(1.75, -1), Complex(1.625, 1.8125))));
  CHECK(near(gt, g_vector(kPsi, change_representation(b, 2.0))));
  CHECK(near(representation_change_vector(kG, 1.0, s), kG));
  CHECK_THROWS_AS(representation_change_vector(kG, 0.0, s), ZeroParameter);
}
