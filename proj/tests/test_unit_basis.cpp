#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <numbers>

#include "bqdirac/gamma.hpp"
#include "bqdirac/generators.hpp"
#include "bqdirac/unit_basis.hpp"

using namespace bqtest;

TEST_CASE("canonical basis satisfies every relation exactly") {
  const TrinomialBasis b = canonical_basis();
  const ValidationReport rep = validate_basis(b, 0.0);
  CHECK(rep.entries.size() == 6);
  for (const auto& e : rep.entries) {
    INFO(e.label);
    CHECK(e.residual == 0.0);
  }
  CHECK(rep.passed());
  CHECK_THROWS_AS(rep.residual("bogus"), std::out_of_range);
}

TEST_CASE("null basis of the canonical frame") {
  const NullBasis n = null_basis(canonical_basis());
  CHECK(n.r == DiracSpinor(1, 0, 1, 0));
  CHECK(n.l == DiracSpinor(1, 0, -1, 0));
  CHECK(n.k_plus == FourVectorR(0.5, 0, 0, 0.5));
  CHECK(n.k_minus == FourVectorR(0.5, 0, 0, -0.5));
  CHECK(validate_null_basis(n, 0.0).max_residual() == 0.0);
}

TEST_CASE("a spoiled basis is detected") {
  TrinomialBasis b = canonical_basis();
  b.phi *= 2.0;
  const ValidationReport rep = validate_basis(b, 1e-10);
  CHECK_FALSE(rep.passed());
  CHECK(rep.residual("normalization") > 0.5);
}

TEST_CASE("representation change") {
  const TrinomialBasis b = change_representation(canonical_basis(), 2.0);
  CHECK(near(b.k, FourVectorR(17.0 / 8, 0, 0, 15.0 / 8)));
  CHECK(near(b.j, FourVectorR(15.0 / 8, 0, 0, 17.0 / 8)));
  CHECK(validate_basis(b, 1e-12).passed());
  CHECK(approx_equal(change_representation(canonical_basis(), 1.0), canonical_basis()));
  CHECK_THROWS_AS(change_representation(canonical_basis(), 0.0), ZeroParameter);

  const Complex a = std::polar(1.3, 0.7);
  const NullBasis n0 = null_basis(canonical_basis());
  const NullBasis n1 = null_basis(change_representation(canonical_basis(), a));
  CHECK(near(n1.r, DiracSpinor{std::conj(a) * n0.r}));
  CHECK(near(n1.l, DiracSpinor{n0.l / a}));
}

TEST_CASE("spinor and vector Lorentz maps") {
  const Matrix4R w = boost_generator(1, 0.8);
  const Matrix4R lam = vector_lorentz(w);
  CHECK(near(lam.transpose() * metric() * lam, metric()));
  CHECK(lam(0, 0) == doctest::Approx(std::cosh(0.8)));

  const Matrix4C s = spinor_lorentz(w);
  const Matrix4C inv = s.inverse();
  for (int mu = 0; mu < 4; ++mu) {
    Matrix4C rhs = Matrix4C::Zero();
    for (int nu = 0; nu < 4; ++nu) rhs += lam(mu, nu) * gamma(nu);
    CHECK(near(inv * gamma(mu) * s, rhs));
  }
  // A full turn is -1 on spinors.
  CHECK(near(spinor_lorentz(rotation_generator(3, 2 * std::numbers::pi)), Matrix4C(-Matrix4C::Identity()), 1e-12));

  Matrix4R bad = Matrix4R::Zero();
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(boost_basis(canonical_basis(), bad), std::invalid_argument);
}

TEST_CASE("moved bases stay valid") {
  for (int t = 0; t < 20; ++t) {
    Rng rng(3, 11, static_cast<std::uint64_t>(t));
    const TrinomialBasis b = random_basis(rng);
    CHECK(validate_basis(b, 1e-10).passed());
    CHECK(validate_null_basis(null_basis(b), 1e-10).passed());
  }
}
