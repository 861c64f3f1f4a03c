#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "bqdirac/gamma.hpp"

using namespace bqtest;

TEST_CASE("clifford relation and gamma5") {
  const Matrix4C id = Matrix4C::Identity();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4C anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      CHECK(anti == Matrix4C(2.0 * metric()(mu, nu) * id));
    }
    CHECK(gamma5() * gamma(mu) == Matrix4C(-gamma(mu) * gamma5()));
  }
  CHECK(gamma5() * gamma5() == id);
  CHECK(gamma(0) == Matrix4C(Eigen::Vector4cd(1, 1, -1, -1).asDiagonal()));
}

TEST_CASE("gamma index is range checked") {
  CHECK_THROWS_AS(gamma(4), IndexOutOfRange);
  CHECK_THROWS_AS(gamma(-1), IndexOutOfRange);
}

TEST_CASE("epsilon and t tensors") {
  const Rank4Tensor& eps = epsilon_tensor();
  const Rank4Tensor& t = t_tensor();
  CHECK(eps(0, 1, 2, 3) == 1.0);
  CHECK(eps(3, 2, 1, 0) == 1.0);
  CHECK(eps(1, 0, 2, 3) == -1.0);
  CHECK(eps(0, 0, 2, 3) == 0.0);
  CHECK(t(0, 1, 0, 1) == 1.0);
  CHECK(t(0, 0, 1, 1) == -1.0);
  CHECK(t(0, 0, 0, 0) == 1.0);
  CHECK(t(1, 1, 2, 2) == 1.0);

  const Rank4Tensor e2 = epsilon_from_traces();
  const Rank4Tensor t2 = t_from_traces();
  for (std::size_t i = 0; i < Rank4Tensor::kSize; ++i) {
    CHECK(std::abs(e2.data()[i] - eps.data()[i]) < 1e-15);
    CHECK(std::abs(t2.data()[i] - t.data()[i]) < 1e-15);
  }
  CHECK(lower_all(eps)(0, 1, 2, 3) == -1.0);
}

TEST_CASE("bilinears, currents and slash") {
  const DiracSpinor a(Complex(1, 2), Complex(0, -1), Complex(0.5, 0), Complex(2, 1));
  const DiracSpinor b(Complex(-1, 0), Complex(3, 1), Complex(0, 2), Complex(1, -1));
  const Complex direct = (a.adjoint() * gamma(0) * gamma(2) * b).value();
  CHECK(near(bilinear(a, gamma(2), b), direct));
  CHECK(near(current(a, b)(2), direct));
  // bar(a) a = |a0|^2 + |a1|^2 - |a2|^2 - |a3|^2
  CHECK(near(bilinear(a, a), Complex(5 + 1 - 0.25 - 5)));
  CHECK(slash(FourVectorR(1, 0, 0, 0)) == gamma(0));
  CHECK(slash(FourVectorR(0, 1, 0, 0)) == Matrix4C(-gamma(1)));
}

TEST_CASE("index lowering and contraction") {
  const FourVectorR v(1, 2, 3, 4);
  CHECK(lower(v) == Eigen::Vector4d(1, -2, -3, -4));
  CHECK(minkowski_dot(v, v) == 1.0 - 4 - 9 - 16);
  const Rank3TensorC ej = contract_last(epsilon_tensor(), FourVectorR(0, 0, 0, 1));
  CHECK(ej(0, 1, 2) == Complex(-1.0));
  CHECK(require_real(FourVectorC(1, 2, 3, Complex(4, 1e-14)), 1e-10, "v") == FourVectorR(1, 2, 3, 4));
  CHECK_THROWS_AS(require_real(FourVectorC(1, 2, 3, Complex(4, 1e-3)), 1e-10, "v"), NonRealInput);
}
