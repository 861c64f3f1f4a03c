#include "bqdirac/gamma.hpp"

#include <algorithm>
#include <string>

namespace bqdirac {

namespace {

std::array<Matrix4C, 4> make_gammas() {
  using C = Complex;
  const C i = kI;
  std::array<Matrix4C, 4> g;
  g[0] << 1, 0, 0, 0,
          0, 1, 0, 0,
          0, 0, -1, 0,
          0, 0, 0, -1;
  // sigma_x
  g[1] << 0, 0, 0, 1,
          0, 0, 1, 0,
          0, -1, 0, 0,
          -1, 0, 0, 0;
  // sigma_y
  g[2] << C(0), C(0), C(0), -i,
          C(0), C(0), i, C(0),
          C(0), i, C(0), C(0),
          -i, C(0), C(0), C(0);
  // sigma_z
  g[3] << 0, 0, 1, 0,
          0, 0, 0, -1,
          -1, 0, 0, 0,
          0, 1, 0, 0;
  return g;
}

int permutation_sign(std::array<int, 4> p) {
  int sign = 1;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (p[a] == p[b]) return 0;
      if (p[a] > p[b]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

const Matrix4C& gamma(int mu) {
  static const std::array<Matrix4C, 4> g = make_gammas();
  if (mu < 0 || mu > 3) throw IndexOutOfRange("gamma index " + std::to_string(mu) + " outside 0..3");
  return g[static_cast<std::size_t>(mu)];
}

const Matrix4C& gamma5() {
  static const Matrix4C g5 = kI * gamma(0) * gamma(1) * gamma(2) * gamma(3);
  return g5;
}

SpinorRow dirac_bar(const DiracSpinor& psi) { return psi.adjoint() * gamma(0); }

FourVectorC current(const DiracSpinor& a, const DiracSpinor& b) {
  const SpinorRow abar = dirac_bar(a);
  FourVectorC out;
  for (int mu = 0; mu < 4; ++mu) out(mu) = (abar * gamma(mu) * b).value();
  return out;
}

Matrix4C slash(const FourVectorC& v) {
  const auto vl = lower(v);
  Matrix4C out = Matrix4C::Zero();
  for (int mu = 0; mu < 4; ++mu) out += vl(mu) * gamma(mu);
  return out;
}

const Rank4Tensor& epsilon_tensor() {
  static const Rank4Tensor eps = [] {
    Rank4Tensor e;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) e(a, b, c, d) = permutation_sign({a, b, c, d});
    return e;
  }();
  return eps;
}

const Rank4Tensor& t_tensor() {
  static const Rank4Tensor t = [] {
    const Matrix4R& eta = metric();
    Rank4Tensor out;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d)
            out(a, b, c, d) = eta(a, b) * eta(c, d) + eta(a, d) * eta(b, c) - eta(a, c) * eta(b, d);
    return out;
  }();
  return t;
}

Rank4Tensor epsilon_from_traces() {
  Rank4Tensor out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const Complex tr = (gamma5() * gamma(a) * gamma(b) * gamma(c) * gamma(d)).trace();
          out(a, b, c, d) = (kI / 4.0 * tr).real();
        }
  return out;
}

Rank4Tensor t_from_traces() {
  Rank4Tensor out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          out(a, b, c, d) = ((gamma(a) * gamma(b) * gamma(c) * gamma(d)).trace() / 4.0).real();
  return out;
}

Rank3TensorC contract_last(const Rank4Tensor& t, const FourVectorC& v) {
  const auto vl = lower(v);
  Rank3TensorC out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        Complex s = 0;
        for (int d = 0; d < 4; ++d) s += t(a, b, c, d) * vl(d);
        out(a, b, c) = s;
      }
  return out;
}

Rank4Tensor lower_all(const Rank4Tensor& t) {
  Rank4Tensor out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          out(a, b, c, d) = metric_diag(a) * metric_diag(b) * metric_diag(c) * metric_diag(d) * t(a, b, c, d);
  return out;
}

}  // namespace bqdirac
