#include "bqdirac/unit_basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "bqdirac/gamma.hpp"

namespace bqdirac {

bool ValidationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [this](const NamedResidual& e) { return e.residual <= tol; });
}

Real ValidationReport::max_residual() const {
  Real m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.residual);
  return m;
}

Real ValidationReport::residual(const std::string& label) const {
  for (const auto& e : entries)
    if (e.label == label) return e.residual;
  throw std::out_of_range("no residual labelled " + label);
}

TrinomialBasis canonical_basis() {
  TrinomialBasis b;
  b.phi = DiracSpinor(1.0, 0.0, 0.0, 0.0);
  b.f = DiracSpinor(0.0, 0.0, kI, 0.0);
  b.j = FourVectorR(0.0, 0.0, 0.0, 1.0);
  b.k = FourVectorR(1.0, 0.0, 0.0, 0.0);
  return b;
}

namespace {

// Running max of |value - expected|.
struct MaxAbs {
  Real value = 0.0;
  void add(Complex got, Complex want) { value = std::max(value, std::abs(got - want)); }
  template <typename Derived>
  void add(const Eigen::MatrixBase<Derived>& diff) {
    value = std::max(value, max_abs(diff));
  }
};

}  // namespace

ValidationReport validate_basis(const TrinomialBasis& b, Real tol) {
  const Rank4Tensor& eps = epsilon_tensor();
  const Rank4Tensor& t = t_tensor();
  const FourVectorC j = complexify(b.j);
  const FourVectorC k = complexify(b.k);
  const auto jl = lower(j);
  const auto kl = lower(k);
  const Matrix4C jslash_i = kI * slash(j);
  const SpinorRow phibar = dirac_bar(b.phi);
  const SpinorRow fbar = dirac_bar(b.f);

  ValidationReport rep;
  rep.tol = tol;

  MaxAbs jslash_pair;
  jslash_pair.add(jslash_i * b.f - b.phi);
  jslash_pair.add(jslash_i * b.phi - b.f);
  for (int mu = 0; mu < 4; ++mu) {
    jslash_pair.add(-(phibar * (kI * gamma(mu)) * b.f).value(), j(mu));
    jslash_pair.add((fbar * (kI * gamma(mu)) * b.phi).value(), j(mu));
  }
  rep.entries.push_back({"jslash_pair", jslash_pair.value});

  MaxAbs normalization;
  normalization.add((phibar * b.phi).value(), 1.0);
  normalization.add((fbar * b.f).value(), -1.0);
  normalization.add(minkowski_dot(j, j), -1.0);
  normalization.add((phibar * b.f).value(), 0.0);
  normalization.add((fbar * b.phi).value(), 0.0);
  normalization.add(minkowski_dot(j, current(b.phi, b.phi)), 0.0);
  normalization.add(minkowski_dot(j, current(b.f, b.f)), 0.0);
  rep.entries.push_back({"normalization", normalization.value});

  MaxAbs k_current;
  k_current.add(current(b.phi, b.phi) - k);
  k_current.add(current(b.f, b.f) - k);
  k_current.add(minkowski_dot(k, k), 1.0);
  k_current.add(minkowski_dot(k, j), 0.0);
  rep.entries.push_back({"k_current", k_current.value});

  MaxAbs kslash;
  kslash.add(slash(k) * b.f + b.f);
  kslash.add(slash(k) * b.phi - b.phi);
  rep.entries.push_back({"kslash", kslash.value});

  MaxAbs two_gamma;
  MaxAbs three_gamma;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      const Matrix4C gg = gamma(m) * gamma(n);
      Complex ekj = 0;
      for (int l = 0; l < 4; ++l)
        for (int r = 0; r < 4; ++r) ekj += eps(m, n, l, r) * kl(l) * jl(r);
      const Complex rhs_a = metric()(m, n) + kI * ekj;
      two_gamma.add((phibar * gg * b.phi).value(), rhs_a);
      two_gamma.add(-(fbar * gg * b.f).value(), rhs_a);
      const Complex rhs_b = kI * (k(m) * j(n) - j(m) * k(n));
      two_gamma.add((phibar * gg * b.f).value(), rhs_b);
      two_gamma.add((fbar * gg * b.phi).value(), rhs_b);

      for (int l = 0; l < 4; ++l) {
        const Matrix4C ggg = gg * gamma(l);
        Complex ej = 0, tk = 0, ek = 0, tj = 0;
        for (int r = 0; r < 4; ++r) {
          ej += eps(m, n, l, r) * jl(r);
          tk += t(m, n, l, r) * kl(r);
          ek += eps(m, n, l, r) * kl(r);
          tj += t(m, n, l, r) * jl(r);
        }
        const Complex rhs_c = kI * ej + tk;
        three_gamma.add((phibar * ggg * b.phi).value(), rhs_c);
        three_gamma.add((fbar * ggg * b.f).value(), rhs_c);
        const Complex rhs_d = ek - kI * tj;
        three_gamma.add(-(phibar * ggg * b.f).value(), rhs_d);
        three_gamma.add((fbar * ggg * b.phi).value(), rhs_d);
      }
    }
  }
  rep.entries.push_back({"two_gamma", two_gamma.value});
  rep.entries.push_back({"three_gamma", three_gamma.value});
  return rep;
}

NullBasis null_basis(const TrinomialBasis& b) {
  NullBasis n;
  n.r = DiracSpinor{b.phi - kI * b.f};
  n.l = DiracSpinor{b.phi + kI * b.f};
  n.k_plus = FourVectorR{0.5 * (b.k + b.j)};
  n.k_minus = FourVectorR{0.5 * (b.k - b.j)};
  return n;
}

ValidationReport validate_null_basis(const NullBasis& n, Real tol) {
  ValidationReport rep;
  rep.tol = tol;
  MaxAbs null_norms;
  null_norms.add(bilinear(n.r, n.l), 2.0);
  null_norms.add(bilinear(n.l, n.r), 2.0);
  null_norms.add(minkowski_dot(n.k_plus, n.k_plus), 0.0);
  null_norms.add(minkowski_dot(n.k_minus, n.k_minus), 0.0);
  null_norms.add(minkowski_dot(n.k_plus, n.k_minus), 0.5);
  rep.entries.push_back({"null_norms", null_norms.value});

  const FourVectorR k{n.k_plus + n.k_minus};
  MaxAbs null_slash;
  null_slash.add(slash(k) * n.r - n.l);
  null_slash.add(slash(n.k_minus) * n.r - n.l);
  null_slash.add(slash(n.k_plus) * n.r);
  null_slash.add(slash(k) * n.l - n.r);
  null_slash.add(slash(n.k_plus) * n.l - n.r);
  null_slash.add(slash(n.k_minus) * n.l);
  rep.entries.push_back({"null_slash", null_slash.value});
  return rep;
}

TrinomialBasis change_representation(const TrinomialBasis& b, Complex a) {
  if (a == Complex(0.0)) throw ZeroParameter("representation parameter a must be nonzero");
  const Complex abar = std::conj(a);
  const Complex plus = 0.5 * (abar + 1.0 / a);
  const Complex minus = 0.5 * (abar - 1.0 / a);
  const Real s = std::norm(a);
  const Real cp = 0.5 * (s + 1.0 / s);
  const Real cm = 0.5 * (s - 1.0 / s);

  TrinomialBasis out;
  out.f = DiracSpinor{plus * b.f + kI * minus * b.phi};
  out.phi = DiracSpinor{plus * b.phi - kI * minus * b.f};
  out.j = FourVectorR{cp * b.j + cm * b.k};
  out.k = FourVectorR{cp * b.k + cm * b.j};
  return out;
}

Matrix4R rotation_generator(int axis, Real angle) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("rotation axis must be 1..3");
  const int a = axis % 3 + 1;
  const int c = (axis + 1) % 3 + 1;
  Matrix4R w = Matrix4R::Zero();
  w(a, c) = angle;
  w(c, a) = -angle;
  return w;
}

Matrix4R boost_generator(int axis, Real rapidity) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("boost axis must be 1..3");
  Matrix4R w = Matrix4R::Zero();
  w(0, axis) = rapidity;
  w(axis, 0) = -rapidity;
  return w;
}

Matrix4R vector_lorentz(const Matrix4R& omega) {
  const Matrix4R mixed = metric() * omega;
  return mixed.exp();
}

Matrix4C spinor_lorentz(const Matrix4R& omega) {
  Matrix4C gen = Matrix4C::Zero();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      if (omega(m, n) == 0.0) continue;
      const Matrix4C sigma = 0.5 * kI * (gamma(m) * gamma(n) - gamma(n) * gamma(m));
      gen += omega(m, n) * sigma;
    }
  const Matrix4C arg = (-0.25 * kI) * gen;
  return arg.exp();
}

TrinomialBasis boost_basis(const TrinomialBasis& b, const Matrix4R& omega) {
  if (max_abs(omega + omega.transpose()) > 0.0) throw std::invalid_argument("omega must be antisymmetric");
  const Matrix4C s = spinor_lorentz(omega);
  const Matrix4R lam = vector_lorentz(omega);
  TrinomialBasis out;
  out.phi = DiracSpinor{s * b.phi};
  out.f = DiracSpinor{s * b.f};
  out.j = FourVectorR{lam * b.j};
  out.k = FourVectorR{lam * b.k};
  return out;
}

bool approx_equal(const TrinomialBasis& a, const TrinomialBasis& b, Real tol) {
  return max_abs(a.phi - b.phi) <= tol && max_abs(a.f - b.f) <= tol && max_abs(a.j - b.j) <= tol &&
         max_abs(a.k - b.k) <= tol;
}

}  // namespace bqdirac
