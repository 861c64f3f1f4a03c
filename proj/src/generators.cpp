#include "bqdirac/generators.hpp"

#include <cmath>
#include <numbers>

namespace bqdirac {

DiracSpinor random_spinor(Rng& rng, Real scale) {
  return DiracSpinor(rng.complex(scale), rng.complex(scale), rng.complex(scale), rng.complex(scale));
}

FourVectorR random_real_vector(Rng& rng, Real scale) {
  return FourVectorR(rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale),
                     rng.uniform(-scale, scale));
}

FourVectorC random_complex_vector(Rng& rng, Real scale) {
  return FourVectorC(rng.complex(scale), rng.complex(scale), rng.complex(scale), rng.complex(scale));
}

FourVectorR random_point(Rng& rng, Real extent) { return random_real_vector(rng, extent); }

UnitBiquaternion random_unit_q(Rng& rng) {
  for (;;) {
    const FourVectorC v = random_complex_vector(rng);
    const Complex vv = minkowski_dot(v, v);
    if (std::abs(vv) < 0.5 * v.squaredNorm()) continue;
    return UnitBiquaternion(FourVectorC{kI * v / std::sqrt(vv)});
  }
}

Matrix4R random_lorentz_generator(Rng& rng, Real max_rapidity) {
  Matrix4R w = Matrix4R::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const Real x = a == 0 ? rng.uniform(-max_rapidity, max_rapidity) : rng.uniform(-1.0, 1.0) * std::numbers::pi;
      w(a, b) = x;
      w(b, a) = -x;
    }
  return w;
}

TrinomialBasis random_basis(Rng& rng) {
  const TrinomialBasis moved = boost_basis(canonical_basis(), random_lorentz_generator(rng));
  const Complex a = std::polar(rng.uniform(0.6, 1.6), rng.uniform(-std::numbers::pi, std::numbers::pi));
  return change_representation(moved, a);
}

DiracSpinor plane_wave_spinor(const FourVectorR& momentum, Real m, const Eigen::Vector2cd& chi) {
  const Real energy = momentum(0);
  Eigen::Matrix2cd sp;
  sp << Complex(momentum(3)), Complex(momentum(1), -momentum(2)), Complex(momentum(1), momentum(2)),
      Complex(-momentum(3));
  const Eigen::Vector2cd unit = chi.normalized();
  const Eigen::Vector2cd lower_half = sp * unit / (energy + m);
  const Real norm = std::sqrt(energy + m);
  return DiracSpinor(norm * unit(0), norm * unit(1), norm * lower_half(0), norm * lower_half(1));
}

FourVectorR random_momentum(Rng& rng, Real m, Real max_p) {
  const Eigen::Vector3d p(rng.uniform(-max_p, max_p), rng.uniform(-max_p, max_p), rng.uniform(-max_p, max_p));
  return FourVectorR(std::sqrt(m * m + p.squaredNorm()), p(0), p(1), p(2));
}

SpinorField gauged_plane_wave(const FourVectorR& kinetic, Real m, const Eigen::Vector2cd& chi, const FourVectorR& a,
                              Real e) {
  return SpinorField::plane_wave(plane_wave_spinor(kinetic, m, chi), FourVectorR{kinetic - e * a});
}

SpinorField random_on_shell_field(Rng& rng, Real m, int n) {
  SpinorField out;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2cd chi(rng.complex(), rng.complex());
    const Complex amp = rng.complex();
    const FourVectorR p = random_momentum(rng, m);
    out += SpinorField::plane_wave(DiracSpinor{amp * plane_wave_spinor(p, m, chi)}, p);
  }
  return out;
}

SpinorField random_spinor_field(Rng& rng, int n, Real kscale) {
  std::vector<SpinorField::Term> terms;
  for (int i = 0; i < n; ++i) terms.push_back({random_spinor(rng), random_real_vector(rng, kscale)});
  return SpinorField(std::move(terms));
}

VectorField random_vector_field(Rng& rng, int n, Real kscale) {
  std::vector<VectorField::Term> terms;
  for (int i = 0; i < n; ++i) terms.push_back({random_complex_vector(rng), random_real_vector(rng, kscale)});
  return VectorField(std::move(terms));
}

GaugeField random_gauge_field(Rng& rng, int n, Real e, Real kscale) {
  const VectorField half = random_vector_field(rng, n, kscale);
  return GaugeField{half + half.conj(), e};
}

GaugeField constant_gauge_field(const FourVectorR& a, Real e) {
  return GaugeField{VectorField::constant(complexify(a)), e};
}

Jet<Complex> random_real_jet(Rng& rng, Real scale) {
  Jet<Complex> j;
  j.value = rng.uniform(-std::numbers::pi, std::numbers::pi);
  for (auto& d : j.d) d = rng.uniform(-scale, scale);
  return j;
}

}  // namespace bqdirac
