#include "bqdirac/spinor_vector.hpp"

#include "bqdirac/gamma.hpp"

namespace bqdirac {

HalfSpinorPair to_vectors(const DiracSpinor& psi, const TrinomialBasis& b) {
  FourVectorC B, N;
  for (int mu = 0; mu < 4; ++mu) {
    const Matrix4C ig = kI * gamma(mu);
    B(mu) = 0.5 * (bilinear(b.f, ig, psi) - bilinear(psi, ig, b.f));
    N(mu) = 0.5 * (bilinear(psi, ig, b.phi) - bilinear(b.phi, ig, psi));
  }
  return {require_real(B, kRealityTol, "B"), require_real(N, kRealityTol, "N")};
}

DiracSpinor half_spinor_b(const FourVectorR& B, const TrinomialBasis& b) {
  return DiracSpinor{kI * slash(B) * b.f};
}

DiracSpinor half_spinor_n(const FourVectorR& N, const TrinomialBasis& b) {
  return DiracSpinor{kI * slash(N) * b.phi};
}

DiracSpinor to_spinor(const HalfSpinorPair& pair, const TrinomialBasis& b) {
  return DiracSpinor{half_spinor_b(pair.B, b) + half_spinor_n(pair.N, b)};
}

DiracSpinor to_spinor(const FourVectorC& B, const FourVectorC& N, const TrinomialBasis& b) {
  return to_spinor(HalfSpinorPair{require_real(B, kRealityTol, "B"), require_real(N, kRealityTol, "N")}, b);
}

FourVectorC g_vector(const DiracSpinor& psi, const TrinomialBasis& b) {
  const DiracSpinor r{b.phi - kI * b.f};
  const DiracSpinor l{b.phi + kI * b.f};
  FourVectorC G;
  for (int mu = 0; mu < 4; ++mu) G(mu) = 0.5 * (bilinear(r, gamma(mu), psi) - bilinear(psi, gamma(mu), l));
  return G;
}

RLDecomposition rl_from_g(const FourVectorC& g, const TrinomialBasis& b) {
  const DiracSpinor r{b.phi - kI * b.f};
  const DiracSpinor l{b.phi + kI * b.f};
  RLDecomposition out;
  out.G = g;
  out.R = DiracSpinor{0.5 * slash(g) * l};
  out.L = DiracSpinor{-0.5 * slash(FourVectorC{g.conjugate()}) * r};
  return out;
}

RLDecomposition rl_decompose(const DiracSpinor& psi, const TrinomialBasis& b) {
  return rl_from_g(g_vector(psi, b), b);
}

VectorField g_field(const SpinorField& psi, const TrinomialBasis& b) {
  const DiracSpinor r{b.phi - kI * b.f};
  const DiracSpinor l{b.phi + kI * b.f};
  std::vector<VectorField::Term> terms;
  terms.reserve(2 * psi.terms().size());
  for (const auto& t : psi.terms()) {
    // G is real-linear: the Psi part keeps the wavevector, the bar(Psi) part flips it.
    FourVectorC direct, conjugate;
    for (int mu = 0; mu < 4; ++mu) {
      direct(mu) = 0.5 * bilinear(r, gamma(mu), t.coeff);
      conjugate(mu) = -0.5 * bilinear(t.coeff, gamma(mu), l);
    }
    terms.push_back({direct, t.p});
    terms.push_back({conjugate, FourVectorR{-t.p}});
  }
  return VectorField(std::move(terms));
}

Forms forms(const FourVectorR& v, const HalfSpinorPair& pair, const TrinomialBasis& b) {
  const DiracSpinor psi1 = half_spinor_b(pair.B, b);
  const DiracSpinor psi2 = half_spinor_n(pair.N, b);
  Forms out;
  out.q_v = minkowski_dot(v, v);
  out.q_1 = bilinear(psi1, psi1);
  out.q_2 = bilinear(psi2, psi2);
  const FourVectorC mixed{current(psi1, psi2) + current(psi2, psi1)};
  out.cubic = minkowski_dot(complexify(v), mixed);

  const Rank4Tensor eps_lower = lower_all(epsilon_tensor());
  Real acc = 0;
  for (int n = 0; n < 4; ++n)
    for (int l = 0; l < 4; ++l)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) acc += eps_lower(n, l, r, s) * b.k(s) * v(n) * pair.N(l) * pair.B(r);
  out.cubic_epsilon = 2.0 * acc;
  return out;
}

TrialityTriple ding_J(const TrialityTriple& x) {
  return TrialityTriple{x.pair.N, HalfSpinorPair{x.V, x.pair.B}};
}

DualResult dual_transform(const HalfSpinorPair& pair, Real m) {
  return DualResult{HalfSpinorPair{pair.N, FourVectorR{-pair.B}}, -m};
}

}  // namespace bqdirac
