#pragma once

#include "bqdirac/types.hpp"

namespace bqdirac {

/// Dirac-representation gamma matrix gamma^mu, mu in 0..3.
///
/// gamma^0 = diag(1,1,-1,-1); gamma^k = [[0, sigma_k], [-sigma_k, 0]].
/// This is the only place the convention is spelled out.
const Matrix4C& gamma(int mu);

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3.
const Matrix4C& gamma5();

/// Dirac conjugate psi^{*T} gamma^0.
SpinorRow dirac_bar(const DiracSpinor& psi);

/// bar(a) M b
inline Complex bilinear(const DiracSpinor& a, const Matrix4C& m, const DiracSpinor& b) {
  return (dirac_bar(a) * m * b).value();
}
inline Complex bilinear(const DiracSpinor& a, const DiracSpinor& b) {
  return (dirac_bar(a) * b).value();
}

/// The current bar(a) gamma^mu b as a contravariant vector.
FourVectorC current(const DiracSpinor& a, const DiracSpinor& b);

/// Feynman slash v_mu gamma^mu for a contravariant v.
Matrix4C slash(const FourVectorC& v);
inline Matrix4C slash(const FourVectorR& v) { return slash(complexify(v)); }

/// Levi-Civita symbol with eps^{0123} = +1 (all indices up).
const Rank4Tensor& epsilon_tensor();

/// eta^{mu nu} eta^{lam rho} + eta^{mu rho} eta^{nu lam} - eta^{mu lam} eta^{nu rho}.
const Rank4Tensor& t_tensor();

/// (i/4) tr(gamma^5 gamma^mu gamma^nu gamma^lam gamma^rho), evaluated by matrix products.
Rank4Tensor epsilon_from_traces();

/// (1/4) tr(gamma^mu gamma^nu gamma^lam gamma^rho), evaluated by matrix products.
Rank4Tensor t_from_traces();

/// T^{abc} = T^{abcd} v_d.
Rank3TensorC contract_last(const Rank4Tensor& t, const FourVectorC& v);
inline Rank3TensorC contract_last(const Rank4Tensor& t, const FourVectorR& v) {
  return contract_last(t, complexify(v));
}

/// Lower every index of a rank-4 tensor.
Rank4Tensor lower_all(const Rank4Tensor& t);

}  // namespace bqdirac
