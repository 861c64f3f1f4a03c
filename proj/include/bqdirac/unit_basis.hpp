#pragma once

#include <string>
#include <vector>

#include "bqdirac/types.hpp"

namespace bqdirac {

/// Trinomial unit-basis (phi, f, j) and the derived timelike unit k.
struct TrinomialBasis {
  DiracSpinor phi;
  DiracSpinor f;
  FourVectorR j;
  FourVectorR k;
};

/// Pure-spinor null basis: r, l with bar(r) l = 2 and k_pm = (k +- j)/2.
struct NullBasis {
  DiracSpinor r;
  DiracSpinor l;
  FourVectorR k_plus;
  FourVectorR k_minus;
};

/// One labelled max-abs residual.
struct NamedResidual {
  std::string label;
  Real residual = 0.0;
};

struct ValidationReport {
  std::vector<NamedResidual> entries;
  Real tol = 0.0;

  bool passed() const;
  Real max_residual() const;
  /// Residual for a label; throws std::out_of_range for an unknown label.
  Real residual(const std::string& label) const;
};

/// phi = (1,0,0,0), f = (0,0,i,0), j = (0,0,0,1), k = (1,0,0,0).
TrinomialBasis canonical_basis();

/// Evaluate the defining identities of a trinomial basis.
///
/// Labels: "jslash_pair" (phi, f, j relations), "normalization" (norms and
/// orthogonality), "k_current" (k as the current of phi and f; k.k = 1,
/// k.j = 0), "kslash" (k-slash eigen-relations), "two_gamma" and
/// "three_gamma" (bilinears with two and three gamma matrices). Both
/// three-gamma members use the order g^mu g^nu g^lam.
ValidationReport validate_basis(const TrinomialBasis& b, Real tol);

NullBasis null_basis(const TrinomialBasis& b);

/// Labels "null_norms" and "null_slash".
ValidationReport validate_null_basis(const NullBasis& n, Real tol);

/// Representation change with nonzero complex parameter a:
///   f~   = (conj(a) + 1/a)/2 f + i (conj(a) - 1/a)/2 phi
///   phi~ = (conj(a) + 1/a)/2 phi - i (conj(a) - 1/a)/2 f
///   j~, k~ mixed by (a conj(a) +- 1/(a conj(a)))/2.
TrinomialBasis change_representation(const TrinomialBasis& b, Complex a);

/// Antisymmetric generator omega_{mu nu} (both indices down) of a rotation
/// by `angle` in the plane orthogonal to spatial `axis` (1..3).
Matrix4R rotation_generator(int axis, Real angle);

/// Antisymmetric generator of a boost along spatial `axis` (1..3).
Matrix4R boost_generator(int axis, Real rapidity);

/// Lambda = exp(omega^mu_nu).
Matrix4R vector_lorentz(const Matrix4R& omega);

/// S = exp(-(i/4) omega_{mu nu} sigma^{mu nu}), sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu].
/// Satisfies S^{-1} gamma^mu S = Lambda^mu_nu gamma^nu.
Matrix4C spinor_lorentz(const Matrix4R& omega);

/// Act with a Lorentz transformation: spinors by S, vectors by Lambda.
/// Throws std::invalid_argument if omega is not antisymmetric.
TrinomialBasis boost_basis(const TrinomialBasis& b, const Matrix4R& omega);

/// Componentwise comparison within tol.
bool approx_equal(const TrinomialBasis& a, const TrinomialBasis& b, Real tol = 1e-12);

}  // namespace bqdirac
