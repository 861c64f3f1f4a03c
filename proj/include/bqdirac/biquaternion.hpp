#pragma once

#include <array>

#include "bqdirac/exp_sum.hpp"
#include "bqdirac/types.hpp"
#include "bqdirac/unit_basis.hpp"

namespace bqdirac {

/// Structure constants of the complexified biquaternion algebra of a basis:
///   c^{mu nu lam}  = (t^{mu nu lam rho} - i eps^{mu nu lam rho}) k_rho
///   cc^{mu nu lam} = (t^{mu nu lam rho} - i eps^{mu nu lam rho}) j_rho
///   c5^{mu lam}    = -c^{nu lam mu} j_nu
/// All indices up.
struct StructureTensors {
  Rank3TensorC c;
  Rank3TensorC c_check;
  Matrix4C c5;
  TrinomialBasis basis;
};

/// Throws InvalidBasis if validate_basis(b, tol) fails.
StructureTensors structure_constants(const TrinomialBasis& b, Real tol = 1e-10);

struct StructureRelationResidual {
  Real symmetry = 0;  // c^{mu nu lam} = c^{lam nu mu}*, same for cc; c5 from c and from cc; c5 antisymmetric
  Real clifford = 0;  // c eta c* + (nu <-> rho) = 2 eta eta, cc eta cc* + (nu <-> rho) = -2 eta eta
  Real c5 = 0;        // c5 eta c5 = eta; cc = -c eta c5 = c5* eta c
};

StructureRelationResidual structure_relations(const StructureTensors& s);

/// (G x H)^lam = G_mu c^{mu lam nu} H_nu
FourVectorC otimes(const FourVectorC& g, const FourVectorC& h, const StructureTensors& s);
/// (G x' H)^rho = G_mu cc^{mu rho nu} H_nu
FourVectorC otimes_check(const FourVectorC& g, const FourVectorC& h, const StructureTensors& s);

/// G o K = G_mu (t^{mu rho nu sigma} k_sigma) K_nu
FourVectorC jordan(const FourVectorC& g, const FourVectorC& k, const StructureTensors& s);

/// Hypercomplex units (e^mu)^nu_lam = c^{nu sigma mu} eta_{sigma lam}, stored
/// as matrices with row nu and column lam.
struct MatrixUnits {
  std::array<Matrix4C, 4> e;
};

MatrixUnits matrix_units(const StructureTensors& s);

/// G_mu e^mu
Matrix4C unit_combination(const MatrixUnits& u, const FourVectorC& g);

/// The three quaternion units e-hat^1..3 of the canonical frame, written out
/// (e^a = i e-hat^a there).
const std::array<Matrix4C, 3>& canonical_quaternion_units();

enum class DiracVariant { D, D_check };

/// (D V)^mu = c^{mu nu sigma} d_nu V_sigma  (or cc for D_check).
/// With conjugate_coefficients the complex-conjugated operator is applied.
VectorField dirac_operator_apply(const VectorField& field, const StructureTensors& s, DiracVariant variant,
                                 bool conjugate_coefficients = false);

/// Wave operator d_mu d^mu applied componentwise.
VectorField box(const VectorField& field);

// Contraction helpers shared by the field modules.

/// T^{a b c} u_a v_c  -> vector in b.
FourVectorC contract_outer(const Rank3TensorC& t, const FourVectorC& u, const FourVectorC& v);

/// c5^{mu nu} v_nu
inline FourVectorC apply_c5(const StructureTensors& s, const FourVectorC& v) {
  return FourVectorC{s.c5 * lower(v)};
}

}  // namespace bqdirac
