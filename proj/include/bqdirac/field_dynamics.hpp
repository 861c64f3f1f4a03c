#pragma once

#include <array>

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/exp_sum.hpp"
#include "bqdirac/types.hpp"

namespace bqdirac {

/// Electromagnetic potential A^mu (contravariant, real-valued) with coupling e.
struct GaugeField {
  VectorField A;
  Real e = 0.0;

  FourVectorC at(const FourVectorR& x) const { return A.empty() ? FourVectorC{} : A(x); }
};

// --- Spinor form ----------------------------------------------------------

/// i g^mu (d_mu - i e A_mu) Psi - m Psi
DiracSpinor spinor_dirac_residual(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e, Real m);

/// 1/2 [bar(Psi) i g^mu (d_mu - ieA_mu) Psi - ((d_mu + ieA_mu) bar(Psi)) i g^mu Psi] - m bar(Psi) Psi
Complex spinor_lagrangian(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e, Real m);
Complex spinor_lagrangian(const SpinorField& psi, const GaugeField& a, Real m, const FourVectorR& x);

// --- Vector (s-vector) form -------------------------------------------------

/// Gauge-covariant derivative nabla_mu G^lam = d_mu G^lam - i e A_mu c5^{lam sigma} G_sigma.
std::array<FourVectorC, 4> gauge_derivative(const Jet<FourVectorC>& g, const FourVectorC& a, Real e,
                                            const StructureTensors& s);

/// 1/2 [(nabla_mu G_nu)* i cc^{nu mu lam} G_lam - G_nu* i cc^{nu mu lam} nabla_mu G_lam
///      + m (G*.G* + G.G)]
Complex vector_lagrangian(const Jet<FourVectorC>& g, const FourVectorC& a, Real e, Real m, const StructureTensors& s);
Complex vector_lagrangian(const VectorField& g, const GaugeField& a, Real m, const StructureTensors& s,
                          const FourVectorR& x);

/// cc^{mu nu lam} i nabla_nu G_lam - m G^{mu*}
FourVectorC vector_dirac_residual(const Jet<FourVectorC>& g, const FourVectorC& a, Real e, Real m,
                                  const StructureTensors& s);
FourVectorC vector_dirac_residual(const VectorField& g, const GaugeField& a, Real m, const StructureTensors& s,
                                  const FourVectorR& x);

// --- Self-dual form (A = 0) -------------------------------------------------

struct SelfDualResidual {
  Complex divergence = 0;  // d_mu G^mu - i m j_mu G^{mu*}
  Matrix4C dual;           // G_{mu nu} - (i/2) eps_{mu nu lam rho} G^{lam rho}
};

/// G_{mu nu} = (d_mu G_nu + i m j_mu G_nu*) - (mu <-> nu), both indices down.
Matrix4C field_strength_at(const Jet<FourVectorC>& g, Real m, const StructureTensors& s);

SelfDualResidual selfdual_residual(const Jet<FourVectorC>& g, Real m, const StructureTensors& s);
SelfDualResidual selfdual_residual(const VectorField& g, Real m, const StructureTensors& s, const FourVectorR& x);

// --- Real forms ---------------------------------------------------------------

struct RealFormResidual {
  FourVectorC res_B;
  FourVectorC res_N;
};

/// Both lines of the real (B, N) form, with eps_j^{mu nu lam} = eps^{mu nu lam rho} j_rho,
/// t_j likewise, and the k-contracted t, eps for the gauge terms.
RealFormResidual real_form_residual(const Jet<FourVectorC>& b_field, const Jet<FourVectorC>& n_field,
                                    const FourVectorC& a, Real e, Real m, const StructureTensors& s);
RealFormResidual real_form_residual(const VectorField& b_field, const VectorField& n_field, const GaugeField& a,
                                    Real m, const StructureTensors& s, const FourVectorR& x);

/// Divergence lines and the primed-derivative duality line of the alternate real form.
struct PrimedFormResidual {
  Complex div_N = 0;
  Complex div_B = 0;
  Matrix4C duality;
};

PrimedFormResidual primed_form_residual(const Jet<FourVectorC>& b_field, const Jet<FourVectorC>& n_field,
                                        const FourVectorC& a, Real e, Real m, const StructureTensors& s);

/// Split G = B + iN into its real and imaginary part fields.
std::pair<VectorField, VectorField> split_real_imag(const VectorField& g);

// --- Field strength identities ------------------------------------------------

/// G_{mu nu} as exact fields (both indices down).
struct FieldStrength {
  std::array<std::array<ScalarField, 4>, 4> G;
};

FieldStrength field_strength(const VectorField& g, Real m, const StructureTensors& s);

/// Max-abs over (mu, nu, lam) of nabla^c_mu G_{nu lam} + nabla^c_lam G_{mu nu} + nabla^c_nu G_{lam mu},
/// where nabla^c_mu X = d_mu X + i m j_mu X*.
Real bianchi_residual(const FieldStrength& fs, Real m, const StructureTensors& s, const FourVectorR& x);

struct ChernSimons {
  Complex lhs = 0;              // 1/4 [G_{mu nu} eps G_{lam rho} + c.c.]
  Complex rhs = 0;              // 1/2 d_mu [eps (G_nu G_{lam rho} + G_nu* G_{lam rho}*)]
  Complex rhs_real = 0;         // 2 d_mu [eps (B d B - N d N - 2 m B_nu N_lam j_rho)]
  Complex rhs_real_plus_mass = 0; // same with +2 m B_nu N_lam j_rho
};

ChernSimons chern_simons_check(const VectorField& g, Real m, const StructureTensors& s, const FourVectorR& x);

}  // namespace bqdirac
