#pragma once

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/exp_sum.hpp"
#include "bqdirac/field_dynamics.hpp"
#include "bqdirac/spinor_vector.hpp"
#include "bqdirac/types.hpp"

namespace bqdirac {

/// Which normalisation q.q the rotation parameter carries. For -1 the maps
/// use cc^{mu nu lam}; for +1 they use c^{mu nu lam}.
enum class QNorm { MinusOne, PlusOne };

class UnitBiquaternion {
 public:
  /// Throws NonUnitQ unless |q.q - target| <= tol.
  explicit UnitBiquaternion(const FourVectorC& q, QNorm norm = QNorm::MinusOne, Real tol = 1e-10);

  const FourVectorC& q() const { return q_; }
  QNorm norm() const { return norm_; }
  UnitBiquaternion conj() const;

 private:
  FourVectorC q_;
  QNorm norm_;
  Real tol_;
};

/// G~^mu = G^nu eta_{nu lam} cc^{lam mu sigma} q_sigma, as a matrix acting on G^nu.
Matrix4C s1_matrix(const UnitBiquaternion& q, const StructureTensors& s);
/// H~^mu = q_sigma cc^{sigma mu lam} eta_{lam nu} H^nu
Matrix4C s2_matrix(const UnitBiquaternion& q, const StructureTensors& s);

/// q x' G
FourVectorC s_left(const UnitBiquaternion& q, const FourVectorC& g, const StructureTensors& s);
/// G x' q
FourVectorC s_right(const UnitBiquaternion& q, const FourVectorC& g, const StructureTensors& s);

/// Lambda(q) = S2(q*) S1(q), acting on contravariant x. Complex in general
/// arithmetic; real for unit q.
Matrix4C lorentz_from_q_complex(const UnitBiquaternion& q, const StructureTensors& s);
/// Real part of the above; throws NonRealInput if an imaginary part exceeds tol.
Matrix4R lorentz_from_q(const UnitBiquaternion& q, const StructureTensors& s, Real tol = 1e-10);

struct CovarianceResidual {
  Real c_check = 0;
  Real c = 0;
};

/// Max-abs of Lambda^nu_rho S2(q*)^mu_sigma T^{sigma rho delta} S1(q)_delta^lam - T^{mu nu lam}
/// for T = cc and T = c.
CovarianceResidual covariance_check(const UnitBiquaternion& q, const StructureTensors& s);

// --- U(1) ---------------------------------------------------------------------

/// eta cos(alpha) + i c5 sin(alpha), acting on contravariant G (c5^{mu nu} G_nu).
Matrix4C u1_matrix(Real alpha, const StructureTensors& s);

struct GaugedSpinor {
  Jet<DiracSpinor> psi;
  FourVectorC A;
};

/// Psi e^{i alpha}, A + d alpha / e, evaluated on jets (alpha carries its gradient).
GaugedSpinor u1_gauge(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e, const Jet<Complex>& alpha);

/// G~ = (exp i alpha c5) G on jets.
Jet<FourVectorC> vector_u1(const Jet<FourVectorC>& g, const Jet<Complex>& alpha, const StructureTensors& s);
FourVectorC vector_u1(const FourVectorC& g, Real alpha, const StructureTensors& s);

/// Real-form U(1) rotation of (B, N).
HalfSpinorPair vector_u1_real(const HalfSpinorPair& pair, Real alpha, const TrinomialBasis& b);

// --- Chiral and representation change ------------------------------------------

/// exp(i a gamma5) Psi
DiracSpinor chiral(const DiracSpinor& psi, Real a);
FourVectorC chiral_vector(const FourVectorC& g, Real a);

/// -(G*.G* + G.G)/2, which equals bar(Psi) Psi.
Complex mass_form(const FourVectorC& g);

/// [(a + 1/a)/2 eta + (a - 1/a)/2 c5] G with the c5 of the original basis.
FourVectorC representation_change_vector(const FourVectorC& g, Complex a, const StructureTensors& s);

}  // namespace bqdirac
