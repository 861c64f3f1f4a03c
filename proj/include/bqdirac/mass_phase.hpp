#pragma once

#include <functional>
#include <vector>

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/exp_sum.hpp"
#include "bqdirac/field_dynamics.hpp"
#include "bqdirac/spinor_vector.hpp"
#include "bqdirac/types.hpp"

namespace bqdirac {

/// |bar(R) L| at or below this multiple of |Psi|^2 counts as pure chirality.
inline constexpr Real kChiralityThreshold = 1e-9;

/// K^mu with its real and imaginary parts (all contravariant).
struct KVector {
  FourVectorC K;
  FourVectorR re;
  FourVectorR im;
};

/// K_mu = bar(R) g_mu R / (2 bar(R) L) + bar(L) g_mu L / (2 bar(L) R).
/// Throws DegenerateChirality for a pure R or pure L spinor.
KVector k_vector(const DiracSpinor& psi, const TrinomialBasis& b);
KVector k_vector_from_parts(const DiracSpinor& r, const DiracSpinor& l, Real scale);

struct KIdentityResidual {
  Real slash_r = 0;     // |K.g R - L|, |K+.g R|, and the barred version
  Real slash_l = 0;     // |K.g L - R|, |K-.g L|, and the barred version
  Real unit = 0;        // |K.K - 1|
  Real trilinear = 0;   // bar(R) L = K bar(R) g R = K* bar(L) g L and the L-R line
  Real mass = 0;        // |bar(Psi) Psi - bar(Psi) K.g Psi|
};

KIdentityResidual k_identities(const DiracSpinor& psi, const TrinomialBasis& b);

struct SplitK {
  FourVectorR re;
  FourVectorR im;
  FourVectorC pi;         // bar(Psi) g^mu Psi
  FourVectorC pi5;        // bar(Psi) g^mu g5 Psi
  FourVectorC pi_g;       // G* c G
  FourVectorC pi5_g;      // -G* cc G
  Real route = 0;         // K parts from the RL route vs the current route
  Real orthogonality = 0; // |Re K . Im K|
  Real trilinear = 0;     // |bar(Psi) Im K.g Psi| and |bar(Psi) Re K.g Psi - bar(Psi) Psi|
};

/// Throws DegenerateChirality as k_vector, DegenerateCurrent if pi.pi vanishes.
SplitK split_K(const DiracSpinor& psi, const TrinomialBasis& b, const StructureTensors& s);

/// Off-shell algebraic part of the massless rewriting:
/// i g (d - ieA) X - m Y  vs  i g (d - ieA + imK) X, for X = R, L and Psi.
struct OperatorIdentityResidual {
  Real r = 0;
  Real l = 0;
  Real psi = 0;
};

OperatorIdentityResidual massless_operator_identity(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e,
                                                    Real m, const TrinomialBasis& b);

/// Three forms of the Lagrangian density:
///   standard = bar(Psi) i g (d - ieA) Psi - m bar(Psi) Psi
///   re_k     = bar(Psi) i g [d - ieA + im Re K] Psi
///   factored = bar(Psi) theta^{-1} i g d (Psi theta), with d theta = -i (eA - mK) theta
/// factored does not depend on the value of theta (phase or scale).
struct ModifiedLagrangian {
  Complex standard = 0;
  Complex re_k = 0;
  Complex factored = 0;
};

ModifiedLagrangian modified_lagrangian(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e, Real m,
                                       const TrinomialBasis& b, Complex theta);

/// Psi_0 = Psi exp(-i (eA - mK).x) for a single plane wave in a constant
/// potential, where K is constant and real. Throws std::invalid_argument otherwise.
SpinorField massless_factor(const SpinorField& psi, const GaugeField& a, Real m, const TrinomialBasis& b);

struct FactorCheck {
  Real operator_residual = 0;  // off-shell identity, max over points
  Real massless_residual = 0;  // |i g d Psi_0| / (1 + |Psi_0|), max over points
};

FactorCheck massless_factor_check(const SpinorField& psi, const GaugeField& a, Real m, const TrinomialBasis& b,
                                  const std::vector<FourVectorR>& points);

// --- Line integrals -------------------------------------------------------------

struct PathPolyline {
  std::vector<FourVectorR> vertices;
  bool closed = false;
};

using KField = std::function<KVector(const FourVectorR&)>;

/// K recomputed from the field value at each point.
KField k_field(const SpinorField& psi, const TrinomialBasis& b);

struct LineIntegral {
  Real phase = 0;      // integral of (eA - m Re K).dx
  Real log_scale = 0;  // -m integral of Im K.dx
};

/// Composite midpoint rule with `nodes` nodes per segment. A closed path must
/// repeat its first vertex at the end (std::invalid_argument otherwise).
/// DegenerateChirality at a node is rethrown with the node location.
LineIntegral line_integral(const PathPolyline& path, const GaugeField& a, const KField& k, Real m, int nodes);

/// Closed axis-aligned square in the (axis_a, axis_b) plane.
PathPolyline square_loop(const FourVectorR& corner, int axis_a, int axis_b, Real side);

}  // namespace bqdirac
