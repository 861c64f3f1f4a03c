#pragma once

#include "bqdirac/exp_sum.hpp"
#include "bqdirac/types.hpp"
#include "bqdirac/unit_basis.hpp"

namespace bqdirac {

/// Real vector avatars (B, N) of the two half-spinors of a Dirac spinor.
struct HalfSpinorPair {
  FourVectorR B;
  FourVectorR N;
};

/// Psi = R + L together with G = B + iN.
struct RLDecomposition {
  DiracSpinor R;
  DiracSpinor L;
  FourVectorC G;
};

/// Imaginary parts above this (relative) bound are rejected as non-real.
inline constexpr Real kRealityTol = 1e-10;

/// B^mu = (bar(f) i g^mu Psi - bar(Psi) i g^mu f)/2,
/// N^mu = (bar(Psi) i g^mu phi - bar(phi) i g^mu Psi)/2.
HalfSpinorPair to_vectors(const DiracSpinor& psi, const TrinomialBasis& b);

/// Psi = B^mu eta_{mu nu} i g^nu f + N^mu eta_{mu nu} i g^nu phi.
DiracSpinor to_spinor(const HalfSpinorPair& pair, const TrinomialBasis& b);
/// Same, rejecting complex B or N with NonRealInput.
DiracSpinor to_spinor(const FourVectorC& B, const FourVectorC& N, const TrinomialBasis& b);

/// G^mu = (bar(r) g^mu Psi - bar(Psi) g^mu l)/2.
FourVectorC g_vector(const DiracSpinor& psi, const TrinomialBasis& b);

/// R = G.gamma l / 2, L = -G*.gamma r / 2.
RLDecomposition rl_from_g(const FourVectorC& g, const TrinomialBasis& b);

RLDecomposition rl_decompose(const DiracSpinor& psi, const TrinomialBasis& b);

/// The G field of a spinor field, built term by term (Psi* contributes terms
/// with negated wavevectors).
VectorField g_field(const SpinorField& psi, const TrinomialBasis& b);

/// Quadratic forms and the trilinear form of (V, Psi_1(B), Psi_2(N)).
struct Forms {
  Real q_v = 0;            // V.V
  Complex q_1 = 0;         // bar(Psi_1) Psi_1
  Complex q_2 = 0;         // bar(Psi_2) Psi_2
  Complex cubic = 0;       // V_mu (bar(Psi_1) g^mu Psi_2 + bar(Psi_2) g^mu Psi_1)
  Real cubic_epsilon = 0;  // 2 (eps_{nu lam rho sigma} k^sigma) V^nu N^lam B^rho
};

Forms forms(const FourVectorR& v, const HalfSpinorPair& pair, const TrinomialBasis& b);

/// Half-spinor constituents Psi_1(B), Psi_2(N).
DiracSpinor half_spinor_b(const FourVectorR& B, const TrinomialBasis& b);
DiracSpinor half_spinor_n(const FourVectorR& N, const TrinomialBasis& b);

/// An element of M x S_1 x S_2.
struct TrialityTriple {
  FourVectorR V;
  HalfSpinorPair pair;
};

/// The order-3 cycle V -> B -> N -> V: V' = N, B' = V, N' = B. k is held fixed.
TrialityTriple ding_J(const TrialityTriple& x);

struct DualResult {
  HalfSpinorPair pair;
  Real m = 0;
};

/// B -> N, N -> -B, m -> -m.
DualResult dual_transform(const HalfSpinorPair& pair, Real m);

}  // namespace bqdirac
