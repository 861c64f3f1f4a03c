#pragma once

#include "bqdirac/exp_sum.hpp"
#include "bqdirac/field_dynamics.hpp"
#include "bqdirac/random.hpp"
#include "bqdirac/transformations.hpp"
#include "bqdirac/unit_basis.hpp"

namespace bqdirac {

DiracSpinor random_spinor(Rng& rng, Real scale = 1.0);
FourVectorR random_real_vector(Rng& rng, Real scale = 1.0);
FourVectorC random_complex_vector(Rng& rng, Real scale = 1.0);
FourVectorR random_point(Rng& rng, Real extent = 2.0);

/// q.q = -1 with |q| bounded (near-null directions are rejected).
UnitBiquaternion random_unit_q(Rng& rng);

/// Antisymmetric omega_{mu nu}: rotations up to pi, boosts up to max_rapidity.
Matrix4R random_lorentz_generator(Rng& rng, Real max_rapidity = 1.0);

/// Canonical basis moved by a random Lorentz transformation and a random
/// representation change |a| in [0.6, 1.6].
TrinomialBasis random_basis(Rng& rng);

/// Positive-energy solution u(P) of (g.P - m) u = 0 in the Dirac representation,
/// normalised to bar(u) u = 2m, for spin direction chi.
DiracSpinor plane_wave_spinor(const FourVectorR& momentum, Real m, const Eigen::Vector2cd& chi);

/// On-shell momentum with random spatial part.
FourVectorR random_momentum(Rng& rng, Real m, Real max_p = 1.5);

/// u(P) exp(-i (P - eA).x): solves the Dirac equation in the constant potential A.
SpinorField gauged_plane_wave(const FourVectorR& kinetic, Real m, const Eigen::Vector2cd& chi,
                              const FourVectorR& a, Real e);

/// Superposition of n free positive-energy plane waves of mass m.
SpinorField random_on_shell_field(Rng& rng, Real m, int n);

/// Arbitrary (off-shell) fields with n terms and wavevectors up to kscale.
SpinorField random_spinor_field(Rng& rng, int n, Real kscale = 1.0);
VectorField random_vector_field(Rng& rng, int n, Real kscale = 1.0);

/// Real potential: n terms plus their conjugates.
GaugeField random_gauge_field(Rng& rng, int n, Real e, Real kscale = 1.0);
GaugeField constant_gauge_field(const FourVectorR& a, Real e);

/// Random real scalar jet (value and gradient).
Jet<Complex> random_real_jet(Rng& rng, Real scale = 1.0);

}  // namespace bqdirac
