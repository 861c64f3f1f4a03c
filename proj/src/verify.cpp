#include "bqdirac/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/field_dynamics.hpp"
#include "bqdirac/gamma.hpp"
#include "bqdirac/generators.hpp"
#include "bqdirac/mass_phase.hpp"
#include "bqdirac/random.hpp"
#include "bqdirac/spinor_vector.hpp"
#include "bqdirac/transformations.hpp"
#include "bqdirac/unit_basis.hpp"

namespace bqdirac {

namespace {

// --- residual helpers --------------------------------------------------------

template <typename A, typename B>
Real rel(const Eigen::MatrixBase<A>& lhs, const Eigen::MatrixBase<B>& rhs) {
  return max_abs(lhs - rhs) / (1.0 + std::max(max_abs(lhs), max_abs(rhs)));
}

Real rel(Complex lhs, Complex rhs) { return std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs))); }

template <typename T>
Real jet_scale(const Jet<T>& j) {
  Real s = magnitude(j.value);
  for (const auto& d : j.d) s = std::max(s, magnitude(d));
  return s;
}

// --- record table --------------------------------------------------------------

enum class Kind { Bound, Exact, Counterexample };

constexpr Real kCounterexampleFloor = 1e-3;

struct Check {
  std::string id;
  std::string paper_ref;
  Suite suite;
  Kind kind = Kind::Bound;
  Real tol_factor = 1.0;
  std::optional<Real> fixed_tol;
  bool single = false;
  std::function<Real(Rng&)> trial;
};

struct Context {
  std::vector<Check> checks;
  void add(Check c) { checks.push_back(std::move(c)); }
};

StructureTensors random_structure(Rng& rng) { return structure_constants(random_basis(rng)); }

// A sum of gauged plane waves solving the Dirac equation in a constant potential.
SpinorField gauged_on_shell_field(Rng& rng, Real m, const FourVectorR& a, Real e, int n) {
  SpinorField out;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2cd chi(rng.complex(), rng.complex());
    out += gauged_plane_wave(random_momentum(rng, m), m, chi, a, e) * rng.complex();
  }
  return out;
}

Jet<DiracSpinor> random_spinor_jet(Rng& rng) {
  Jet<DiracSpinor> j;
  j.value = random_spinor(rng);
  for (auto& d : j.d) d = random_spinor(rng);
  return j;
}

Jet<FourVectorC> g_jet(const Jet<DiracSpinor>& psi, const TrinomialBasis& b) {
  Jet<FourVectorC> g;
  g.value = g_vector(psi.value, b);
  for (std::size_t mu = 0; mu < 4; ++mu) g.d[mu] = g_vector(psi.d[mu], b);
  return g;
}

Real expect_throw(const std::function<void()>& f) {
  try {
    f();
  } catch (const DegenerateChirality&) {
    return 0.0;
  }
  return 1.0;
}

// --- algebra -------------------------------------------------------------------

void add_algebra(Context& ctx) {
  const Suite S = Suite::algebra;
  ctx.add({"algebra.trace_definitions", "epsilon and t as gamma traces", S, Kind::Bound, 1.0, {}, true, [](Rng&) {
             Real r = 0;
             const Rank4Tensor e1 = epsilon_from_traces(), t1 = t_from_traces();
             for (std::size_t i = 0; i < Rank4Tensor::kSize; ++i)
               r = std::max({r, std::abs(e1.data()[i] - epsilon_tensor().data()[i]),
                             std::abs(t1.data()[i] - t_tensor().data()[i])});
             return r;
           }});
  ctx.add({"algebra.structure_relations", "structure constant symmetries, Clifford-type and c5 relations", S,
           Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const auto r = structure_relations(random_structure(rng));
             return std::max({r.symmetry, r.clifford, r.c5});
           }});
  ctx.add({"algebra.dirac_operators", "D* D = box and cc-variant = -box", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const auto s = random_structure(rng);
             const VectorField v = random_vector_field(rng, 2);
             const FourVectorR x = random_point(rng);
             const VectorField bx = box(v);
             const VectorField dd = dirac_operator_apply(dirac_operator_apply(v, s, DiracVariant::D), s,
                                                         DiracVariant::D, true);
             const VectorField cc = dirac_operator_apply(dirac_operator_apply(v, s, DiracVariant::D_check), s,
                                                         DiracVariant::D_check, true);
             return std::max(rel(dd(x), bx(x)), rel(cc(x), FourVectorC{-bx(x)}));
           }});
  ctx.add({"algebra.associativity", "associativity of both products", S, Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const auto s = random_structure(rng);
             const FourVectorC g = random_complex_vector(rng), h = random_complex_vector(rng),
                               k = random_complex_vector(rng);
             return std::max(rel(otimes(otimes(g, h, s), k, s), otimes(g, otimes(h, k, s), s)),
                             rel(otimes_check(otimes_check(g, h, s), k, s), otimes_check(g, otimes_check(h, k, s), s)));
           }});
  ctx.add({"algebra.normed", "modified normed conditions", S, Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const auto s = random_structure(rng);
             const FourVectorC g = random_complex_vector(rng), h = random_complex_vector(rng);
             const Complex gg_hh = minkowski_dot(g, g) * minkowski_dot(h, h);
             const FourVectorC p = otimes(g, h, s), q = otimes_check(g, h, s);
             return std::max(rel(gg_hh, minkowski_dot(p, p)), rel(gg_hh, -minkowski_dot(q, q)));
           }});
  ctx.add({"algebra.matrix_units", "product as matrix multiplication of units", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const auto s = random_structure(rng);
             const MatrixUnits u = matrix_units(s);
             const FourVectorC g = random_complex_vector(rng), h = random_complex_vector(rng);
             const Matrix4C prod = unit_combination(u, g) * unit_combination(u, h);
             return rel(prod, unit_combination(u, otimes(g, h, s)));
           }});
  ctx.add({"algebra.quaternion_table", "quaternion multiplication table of the units", S, Kind::Exact, 1.0, {}, true,
           [](Rng&) {
             const auto s = structure_constants(canonical_basis());
             const MatrixUnits u = matrix_units(s);
             const auto& table = canonical_quaternion_units();
             const Matrix4C id = Matrix4C::Identity();
             std::array<Matrix4C, 3> e;
             Real r = max_abs(u.e[0] - id);
             for (std::size_t a = 0; a < 3; ++a) {
               e[a] = -kI * u.e[a + 1];
               r = std::max(r, max_abs(u.e[a + 1] - kI * table[a]));
               r = std::max(r, max_abs(e[a] - table[a]));
               r = std::max(r, max_abs(e[a] * e[a] + id));
             }
             r = std::max(r, max_abs(e[0] * e[1] * e[2] + id));
             for (std::size_t a = 0; a < 3; ++a) {
               const std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
               r = std::max({r, max_abs(e[a] * e[b] - e[c]), max_abs(e[b] * e[a] + e[c])});
             }
             return r;
           }});
  ctx.add({"algebra.jordan", "Jordan product laws", S, Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const auto s = random_structure(rng);
             const FourVectorC g = random_complex_vector(rng), k = random_complex_vector(rng);
             const FourVectorC gg = jordan(g, g, s);
             const FourVectorC half{0.5 * (otimes(g, k, s) + otimes(k, g, s))};
             return std::max({rel(jordan(g, k, s), jordan(k, g, s)), rel(jordan(g, k, s), half),
                              rel(jordan(jordan(gg, k, s), g, s), jordan(gg, jordan(k, g, s), s))});
           }});
}

// --- basis ---------------------------------------------------------------------

void add_basis(Context& ctx) {
  const Suite S = Suite::basis;
  ctx.add({"basis.canonical", "defining relations of the canonical unit-basis", S, Kind::Exact, 1.0, {}, true,
           [](Rng&) {
             const TrinomialBasis b = canonical_basis();
             return std::max(validate_basis(b, 0.0).max_residual(),
                             validate_null_basis(null_basis(b), 0.0).max_residual());
           }});
  ctx.add({"basis.transformed", "defining relations of Lorentz-moved and re-represented bases", S, Kind::Bound, 1.0,
           {}, false, [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             return std::max(validate_basis(b, 0.0).max_residual(),
                             validate_null_basis(null_basis(b), 0.0).max_residual());
           }});
  ctx.add({"basis.spinor_lorentz", "S^-1 gamma S = Lambda gamma", S, Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const Matrix4R w = random_lorentz_generator(rng);
             const Matrix4C sp = spinor_lorentz(w);
             const Matrix4R lam = vector_lorentz(w);
             const Matrix4C inv = sp.inverse();
             Real r = 0;
             for (int mu = 0; mu < 4; ++mu) {
               Matrix4C rhs = Matrix4C::Zero();
               for (int nu = 0; nu < 4; ++nu) rhs += lam(mu, nu) * gamma(nu);
               r = std::max(r, rel(inv * gamma(mu) * sp, rhs));
             }
             return r;
           }});
  ctx.add({"basis.representation_null", "representation change scales r and l", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const Complex a = std::polar(rng.uniform(0.5, 2.0), rng.uniform(-3.0, 3.0));
             const NullBasis n0 = null_basis(b);
             const NullBasis n1 = null_basis(change_representation(b, a));
             return std::max(rel(n1.r, DiracSpinor{std::conj(a) * n0.r}), rel(n1.l, DiracSpinor{n0.l / a}));
           }});
}

// --- triality ------------------------------------------------------------------

void add_triality(Context& ctx) {
  const Suite S = Suite::triality;
  ctx.add({"triality.roundtrip", "spinor to (B, N) to G round trips", S, Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const DiracSpinor psi = random_spinor(rng);
             const HalfSpinorPair v = to_vectors(psi, b);
             const FourVectorC g = g_vector(psi, b);
             const RLDecomposition rl = rl_from_g(g, b);
             const FourVectorC bn{complexify(v.B) + kI * complexify(v.N)};
             return std::max({rel(to_spinor(v, b), psi), rel(g, bn), rel(DiracSpinor{rl.R + rl.L}, psi),
                              rel(to_spinor(FourVectorC{g.real().cast<Complex>()},
                                            FourVectorC{g.imag().cast<Complex>()}, b),
                                  psi)});
           }});
  ctx.add({"triality.slot_layout", "eight-slot layout in the canonical basis", S, Kind::Exact, 1.0, {}, true,
           [](Rng&) {
             const TrinomialBasis b = canonical_basis();
             Real r = 0;
             for (int i = 0; i < 3; ++i) {
               const FourVectorR B(1.0 + 8 * i, 2.0 - 3 * i, 3.0 + i, -4.0 + 5 * i);
               const FourVectorR N(5.0 - 2 * i, -6.0 + i, 7.0 + 4 * i, 8.0 - 7 * i);
               const DiracSpinor expected(Complex(B(3), N(0)), Complex(B(1), B(2)), Complex(B(0), N(3)),
                                          Complex(-N(2), N(1)));
               r = std::max(r, max_abs(to_spinor(HalfSpinorPair{B, N}, b) - expected));
             }
             return r;
           }});
  ctx.add({"triality.forms", "quadratic and trilinear forms of the half-spinors", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const FourVectorR V = random_real_vector(rng);
             const HalfSpinorPair p{random_real_vector(rng), random_real_vector(rng)};
             const Forms f = forms(V, p, b);
             const DiracSpinor psi = to_spinor(p, b);
             const Complex nn_bb = minkowski_dot(p.N, p.N) - minkowski_dot(p.B, p.B);
             return std::max({rel(f.q_1, -minkowski_dot(p.B, p.B)), rel(f.q_2, minkowski_dot(p.N, p.N)),
                              rel(f.cubic, f.cubic_epsilon), rel(bilinear(psi, psi), nn_bb),
                              rel(bilinear(psi, psi), mass_form(g_vector(psi, b)))});
           }});
  ctx.add({"triality.ding_order3", "the cyclic map has order three", S, Kind::Exact, 1.0, {}, false, [](Rng& rng) {
             const TrialityTriple x{random_real_vector(rng), {random_real_vector(rng), random_real_vector(rng)}};
             const TrialityTriple y = ding_J(ding_J(ding_J(x)));
             const TrialityTriple once = ding_J(x);
             const Real moved = max_abs(once.V - x.V) + max_abs(once.pair.B - x.pair.B) > 0 ? 0.0 : 1.0;
             return std::max({max_abs(y.V - x.V), max_abs(y.pair.B - x.pair.B), max_abs(y.pair.N - x.pair.N), moved});
           }});
  ctx.add({"triality.cubic_preserved", "trilinear form preserved by the cyclic map", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const TrialityTriple x{random_real_vector(rng), {random_real_vector(rng), random_real_vector(rng)}};
             const TrialityTriple y = ding_J(x);
             const Forms f0 = forms(x.V, x.pair, b), f1 = forms(y.V, y.pair, b);
             return std::max(rel(Complex(std::abs(f1.cubic)), Complex(std::abs(f0.cubic))), rel(f1.cubic, f0.cubic));
           }});
  ctx.add({"triality.sign_table", "quadratic forms permuted up to sign", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const TrialityTriple x{random_real_vector(rng), {random_real_vector(rng), random_real_vector(rng)}};
             const TrialityTriple y = ding_J(x);
             const Forms f0 = forms(x.V, x.pair, b), f1 = forms(y.V, y.pair, b);
             return std::max({rel(Complex(f1.q_v), f0.q_2), rel(f1.q_1, Complex(-f0.q_v)), rel(f1.q_2, -f0.q_1)});
           }});
  ctx.add({"triality.dual", "dual transformation invariants", S, Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto s = structure_constants(b);
             const Real m = rng.uniform(0.2, 2.0);
             const FourVectorR V = random_real_vector(rng);
             const HalfSpinorPair p{random_real_vector(rng), random_real_vector(rng)};
             const DualResult d = dual_transform(p, m);
             const Complex q0 = m * (minkowski_dot(p.N, p.N) - minkowski_dot(p.B, p.B));
             const Complex q1 = d.m * (minkowski_dot(d.pair.N, d.pair.N) - minkowski_dot(d.pair.B, d.pair.B));
             Real r = std::max(rel(q0, q1), rel(Complex(forms(V, p, b).cubic_epsilon),
                                               Complex(forms(V, d.pair, b).cubic_epsilon)));
             // Field level: G -> -iG with m -> -m leaves the Lagrangian and |Dirac residual| unchanged.
             const VectorField g = random_vector_field(rng, 2);
             const VectorField gd = g * Complex(0.0, -1.0);
             const GaugeField a = random_gauge_field(rng, 1, rng.uniform(-1.0, 1.0));
             const FourVectorR x = random_point(rng);
             r = std::max(r, rel(vector_lagrangian(g, a, m, s, x), vector_lagrangian(gd, a, d.m, s, x)));
             const FourVectorC r0 = vector_dirac_residual(g, a, m, s, x);
             const FourVectorC r1 = vector_dirac_residual(gd, a, d.m, s, x);
             return std::max(r, rel(r1, FourVectorC{-kI * r0}));
           }});
}

// --- dynamics ------------------------------------------------------------------

Real selfdual_size(const SelfDualResidual& r) { return std::max(std::abs(r.divergence), max_abs(r.dual)); }

void add_dynamics(Context& ctx) {
  const Suite S = Suite::dynamics;
  ctx.add({"dynamics.lagrangian", "spinor and vector Lagrangians agree", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto s = structure_constants(b);
             const SpinorField psi = random_spinor_field(rng, 2);
             const GaugeField a = random_gauge_field(rng, 1, rng.uniform(-1.0, 1.0));
             const Real m = rng.uniform(0.2, 2.0);
             const VectorField g = g_field(psi, b);
             Real r = 0;
             for (int i = 0; i < 10; ++i) {
               const FourVectorR x = random_point(rng);
               r = std::max(r, rel(spinor_lagrangian(psi, a, m, x), vector_lagrangian(g, a, m, s, x)));
             }
             return r;
           }});
  ctx.add({"dynamics.dirac_map", "vector Dirac residual is the mapped spinor residual", S, Kind::Bound, 1.0, {},
           false, [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto s = structure_constants(b);
             const SpinorField psi = random_spinor_field(rng, 2);
             const GaugeField a = random_gauge_field(rng, 1, rng.uniform(-1.0, 1.0));
             const Real m = rng.uniform(0.2, 2.0);
             const FourVectorR x = random_point(rng);
             const DiracSpinor sr = spinor_dirac_residual(psi.jet(x), a.at(x), a.e, m);
             const FourVectorC vr = vector_dirac_residual(g_field(psi, b), a, m, s, x);
             return rel(vr, FourVectorC{g_vector(sr, b).conjugate()});
           }});
  ctx.add({"dynamics.real_form_map", "real form lines combine to the vector residual", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto s = structure_constants(b);
             const VectorField g = random_vector_field(rng, 2);
             const auto [bf, nf] = split_real_imag(g);
             const FourVectorR A0 = random_real_vector(rng);
             const GaugeField a = constant_gauge_field(A0, rng.uniform(-1.0, 1.0));
             const Real m = rng.uniform(0.2, 2.0);
             const FourVectorR x = random_point(rng);
             const RealFormResidual rf = real_form_residual(bf, nf, a, m, s, x);
             return rel(FourVectorC{rf.res_B + kI * rf.res_N}, vector_dirac_residual(g, a, m, s, x));
           }});

  // On-shell checks: superpositions of gauged plane waves in a constant potential.
  struct OnShell {
    TrinomialBasis b;
    StructureTensors s;
    Real m;
    GaugeField a;
    SpinorField psi;
    VectorField g;
    FourVectorR x;
  };
  auto on_shell = [](Rng& rng, bool gauged) {
    OnShell o;
    o.b = random_basis(rng);
    o.s = structure_constants(o.b);
    o.m = rng.uniform(0.3, 2.0);
    const FourVectorR A0 = gauged ? random_real_vector(rng, 0.5) : FourVectorR{};
    o.a = constant_gauge_field(A0, gauged ? rng.uniform(-1.0, 1.0) : 0.0);
    o.psi = gauged_on_shell_field(rng, o.m, A0, o.a.e, 3);
    o.g = g_field(o.psi, o.b);
    o.x = random_point(rng);
    return o;
  };
  ctx.add({"dynamics.on_shell.spinor", "spinor Dirac equation on plane-wave solutions", S, Kind::Bound, 1.0, {}, false,
           [on_shell](Rng& rng) {
             const OnShell o = on_shell(rng, true);
             const auto j = o.psi.jet(o.x);
             return max_abs(spinor_dirac_residual(j, o.a.at(o.x), o.a.e, o.m)) / (1.0 + jet_scale(j));
           }});
  ctx.add({"dynamics.on_shell.vector", "vector Dirac equation on plane-wave solutions", S, Kind::Bound, 1.0, {}, false,
           [on_shell](Rng& rng) {
             const OnShell o = on_shell(rng, true);
             const auto j = o.g.jet(o.x);
             return max_abs(vector_dirac_residual(j, o.a.at(o.x), o.a.e, o.m, o.s)) / (1.0 + jet_scale(j));
           }});
  ctx.add({"dynamics.on_shell.selfdual", "self-dual form on free plane-wave solutions", S, Kind::Bound, 1.0, {}, false,
           [on_shell](Rng& rng) {
             const OnShell o = on_shell(rng, false);
             const auto j = o.g.jet(o.x);
             return selfdual_size(selfdual_residual(j, o.m, o.s)) / (1.0 + jet_scale(j));
           }});
  ctx.add({"dynamics.on_shell.real_form", "real (B, N) form on plane-wave solutions", S, Kind::Bound, 1.0, {}, false,
           [on_shell](Rng& rng) {
             const OnShell o = on_shell(rng, true);
             const auto [bf, nf] = split_real_imag(o.g);
             const auto r = real_form_residual(bf, nf, o.a, o.m, o.s, o.x);
             return std::max(max_abs(r.res_B), max_abs(r.res_N)) / (1.0 + jet_scale(o.g.jet(o.x)));
           }});
  ctx.add({"dynamics.on_shell.primed_form", "divergence and primed-duality form on plane-wave solutions", S,
           Kind::Bound, 1.0, {}, false, [on_shell](Rng& rng) {
             const OnShell o = on_shell(rng, true);
             const auto [bf, nf] = split_real_imag(o.g);
             const auto r = primed_form_residual(bf.jet(o.x), nf.jet(o.x), o.a.at(o.x), o.a.e, o.m, o.s);
             return std::max({std::abs(r.div_N), std::abs(r.div_B), max_abs(r.duality)}) /
                    (1.0 + jet_scale(o.g.jet(o.x)));
           }});
  ctx.add({"dynamics.counterexample.mass", "wrong-mass fields violate all three forms", S, Kind::Counterexample, 1.0,
           {}, false, [on_shell](Rng& rng) {
             const OnShell o = on_shell(rng, false);
             const Real wrong = 1.5 * o.m;
             const auto j = o.g.jet(o.x);
             const Real scale = 1.0 + jet_scale(j);
             const auto [bf, nf] = split_real_imag(o.g);
             const auto rf = real_form_residual(bf, nf, o.a, wrong, o.s, o.x);
             return std::min({max_abs(vector_dirac_residual(j, FourVectorC{}, 0.0, wrong, o.s)) / scale,
                              selfdual_size(selfdual_residual(j, wrong, o.s)) / scale,
                              std::max(max_abs(rf.res_B), max_abs(rf.res_N)) / scale});
           }});
  ctx.add({"dynamics.counterexample.divergence", "constant j-shift breaks only the divergence line", S,
           Kind::Counterexample, 1.0, {}, false, [on_shell](Rng& rng) {
             const OnShell o = on_shell(rng, false);
             const Complex c = std::polar(rng.uniform(0.5, 1.5), rng.uniform(-3.0, 3.0));
             const VectorField shifted = o.g + VectorField::constant(FourVectorC{c * complexify(o.b.j)});
             const auto j = shifted.jet(o.x);
             const auto r = selfdual_residual(j, o.m, o.s);
             // The duality line must stay satisfied for this to isolate the divergence.
             if (max_abs(r.dual) / (1.0 + jet_scale(j)) > 1e-9) return 0.0;
             return std::abs(r.divergence) / (1.0 + jet_scale(j));
           }});
  ctx.add({"dynamics.bianchi", "Bianchi identity of the field strength", S, Kind::Bound, 10.0, {}, false,
           [](Rng& rng) {
             const auto s = random_structure(rng);
             const VectorField g = random_vector_field(rng, 2);
             const Real m = rng.uniform(0.2, 2.0);
             const FourVectorR x = random_point(rng);
             const FieldStrength fs = field_strength(g, m, s);
             Real scale = 0;
             for (const auto& row : fs.G)
               for (const auto& f : row) scale = std::max(scale, jet_scale(f.jet(x)));
             return bianchi_residual(fs, m, s, x) / (1.0 + scale);
           }});
  ctx.add({"dynamics.chern_simons", "Chern-Pontryagin density as a total derivative", S, Kind::Bound, 10.0, {}, false,
           [](Rng& rng) {
             const auto s = random_structure(rng);
             const VectorField g = random_vector_field(rng, 2);
             const Real m = rng.uniform(0.2, 2.0);
             const auto cs = chern_simons_check(g, m, s, random_point(rng));
             return std::max(rel(cs.lhs, cs.rhs), rel(cs.lhs, cs.rhs_real));
           }});
}

// --- transform -------------------------------------------------------------------

void add_transform(Context& ctx) {
  const Suite S = Suite::transform;
  ctx.add({"transform.s_maps", "left and right maps preserve the dot product", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const auto s = random_structure(rng);
             const UnitBiquaternion q = random_unit_q(rng);
             const FourVectorC g = random_complex_vector(rng);
             const FourVectorC l = s_left(q, g, s), r = s_right(q, g, s);
             const Complex gg = minkowski_dot(g, g);
             return std::max(rel(minkowski_dot(l, l), gg), rel(minkowski_dot(r, r), gg));
           }});
  ctx.add({"transform.s_maps_plus", "q.q = +1 variant preserves the dot product", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const auto s = random_structure(rng);
             const UnitBiquaternion qm = random_unit_q(rng);
             const UnitBiquaternion q(FourVectorC{-kI * qm.q()}, QNorm::PlusOne);
             const FourVectorC g = random_complex_vector(rng);
             const FourVectorC l = s_left(q, g, s), r = s_right(q, g, s);
             const Complex gg = minkowski_dot(g, g);
             return std::max(rel(minkowski_dot(l, l), gg), rel(minkowski_dot(r, r), gg));
           }});
  ctx.add({"transform.lorentz_metric", "Lambda(q) is real and preserves the metric", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const auto s = random_structure(rng);
             const UnitBiquaternion q = random_unit_q(rng);
             const Matrix4C lc = lorentz_from_q_complex(q, s);
             const Matrix4R lam = lc.real();
             const Real imag = max_abs(lc.imag()) / (1.0 + max_abs(lc));
             return std::max(imag, rel(lam.transpose() * metric() * lam, metric()));
           }});
  ctx.add({"transform.covariance", "structure constants invariant under the induced maps", S, Kind::Bound, 10.0, {},
           false, [](Rng& rng) {
             const auto s = random_structure(rng);
             const UnitBiquaternion q = random_unit_q(rng);
             const auto c = covariance_check(q, s);
             const Real scale = 1.0 + std::pow(max_abs(q.q()), 4);
             return std::max(c.c_check, c.c) / scale;
           }});
  ctx.add({"transform.closure", "composition of two induced Lorentz maps", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const auto s = random_structure(rng);
             const UnitBiquaternion q1 = random_unit_q(rng), q2 = random_unit_q(rng);
             const UnitBiquaternion q21(otimes_check(q2.q(), q1.q(), s));
             const Matrix4C lhs = lorentz_from_q_complex(q1, s) * lorentz_from_q_complex(q2, s);
             return rel(lhs, lorentz_from_q_complex(q21, s));
           }});
  ctx.add({"transform.u1_route", "U(1) on the spinor equals the c5 rotation of G and of (B, N)", S, Kind::Bound, 1.0,
           {}, false, [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto s = structure_constants(b);
             const DiracSpinor psi = random_spinor(rng);
             const Real alpha = rng.uniform(-std::numbers::pi, std::numbers::pi);
             const DiracSpinor rotated{std::exp(kI * alpha) * psi};
             const HalfSpinorPair real = vector_u1_real(to_vectors(psi, b), alpha, b);
             const HalfSpinorPair direct = to_vectors(rotated, b);
             return std::max({rel(g_vector(rotated, b), vector_u1(g_vector(psi, b), alpha, s)),
                              rel(real.B, direct.B), rel(real.N, direct.N)});
           }});
  ctx.add({"transform.u1_lagrangian", "Lagrangians invariant under local U(1)", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto s = structure_constants(b);
             const Jet<DiracSpinor> psi = random_spinor_jet(rng);
             const FourVectorC a = complexify(random_real_vector(rng));
             const Real e = rng.uniform(0.3, 1.5);
             const Real m = rng.uniform(0.2, 2.0);
             const Jet<Complex> alpha = random_real_jet(rng);
             const GaugedSpinor t = u1_gauge(psi, a, e, alpha);
             const Jet<FourVectorC> g = g_jet(psi, b);
             const Jet<FourVectorC> gt = vector_u1(g, alpha, s);
             const Jet<FourVectorC> route = g_jet(t.psi, b);
             Real r = std::max({rel(spinor_lagrangian(t.psi, t.A, e, m), spinor_lagrangian(psi, a, e, m)),
                                rel(vector_lagrangian(gt, t.A, e, m, s), vector_lagrangian(g, a, e, m, s)),
                                rel(gt.value, route.value)});
             for (std::size_t mu = 0; mu < 4; ++mu) r = std::max(r, rel(gt.d[mu], route.d[mu]));
             return r;
           }});
  ctx.add({"transform.de_moivre", "powers of the c5 rotation", S, Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const auto s = random_structure(rng);
             const Real alpha = rng.uniform(-std::numbers::pi, std::numbers::pi);
             const Matrix4C u = u1_matrix(alpha, s);
             Matrix4C p = Matrix4C::Identity();
             Real r = 0;
             for (int n = 1; n <= 8; ++n) {
               p = p * u;
               r = std::max(r, rel(p, u1_matrix(n * alpha, s)));
             }
             return r;
           }});
  ctx.add({"transform.chiral_route", "chiral rotation of the spinor is a phase of G", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto s = structure_constants(b);
             const DiracSpinor psi = random_spinor(rng);
             const Real a = rng.uniform(-std::numbers::pi, std::numbers::pi);
             const FourVectorC g = g_vector(psi, b);
             Jet<DiracSpinor> j = random_spinor_jet(rng);
             Jet<DiracSpinor> jc;
             jc.value = chiral(j.value, a);
             for (std::size_t mu = 0; mu < 4; ++mu) jc.d[mu] = chiral(j.d[mu], a);
             const FourVectorC A = complexify(random_real_vector(rng));
             const Real e = rng.uniform(-1.0, 1.0);
             const Real alpha = rng.uniform(-3.0, 3.0);
             return std::max({rel(g_vector(chiral(psi, a), b), chiral_vector(g, a)),
                              rel(spinor_lagrangian(jc, A, e, 0.0), spinor_lagrangian(j, A, e, 0.0)),
                              rel(mass_form(vector_u1(g, alpha, s)), mass_form(g))});
           }});
  ctx.add({"transform.representation", "representation change acts on G through c5", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto s = structure_constants(b);
             const Complex a = std::polar(rng.uniform(0.5, 2.0), rng.uniform(-3.0, 3.0));
             const TrinomialBasis bt = change_representation(b, a);
             const auto st = structure_constants(bt);
             const DiracSpinor psi = random_spinor(rng);
             const Jet<DiracSpinor> j = random_spinor_jet(rng);
             const FourVectorC A = complexify(random_real_vector(rng));
             const Real e = rng.uniform(-1.0, 1.0), m = rng.uniform(0.2, 2.0);
             return std::max(rel(g_vector(psi, bt), representation_change_vector(g_vector(psi, b), a, s)),
                             rel(vector_lagrangian(g_jet(j, bt), A, e, m, st), vector_lagrangian(g_jet(j, b), A, e, m, s)));
           }});
}

// --- mass --------------------------------------------------------------------------

// Spinors with |bar(R) L| bounded away from zero relative to |Psi|^2.
DiracSpinor nondegenerate_spinor(Rng& rng, const TrinomialBasis& b) {
  for (;;) {
    const DiracSpinor psi = random_spinor(rng);
    const auto rl = rl_decompose(psi, b);
    if (std::abs(bilinear(rl.R, rl.L)) > 0.05 * psi.squaredNorm()) return psi;
  }
}

void add_mass(Context& ctx) {
  const Suite S = Suite::mass;
  ctx.add({"mass.k_identities", "K-vector theorem and trilinear mass form", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const DiracSpinor psi = nondegenerate_spinor(rng, b);
             const auto r = k_identities(psi, b);
             const Real n1 = 1.0 + psi.norm(), n2 = 1.0 + psi.squaredNorm();
             return std::max({r.slash_r / n1, r.slash_l / n1, r.unit, r.trilinear / n2, r.mass / n2});
           }});
  ctx.add({"mass.split", "real and imaginary parts of K from the currents", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto s = structure_constants(b);
             const DiracSpinor psi = nondegenerate_spinor(rng, b);
             const SplitK k = split_K(psi, b, s);
             const Real n2 = 1.0 + psi.squaredNorm();
             return std::max({rel(k.pi, k.pi_g), rel(k.pi5, k.pi5_g), k.route / (1.0 + max_abs(k.re)),
                              k.orthogonality / (1.0 + max_abs(k.re) * max_abs(k.im)), k.trilinear / n2});
           }});
  ctx.add({"mass.degenerate", "pure chirality has no K", S, Kind::Exact, 1.0, {}, false, [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const auto rl = rl_decompose(random_spinor(rng), b);
             return std::max(expect_throw([&] { k_vector(rl.R, b); }), expect_throw([&] { k_vector(rl.L, b); }));
           }});
  ctx.add({"mass.rest_frame", "m Re K is the rest-frame energy-momentum", S, Kind::Bound, 1.0, 1e-12, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const Real m = rng.uniform(0.2, 3.0);
             const Eigen::Vector2cd chi(rng.complex(), rng.complex());
             const DiracSpinor u = plane_wave_spinor(FourVectorR(m, 0, 0, 0), m, chi);
             const KVector k = k_vector(u, b);
             return std::max(max_abs(FourVectorR{m * k.re} - FourVectorR(m, 0, 0, 0)), max_abs(k.im));
           }});
  ctx.add({"mass.plane_wave_K", "m K is the momentum of a plane wave", S, Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const Real m = rng.uniform(0.2, 3.0);
             const FourVectorR p = random_momentum(rng, m);
             const Eigen::Vector2cd chi(rng.complex(), rng.complex());
             const KVector k = k_vector(plane_wave_spinor(p, m, chi), b);
             return std::max(rel(FourVectorR{m * k.re}, p), max_abs(k.im) / (1.0 + max_abs(k.re)));
           }});
  ctx.add({"mass.phase_invariance", "K unchanged by a common complex factor", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const DiracSpinor psi = nondegenerate_spinor(rng, b);
             const Complex theta = std::polar(std::exp(rng.uniform(-2.0, 2.0)), rng.uniform(-3.0, 3.0));
             const auto rl = rl_decompose(psi, b);
             const KVector k0 = k_vector(psi, b);
             const KVector k1 = k_vector_from_parts(DiracSpinor{rl.R * theta}, DiracSpinor{rl.L * theta},
                                                    std::norm(theta) * psi.squaredNorm());
             return rel(k1.K, k0.K);
           }});
  ctx.add({"mass.operator_identity", "charged massive operator as a massless one with eA - mK", S, Kind::Bound, 1.0,
           {}, false, [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             Jet<DiracSpinor> j = random_spinor_jet(rng);
             j.value = nondegenerate_spinor(rng, b);
             const FourVectorC a = complexify(random_real_vector(rng));
             const Real e = rng.uniform(-1.0, 1.0), m = rng.uniform(0.2, 2.0);
             const auto r = massless_operator_identity(j, a, e, m, b);
             return std::max({r.r, r.l, r.psi}) / (1.0 + jet_scale(j));
           }});
  ctx.add({"mass.modified_lagrangian", "Lagrangian with Re K, and factored form independent of scale", S,
           Kind::Bound, 1.0, {}, false, [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             Jet<DiracSpinor> j = random_spinor_jet(rng);
             j.value = nondegenerate_spinor(rng, b);
             const FourVectorC a = complexify(random_real_vector(rng));
             const Real e = rng.uniform(-1.0, 1.0), m = rng.uniform(0.2, 2.0);
             const Complex t1 = std::polar(std::exp(rng.uniform(-2.0, 2.0)), rng.uniform(-3.0, 3.0));
             const Complex t2 = std::polar(std::exp(rng.uniform(-2.0, 2.0)), rng.uniform(-3.0, 3.0));
             const auto l1 = modified_lagrangian(j, a, e, m, b, t1);
             const auto l2 = modified_lagrangian(j, a, e, m, b, t2);
             return std::max({rel(l1.standard, l1.re_k), rel(l1.standard, l1.factored), rel(l1.factored, l2.factored)});
           }});
  ctx.add({"mass.massless_factor", "factored plane wave solves the massless equation", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const Real m = rng.uniform(0.2, 2.0);
             const FourVectorR A0 = random_real_vector(rng, 0.5);
             const Real e = rng.uniform(-1.0, 1.0);
             const Eigen::Vector2cd chi(rng.complex(), rng.complex());
             const SpinorField psi = gauged_plane_wave(random_momentum(rng, m), m, chi, A0, e);
             std::vector<FourVectorR> pts;
             for (int i = 0; i < 5; ++i) pts.push_back(random_point(rng));
             return massless_factor_check(psi, constant_gauge_field(A0, e), m, b, pts).massless_residual;
           }});
  ctx.add({"mass.loop_phase", "closed-loop phase vanishes without singularities", S, Kind::Bound, 100.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const Real m = rng.uniform(0.2, 2.0);
             const FourVectorR A0 = random_real_vector(rng, 0.5);
             const Real e = rng.uniform(-1.0, 1.0);
             const Eigen::Vector2cd chi(rng.complex(), rng.complex());
             const SpinorField psi = gauged_plane_wave(random_momentum(rng, m), m, chi, A0, e);
             const int axis_a = static_cast<int>(rng.next() % 4);
             const int axis_b = (axis_a + 1 + static_cast<int>(rng.next() % 3)) % 4;
             const PathPolyline loop = square_loop(random_point(rng), axis_a, axis_b, rng.uniform(0.5, 2.0));
             const LineIntegral li = line_integral(loop, constant_gauge_field(A0, e), k_field(psi, b), m, 64);
             return std::max(std::abs(li.phase), std::abs(li.log_scale));
           }});
  ctx.add({"mass.open_segment", "phase along a time segment at rest is -m T", S, Kind::Bound, 1.0, {}, false,
           [](Rng& rng) {
             const TrinomialBasis b = random_basis(rng);
             const Real m = rng.uniform(0.2, 2.0), T = rng.uniform(0.5, 5.0);
             const Eigen::Vector2cd chi(rng.complex(), rng.complex());
             const SpinorField psi = SpinorField::plane_wave(plane_wave_spinor(FourVectorR(m, 0, 0, 0), m, chi),
                                                             FourVectorR(m, 0, 0, 0));
             const PathPolyline seg{{FourVectorR{}, FourVectorR(T, 0, 0, 0)}, false};
             const LineIntegral li = line_integral(seg, GaugeField{}, k_field(psi, b), m, 64);
             return std::max(rel(Complex(li.phase), Complex(-m * T)), std::abs(li.log_scale));
           }});
}

std::vector<Check> all_checks() {
  Context ctx;
  add_algebra(ctx);
  add_basis(ctx);
  add_triality(ctx);
  add_dynamics(ctx);
  add_transform(ctx);
  add_mass(ctx);
  return std::move(ctx.checks);
}

bool selected(Suite want, Suite have) { return want == Suite::all || want == have; }

int thread_count(const SuiteConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

Record evaluate(const Check& c, const SuiteConfig& cfg) {
  const int n = c.single ? 1 : cfg.trials;
  std::vector<Real> results(static_cast<std::size_t>(n), 0.0);
  const std::uint64_t stream = stream_id(c.id);
  auto work = [&](int t) {
    Rng rng(cfg.seed, stream, static_cast<std::uint64_t>(t));
    Real r;
    try {
      r = c.trial(rng);
    } catch (const std::exception&) {
      r = std::numeric_limits<Real>::quiet_NaN();
    }
    results[static_cast<std::size_t>(t)] = r;
  };

  const int threads = std::min(thread_count(cfg), n);
  if (threads <= 1) {
    for (int t = 0; t < n; ++t) work(t);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        for (int t = next++; t < n; t = next++) work(t);
      });
    for (auto& th : pool) th.join();
  }

  Record rec{c.id, c.paper_ref, n, 0.0, 0.0, false};
  const bool any_nan = std::any_of(results.begin(), results.end(), [](Real r) { return !std::isfinite(r); });
  switch (c.kind) {
    case Kind::Exact:
      rec.tol = 0.0;
      rec.max_residual = *std::max_element(results.begin(), results.end());
      rec.pass = !any_nan && rec.max_residual == 0.0;
      break;
    case Kind::Bound:
      rec.tol = c.fixed_tol ? std::min(*c.fixed_tol, cfg.tol * c.tol_factor) : cfg.tol * c.tol_factor;
      rec.max_residual = *std::max_element(results.begin(), results.end());
      rec.pass = !any_nan && rec.max_residual <= rec.tol;
      break;
    case Kind::Counterexample:
      // Reported value is the smallest violation seen; it must stay above the floor.
      rec.tol = kCounterexampleFloor;
      rec.max_residual = *std::min_element(results.begin(), results.end());
      rec.pass = !any_nan && rec.max_residual >= kCounterexampleFloor;
      break;
  }
  if (any_nan) rec.max_residual = std::numeric_limits<Real>::max();
  return rec;
}

// --- observations -------------------------------------------------------------------

std::string sign_name(Real ratio) { return ratio > 0 ? "+" : "-"; }

nlohmann::ordered_json observe(const SuiteConfig& cfg) {
  nlohmann::ordered_json obs = nlohmann::ordered_json::object();
  const Suite want = cfg.suite;
  if (selected(want, Suite::triality)) {
    Rng rng(cfg.seed, stream_id("observe.sign_table"));
    const TrinomialBasis b = canonical_basis();
    const TrialityTriple x{random_real_vector(rng), {random_real_vector(rng), random_real_vector(rng)}};
    const Forms f0 = forms(x.V, x.pair, b), f1 = forms(ding_J(x).V, ding_J(x).pair, b);
    obs["ding_sign_table"] = {{"q_v'", sign_name(f1.q_v / f0.q_2.real()) + "q_2"},
                              {"q_1'", sign_name(f1.q_1.real() / f0.q_v) + "q_v"},
                              {"q_2'", sign_name(f1.q_2.real() / f0.q_1.real()) + "q_1"},
                              {"cubic'", sign_name(f1.cubic.real() / f0.cubic.real()) + "cubic"}};
  }
  if (selected(want, Suite::transform)) {
    int proper = 0, orthochronous = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      Rng rng(cfg.seed, stream_id("observe.lorentz_orientation"), static_cast<std::uint64_t>(t));
      const auto s = random_structure(rng);
      const Matrix4R lam = lorentz_from_q(random_unit_q(rng), s, 1e-8);
      proper += lam.determinant() > 0 ? 1 : 0;
      orthochronous += lam(0, 0) >= 1.0 - 1e-12 ? 1 : 0;
    }
    obs["lorentz_orientation"] = {{"samples", cfg.trials}, {"det_positive", proper}, {"l00_at_least_one", orthochronous}};
  }
  if (selected(want, Suite::dynamics)) {
    Real plus_sign = 0;
    for (int t = 0; t < std::min(cfg.trials, 50); ++t) {
      Rng rng(cfg.seed, stream_id("observe.chern_simons_plus_mass"), static_cast<std::uint64_t>(t));
      const auto s = random_structure(rng);
      const VectorField g = random_vector_field(rng, 2);
      const auto cs = chern_simons_check(g, rng.uniform(0.2, 2.0), s, random_point(rng));
      plus_sign = std::max(plus_sign, rel(cs.lhs, cs.rhs_real_plus_mass));
    }
    obs["chern_simons_real_form_plus_mass_sign"] = {{"max_residual", plus_sign}};
  }
  return obs;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  static const std::pair<std::string_view, Suite> table[] = {
      {"algebra", Suite::algebra},     {"basis", Suite::basis}, {"triality", Suite::triality},
      {"dynamics", Suite::dynamics},   {"transform", Suite::transform},
      {"mass", Suite::mass},           {"all", Suite::all}};
  for (const auto& [n, s] : table)
    if (n == name) return s;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::algebra: return "algebra";
    case Suite::basis: return "basis";
    case Suite::triality: return "triality";
    case Suite::dynamics: return "dynamics";
    case Suite::transform: return "transform";
    case Suite::mass: return "mass";
    case Suite::all: return "all";
  }
  return "all";
}

void validate(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (cfg.threads < 0) throw std::invalid_argument("threads must be non-negative");
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.config = cfg;
  for (const Check& c : all_checks())
    if (selected(cfg.suite, c.suite)) rep.records.push_back(evaluate(c, cfg));
  rep.observations = observe(cfg);
  rep.pass = std::all_of(rep.records.begin(), rep.records.end(), [](const Record& r) { return r.pass; });
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

nlohmann::ordered_json to_json(const SuiteReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["config"] = {{"suite", suite_name(report.config.suite)},
                 {"trials", report.config.trials},
                 {"seed", report.config.seed},
                 {"tol", report.config.tol}};
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records)
    j["records"].push_back({{"id", r.id},
                            {"paper_ref", r.paper_ref},
                            {"trials", r.trials},
                            {"max_residual", r.max_residual},
                            {"tol", r.tol},
                            {"pass", r.pass}});
  j["observations"] = report.observations;
  j["summary"] = {{"pass", report.pass}};
  if (with_timing) j["summary"]["wall_ms"] = report.wall_ms;
  return j;
}

void write_report(const SuiteReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file " + path);
  out << to_json(report).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing report file " + path);
}

std::string format_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& r : report.records) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-40s trials=%-5d residual=%-12.4g tol=%.3g\n", r.pass ? "PASS" : "FAIL",
                  r.id.c_str(), r.trials, r.max_residual, r.tol);
    os << line;
  }
  os << (report.pass ? "PASS" : "FAIL") << ' ' << report.records.size() << " records in "
     << static_cast<long>(report.wall_ms) << " ms\n";
  return os.str();
}

}  // namespace bqdirac
