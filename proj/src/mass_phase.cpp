#include "bqdirac/mass_phase.hpp"

#include <sstream>
#include <stdexcept>

#include "bqdirac/gamma.hpp"

namespace bqdirac {

namespace {

FourVectorC conj4(const FourVectorC& v) { return FourVectorC{v.conjugate()}; }

// i g^mu (d_mu X - ie A_mu X + i mk K_mu X), summed over mu
DiracSpinor covariant_slash(const Jet<DiracSpinor>& x, const FourVectorC& a, Real e, const FourVectorC& k, Real mk) {
  const auto al = lower(a);
  const auto kl = lower(k);
  DiracSpinor out;
  for (int mu = 0; mu < 4; ++mu) {
    const DiracSpinor cov{x.d[static_cast<std::size_t>(mu)] - kI * e * al(mu) * x.value + kI * mk * kl(mu) * x.value};
    out += kI * gamma(mu) * cov;
  }
  return out;
}

struct ChiralJets {
  Jet<DiracSpinor> r;
  Jet<DiracSpinor> l;
};

ChiralJets chiral_jets(const Jet<DiracSpinor>& psi, const TrinomialBasis& b) {
  ChiralJets out;
  const auto v = rl_decompose(psi.value, b);
  out.r.value = v.R;
  out.l.value = v.L;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const auto d = rl_decompose(psi.d[mu], b);
    out.r.d[mu] = d.R;
    out.l.d[mu] = d.L;
  }
  return out;
}

bool is_constant(const GaugeField& a) {
  for (const auto& t : a.A.terms())
    if (!t.p.isZero()) return false;
  return true;
}

}  // namespace

KVector k_vector_from_parts(const DiracSpinor& r, const DiracSpinor& l, Real scale) {
  const Complex rl = bilinear(r, l);
  const Complex lr = bilinear(l, r);
  if (std::abs(rl) <= kChiralityThreshold * scale || std::abs(lr) <= kChiralityThreshold * scale) {
    std::ostringstream msg;
    msg << "bar(R) L = " << rl << " is degenerate (pure chirality)";
    throw DegenerateChirality(msg.str());
  }
  KVector out;
  out.K = FourVectorC{current(r, r) / (2.0 * rl) + current(l, l) / (2.0 * lr)};
  out.re = out.K.real();
  out.im = out.K.imag();
  return out;
}

KVector k_vector(const DiracSpinor& psi, const TrinomialBasis& b) {
  const auto rl = rl_decompose(psi, b);
  return k_vector_from_parts(rl.R, rl.L, psi.squaredNorm());
}

KIdentityResidual k_identities(const DiracSpinor& psi, const TrinomialBasis& b) {
  const auto d = rl_decompose(psi, b);
  const DiracSpinor& R = d.R;
  const DiracSpinor& L = d.L;
  const Complex rl = bilinear(R, L);
  const Complex lr = bilinear(L, R);
  const KVector k = k_vector_from_parts(R, L, psi.squaredNorm());
  const FourVectorC kp{current(R, R) / (2.0 * rl)};
  const FourVectorC km{current(L, L) / (2.0 * lr)};
  const Matrix4C ks = slash(k.K);
  const Matrix4C ks_conj = slash(conj4(k.K));

  KIdentityResidual out;
  out.slash_r = std::max({max_abs(ks * R - L), max_abs(slash(kp) * R), max_abs(dirac_bar(R) * ks_conj - dirac_bar(L))});
  out.slash_l = std::max({max_abs(ks * L - R), max_abs(slash(km) * L), max_abs(dirac_bar(L) * ks_conj - dirac_bar(R))});
  out.unit = std::abs(minkowski_dot(k.K, k.K) - 1.0);
  const FourVectorC jr = current(R, R);
  const FourVectorC jl = current(L, L);
  out.trilinear = std::max({std::abs(rl - minkowski_dot(k.K, jr)), std::abs(rl - minkowski_dot(conj4(k.K), jl)),
                            std::abs(lr - minkowski_dot(k.K, jl)), std::abs(lr - minkowski_dot(conj4(k.K), jr))});
  out.mass = std::abs(bilinear(psi, psi) - bilinear(psi, ks, psi));
  return out;
}

SplitK split_K(const DiracSpinor& psi, const TrinomialBasis& b, const StructureTensors& s) {
  const KVector k = k_vector(psi, b);
  const Real scale = psi.squaredNorm();
  SplitK out;
  out.pi = current(psi, psi);
  for (int mu = 0; mu < 4; ++mu) out.pi5(mu) = bilinear(psi, gamma(mu) * gamma5(), psi);

  const FourVectorC g = g_vector(psi, b);
  const auto gl = lower(g);
  const Eigen::Matrix<Complex, 4, 1> gl_conj = gl.conjugate();
  for (int mu = 0; mu < 4; ++mu)
    for (int l = 0; l < 4; ++l)
      for (int n = 0; n < 4; ++n) {
        out.pi_g(mu) += gl_conj(l) * s.c(l, mu, n) * gl(n);
        out.pi5_g(mu) -= gl_conj(l) * s.c_check(l, mu, n) * gl(n);
      }

  const Complex pp = minkowski_dot(out.pi, out.pi);
  if (std::abs(pp) <= kChiralityThreshold * scale * scale) {
    std::ostringstream msg;
    msg << "pi.pi = " << pp << " is degenerate";
    throw DegenerateCurrent(msg.str());
  }
  const Complex pbar = bilinear(psi, psi);
  const Complex p5 = bilinear(psi, gamma5(), psi);
  out.re = require_real(FourVectorC{out.pi * pbar / pp}, 1e-8, "Re K");
  out.im = require_real(FourVectorC{-kI * out.pi5 * p5 / pp}, 1e-8, "Im K");

  out.route = std::max(max_abs(out.re - k.re), max_abs(out.im - k.im));
  out.orthogonality = std::abs(minkowski_dot(out.re, out.im));
  out.trilinear = std::max(std::abs(bilinear(psi, slash(out.im), psi)), std::abs(bilinear(psi, slash(out.re), psi) - pbar));
  return out;
}

OperatorIdentityResidual massless_operator_identity(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e,
                                                    Real m, const TrinomialBasis& b) {
  const ChiralJets c = chiral_jets(psi, b);
  const KVector k = k_vector(psi.value, b);
  auto residual = [&](const Jet<DiracSpinor>& x, const DiracSpinor& partner) {
    const DiracSpinor lhs{covariant_slash(x, a, e, k.K, 0.0) - m * partner};
    return max_abs(lhs - covariant_slash(x, a, e, k.K, m));
  };
  return {residual(c.r, c.l.value), residual(c.l, c.r.value), residual(psi, psi.value)};
}

ModifiedLagrangian modified_lagrangian(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e, Real m,
                                       const TrinomialBasis& b, Complex theta) {
  if (theta == Complex(0.0)) throw ZeroParameter("theta must be nonzero");
  const KVector k = k_vector(psi.value, b);
  ModifiedLagrangian out;
  out.standard = bilinear(psi.value, covariant_slash(psi, a, e, k.K, 0.0)) - m * bilinear(psi.value, psi.value);
  out.re_k = bilinear(psi.value, covariant_slash(psi, a, e, complexify(k.re), m));

  const auto al = lower(a);
  const auto kl = lower(k.K);
  Jet<DiracSpinor> psi0;
  psi0.value = DiracSpinor{psi.value * theta};
  for (int mu = 0; mu < 4; ++mu) {
    const auto i = static_cast<std::size_t>(mu);
    const Complex dtheta = -kI * (e * al(mu) - m * kl(mu)) * theta;
    psi0.d[i] = DiracSpinor{psi.d[i] * theta + psi.value * dtheta};
  }
  const DiracSpinor barred_partner{psi.value / std::conj(theta)};  // bar of this is bar(Psi) / theta
  out.factored = bilinear(barred_partner, covariant_slash(psi0, FourVectorC{}, 0.0, k.K, 0.0));
  return out;
}

SpinorField massless_factor(const SpinorField& psi, const GaugeField& a, Real m, const TrinomialBasis& b) {
  if (!is_constant(a)) throw std::invalid_argument("massless_factor needs a constant potential");
  if (psi.terms().size() != 1) throw std::invalid_argument("massless_factor needs a single plane wave");
  const auto& t = psi.terms().front();
  const KVector k = k_vector(t.coeff, b);
  if (max_abs(k.im) > 1e-10 * (1.0 + max_abs(k.re)))
    throw std::invalid_argument("massless_factor needs a real K");
  const FourVectorR a0 = a.A.empty() ? FourVectorR{} : FourVectorR{a.at(FourVectorR{}).real()};
  const FourVectorR q{a.e * a0 - m * k.re};
  return SpinorField({{t.coeff, FourVectorR{t.p + q}}});
}

FactorCheck massless_factor_check(const SpinorField& psi, const GaugeField& a, Real m, const TrinomialBasis& b,
                                  const std::vector<FourVectorR>& points) {
  const SpinorField psi0 = massless_factor(psi, a, m, b);
  FactorCheck out;
  for (const auto& x : points) {
    const auto id = massless_operator_identity(psi.jet(x), a.at(x), a.e, m, b);
    out.operator_residual = std::max({out.operator_residual, id.r, id.l, id.psi});
    const auto j0 = psi0.jet(x);
    const DiracSpinor massless = covariant_slash(j0, FourVectorC{}, 0.0, FourVectorC{}, 0.0);
    out.massless_residual = std::max(out.massless_residual, max_abs(massless) / (1.0 + max_abs(j0.value)));
  }
  return out;
}

KField k_field(const SpinorField& psi, const TrinomialBasis& b) {
  return [psi, b](const FourVectorR& x) { return k_vector(psi(x), b); };
}

LineIntegral line_integral(const PathPolyline& path, const GaugeField& a, const KField& k, Real m, int nodes) {
  if (nodes < 1) throw std::invalid_argument("nodes per segment must be positive");
  if (path.vertices.size() < 2) throw std::invalid_argument("a path needs at least two vertices");
  if (path.closed && max_abs(path.vertices.front() - path.vertices.back()) > 1e-12)
    throw std::invalid_argument("closed path must end at its first vertex");

  LineIntegral out;
  for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s) {
    const FourVectorR& x0 = path.vertices[s];
    const FourVectorR dx{(path.vertices[s + 1] - x0) / static_cast<Real>(nodes)};
    for (int n = 0; n < nodes; ++n) {
      const FourVectorR x{x0 + (n + 0.5) * dx};
      KVector kx;
      try {
        kx = k(x);
      } catch (const DegenerateChirality& err) {
        std::ostringstream msg;
        msg << err.what() << " at node (" << x(0) << ", " << x(1) << ", " << x(2) << ", " << x(3) << ")";
        throw DegenerateChirality(msg.str());
      }
      const FourVectorR ax{a.at(x).real()};
      out.phase += minkowski_dot(FourVectorR{a.e * ax - m * kx.re}, dx);
      out.log_scale += -m * minkowski_dot(kx.im, dx);
    }
  }
  return out;
}

PathPolyline square_loop(const FourVectorR& corner, int axis_a, int axis_b, Real side) {
  FourVectorR ea, eb;
  ea(axis_a) = side;
  eb(axis_b) = side;
  PathPolyline p;
  p.closed = true;
  p.vertices = {corner, FourVectorR{corner + ea}, FourVectorR{corner + ea + eb}, FourVectorR{corner + eb}, corner};
  return p;
}

}  // namespace bqdirac
