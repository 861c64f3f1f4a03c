#include "bqdirac/field_dynamics.hpp"

#include <algorithm>

#include "bqdirac/gamma.hpp"

namespace bqdirac {

namespace {

FourVectorC conj4(const FourVectorC& v) { return FourVectorC{v.conjugate()}; }

// Contractions of the rank-4 constants with j or k, computed once per call site.
struct ThreeIndexConstants {
  Rank3TensorC eps_j, t_j, eps_k, t_k;
  explicit ThreeIndexConstants(const TrinomialBasis& b)
      : eps_j(contract_last(epsilon_tensor(), b.j)),
        t_j(contract_last(t_tensor(), b.j)),
        eps_k(contract_last(epsilon_tensor(), b.k)),
        t_k(contract_last(t_tensor(), b.k)) {}
};

// T^{mu nu lam} X_{nu lam} where X_{nu lam} = d_nu V_lam (lam lowered from the jet).
FourVectorC contract_derivative(const Rank3TensorC& t, const Jet<FourVectorC>& v) {
  FourVectorC out;
  for (int mu = 0; mu < 4; ++mu) {
    Complex acc = 0;
    for (int nu = 0; nu < 4; ++nu) {
      const auto dl = lower(v.d[static_cast<std::size_t>(nu)]);
      for (int lam = 0; lam < 4; ++lam) acc += t(mu, nu, lam) * dl(lam);
    }
    out(mu) = acc;
  }
  return out;
}

// T^{mu nu lam} A_nu V_lam
FourVectorC contract_gauge(const Rank3TensorC& t, const FourVectorC& a, const FourVectorC& v) {
  const auto al = lower(a);
  const auto vl = lower(v);
  FourVectorC out;
  for (int mu = 0; mu < 4; ++mu) {
    Complex acc = 0;
    for (int nu = 0; nu < 4; ++nu)
      for (int lam = 0; lam < 4; ++lam) acc += t(mu, nu, lam) * al(nu) * vl(lam);
    out(mu) = acc;
  }
  return out;
}

Matrix4C raise_both(const Matrix4C& f) { return metric().cast<Complex>() * f * metric().cast<Complex>(); }

}  // namespace

DiracSpinor spinor_dirac_residual(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e, Real m) {
  const auto al = lower(a);
  DiracSpinor out{-m * psi.value};
  for (int mu = 0; mu < 4; ++mu) {
    const DiracSpinor cov{psi.d[static_cast<std::size_t>(mu)] - kI * e * al(mu) * psi.value};
    out += kI * gamma(mu) * cov;
  }
  return out;
}

Complex spinor_lagrangian(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e, Real m) {
  const auto al = lower(a);
  Complex kinetic = 0;
  for (int mu = 0; mu < 4; ++mu) {
    const DiracSpinor cov{psi.d[static_cast<std::size_t>(mu)] - kI * e * al(mu) * psi.value};
    const Matrix4C ig = kI * gamma(mu);
    kinetic += bilinear(psi.value, ig, cov) - bilinear(cov, ig, psi.value);
  }
  return 0.5 * kinetic - m * bilinear(psi.value, psi.value);
}

Complex spinor_lagrangian(const SpinorField& psi, const GaugeField& a, Real m, const FourVectorR& x) {
  return spinor_lagrangian(psi.jet(x), a.at(x), a.e, m);
}

std::array<FourVectorC, 4> gauge_derivative(const Jet<FourVectorC>& g, const FourVectorC& a, Real e,
                                            const StructureTensors& s) {
  const auto al = lower(a);
  const FourVectorC c5g = apply_c5(s, g.value);
  std::array<FourVectorC, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    const auto i = static_cast<std::size_t>(mu);
    out[i] = FourVectorC{g.d[i] - kI * e * al(mu) * c5g};
  }
  return out;
}

Complex vector_lagrangian(const Jet<FourVectorC>& g, const FourVectorC& a, Real e, Real m, const StructureTensors& s) {
  const auto nabla = gauge_derivative(g, a, e, s);
  const auto gl = lower(g.value);
  const Eigen::Matrix<Complex, 4, 1> gl_conj = gl.conjugate();
  Complex kinetic = 0;
  for (int mu = 0; mu < 4; ++mu) {
    const auto nl = lower(nabla[static_cast<std::size_t>(mu)]);
    for (int nu = 0; nu < 4; ++nu)
      for (int lam = 0; lam < 4; ++lam) {
        const Complex ic = kI * s.c_check(nu, mu, lam);
        kinetic += std::conj(nl(nu)) * ic * gl(lam) - gl_conj(nu) * ic * nl(lam);
      }
  }
  const FourVectorC gc = conj4(g.value);
  return 0.5 * (kinetic + m * (minkowski_dot(gc, gc) + minkowski_dot(g.value, g.value)));
}

Complex vector_lagrangian(const VectorField& g, const GaugeField& a, Real m, const StructureTensors& s,
                          const FourVectorR& x) {
  return vector_lagrangian(g.jet(x), a.at(x), a.e, m, s);
}

FourVectorC vector_dirac_residual(const Jet<FourVectorC>& g, const FourVectorC& a, Real e, Real m,
                                  const StructureTensors& s) {
  const auto nabla = gauge_derivative(g, a, e, s);
  FourVectorC out{-m * g.value.conjugate()};
  for (int nu = 0; nu < 4; ++nu) {
    const auto nl = lower(nabla[static_cast<std::size_t>(nu)]);
    for (int mu = 0; mu < 4; ++mu)
      for (int lam = 0; lam < 4; ++lam) out(mu) += s.c_check(mu, nu, lam) * kI * nl(lam);
  }
  return out;
}

FourVectorC vector_dirac_residual(const VectorField& g, const GaugeField& a, Real m, const StructureTensors& s,
                                  const FourVectorR& x) {
  return vector_dirac_residual(g.jet(x), a.at(x), a.e, m, s);
}

Matrix4C field_strength_at(const Jet<FourVectorC>& g, Real m, const StructureTensors& s) {
  const auto jl = lower(s.basis.j);
  const auto gl_conj = lower(conj4(g.value));
  Matrix4C dl;  // dl(mu, nu) = d_mu G_nu
  for (int mu = 0; mu < 4; ++mu) dl.row(mu) = lower(g.d[static_cast<std::size_t>(mu)]).transpose();
  Matrix4C f;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      f(mu, nu) = (dl(mu, nu) + kI * m * jl(mu) * gl_conj(nu)) - (dl(nu, mu) + kI * m * jl(nu) * gl_conj(mu));
  return f;
}

SelfDualResidual selfdual_residual(const Jet<FourVectorC>& g, Real m, const StructureTensors& s) {
  const auto jl = lower(s.basis.j);
  SelfDualResidual out;
  for (int mu = 0; mu < 4; ++mu)
    out.divergence += g.d[static_cast<std::size_t>(mu)](mu) - kI * m * jl(mu) * std::conj(g.value(mu));

  const Matrix4C f = field_strength_at(g, m, s);
  const Matrix4C fu = raise_both(f);
  const Rank4Tensor eps_l = lower_all(epsilon_tensor());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Complex acc = 0;
      for (int l = 0; l < 4; ++l)
        for (int r = 0; r < 4; ++r) acc += eps_l(mu, nu, l, r) * fu(l, r);
      out.dual(mu, nu) = f(mu, nu) - 0.5 * kI * acc;
    }
  return out;
}

SelfDualResidual selfdual_residual(const VectorField& g, Real m, const StructureTensors& s, const FourVectorR& x) {
  return selfdual_residual(g.jet(x), m, s);
}

RealFormResidual real_form_residual(const Jet<FourVectorC>& b_field, const Jet<FourVectorC>& n_field,
                                    const FourVectorC& a, Real e, Real m, const StructureTensors& s) {
  const ThreeIndexConstants k3(s.basis);
  const FourVectorC& B = b_field.value;
  const FourVectorC& N = n_field.value;
  RealFormResidual out;
  out.res_B = FourVectorC{contract_derivative(k3.eps_j, b_field) - contract_derivative(k3.t_j, n_field) -
                          e * (contract_gauge(k3.t_k, a, B) + contract_gauge(k3.eps_k, a, N)) - m * B};
  out.res_N = FourVectorC{contract_derivative(k3.eps_j, n_field) + contract_derivative(k3.t_j, b_field) -
                          e * (contract_gauge(k3.t_k, a, N) - contract_gauge(k3.eps_k, a, B)) + m * N};
  return out;
}

RealFormResidual real_form_residual(const VectorField& b_field, const VectorField& n_field, const GaugeField& a,
                                    Real m, const StructureTensors& s, const FourVectorR& x) {
  return real_form_residual(b_field.jet(x), n_field.jet(x), a.at(x), a.e, m, s);
}

PrimedFormResidual primed_form_residual(const Jet<FourVectorC>& b_field, const Jet<FourVectorC>& n_field,
                                        const FourVectorC& a, Real e, Real m, const StructureTensors& s) {
  const ThreeIndexConstants k3(s.basis);
  const auto jl = lower(s.basis.j);
  const FourVectorC& B = b_field.value;
  const FourVectorC& N = n_field.value;

  PrimedFormResidual out;
  const FourVectorC bracket_n{m * B + e * (contract_gauge(k3.t_k, a, B) + contract_gauge(k3.eps_k, a, N))};
  const FourVectorC bracket_b{m * N - e * (contract_gauge(k3.t_k, a, N) - contract_gauge(k3.eps_k, a, B))};
  for (int mu = 0; mu < 4; ++mu) {
    out.div_N += n_field.d[static_cast<std::size_t>(mu)](mu) - bracket_n(mu) * jl(mu);
    out.div_B += b_field.d[static_cast<std::size_t>(mu)](mu) - bracket_b(mu) * jl(mu);
  }

  // Lowered eps_j_{mu nu rho}.
  Rank3TensorC eps_j_low;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r)
        eps_j_low(p, q, r) = metric_diag(p) * metric_diag(q) * metric_diag(r) * k3.eps_j(p, q, r);

  const auto al = lower(a);
  // X_{mu nu}^{lam rho} A_lam V_rho with X = j_mu eta_{nu sigma} eps_k^{sigma lam rho} - 1/2 eps_j_{mu nu sigma} t_k^{sigma lam rho}
  auto primed = [&](const Jet<FourVectorC>& v, Real mass_sign) {
    const auto vl = lower(v.value);
    Matrix4C out_m;
    for (int mu = 0; mu < 4; ++mu) {
      const auto dl = lower(v.d[static_cast<std::size_t>(mu)]);
      for (int nu = 0; nu < 4; ++nu) {
        Complex acc = dl(nu);
        for (int r = 0; r < 4; ++r) acc += mass_sign * 0.5 * m * eps_j_low(mu, nu, r) * v.value(r);
        Complex gauge = 0;
        for (int lam = 0; lam < 4; ++lam)
          for (int r = 0; r < 4; ++r) {
            Complex x = jl(mu) * metric_diag(nu) * k3.eps_k(nu, lam, r);
            for (int sg = 0; sg < 4; ++sg) x -= 0.5 * eps_j_low(mu, nu, sg) * k3.t_k(sg, lam, r);
            gauge += x * al(lam) * vl(r);
          }
        out_m(mu, nu) = acc + e * gauge;
      }
    }
    return out_m;
  };
  const Matrix4C pn = primed(n_field, +1.0);
  const Matrix4C pb = primed(b_field, -1.0);
  const Matrix4C pb_up = raise_both(pb);
  const Rank4Tensor eps_l = lower_all(epsilon_tensor());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Complex acc = 0;
      for (int l = 0; l < 4; ++l)
        for (int r = 0; r < 4; ++r) acc += eps_l(mu, nu, l, r) * (pb_up(l, r) - pb_up(r, l));
      out.duality(mu, nu) = (pn(mu, nu) - pn(nu, mu)) - 0.5 * acc;
    }
  return out;
}

std::pair<VectorField, VectorField> split_real_imag(const VectorField& g) {
  const VectorField gc = g.conj();
  return {(g + gc) * Complex(0.5), (g - gc) * Complex(0.0, -0.5)};
}

FieldStrength field_strength(const VectorField& g, Real m, const StructureTensors& s) {
  const auto jl = lower(s.basis.j);
  std::array<ScalarField, 4> gl, gl_conj;
  for (int nu = 0; nu < 4; ++nu) {
    gl[static_cast<std::size_t>(nu)] = lower_component(g, nu);
    gl_conj[static_cast<std::size_t>(nu)] = gl[static_cast<std::size_t>(nu)].conj();
  }
  FieldStrength fs;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const auto i = static_cast<std::size_t>(mu);
      const auto k = static_cast<std::size_t>(nu);
      if (mu == nu) continue;
      fs.G[i][k] = gl[k].derivative(mu) + gl_conj[k] * (kI * m * jl(mu)) - gl[i].derivative(nu) -
                   gl_conj[i] * (kI * m * jl(nu));
    }
  return fs;
}

Real bianchi_residual(const FieldStrength& fs, Real m, const StructureTensors& s, const FourVectorR& x) {
  const auto jl = lower(s.basis.j);
  std::array<std::array<Jet<Complex>, 4>, 4> jets;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) jets[a][b] = fs.G[a][b].jet(x);
  auto nabla_c = [&](int mu, int nu, int lam) {
    const auto& jt = jets[static_cast<std::size_t>(nu)][static_cast<std::size_t>(lam)];
    return jt.d[static_cast<std::size_t>(mu)] + kI * m * jl(mu) * std::conj(jt.value);
  };
  Real worst = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int lam = 0; lam < 4; ++lam)
        worst = std::max(worst, std::abs(nabla_c(mu, nu, lam) + nabla_c(lam, mu, nu) + nabla_c(nu, lam, mu)));
  return worst;
}

ChernSimons chern_simons_check(const VectorField& g, Real m, const StructureTensors& s, const FourVectorR& x) {
  const Rank4Tensor& eps = epsilon_tensor();
  const auto jl = lower(s.basis.j);
  const FieldStrength fs = field_strength(g, m, s);

  std::array<std::array<Jet<Complex>, 4>, 4> f;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) f[a][b] = fs.G[a][b].jet(x);

  std::array<Jet<Complex>, 4> gl, bl, nl;
  std::array<std::array<Jet<Complex>, 4>, 4> dbl, dnl;  // jets of d_lam B_rho and d_lam N_rho
  for (int nu = 0; nu < 4; ++nu) {
    const auto i = static_cast<std::size_t>(nu);
    const ScalarField comp = lower_component(g, nu);
    const ScalarField bfield = (comp + comp.conj()) * Complex(0.5);
    const ScalarField nfield = (comp - comp.conj()) * Complex(0.0, -0.5);
    gl[i] = comp.jet(x);
    bl[i] = bfield.jet(x);
    nl[i] = nfield.jet(x);
    for (int lam = 0; lam < 4; ++lam) {
      dbl[static_cast<std::size_t>(lam)][i] = bfield.derivative(lam).jet(x);
      dnl[static_cast<std::size_t>(lam)][i] = nfield.derivative(lam).jet(x);
    }
  }

  ChernSimons out;
  Complex rhs_mass = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int lam = 0; lam < 4; ++lam)
        for (int rho = 0; rho < 4; ++rho) {
          const Real e = eps(mu, nu, lam, rho);
          if (e == 0.0) continue;
          const auto M = static_cast<std::size_t>(mu), N = static_cast<std::size_t>(nu),
                     L = static_cast<std::size_t>(lam), R = static_cast<std::size_t>(rho);
          const Complex fmn = f[M][N].value, flr = f[L][R].value;
          out.lhs += 0.25 * e * (fmn * flr + std::conj(fmn) * std::conj(flr));

          const Complex term = gl[N].d[M] * flr + gl[N].value * f[L][R].d[M];
          out.rhs += 0.5 * e * (term + std::conj(term));

          const Complex bb = bl[N].d[M] * dbl[L][R].value + bl[N].value * dbl[L][R].d[M];
          const Complex nn = nl[N].d[M] * dnl[L][R].value + nl[N].value * dnl[L][R].d[M];
          const Complex bn = bl[N].d[M] * nl[L].value + bl[N].value * nl[L].d[M];
          out.rhs_real += 2.0 * e * (bb - nn);
          rhs_mass += 2.0 * e * 2.0 * m * jl(rho) * bn;
        }
  out.rhs_real_plus_mass = out.rhs_real + rhs_mass;
  out.rhs_real -= rhs_mass;
  return out;
}

}  // namespace bqdirac
