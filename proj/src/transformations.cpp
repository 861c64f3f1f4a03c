#include "bqdirac/transformations.hpp"

#include <cmath>
#include <sstream>

#include "bqdirac/gamma.hpp"

namespace bqdirac {

namespace {

const Rank3TensorC& rotation_tensor(const UnitBiquaternion& q, const StructureTensors& s) {
  return q.norm() == QNorm::MinusOne ? s.c_check : s.c;
}

Matrix4C eta_c() { return metric().cast<Complex>(); }

}  // namespace

UnitBiquaternion::UnitBiquaternion(const FourVectorC& q, QNorm norm, Real tol) : q_(q), norm_(norm), tol_(tol) {
  const Real target = norm == QNorm::MinusOne ? -1.0 : 1.0;
  const Complex qq = minkowski_dot(q, q);
  if (std::abs(qq - target) > tol) {
    std::ostringstream msg;
    msg << "q.q = " << qq << ", expected " << target;
    throw NonUnitQ(msg.str());
  }
}

UnitBiquaternion UnitBiquaternion::conj() const {
  return UnitBiquaternion(FourVectorC{q_.conjugate()}, norm_, tol_);
}

Matrix4C s1_matrix(const UnitBiquaternion& q, const StructureTensors& s) {
  const Rank3TensorC& t = rotation_tensor(q, s);
  const auto ql = lower(q.q());
  Matrix4C m = Matrix4C::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int sg = 0; sg < 4; ++sg) m(mu, nu) += metric_diag(nu) * t(nu, mu, sg) * ql(sg);
  return m;
}

Matrix4C s2_matrix(const UnitBiquaternion& q, const StructureTensors& s) {
  const Rank3TensorC& t = rotation_tensor(q, s);
  const auto ql = lower(q.q());
  Matrix4C m = Matrix4C::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int sg = 0; sg < 4; ++sg) m(mu, nu) += ql(sg) * t(sg, mu, nu) * metric_diag(nu);
  return m;
}

FourVectorC s_left(const UnitBiquaternion& q, const FourVectorC& g, const StructureTensors& s) {
  return FourVectorC{s2_matrix(q, s) * g};
}

FourVectorC s_right(const UnitBiquaternion& q, const FourVectorC& g, const StructureTensors& s) {
  return FourVectorC{s1_matrix(q, s) * g};
}

Matrix4C lorentz_from_q_complex(const UnitBiquaternion& q, const StructureTensors& s) {
  return s2_matrix(q.conj(), s) * s1_matrix(q, s);
}

Matrix4R lorentz_from_q(const UnitBiquaternion& q, const StructureTensors& s, Real tol) {
  const Matrix4C lc = lorentz_from_q_complex(q, s);
  const Real im = max_abs(lc.imag());
  if (im > tol * (1.0 + max_abs(lc))) {
    std::ostringstream msg;
    msg << "Lambda(q) has imaginary part " << im;
    throw NonRealInput(msg.str());
  }
  return lc.real();
}

CovarianceResidual covariance_check(const UnitBiquaternion& q, const StructureTensors& s) {
  const Matrix4C lam = lorentz_from_q_complex(q, s);
  const Matrix4C m2 = s2_matrix(q.conj(), s);
  const Matrix4C m1 = s1_matrix(q, s);  // m1(lam, delta) = S1(q)_delta^lam
  auto residual = [&](const Rank3TensorC& t) {
    Real worst = 0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int l = 0; l < 4; ++l) {
          Complex acc = 0;
          for (int rho = 0; rho < 4; ++rho)
            for (int sg = 0; sg < 4; ++sg)
              for (int d = 0; d < 4; ++d) acc += lam(nu, rho) * m2(mu, sg) * t(sg, rho, d) * m1(l, d);
          worst = std::max(worst, std::abs(acc - t(mu, nu, l)));
        }
    return worst;
  };
  return {residual(s.c_check), residual(s.c)};
}

Matrix4C u1_matrix(Real alpha, const StructureTensors& s) {
  return std::cos(alpha) * Matrix4C::Identity() + kI * std::sin(alpha) * s.c5 * eta_c();
}

GaugedSpinor u1_gauge(const Jet<DiracSpinor>& psi, const FourVectorC& a, Real e, const Jet<Complex>& alpha) {
  if (e == 0.0) throw ZeroParameter("u1_gauge needs a nonzero coupling e");
  const Complex ph = std::exp(kI * alpha.value);
  GaugedSpinor out;
  out.psi.value = DiracSpinor{ph * psi.value};
  out.A = a;
  for (int mu = 0; mu < 4; ++mu) {
    const auto i = static_cast<std::size_t>(mu);
    out.psi.d[i] = DiracSpinor{ph * (psi.d[i] + kI * alpha.d[i] * psi.value)};
    out.A(mu) += metric_diag(mu) * alpha.d[i] / e;
  }
  return out;
}

Jet<FourVectorC> vector_u1(const Jet<FourVectorC>& g, const Jet<Complex>& alpha, const StructureTensors& s) {
  const Real al = alpha.value.real();
  const Matrix4C u = u1_matrix(al, s);
  const Matrix4C du = -std::sin(al) * Matrix4C::Identity() + kI * std::cos(al) * s.c5 * eta_c();
  Jet<FourVectorC> out;
  out.value = FourVectorC{u * g.value};
  for (std::size_t mu = 0; mu < 4; ++mu) out.d[mu] = FourVectorC{u * g.d[mu] + alpha.d[mu] * (du * g.value)};
  return out;
}

FourVectorC vector_u1(const FourVectorC& g, Real alpha, const StructureTensors& s) {
  return FourVectorC{u1_matrix(alpha, s) * g};
}

HalfSpinorPair vector_u1_real(const HalfSpinorPair& pair, Real alpha, const TrinomialBasis& b) {
  const Rank4Tensor eps_l = lower_all(epsilon_tensor());
  const auto jl = lower(b.j);
  const auto kl = lower(b.k);
  const auto bl = lower(pair.B);
  const auto nl = lower(pair.N);
  Eigen::Vector4d b_out, n_out;
  for (int mu = 0; mu < 4; ++mu) {
    Real eb = 0, en = 0, kjb = 0, kjn = 0;
    for (int nu = 0; nu < 4; ++nu) {
      for (int l = 0; l < 4; ++l)
        for (int r = 0; r < 4; ++r) {
          const Real w = eps_l(mu, nu, l, r) * b.k(l) * b.j(r);
          eb += w * pair.B(nu);
          en += w * pair.N(nu);
        }
      const Real kj = kl(mu) * jl(nu) - kl(nu) * jl(mu);
      kjn += kj * pair.N(nu);
      kjb += kj * pair.B(nu);
    }
    b_out(mu) = bl(mu) * std::cos(alpha) - (eb - kjn) * std::sin(alpha);
    n_out(mu) = nl(mu) * std::cos(alpha) - (en + kjb) * std::sin(alpha);
  }
  return {FourVectorR{raise(b_out)}, FourVectorR{raise(n_out)}};
}

DiracSpinor chiral(const DiracSpinor& psi, Real a) {
  return DiracSpinor{(std::cos(a) * Matrix4C::Identity() + kI * std::sin(a) * gamma5()) * psi};
}

FourVectorC chiral_vector(const FourVectorC& g, Real a) { return FourVectorC{std::exp(kI * a) * g}; }

Complex mass_form(const FourVectorC& g) {
  const FourVectorC gc{g.conjugate()};
  return -0.5 * (minkowski_dot(gc, gc) + minkowski_dot(g, g));
}

FourVectorC representation_change_vector(const FourVectorC& g, Complex a, const StructureTensors& s) {
  if (a == Complex(0.0)) throw ZeroParameter("representation parameter a must be nonzero");
  const Complex plus = 0.5 * (a + 1.0 / a);
  const Complex minus = 0.5 * (a - 1.0 / a);
  return FourVectorC{plus * g + minus * (s.c5 * lower(g))};
}

}  // namespace bqdirac
