#include "bqdirac/biquaternion.hpp"

#include <algorithm>
#include <sstream>

#include "bqdirac/gamma.hpp"

namespace bqdirac {

StructureTensors structure_constants(const TrinomialBasis& b, Real tol) {
  const ValidationReport rep = validate_basis(b, tol);
  if (!rep.passed()) {
    std::ostringstream msg;
    msg << "basis fails validation:";
    for (const auto& e : rep.entries)
      if (e.residual > tol) msg << ' ' << e.label << '=' << e.residual;
    throw InvalidBasis(msg.str());
  }

  const Rank4Tensor& t = t_tensor();
  const Rank4Tensor& eps = epsilon_tensor();
  const auto kl = lower(complexify(b.k));
  const auto jl = lower(complexify(b.j));

  StructureTensors s;
  s.basis = b;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int l = 0; l < 4; ++l) {
        Complex ck = 0, cj = 0;
        for (int r = 0; r < 4; ++r) {
          const Complex te = t(m, n, l, r) - kI * eps(m, n, l, r);
          ck += te * kl(r);
          cj += te * jl(r);
        }
        s.c(m, n, l) = ck;
        s.c_check(m, n, l) = cj;
      }

  for (int m = 0; m < 4; ++m)
    for (int l = 0; l < 4; ++l) {
      Complex acc = 0;
      for (int n = 0; n < 4; ++n) acc -= s.c(n, l, m) * jl(n);
      s.c5(m, l) = acc;
    }
  return s;
}

StructureRelationResidual structure_relations(const StructureTensors& s) {
  const auto kl = lower(s.basis.k);
  StructureRelationResidual out;
  for (int m = 0; m < 4; ++m)
    for (int l = 0; l < 4; ++l) {
      Complex from_check = 0;
      for (int n = 0; n < 4; ++n) {
        out.symmetry = std::max({out.symmetry, std::abs(s.c(m, n, l) - std::conj(s.c(l, n, m))),
                                 std::abs(s.c_check(m, n, l) - std::conj(s.c_check(l, n, m)))});
        from_check += s.c_check(n, l, m) * kl(n);
      }
      out.symmetry = std::max({out.symmetry, std::abs(from_check - s.c5(m, l)), std::abs(s.c5(m, l) + s.c5(l, m))});
    }

  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r)
        for (int l = 0; l < 4; ++l) {
          Complex a = 0, b = 0;
          for (int sg = 0; sg < 4; ++sg) {
            const Real e = metric_diag(sg);
            a += s.c(m, n, sg) * e * std::conj(s.c(sg, r, l)) + s.c(m, r, sg) * e * std::conj(s.c(sg, n, l));
            b += s.c_check(m, n, sg) * e * std::conj(s.c_check(sg, r, l)) +
                 s.c_check(m, r, sg) * e * std::conj(s.c_check(sg, n, l));
          }
          const Real target = (m == l && n == r) ? 2.0 * metric_diag(m) * metric_diag(n) : 0.0;
          out.clifford = std::max({out.clifford, std::abs(a - target), std::abs(b + target)});
        }

  const Matrix4C eta = metric().cast<Complex>();
  out.c5 = max_abs(s.c5 * eta * s.c5 - eta);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int l = 0; l < 4; ++l) {
        Complex lhs = 0, rhs = 0;
        for (int sg = 0; sg < 4; ++sg) {
          lhs -= s.c(m, n, sg) * metric_diag(sg) * s.c5(sg, l);
          rhs += std::conj(s.c5(m, sg)) * metric_diag(sg) * s.c(sg, n, l);
        }
        out.c5 = std::max({out.c5, std::abs(lhs - s.c_check(m, n, l)), std::abs(rhs - s.c_check(m, n, l))});
      }
  return out;
}

FourVectorC contract_outer(const Rank3TensorC& t, const FourVectorC& u, const FourVectorC& v) {
  const auto ul = lower(u);
  const auto vl = lower(v);
  FourVectorC out;
  for (int b = 0; b < 4; ++b) {
    Complex acc = 0;
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) acc += ul(a) * t(a, b, c) * vl(c);
    out(b) = acc;
  }
  return out;
}

FourVectorC otimes(const FourVectorC& g, const FourVectorC& h, const StructureTensors& s) {
  return contract_outer(s.c, g, h);
}

FourVectorC otimes_check(const FourVectorC& g, const FourVectorC& h, const StructureTensors& s) {
  return contract_outer(s.c_check, g, h);
}

FourVectorC jordan(const FourVectorC& g, const FourVectorC& k, const StructureTensors& s) {
  const Rank3TensorC tk = contract_last(t_tensor(), s.basis.k);
  return contract_outer(tk, g, k);
}

MatrixUnits matrix_units(const StructureTensors& s) {
  MatrixUnits u;
  for (int mu = 0; mu < 4; ++mu) {
    Matrix4C e;
    for (int nu = 0; nu < 4; ++nu)
      for (int lam = 0; lam < 4; ++lam) e(nu, lam) = s.c(nu, lam, mu) * metric_diag(lam);
    u.e[static_cast<std::size_t>(mu)] = e;
  }
  return u;
}

Matrix4C unit_combination(const MatrixUnits& u, const FourVectorC& g) {
  const auto gl = lower(g);
  Matrix4C out = Matrix4C::Zero();
  for (int mu = 0; mu < 4; ++mu) out += gl(mu) * u.e[static_cast<std::size_t>(mu)];
  return out;
}

const std::array<Matrix4C, 3>& canonical_quaternion_units() {
  static const std::array<Matrix4C, 3> units = [] {
    using C = Complex;
    const C i = kI;
    const C o(0.0), one(1.0);
    std::array<Matrix4C, 3> e;
    e[0] << o, -i, o, o,
            -i, o, o, o,
            o, o, o, -one,
            o, o, one, o;
    e[1] << o, o, -i, o,
            o, o, o, one,
            -i, o, o, o,
            o, -one, o, o;
    e[2] << o, o, o, -i,
            o, o, -one, o,
            o, one, o, o,
            -i, o, o, o;
    return e;
  }();
  return units;
}

VectorField dirac_operator_apply(const VectorField& field, const StructureTensors& s, DiracVariant variant,
                                 bool conjugate_coefficients) {
  const Rank3TensorC& c = variant == DiracVariant::D ? s.c : s.c_check;
  std::vector<VectorField::Term> out;
  out.reserve(field.terms().size());
  for (const auto& term : field.terms()) {
    // d_nu on exp(-i p.x) gives -i p_nu.
    const auto pl = lower(term.p);
    const auto vl = lower(term.coeff);
    FourVectorC r;
    for (int mu = 0; mu < 4; ++mu) {
      Complex acc = 0;
      for (int nu = 0; nu < 4; ++nu)
        for (int sg = 0; sg < 4; ++sg) {
          const Complex coeff = conjugate_coefficients ? std::conj(c(mu, nu, sg)) : c(mu, nu, sg);
          acc += coeff * (-kI * pl(nu)) * vl(sg);
        }
      r(mu) = acc;
    }
    out.push_back({r, term.p});
  }
  return VectorField(std::move(out));
}

VectorField box(const VectorField& field) {
  std::vector<VectorField::Term> out;
  out.reserve(field.terms().size());
  for (const auto& term : field.terms())
    out.push_back({FourVectorC{term.coeff * Complex(-minkowski_dot(term.p, term.p))}, term.p});
  return VectorField(std::move(out));
}

}  // namespace bqdirac
