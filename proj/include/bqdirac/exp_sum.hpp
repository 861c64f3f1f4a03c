#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "bqdirac/types.hpp"

namespace bqdirac {

// Coefficient traits: a field coefficient is either a complex scalar or a
// fixed-size complex Eigen object (spinor, 4-vector, matrix).
template <typename T>
T zero_value() {
  if constexpr (std::is_same_v<T, Complex>) {
    return Complex(0.0);
  } else {
    return T{T::Base::Zero()};
  }
}

template <typename T>
T conj_value(const T& v) {
  if constexpr (std::is_same_v<T, Complex>) {
    return std::conj(v);
  } else {
    return T{v.conjugate()};
  }
}

template <typename T>
T scale_value(const T& v, Complex z) {
  if constexpr (std::is_same_v<T, Complex>) {
    return z * v;
  } else {
    return T{v * z};
  }
}

template <typename T>
Real magnitude(const T& v) {
  if constexpr (std::is_same_v<T, Complex>) {
    return std::abs(v);
  } else {
    return max_abs(v);
  }
}

/// Value and first derivatives d[mu] = d/dx^mu of a field at one point.
template <typename T>
struct Jet {
  T value = zero_value<T>();
  std::array<T, 4> d{zero_value<T>(), zero_value<T>(), zero_value<T>(), zero_value<T>()};
};

/// A finite sum  sum_k a_k exp(-i p_k . x)  with real wavevectors p_k.
///
/// Differentiation, conjugation and pointwise products are exact: d_mu
/// multiplies a term by -i p_mu, conjugation negates the wavevector, and a
/// product adds wavevectors. Terms with identical wavevectors are merged.
template <typename T>
class ExpSumField {
 public:
  struct Term {
    T coeff;
    FourVectorR p;
  };

  ExpSumField() = default;
  explicit ExpSumField(std::vector<Term> terms) : terms_(std::move(terms)) { merge(); }

  static ExpSumField constant(const T& value) { return ExpSumField({Term{value, FourVectorR{}}}); }
  static ExpSumField plane_wave(const T& amplitude, const FourVectorR& p) {
    return ExpSumField({Term{amplitude, p}});
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  T operator()(const FourVectorR& x) const {
    T out = zero_value<T>();
    for (const auto& t : terms_) out += scale_value(t.coeff, phase(t.p, x));
    return out;
  }

  Jet<T> jet(const FourVectorR& x) const {
    Jet<T> j;
    for (const auto& t : terms_) {
      const Complex ph = phase(t.p, x);
      const T v = scale_value(t.coeff, ph);
      j.value += v;
      const auto pl = lower(t.p);
      for (int mu = 0; mu < 4; ++mu) j.d[static_cast<std::size_t>(mu)] += scale_value(v, -kI * pl(mu));
    }
    return j;
  }

  /// d/dx^mu
  ExpSumField derivative(int mu) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      const Real p_mu = metric_diag(mu) * t.p(mu);
      if (p_mu != 0.0) out.push_back({scale_value(t.coeff, -kI * p_mu), t.p});
    }
    return ExpSumField(std::move(out));
  }

  ExpSumField conj() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({conj_value(t.coeff), FourVectorR{-t.p}});
    return ExpSumField(std::move(out));
  }

  /// Apply a complex-linear map to every coefficient.
  template <typename F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<typename ExpSumField<U>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({f(t.coeff), t.p});
    return ExpSumField<U>(std::move(out));
  }

  ExpSumField& operator+=(const ExpSumField& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    merge();
    return *this;
  }
  friend ExpSumField operator+(ExpSumField a, const ExpSumField& b) { return a += b; }
  friend ExpSumField operator-(ExpSumField a, const ExpSumField& b) { return a += b * Complex(-1.0); }
  friend ExpSumField operator*(const ExpSumField& a, Complex z) {
    return a.map([z](const T& c) { return scale_value(c, z); });
  }
  friend ExpSumField operator*(Complex z, const ExpSumField& a) { return a * z; }

  /// Largest coefficient magnitude; a cheap bound on |field(x)|/terms.
  Real coefficient_scale() const {
    Real s = 0.0;
    for (const auto& t : terms_) s = std::max(s, magnitude(t.coeff));
    return s;
  }

 private:
  static Complex phase(const FourVectorR& p, const FourVectorR& x) {
    return std::exp(-kI * minkowski_dot(p, x));
  }

  void merge() {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      auto it = std::find_if(out.begin(), out.end(), [&](const Term& o) { return o.p == t.p; });
      if (it == out.end()) {
        out.push_back(std::move(t));
      } else {
        it->coeff += t.coeff;
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

/// Pointwise product: combine(a, b) must be bilinear in its coefficients.
template <typename A, typename B, typename F>
auto product(const ExpSumField<A>& a, const ExpSumField<B>& b, F&& combine) {
  using U = std::decay_t<decltype(combine(std::declval<const A&>(), std::declval<const B&>()))>;
  std::vector<typename ExpSumField<U>::Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) out.push_back({combine(ta.coeff, tb.coeff), FourVectorR{ta.p + tb.p}});
  return ExpSumField<U>(std::move(out));
}

using ScalarField = ExpSumField<Complex>;
using VectorField = ExpSumField<FourVectorC>;
using SpinorField = ExpSumField<DiracSpinor>;

/// Component mu of a vector field as a scalar field (contravariant component).
inline ScalarField component(const VectorField& v, int mu) {
  return v.map([mu](const FourVectorC& c) { return c(mu); });
}

/// Covariant component v_mu.
inline ScalarField lower_component(const VectorField& v, int mu) {
  return v.map([mu](const FourVectorC& c) { return metric_diag(mu) * c(mu); });
}

}  // namespace bqdirac
