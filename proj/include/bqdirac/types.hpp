#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bqdirac {

using Real = double;
using Complex = std::complex<Real>;

inline constexpr Complex kI{0.0, 1.0};

/// Contravariant 4-vector with metric signature (+,-,-,-).
///
/// Every 4-vector and every tensor in this library is stored with all indices
/// raised; lower() returns the covariant components.
template <typename Scalar>
class FourVector : public Eigen::Matrix<Scalar, 4, 1> {
 public:
  using Base = Eigen::Matrix<Scalar, 4, 1>;

  FourVector() : Base(Base::Zero()) {}
  FourVector(Scalar x0, Scalar x1, Scalar x2, Scalar x3) : Base(x0, x1, x2, x3) {}
  template <typename Derived>
  explicit FourVector(const Eigen::MatrixBase<Derived>& other) : Base(other) {}

  template <typename Derived>
  FourVector& operator=(const Eigen::MatrixBase<Derived>& other) {
    Base::operator=(other);
    return *this;
  }
};

/// Four complex components in the Dirac representation.
template <typename RealScalar>
class Spinor : public Eigen::Matrix<std::complex<RealScalar>, 4, 1> {
 public:
  using Base = Eigen::Matrix<std::complex<RealScalar>, 4, 1>;
  using Scalar = std::complex<RealScalar>;

  Spinor() : Base(Base::Zero()) {}
  Spinor(Scalar s0, Scalar s1, Scalar s2, Scalar s3) : Base(s0, s1, s2, s3) {}
  template <typename Derived>
  explicit Spinor(const Eigen::MatrixBase<Derived>& other) : Base(other) {}

  template <typename Derived>
  Spinor& operator=(const Eigen::MatrixBase<Derived>& other) {
    Base::operator=(other);
    return *this;
  }
};

using FourVectorC = FourVector<Complex>;
using FourVectorR = FourVector<Real>;
using DiracSpinor = Spinor<Real>;

template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
using Matrix4C = Matrix4<Complex>;
using Matrix4R = Matrix4<Real>;

/// Row of four complex numbers (a Dirac-conjugated spinor).
using SpinorRow = Eigen::Matrix<Complex, 1, 4>;

/// Dense fixed-size tensor of dimension 4 in every slot, row-major.
template <typename Scalar, int Rank>
class Tensor {
 public:
  static constexpr std::size_t kSize = [] {
    std::size_t n = 1;
    for (int i = 0; i < Rank; ++i) n *= 4;
    return n;
  }();

  Tensor() { data_.fill(Scalar(0)); }

  template <typename... Idx>
  Scalar& operator()(Idx... idx) {
    static_assert(sizeof...(Idx) == Rank);
    return data_[offset(idx...)];
  }
  template <typename... Idx>
  const Scalar& operator()(Idx... idx) const {
    static_assert(sizeof...(Idx) == Rank);
    return data_[offset(idx...)];
  }

  const std::array<Scalar, kSize>& data() const { return data_; }
  std::array<Scalar, kSize>& data() { return data_; }

 private:
  template <typename... Idx>
  static std::size_t offset(Idx... idx) {
    std::size_t o = 0;
    ((o = o * 4 + static_cast<std::size_t>(idx)), ...);
    return o;
  }
  std::array<Scalar, kSize> data_;
};

using Rank4Tensor = Tensor<Real, 4>;
using Rank3TensorC = Tensor<Complex, 3>;

// Library errors. Each names the violated precondition.
class BqError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class IndexOutOfRange : public BqError {
 public:
  using BqError::BqError;
};
class ZeroParameter : public BqError {
 public:
  using BqError::BqError;
};
class InvalidBasis : public BqError {
 public:
  using BqError::BqError;
};
class NonRealInput : public BqError {
 public:
  using BqError::BqError;
};
class NonUnitQ : public BqError {
 public:
  using BqError::BqError;
};
class DegenerateChirality : public BqError {
 public:
  using BqError::BqError;
};
class DegenerateCurrent : public BqError {
 public:
  using BqError::BqError;
};

// ---------------------------------------------------------------------------
// Metric helpers

/// diag(+1,-1,-1,-1)
inline const Matrix4R& metric() {
  static const Matrix4R eta = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return eta;
}

inline constexpr Real metric_diag(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// Covariant components v_mu = eta_{mu nu} v^nu.
template <typename Derived>
auto lower(const Eigen::MatrixBase<Derived>& v) {
  using S = typename Derived::Scalar;
  return Eigen::Matrix<S, 4, 1>(v(0), -v(1), -v(2), -v(3));
}

/// Contravariant components from covariant ones (same matrix, eta is its own inverse).
template <typename Derived>
auto raise(const Eigen::MatrixBase<Derived>& v) {
  return lower(v);
}

/// a^mu eta_{mu nu} b^nu; bilinear, not sesquilinear.
template <typename DA, typename DB>
auto minkowski_dot(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

/// Max-abs entry; 0 for an empty or zero object.
template <typename Derived>
Real max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Real max_abs(Complex z) { return std::abs(z); }

/// Embed a real 4-vector in the complex ones.
inline FourVectorC complexify(const FourVectorR& v) { return FourVectorC{v.cast<Complex>()}; }

/// Real part, rejecting imaginary components above tol.
FourVectorR require_real(const FourVectorC& v, Real tol, const std::string& what);

}  // namespace bqdirac
