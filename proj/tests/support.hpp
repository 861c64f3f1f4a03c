#pragma once

#include <doctest.h>

#include "bqdirac/types.hpp"

namespace bqtest {

using namespace bqdirac;

template <typename A, typename B>
bool near(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, Real tol = 1e-12) {
  return max_abs(a - b) <= tol;
}

inline bool near(Complex a, Complex b, Real tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace bqtest
