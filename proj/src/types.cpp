#include "bqdirac/types.hpp"

#include <cmath>

namespace bqdirac {

FourVectorR require_real(const FourVectorC& v, Real tol, const std::string& what) {
  const Real scale = 1.0 + v.cwiseAbs().maxCoeff();
  for (int i = 0; i < 4; ++i) {
    if (std::abs(v(i).imag()) > tol * scale) {
      throw NonRealInput(what + ": component " + std::to_string(i) + " has imaginary part " +
                         std::to_string(v(i).imag()));
    }
  }
  return FourVectorR{v.real()};
}

}  // namespace bqdirac
