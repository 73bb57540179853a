#pragma once

#include "bentcat/boolean_function.hpp"
#include "bentcat/gf2.hpp"

namespace bentcat {

/// f -> f(A x + shift) + linear_addend . x + const_addend
struct AffineTransform {
  BinaryMatrix matrix;
  Point shift = 0;
  Point linear_addend = 0;
  bool const_addend = false;

  static AffineTransform identity(int n);
  static AffineTransform linear(BinaryMatrix a);
};

/// Throws SingularMatrix or std::invalid_argument on a size mismatch.
BooleanFunction apply_ea(const BooleanFunction& f, const AffineTransform& t);

/// x -> f(A x)
BooleanFunction compose(const BooleanFunction& f, const BinaryMatrix& a);

}  // namespace bentcat
