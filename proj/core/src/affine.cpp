#include "bentcat/affine.hpp"

#include <stdexcept>

#include "bentcat/errors.hpp"

namespace bentcat {

AffineTransform AffineTransform::identity(int n) {
  return AffineTransform{BinaryMatrix::identity(n)};
}

AffineTransform AffineTransform::linear(BinaryMatrix a) {
  return AffineTransform{std::move(a)};
}

BooleanFunction apply_ea(const BooleanFunction& f, const AffineTransform& t) {
  if (t.matrix.size() != f.n_vars()) {
    throw std::invalid_argument("transform dimension does not match the function");
  }
  if (!t.matrix.invertible()) throw SingularMatrix("EA transform matrix is singular");
  return BooleanFunction::from_predicate(f.n_vars(), [&](Point x) {
    return f[t.matrix.apply(x) ^ t.shift] != (dot(t.linear_addend, x) != t.const_addend);
  });
}

BooleanFunction compose(const BooleanFunction& f, const BinaryMatrix& a) {
  return apply_ea(f, AffineTransform::linear(a));
}

}  // namespace bentcat
