#pragma once

#include <vector>

#include "bentcat/boolean_function.hpp"

namespace bentcat {

/// Algebraic normal form: the set of monomials with coefficient 1. Bit j of
/// a monomial mask means x_{j+1} occurs in it.
struct AnfPolynomial {
  int n_vars = 0;
  std::vector<Point> monomials;  // sorted ascending, no duplicates
  int degree = 0;                // 0 for the zero polynomial

  /// Builds a normalized polynomial; repeated monomials cancel in pairs.
  static AnfPolynomial from_monomials(int n_vars, std::vector<Point> monomials);

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;
};

/// Binary Moebius transform of the table. It is an involution, so it maps
/// truth tables to ANF coefficient tables and back.
BooleanFunction moebius_transform(const BooleanFunction& f);

AnfPolynomial anf(const BooleanFunction& f);
BooleanFunction from_anf(const AnfPolynomial& p);
int algebraic_degree(const BooleanFunction& f);

}  // namespace bentcat
