#pragma once

#include <cstdint>
#include <span>

#include "bentcat/boolean_function.hpp"

namespace bentcat {

/// f^r(x) = f(x + r)
BooleanFunction translate(const BooleanFunction& f, Point r);

/// D_a f(x) = f(x) + f(x + a)
BooleanFunction derivative(const BooleanFunction& f, Point a);

/// D_{a_k} ... D_{a_1} f. Zero whenever the generators are linearly dependent.
BooleanFunction higher_derivative(const BooleanFunction& f,
                                  std::span<const Point> generators);

/// D_a D_b f
BooleanFunction second_derivative(const BooleanFunction& f, Point a, Point b);

/// True iff D_a D_b f is the zero function, i.e. b is a period of D_a f.
bool second_derivative_vanishes(const BooleanFunction& f, Point a, Point b);

/// Permutes the bits of one table word as x -> x ^ r for r < 64.
std::uint64_t xor_permute_word(std::uint64_t word, unsigned r) noexcept;

}  // namespace bentcat
