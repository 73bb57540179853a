#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bentcat/boolean_function.hpp"
#include "bentcat/gf2.hpp"

namespace bentcat {

/// Every randomized routine takes an explicitly seeded engine; nothing reads
/// global or wall-clock entropy.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), by rejection. Unlike the standard
/// distributions its output is identical across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

BooleanFunction random_function(int n_vars, Rng& rng);
/// Random function whose ANF has degree at most max_degree.
BooleanFunction random_function_of_degree(int n_vars, int max_degree, Rng& rng);
/// Uniform permutation of {0, ..., 2^m - 1}.
std::vector<Point> random_permutation(int m, Rng& rng);
BinaryMatrix random_invertible(int n, Rng& rng);

}  // namespace bentcat
