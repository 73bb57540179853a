#pragma once

#include <cstdint>
#include <vector>

#include "bentcat/boolean_function.hpp"
#include "bentcat/gf2.hpp"
#include "bentcat/msubspace.hpp"
#include "bentcat/transforms.hpp"

// Brute-force references used as ground truth by the tests and by
// `bentcat verify`. Everything here follows the textbook definitions and
// shares no code with the fast transforms or the pruned subspace search.
namespace bentcat::oracle {

inline constexpr int kMaxWalshVars = 12;
inline constexpr int kMaxSubspaceVars = 8;

/// The defining sum, evaluated for each w against the whole table.
WalshSpectrum naive_walsh(const BooleanFunction& f);

/// f(x) + f(x+u) + f(x+v) + f(x+u+v), point by point.
BooleanFunction direct_second_derivative(const BooleanFunction& f, Point u,
                                         Point v);

/// Iterates every k-dimensional subspace of F_2^n exactly once by walking
/// RREF patterns: pivot sets in lexicographic order, then free entries.
class AllSubspaces {
 public:
  AllSubspaces(int n, int k);

  /// Writes the next subspace; false when exhausted.
  bool next(Subspace& out);

 private:
  bool advance_pivots();

  int n_;
  int k_;
  std::vector<int> pivots_;  // ascending
  std::vector<int> free_positions_;
  std::vector<int> free_row_;
  std::uint64_t free_counter_ = 0;
  std::uint64_t free_limit_ = 0;
  bool done_ = false;
};

std::vector<Subspace> all_subspaces(int n, int k);

/// Gaussian binomial [n choose k]_2.
std::uint64_t gaussian_binomial(int n, int k);

/// Table of D_u D_v f == 0 for every pair, from direct_second_derivative.
class SecondDerivativeTable {
 public:
  explicit SecondDerivativeTable(const BooleanFunction& f);
  bool vanishes(Point u, Point v) const {
    return zero_[static_cast<std::size_t>(u) * size_ + v];
  }
  /// Every pair drawn from the full span of V.
  bool is_m_subspace(const Subspace& v) const;

 private:
  std::size_t size_;
  std::vector<bool> zero_;
};

/// Every pair from the span checked pointwise.
bool naive_is_m_subspace(const BooleanFunction& f, const Subspace& v);

/// all_subspaces(n, k) filtered by the definition.
std::vector<Subspace> naive_m_subspaces(const BooleanFunction& f, int k);

/// Dillon's criterion by exhausting all_subspaces(n, n/2). nodes_explored
/// counts subspaces examined. Throws NotBent.
ClassVerdict naive_m_check(const BooleanFunction& f);

}  // namespace bentcat::oracle
