#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bentcat/boolean_function.hpp"
#include "bentcat/gf2.hpp"
#include "bentcat/msubspace.hpp"
#include "bentcat/random.hpp"

namespace bentcat {

/// A map F_2^domain_bits -> F_2^codomain_bits given by its image list.
struct PermutationSpec {
  int domain_bits = 0;
  int codomain_bits = 0;
  std::vector<Point> images;

  static PermutationSpec identity(int m);
  static PermutationSpec of(int m, std::vector<Point> images);

  bool is_injective() const;
  bool is_permutation() const;
};

/// f(x, y) = x . pi(y) + g(y) on 2m variables, x the low m coordinates.
/// g defaults to zero. Throws ConstructionError if pi is not a permutation.
BooleanFunction mm_function(const PermutationSpec& pi,
                            const BooleanFunction& g);
BooleanFunction mm_function(const PermutationSpec& pi);

/// F_2^m x {0_m}, the M-subspace every mm_function output has.
Subspace canonical_mm_subspace(int m);

/// f1 || f2 with f_i(x, y) = x . pi_i(y) + h_i(y), x in F_2^{k+1}, y in
/// F_2^k, on 2k+2 variables. Requires k <= 5, both maps injective with
/// disjoint images (ConstructionError otherwise).
BooleanFunction theorem2_halfconcat(const PermutationSpec& pi1,
                                    const PermutationSpec& pi2,
                                    const BooleanFunction& h1,
                                    const BooleanFunction& h2);

/// g || h || g || (h+1). Throws NotBent.
BooleanFunction ghgh(const BooleanFunction& g, const BooleanFunction& h);

/// M# membership of ghgh(g, h): Inside iff g and h share an n/2-dimensional
/// M-subspace V. The witness is <V x {(0,0)}, (0,0,1)>.
ClassVerdict ghgh_class(const BooleanFunction& g, const BooleanFunction& h,
                        std::uint64_t budget = kDefaultBudget);

/// The two (n+2)-variable bent functions
///   f  = g(z) + (alpha . z) z_{n+1} + z_{n+1} z_{n+2}
///   f' = g(z) + (alpha . z)(z_{n+1} + z_{n+2}) + z_{n+1} z_{n+2}.
std::pair<BooleanFunction, BooleanFunction> korsakova_pair(
    const BooleanFunction& g, Point alpha);

/// A bent function with exactly one n/2-dimensional M-subspace.
struct UniqueSubspaceBent {
  BooleanFunction function;
  Subspace subspace;
};

/// Checks uniqueness by search; nullopt when there are zero or several.
std::optional<UniqueSubspaceBent> unique_m_subspace(
    const BooleanFunction& q, std::uint64_t budget = kDefaultBudget);

/// Samples x . pi(y) + g(y) with random pi and g until one has a unique
/// n/2-dimensional M-subspace. Throws SearchExhausted after max_samples.
UniqueSubspaceBent find_unique_msubspace_bent(int n, std::uint64_t max_samples,
                                              Rng& rng);

/// As above with g = 0; returns the permutation.
PermutationSpec find_unique_msubspace_permutation(int m,
                                                  std::uint64_t max_samples,
                                                  Rng& rng);

/// A random member of M#: x . pi(y) + g(y) under a random affine
/// equivalence. n even, n >= 2.
BooleanFunction random_bent(int n, Rng& rng);

/// A with both A and I + A invertible.
BinaryMatrix find_invertible_pair(int n, Rng& rng);

struct OutsideExtension {
  BooleanFunction function;  // ghgh(g, q o A), outside M#
  BooleanFunction partner;   // q o A
  BinaryMatrix transform;    // A
  Point a = 0;               // D_a D_b g != 0
  Point b = 0;
};

/// An (n+2)-variable bent function outside M# whose (.,0,0) restriction is
/// g. Takes the first unique-subspace candidate in the pool (or samples one
/// with rng when the pool is empty) and a linear A with A a, A b in its
/// subspace; variant selects among the admissible images of (a, b).
OutsideExtension extend_outside(const BooleanFunction& g,
                                std::span<const BooleanFunction> pool, Rng& rng,
                                int variant = 0,
                                std::uint64_t budget = kDefaultBudget);

struct TwistPair {
  BooleanFunction inside;   // ghgh(g, q o A) with A(W) = V
  BooleanFunction outside;  // ghgh(g, q o B) with B a, B b in V
  BinaryMatrix inside_transform;
  BinaryMatrix outside_transform;
};

/// For g in M# and q with a unique n/2-dimensional M-subspace.
TwistPair twist_pair(const BooleanFunction& g, const BooleanFunction& q,
                     std::uint64_t budget = kDefaultBudget);

/// ghgh(g, g o A) for g = x . pi(y) with a unique n/2-dimensional
/// M-subspace and A, I + A invertible. Throws SingularMatrix,
/// ConstructionError (no unique subspace), PremiseViolated when A maps the
/// subspace onto itself so g and g o A would share it.
BooleanFunction rind_construction(const PermutationSpec& pi,
                                  const BinaryMatrix& a,
                                  std::uint64_t budget = kDefaultBudget);

/// Whether "non-intersecting" applies only across the families of g and h
/// or also between distinct subspaces of one function.
enum class IntersectionMode { CrossOnly, CrossAndWithin };

/// Checks the hypotheses of the dimension bound for ghgh(g, h) and then the
/// bound itself: true iff ghgh(g, h) has no (k+1)-dimensional M-subspace.
/// Hypotheses: g, h bent; k < n/2 - 1; neither has a (k+1)-dimensional
/// M-subspace; their k-dimensional M-subspaces meet only in 0 (per mode);
/// every (k-1)-dimensional subspace holds an a with D_a g != D_a h. Throws
/// PremiseViolated naming the first one that fails. k = n/2 is answered by
/// ghgh_class.
bool theorem_rind_bound_check(const BooleanFunction& g,
                              const BooleanFunction& h, int k,
                              IntersectionMode mode = IntersectionMode::CrossOnly,
                              std::uint64_t budget = kDefaultBudget);

/// {a : D_a f = 0}, the linear structures of f with value 0.
Subspace period_space(const BooleanFunction& f);

}  // namespace bentcat
