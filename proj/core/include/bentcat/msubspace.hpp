#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bentcat/boolean_function.hpp"
#include "bentcat/gf2.hpp"

namespace bentcat {

/// Default node limit of every M-subspace search.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Rows of the relation {(a, b) : D_a D_b f = 0}, or of its conjunction over
/// several functions of the same arity.
///
/// Row a is the period space of D_a f and is a subspace, which is what lets a
/// basis check stand in for the full span check. Up to 12 variables every
/// row is precomputed; above that rows are rebuilt on each request.
class PairRelation {
 public:
  explicit PairRelation(const BooleanFunction& f);
  explicit PairRelation(std::span<const BooleanFunction> functions);

  int n_vars() const noexcept { return n_vars_; }
  std::size_t row_words() const noexcept { return row_words_; }

  bool related(Point a, Point b) const;
  /// out &= row(a)
  void intersect_row(Point a, std::span<std::uint64_t> out) const;

 private:
  void compute_row(Point a, std::span<std::uint64_t> out) const;

  int n_vars_ = 0;
  std::size_t row_words_ = 0;
  std::vector<BooleanFunction> functions_;
  std::vector<std::uint64_t> rows_;  // empty when rows are computed on demand
};

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Stop once this many subspaces are found.
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
};

struct SearchOutcome {
  std::vector<Subspace> subspaces;  // sorted
  std::uint64_t nodes = 0;          // partial bases examined
  bool complete = true;             // false iff the budget ran out
};

/// Enumerates k-dimensional subspaces whose basis vectors are pairwise
/// related. Each subspace is generated once, directly as its RREF basis with
/// pivots growing, so no deduplication pass is needed.
SearchOutcome search_m_subspaces(const PairRelation& relation, int k,
                                 const SearchOptions& options = {});

/// D_a D_b f = 0 for every a, b in V. Throws std::invalid_argument on an
/// ambient dimension mismatch.
bool is_m_subspace(const BooleanFunction& f, const Subspace& v);

/// All k-dimensional M-subspaces of f, sorted. Throws BudgetExceeded.
std::vector<Subspace> enumerate_m_subspaces(const BooleanFunction& f, int k,
                                            std::uint64_t budget = kDefaultBudget);

/// k-dimensional subspaces that are M-subspaces of every function, found by
/// a single search over the conjoined relation. Throws BudgetExceeded.
std::vector<Subspace> common_m_subspaces(std::span<const BooleanFunction> fs,
                                         int k,
                                         std::uint64_t budget = kDefaultBudget);

/// First common k-dimensional M-subspace in search order, if any.
std::optional<Subspace> find_common_m_subspace(
    std::span<const BooleanFunction> fs, int k,
    std::uint64_t budget = kDefaultBudget, std::uint64_t* nodes = nullptr);

/// Largest k with a k-dimensional M-subspace. Throws BudgetExceeded.
int max_m_dimension(const BooleanFunction& f,
                    std::uint64_t budget = kDefaultBudget);

enum class Membership { Inside, Outside };

const char* to_string(Membership m) noexcept;

/// Answer to "is this bent function in the completed Maiorana-McFarland
/// class". Inside carries a witness M-subspace of half dimension; Outside is
/// only produced by an exhausted search.
struct ClassVerdict {
  Membership membership = Membership::Outside;
  std::optional<Subspace> witness;
  std::uint64_t nodes_explored = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string reason;

  bool inside() const noexcept { return membership == Membership::Inside; }
};

/// Dillon's criterion: a bent f on n = 2m variables is in M# iff it has an
/// m-dimensional M-subspace. Throws NotBent, BudgetExceeded.
ClassVerdict is_in_completed_mm(const BooleanFunction& f,
                                std::uint64_t budget = kDefaultBudget);

}  // namespace bentcat
