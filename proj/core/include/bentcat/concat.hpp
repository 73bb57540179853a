#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bentcat/boolean_function.hpp"
#include "bentcat/gf2.hpp"
#include "bentcat/msubspace.hpp"

namespace bentcat {

/// f1 || f2 on n+1 variables: f(z, 0) = f1(z), f(z, 1) = f2(z). Under the
/// Point encoding the table is f1's table followed by f2's.
BooleanFunction concat2(const BooleanFunction& f1, const BooleanFunction& f2);

/// f1 || f2 || f3 || f4 on n+2 variables with f(z,0,0) = f1, f(z,1,0) = f2,
/// f(z,0,1) = f3, f(z,1,1) = f4.
BooleanFunction concat4(const BooleanFunction& f1, const BooleanFunction& f2,
                        const BooleanFunction& f3, const BooleanFunction& f4);

/// Inverse of concat2 / concat4; arity is 2 or 4.
std::vector<BooleanFunction> restrictions(const BooleanFunction& f, int arity);

/// A direction (a, flag) of F_2^{n+1}.
struct Direction2 {
  Point a = 0;
  bool flag = false;
};

/// A direction (a, first, second) of F_2^{n+2}; first pairs with z_{n+1}.
struct Direction4 {
  Point a = 0;
  bool first = false;
  bool second = false;
};

/// D_u D_v (f1 || f2) assembled from derivatives of the pieces.
BooleanFunction second_derivative_concat2(const BooleanFunction& f1,
                                          const BooleanFunction& f2,
                                          Direction2 u, Direction2 v);

/// D_u D_v (f1 || f2 || f3 || f4) assembled from derivatives of the pieces.
BooleanFunction second_derivative_concat4(
    std::span<const BooleanFunction, 4> pieces, Direction4 u, Direction4 v);

/// W_{f1}(w) W_{f2}(w) = 0 for every w.
bool disjoint_spectra(const BooleanFunction& f1, const BooleanFunction& f2);

/// f1* + f2* + f3* + f4* = 1 for four bent pieces. Throws NotBent.
bool bent4_dual_sum(std::span<const BooleanFunction, 4> pieces);

enum class CrossCheck { Skipped, Passed };

const char* to_string(CrossCheck c) noexcept;

/// Outcome of a structural condition on the pieces of a concatenation.
///
/// inside_mm is true when the concatenation has an M-subspace of the target
/// dimension; at half the ambient dimension of a bent concatenation that is
/// membership in M#. When true, witness_subspace is such a subspace of the
/// concatenation and has been re-checked with is_m_subspace.
struct ConcatVerdict {
  bool inside_mm = false;
  /// Which condition decided, e.g. "thm1.a", "cor2.b", "cor2.none".
  std::string condition;
  /// The subspace V of the pieces behind the decision.
  std::optional<Subspace> piece_subspace;
  std::optional<Subspace> witness_subspace;
  /// Translation vectors (u, or a and b) of the deciding condition.
  std::vector<Point> witness_vectors;
  CrossCheck cross_check = CrossCheck::Skipped;
  std::uint64_t nodes_explored = 0;
};

struct VerdictOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Re-derive the answer by direct enumeration on the concatenation when
  /// it has at most 8 variables; disagreement throws VerdictMismatch.
  bool cross_check = false;
};

/// f1 || f2 has no (k+1)-dimensional M-subspace iff
///  a) f1, f2 share no (k+1)-dimensional M-subspace, and
///  b) for every u and every common k-dimensional M-subspace V some a in V
///     has D_a f1 + D_a f2^u != 0.
/// The returned inside_mm is the negation: a (k+1)-subspace exists.
ConcatVerdict theorem1_verdict(const BooleanFunction& f1,
                               const BooleanFunction& f2, int k,
                               const VerdictOptions& options = {});

/// M# membership of a bent f1 || f2 with pieces on n = 2k+1 variables.
/// Throws NotBent, std::invalid_argument for even n.
ConcatVerdict corollary1_outside_mm(const BooleanFunction& f1,
                                    const BooleanFunction& f2,
                                    const VerdictOptions& options = {});

/// Shape of an M-subspace W of f1||f2||f3||f4 by the projection of W onto
/// the two appended coordinates.
enum class FormTag {
  A,  // V x {(0,0)}
  B,  // <V x {(0,0)}, (a,1,0)>
  C,  // <V x {(0,0)}, (a,0,1)>
  D,  // <V x {(0,0)}, (a,1,1)>
  E,  // <V x {(0,0)}, (a,0,1), (b,1,0)>
};

char to_char(FormTag tag) noexcept;

struct FormSubspace {
  Subspace subspace;        // W, in F_2^{n+2}
  FormTag form = FormTag::A;
  Subspace piece_subspace;  // V, in F_2^n
  Point a = 0;
  Point b = 0;
};

/// Every (k+2)-dimensional M-subspace of concat4(pieces), built from common
/// M-subspaces of the pieces and the per-form derivative conditions. Sorted
/// by subspace. k = -1 yields the one-dimensional subspaces. Throws
/// BudgetExceeded.
std::vector<FormSubspace> theorem3_enumerate_forms(
    std::span<const BooleanFunction, 4> pieces, int k,
    std::uint64_t budget = kDefaultBudget);

/// M# membership of a bent f1||f2||f3||f4 (pieces on even n) decided by
/// conditions a) (common (n/2+1)-subspace), b) (common n/2-subspace with a
/// translate a) and c) (common (n/2-1)-subspace with a, b and the pointwise
/// identity). Throws NotBent.
ConcatVerdict corollary2_outside_mm(std::span<const BooleanFunction, 4> pieces,
                                    const VerdictOptions& options = {});

}  // namespace bentcat
