#pragma once

#include <compare>
#include <span>
#include <vector>

#include "bentcat/boolean_function.hpp"

namespace bentcat {

/// Index of the highest set bit, or -1 for zero.
int highest_bit(Point v) noexcept;

/// Parity of mask . x
bool dot(Point mask, Point x) noexcept;

/// Square matrix over GF(2). Row i is a mask over the columns, so
/// (A x)_i = row_i . x.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(int n) : rows_(static_cast<std::size_t>(n), 0) {}

  static BinaryMatrix identity(int n);
  static BinaryMatrix from_rows(std::vector<Point> rows);
  static BinaryMatrix from_columns(std::span<const Point> columns);
  /// The unique A with A s_i = t_i. Both lists must be bases of F_2^n;
  /// throws SingularMatrix otherwise.
  static BinaryMatrix mapping(std::span<const Point> source_basis,
                              std::span<const Point> target_basis);

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<Point>& rows() const noexcept { return rows_; }
  Point column(int j) const noexcept;

  Point apply(Point x) const noexcept;
  int rank() const noexcept;
  bool invertible() const noexcept { return rank() == size(); }
  /// Throws SingularMatrix.
  BinaryMatrix inverse() const;

  friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b);
  friend BinaryMatrix operator+(const BinaryMatrix& a, const BinaryMatrix& b);
  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::vector<Point> rows_;
};

/// A subspace of F_2^n held by its reduced row echelon basis.
///
/// Rows are sorted by descending pivot, the pivot of a row is its highest set
/// bit, and every pivot column is zero in all other rows. The form is unique
/// per subspace, so structural equality is set equality.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient_n) : ambient_n_(ambient_n) {}

  /// Gaussian elimination of an arbitrary spanning list.
  static Subspace span(int ambient_n, std::span<const Point> vectors);

  int ambient_n() const noexcept { return ambient_n_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Point>& basis() const noexcept { return basis_; }
  Point pivot_mask() const noexcept;

  /// v with every pivot coordinate cleared by adding basis rows: the
  /// canonical representative of the coset v + V.
  Point reduce(Point v) const noexcept;
  bool contains(Point v) const noexcept { return reduce(v) == 0; }

  /// All 2^dim vectors, in Gray-code order starting from 0.
  std::vector<Point> elements() const;

  Subspace with(Point v) const;
  /// { A v : v in V }
  Subspace image(const BinaryMatrix& a) const;
  /// V x {0}: the same vectors seen in a larger ambient space.
  Subspace embedded(int ambient_n) const;

  bool intersects_trivially(const Subspace& other) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  int ambient_n_ = 0;
  std::vector<Point> basis_;
};

/// Extends an independent list to a basis of F_2^n with unit vectors, lowest
/// index first. Throws std::invalid_argument if the list is dependent.
std::vector<Point> complete_basis(std::span<const Point> independent, int n);

}  // namespace bentcat
