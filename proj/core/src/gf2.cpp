#include "bentcat/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bentcat/errors.hpp"

namespace bentcat {

int highest_bit(Point v) noexcept {
  return v == 0 ? -1 : std::bit_width(v) - 1;
}

bool dot(Point mask, Point x) noexcept {
  return (std::popcount(mask & x) & 1) != 0;
}

BinaryMatrix BinaryMatrix::identity(int n) {
  BinaryMatrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = Point{1} << i;
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::vector<Point> rows) {
  BinaryMatrix m;
  const Point limit = rows.empty() ? 1 : Point{1} << rows.size();
  for (auto r : rows) {
    if (r >= limit) throw std::invalid_argument("matrix row wider than the matrix");
  }
  m.rows_ = std::move(rows);
  return m;
}

BinaryMatrix BinaryMatrix::from_columns(std::span<const Point> columns) {
  const int n = static_cast<int>(columns.size());
  BinaryMatrix m(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (columns[j] >> i & 1u) m.rows_[i] |= Point{1} << j;
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::mapping(std::span<const Point> source_basis,
                                   std::span<const Point> target_basis) {
  if (source_basis.size() != target_basis.size()) {
    throw std::invalid_argument("basis lists of different length");
  }
  const auto source = from_columns(source_basis);
  const auto target = from_columns(target_basis);
  if (!target.invertible()) throw SingularMatrix("target list is not a basis");
  return target * source.inverse();
}

Point BinaryMatrix::column(int j) const noexcept {
  Point c = 0;
  for (int i = 0; i < size(); ++i) {
    if (rows_[i] >> j & 1u) c |= Point{1} << i;
  }
  return c;
}

Point BinaryMatrix::apply(Point x) const noexcept {
  Point y = 0;
  for (int i = 0; i < size(); ++i) {
    if (dot(rows_[i], x)) y |= Point{1} << i;
  }
  return y;
}

int BinaryMatrix::rank() const noexcept {
  return Subspace::span(size(), rows_).dim();
}

BinaryMatrix BinaryMatrix::inverse() const {
  const int n = size();
  // Gauss-Jordan on [A | I], rows as (left, right) mask pairs.
  std::vector<Point> left = rows_;
  std::vector<Point> right = identity(n).rows_;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (left[r] >> col & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrix("matrix is not invertible over GF(2)");
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != col && (left[r] >> col & 1u)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  return from_rows(std::move(right));
}

BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  BinaryMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    Point row = 0;
    for (int k = 0; k < a.size(); ++k) {
      if (a.rows_[i] >> k & 1u) row ^= b.rows_[k];
    }
    out.rows_[i] = row;
  }
  return out;
}

BinaryMatrix operator+(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  BinaryMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) out.rows_[i] = a.rows_[i] ^ b.rows_[i];
  return out;
}

Subspace Subspace::span(int ambient_n, std::span<const Point> vectors) {
  const Point limit = Point{1} << ambient_n;
  // rows[p] holds the row with pivot p, or 0.
  std::vector<Point> rows(static_cast<std::size_t>(ambient_n), 0);
  for (Point v : vectors) {
    if (v >= limit) throw std::invalid_argument("vector outside the ambient space");
    for (int p = highest_bit(v); v != 0; p = highest_bit(v)) {
      if (rows[p] == 0) {
        rows[p] = v;
        break;
      }
      v ^= rows[p];
    }
  }
  // Clear each pivot column in the rows above it.
  for (int p = 0; p < ambient_n; ++p) {
    if (rows[p] == 0) continue;
    for (int q = p + 1; q < ambient_n; ++q) {
      if (rows[q] >> p & 1u) rows[q] ^= rows[p];
    }
  }
  Subspace s(ambient_n);
  for (int p = ambient_n - 1; p >= 0; --p) {
    if (rows[p] != 0) s.basis_.push_back(rows[p]);
  }
  return s;
}

Point Subspace::pivot_mask() const noexcept {
  Point m = 0;
  for (auto r : basis_) m |= Point{1} << highest_bit(r);
  return m;
}

Point Subspace::reduce(Point v) const noexcept {
  for (auto r : basis_) {
    if (v >> highest_bit(r) & 1u) v ^= r;
  }
  return v;
}

std::vector<Point> Subspace::elements() const {
  std::vector<Point> out;
  out.reserve(std::size_t{1} << basis_.size());
  Point current = 0;
  out.push_back(current);
  for (std::size_t i = 1; i < (std::size_t{1} << basis_.size()); ++i) {
    current ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(current);
  }
  return out;
}

Subspace Subspace::with(Point v) const {
  std::vector<Point> vs = basis_;
  vs.push_back(v);
  return span(ambient_n_, vs);
}

Subspace Subspace::image(const BinaryMatrix& a) const {
  if (a.size() != ambient_n_) throw std::invalid_argument("matrix size mismatch");
  std::vector<Point> vs;
  for (auto r : basis_) vs.push_back(a.apply(r));
  return span(ambient_n_, vs);
}

Subspace Subspace::embedded(int ambient_n) const {
  if (ambient_n < ambient_n_) throw std::invalid_argument("cannot shrink ambient space");
  Subspace s = *this;
  s.ambient_n_ = ambient_n;
  return s;
}

bool Subspace::intersects_trivially(const Subspace& other) const {
  std::vector<Point> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(std::max(ambient_n_, other.ambient_n_), vs).dim() ==
         dim() + other.dim();
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](Point r) { return other.contains(r); });
}

std::vector<Point> complete_basis(std::span<const Point> independent, int n) {
  std::vector<Point> out(independent.begin(), independent.end());
  if (Subspace::span(n, out).dim() != static_cast<int>(out.size())) {
    throw std::invalid_argument("vectors are linearly dependent");
  }
  for (int i = 0; i < n && static_cast<int>(out.size()) < n; ++i) {
    out.push_back(Point{1} << i);
    if (Subspace::span(n, out).dim() != static_cast<int>(out.size())) out.pop_back();
  }
  return out;
}

}  // namespace bentcat
