#include "bentcat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "bentcat/errors.hpp"

namespace bentcat::oracle {

WalshSpectrum naive_walsh(const BooleanFunction& f) {
  const int n = f.n_vars();
  if (n > kMaxWalshVars) {
    throw std::invalid_argument("naive_walsh is capped at 12 variables");
  }
  // Visit w in Gray-code order so the table of x -> w.x changes by a single
  // coordinate function per step; each sum is 2^n - 2 wt(f + w.x).
  WalshSpectrum s{n, std::vector<std::int64_t>(f.size(), 0)};
  std::vector<BooleanFunction> coordinates;
  for (int i = 0; i < n; ++i) coordinates.push_back(BooleanFunction::coordinate(n, i));
  BooleanFunction linear(n);
  const auto size = static_cast<std::int64_t>(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    const Point w = static_cast<Point>(t ^ (t >> 1));
    if (t != 0) linear ^= coordinates[std::countr_zero(t)];
    std::int64_t disagreements = 0;
    const auto lhs = f.words();
    const auto rhs = linear.words();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      disagreements += std::popcount(lhs[i] ^ rhs[i]);
    }
    s.values[w] = size - 2 * disagreements;
  }
  return s;
}

BooleanFunction direct_second_derivative(const BooleanFunction& f, Point u, Point v) {
  if (u >= f.size() || v >= f.size()) throw std::out_of_range("direction outside the domain");
  return BooleanFunction::from_predicate(f.n_vars(), [&](Point x) {
    return (f[x] ^ f[x ^ u] ^ f[x ^ v] ^ f[x ^ u ^ v]) != 0;
  });
}

AllSubspaces::AllSubspaces(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxSubspaceVars) {
    throw std::invalid_argument("all_subspaces is capped at 8 variables");
  }
  if (k < 0 || k > n) {
    done_ = true;
    return;
  }
  pivots_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pivots_[i] = i;
  advance_pivots();
}

bool AllSubspaces::advance_pivots() {
  // Called once with the initial pivot set, then to step to the next one.
  if (!free_positions_.empty() || free_limit_ != 0) {
    int i = k_ - 1;
    while (i >= 0 && pivots_[i] == n_ - k_ + i) --i;
    if (i < 0) return false;
    ++pivots_[i];
    for (int j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  }
  free_positions_.clear();
  free_row_.clear();
  for (int r = 0; r < k_; ++r) {
    for (int q = 0; q < pivots_[r]; ++q) {
      bool is_pivot = false;
      for (int p : pivots_) is_pivot = is_pivot || p == q;
      if (!is_pivot) {
        free_positions_.push_back(q);
        free_row_.push_back(r);
      }
    }
  }
  free_counter_ = 0;
  free_limit_ = std::uint64_t{1} << free_positions_.size();
  return true;
}

bool AllSubspaces::next(Subspace& out) {
  if (done_) return false;
  std::vector<Point> rows(static_cast<std::size_t>(k_));
  for (int r = 0; r < k_; ++r) rows[r] = Point{1} << pivots_[r];
  for (std::size_t i = 0; i < free_positions_.size(); ++i) {
    if (free_counter_ >> i & 1u) rows[free_row_[i]] |= Point{1} << free_positions_[i];
  }
  out = Subspace::span(n_, rows);
  if (++free_counter_ == free_limit_ && !advance_pivots()) done_ = true;
  return true;
}

std::vector<Subspace> all_subspaces(int n, int k) {
  std::vector<Subspace> out;
  AllSubspaces it(n, k);
  Subspace v;
  while (it.next(v)) out.push_back(v);
  return out;
}

std::uint64_t gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  // [n, k] = [n-1, k-1] + 2^k [n-1, k], row by row.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = m; j >= 1; --j) {
      std::uint64_t scaled = 0;
      std::uint64_t sum = 0;
      if (__builtin_mul_overflow(row[j], std::uint64_t{1} << j, &scaled) ||
          __builtin_add_overflow(row[j - 1], scaled, &sum)) {
        throw std::overflow_error("Gaussian binomial exceeds 64 bits");
      }
      row[j] = sum;
    }
  }
  return row[k];
}

SecondDerivativeTable::SecondDerivativeTable(const BooleanFunction& f)
    : size_(f.size()), zero_(size_ * size_, false) {
  if (f.n_vars() > kMaxSubspaceVars) {
    throw std::invalid_argument("second-derivative table is capped at 8 variables");
  }
  for (Point u = 0; u < size_; ++u) {
    for (Point v = u; v < size_; ++v) {
      bool vanishes = true;
      for (Point x = 0; x < size_ && vanishes; ++x) {
        vanishes = (f[x] ^ f[x ^ u] ^ f[x ^ v] ^ f[x ^ u ^ v]) == 0;
      }
      zero_[u * size_ + v] = vanishes;
      zero_[v * size_ + u] = vanishes;
    }
  }
}

bool SecondDerivativeTable::is_m_subspace(const Subspace& v) const {
  const auto elements = v.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!vanishes(elements[i], elements[j])) return false;
    }
  }
  return true;
}

bool naive_is_m_subspace(const BooleanFunction& f, const Subspace& v) {
  if (v.ambient_n() != f.n_vars()) {
    throw std::invalid_argument("subspace and function live in different spaces");
  }
  const auto elements = v.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!direct_second_derivative(f, elements[i], elements[j]).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Subspace> naive_m_subspaces(const BooleanFunction& f, int k) {
  const SecondDerivativeTable table(f);
  std::vector<Subspace> out;
  AllSubspaces it(f.n_vars(), k);
  Subspace v;
  while (it.next(v)) {
    if (table.is_m_subspace(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassVerdict naive_m_check(const BooleanFunction& f) {
  const int n = f.n_vars();
  if (n > kMaxSubspaceVars) throw std::invalid_argument("naive_m_check is capped at 8 variables");
  const std::int64_t half = std::int64_t{1} << (n / 2);
  bool bent = n % 2 == 0;
  for (auto w : naive_walsh(f).values) bent = bent && (w == half || w == -half);
  if (!bent) throw NotBent("naive_m_check needs a bent function");

  const SecondDerivativeTable table(f);
  ClassVerdict verdict;
  verdict.budget = gaussian_binomial(n, n / 2);
  AllSubspaces it(n, n / 2);
  Subspace v;
  while (it.next(v)) {
    ++verdict.nodes_explored;
    if (table.is_m_subspace(v)) {
      verdict.membership = Membership::Inside;
      verdict.witness = v;
      verdict.reason = "exhaustive scan found an M-subspace";
      return verdict;
    }
  }
  verdict.membership = Membership::Outside;
  verdict.reason = "none of the " + std::to_string(verdict.nodes_explored) +
                   " subspaces is an M-subspace";
  return verdict;
}

}  // namespace bentcat::oracle
