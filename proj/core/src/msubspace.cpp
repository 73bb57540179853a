#include "bentcat/msubspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bentcat/derivative.hpp"
#include "bentcat/errors.hpp"
#include "bentcat/transforms.hpp"

namespace bentcat {

namespace {

constexpr int kPrecomputeLimit = 12;

// Positions whose index has bit j clear, j < 6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

void check_same_arity(std::span<const BooleanFunction> fs) {
  if (fs.empty()) throw std::invalid_argument("no functions given");
  for (const auto& f : fs) {
    if (f.n_vars() != fs.front().n_vars()) {
      throw std::invalid_argument("functions have different numbers of variables");
    }
  }
}

// Restricts `words` to indices x >= 2^(p+1) with bit p of x clear.
void keep_above_with_zero_bit(std::span<std::uint64_t> words, int p) {
  if (p >= 6) {
    const std::size_t stride = std::size_t{1} << (p - 6);
    const std::size_t first = std::min(words.size(), 2 * stride);
    std::fill(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(first), 0);
    for (std::size_t w = first; w < words.size(); ++w) {
      if (w & stride) words[w] = 0;
    }
    return;
  }
  const unsigned above = 2u << p;  // first admissible index
  const std::uint64_t low_word_mask =
      above >= 64 ? 0 : (~std::uint64_t{0} << above);
  words[0] &= low_word_mask & kLowHalf[p];
  for (std::size_t w = 1; w < words.size(); ++w) words[w] &= kLowHalf[p];
}

// Number of bit levels q > p with a candidate whose highest bit is q, capped
// at `want`.
int occupied_levels(std::span<const std::uint64_t> words, int p, int n, int want) {
  int found = 0;
  for (int q = p + 1; q < n && found < want; ++q) {
    bool any = false;
    if (q >= 6) {
      const std::size_t lo = std::size_t{1} << (q - 6);
      for (std::size_t w = lo; w < 2 * lo && !any; ++w) any = words[w] != 0;
    } else {
      // Indices [2^q, 2^(q+1)) are the bit positions of that range.
      const unsigned lo = 1u << q;
      const std::uint64_t upper = 2 * lo >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * lo)) - 1;
      const std::uint64_t mask = upper & ~((std::uint64_t{1} << lo) - 1);
      any = (words[0] & mask) != 0;
    }
    if (any) ++found;
  }
  return found;
}

}  // namespace

PairRelation::PairRelation(const BooleanFunction& f)
    : PairRelation(std::span<const BooleanFunction>(&f, 1)) {}

PairRelation::PairRelation(std::span<const BooleanFunction> functions)
    : functions_(functions.begin(), functions.end()) {
  check_same_arity(functions);
  n_vars_ = functions.front().n_vars();
  row_words_ = word_count(n_vars_);
  if (n_vars_ <= kPrecomputeLimit) {
    const std::size_t size = std::size_t{1} << n_vars_;
    rows_.assign(size * row_words_, 0);
    for (Point a = 0; a < size; ++a) {
      compute_row(a, std::span(rows_).subspan(a * row_words_, row_words_));
    }
  }
}

void PairRelation::compute_row(Point a, std::span<std::uint64_t> out) const {
  const std::size_t size = std::size_t{1} << n_vars_;
  std::fill(out.begin(), out.end(), 0);
  for (Point b = 0; b < size; ++b) out[b >> 6] |= std::uint64_t{1} << (b & 63);
  if (a == 0) return;
  // b is related to a iff b is a period of D_a f, i.e. the autocorrelation of
  // D_a f at b is 2^n.
  const auto full = static_cast<std::int64_t>(size);
  for (const auto& f : functions_) {
    const auto ac = autocorrelation(derivative(f, a));
    for (Point b = 0; b < size; ++b) {
      if (ac[b] != full) out[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
    }
  }
}

bool PairRelation::related(Point a, Point b) const {
  const std::size_t size = std::size_t{1} << n_vars_;
  if (a >= size || b >= size) throw std::out_of_range("point outside the domain");
  if (!rows_.empty()) {
    return (rows_[a * row_words_ + (b >> 6)] >> (b & 63)) & 1u;
  }
  std::vector<std::uint64_t> row(row_words_);
  compute_row(a, row);
  return (row[b >> 6] >> (b & 63)) & 1u;
}

void PairRelation::intersect_row(Point a, std::span<std::uint64_t> out) const {
  if (!rows_.empty()) {
    const auto* row = rows_.data() + a * row_words_;
    for (std::size_t w = 0; w < row_words_; ++w) out[w] &= row[w];
    return;
  }
  std::vector<std::uint64_t> row(row_words_);
  compute_row(a, row);
  for (std::size_t w = 0; w < row_words_; ++w) out[w] &= row[w];
}

namespace {

// Depth-first growth of RREF bases with increasing pivots. A child extends
// its parent by a candidate a whose highest bit exceeds every pivot so far,
// which is zero at every earlier pivot, and which is related to every basis
// vector chosen so far. Each subspace therefore appears exactly once, as
// its own canonical basis.
class Search {
 public:
  Search(const PairRelation& relation, int k, const SearchOptions& options)
      : relation_(relation),
        n_(relation.n_vars()),
        k_(k),
        words_(relation.row_words()),
        options_(options),
        candidates_(static_cast<std::size_t>(k + 1) * words_, 0),
        basis_(static_cast<std::size_t>(k), 0) {}

  SearchOutcome run() {
    const std::size_t size = std::size_t{1} << n_;
    auto root = level(0);
    for (Point x = 1; x < size; ++x) root[x >> 6] |= std::uint64_t{1} << (x & 63);
    if (charge()) visit(0);
    std::sort(outcome_.subspaces.begin(), outcome_.subspaces.end());
    return std::move(outcome_);
  }

 private:
  std::span<std::uint64_t> level(int depth) {
    return std::span(candidates_).subspan(static_cast<std::size_t>(depth) * words_, words_);
  }

  // Counts one node per partial basis examined; false once the budget is spent.
  bool charge() {
    if (outcome_.nodes >= options_.budget) {
      outcome_.complete = false;
      stopped_ = true;
      return false;
    }
    ++outcome_.nodes;
    return true;
  }

  void visit(int depth) {
    if (stopped_) return;
    if (depth == k_) {
      outcome_.subspaces.push_back(
          Subspace::span(n_, std::span<const Point>(basis_.data(), basis_.size())));
      if (outcome_.subspaces.size() >= options_.max_results) stopped_ = true;
      return;
    }
    const int needed = k_ - depth;
    const auto current = level(depth);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = current[w];
      while (bits != 0) {
        const Point a = static_cast<Point>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        const int p = highest_bit(a);
        // Candidates come in increasing order, so pivots only grow from here.
        if (n_ - 1 - p < needed - 1) return;
        if (!charge()) return;
        auto child = level(depth + 1);
        std::copy(current.begin(), current.end(), child.begin());
        keep_above_with_zero_bit(child, p);
        relation_.intersect_row(a, child);
        if (needed > 1 && occupied_levels(child, p, n_, needed - 1) < needed - 1) {
          continue;
        }
        basis_[static_cast<std::size_t>(depth)] = a;
        visit(depth + 1);
        if (stopped_) return;
      }
    }
  }

  const PairRelation& relation_;
  int n_;
  int k_;
  std::size_t words_;
  SearchOptions options_;
  std::vector<std::uint64_t> candidates_;
  std::vector<Point> basis_;
  SearchOutcome outcome_;
  bool stopped_ = false;
};

}  // namespace

SearchOutcome search_m_subspaces(const PairRelation& relation, int k,
                                 const SearchOptions& options) {
  if (k < 0) throw std::invalid_argument("negative subspace dimension");
  if (k > relation.n_vars()) return {};
  return Search(relation, k, options).run();
}

bool is_m_subspace(const BooleanFunction& f, const Subspace& v) {
  if (v.ambient_n() != f.n_vars()) {
    throw std::invalid_argument("subspace and function live in different spaces");
  }
  // For fixed b the a with D_a D_b f = 0 are the periods of D_b f, a
  // subspace; so vanishing on basis pairs extends to the whole span.
  const auto& basis = v.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!second_derivative_vanishes(f, basis[i], basis[j])) return false;
    }
  }
  return true;
}

namespace {

SearchOutcome checked_search(const PairRelation& relation, int k,
                             const SearchOptions& options) {
  auto outcome = search_m_subspaces(relation, k, options);
  if (!outcome.complete) throw BudgetExceeded(outcome.nodes, options.budget);
  return outcome;
}

}  // namespace

std::vector<Subspace> enumerate_m_subspaces(const BooleanFunction& f, int k,
                                            std::uint64_t budget) {
  return checked_search(PairRelation(f), k, {.budget = budget}).subspaces;
}

std::vector<Subspace> common_m_subspaces(std::span<const BooleanFunction> fs,
                                         int k, std::uint64_t budget) {
  return checked_search(PairRelation(fs), k, {.budget = budget}).subspaces;
}

std::optional<Subspace> find_common_m_subspace(std::span<const BooleanFunction> fs,
                                               int k, std::uint64_t budget,
                                               std::uint64_t* nodes) {
  auto outcome =
      checked_search(PairRelation(fs), k, {.budget = budget, .max_results = 1});
  if (nodes != nullptr) *nodes = outcome.nodes;
  if (outcome.subspaces.empty()) return std::nullopt;
  return outcome.subspaces.front();
}

int max_m_dimension(const BooleanFunction& f, std::uint64_t budget) {
  const PairRelation relation(f);
  int best = 0;
  for (int k = 1; k <= f.n_vars(); ++k) {
    const auto outcome =
        checked_search(relation, k, {.budget = budget, .max_results = 1});
    if (outcome.subspaces.empty()) break;
    best = k;
  }
  return best;
}

const char* to_string(Membership m) noexcept {
  return m == Membership::Inside ? "Inside" : "Outside";
}

ClassVerdict is_in_completed_mm(const BooleanFunction& f, std::uint64_t budget) {
  if (!is_bent(f)) throw NotBent("M# membership is defined for bent functions");
  const int half = f.n_vars() / 2;
  const auto outcome = checked_search(PairRelation(f), half,
                                      {.budget = budget, .max_results = 1});
  ClassVerdict verdict;
  verdict.nodes_explored = outcome.nodes;
  verdict.budget = budget;
  if (!outcome.subspaces.empty()) {
    verdict.membership = Membership::Inside;
    verdict.witness = outcome.subspaces.front();
    verdict.reason = "found a " + std::to_string(half) + "-dimensional M-subspace";
  } else {
    verdict.membership = Membership::Outside;
    verdict.reason = "exhaustive search found no " + std::to_string(half) +
                     "-dimensional M-subspace";
  }
  return verdict;
}

}  // namespace bentcat
