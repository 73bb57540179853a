#include "bentcat/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bentcat/affine.hpp"
#include "bentcat/concat.hpp"
#include "bentcat/errors.hpp"
#include "bentcat/transforms.hpp"

namespace bentcat {

PermutationSpec PermutationSpec::identity(int m) {
  PermutationSpec p{m, m, {}};
  for (Point y = 0; y < (Point{1} << m); ++y) p.images.push_back(y);
  return p;
}

PermutationSpec PermutationSpec::of(int m, std::vector<Point> images) {
  return PermutationSpec{m, m, std::move(images)};
}

bool PermutationSpec::is_injective() const {
  if (domain_bits < 0 || codomain_bits < 0 || domain_bits > 16 || codomain_bits > 16) return false;
  if (images.size() != (std::size_t{1} << domain_bits)) return false;
  std::vector<bool> seen(std::size_t{1} << codomain_bits);
  for (Point v : images) {
    if (v >= seen.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool PermutationSpec::is_permutation() const {
  return domain_bits == codomain_bits && is_injective();
}

namespace {

BooleanFunction require_bent(BooleanFunction f, const char* what) {
  if (!is_bent(f)) throw NotBent(std::string(what) + " is not bent");
  return f;
}

// x . phi(y) + h(y) with x the low `x_bits` coordinates.
BooleanFunction mm_like(const PermutationSpec& phi, const BooleanFunction& h) {
  const int xb = phi.codomain_bits;
  return BooleanFunction::from_predicate(xb + phi.domain_bits, [&](Point p) {
    const Point x = p & ((Point{1} << xb) - 1);
    const Point y = p >> xb;
    return dot(x, phi.images[y]) != h[y];
  });
}

}  // namespace

BooleanFunction mm_function(const PermutationSpec& pi, const BooleanFunction& g) {
  if (!pi.is_permutation()) throw ConstructionError("pi is not a permutation");
  if (g.n_vars() != pi.domain_bits) throw std::invalid_argument("g must have m variables");
  return require_bent(mm_like(pi, g), "Maiorana-McFarland function");
}

BooleanFunction mm_function(const PermutationSpec& pi) {
  return mm_function(pi, BooleanFunction(pi.domain_bits));
}

Subspace canonical_mm_subspace(int m) {
  std::vector<Point> basis;
  for (int i = 0; i < m; ++i) basis.push_back(Point{1} << i);
  return Subspace::span(2 * m, basis);
}

BooleanFunction theorem2_halfconcat(const PermutationSpec& pi1, const PermutationSpec& pi2,
                                    const BooleanFunction& h1, const BooleanFunction& h2) {
  const int k = pi1.domain_bits;
  if (k < 0 || k > 5) throw std::invalid_argument("k must lie in [0, 5]");
  for (const auto* pi : {&pi1, &pi2}) {
    if (pi->domain_bits != k || pi->codomain_bits != k + 1) {
      throw std::invalid_argument("maps must send F_2^k to F_2^(k+1)");
    }
    if (!pi->is_injective()) throw ConstructionError("map is not injective");
  }
  if (h1.n_vars() != k || h2.n_vars() != k) throw std::invalid_argument("h_i must have k variables");
  std::vector<bool> seen(std::size_t{1} << (k + 1));
  for (Point v : pi1.images) seen[v] = true;
  for (Point v : pi2.images) {
    if (seen[v]) throw ConstructionError("images overlap");
  }
  return require_bent(concat2(mm_like(pi1, h1), mm_like(pi2, h2)), "half-concatenation");
}

BooleanFunction ghgh(const BooleanFunction& g, const BooleanFunction& h) {
  if (g.n_vars() != h.n_vars()) throw std::invalid_argument("g and h differ in size");
  require_bent(g, "g");
  require_bent(h, "h");
  return require_bent(concat4(g, h, g, h.complement()), "g || h || g || h+1");
}

ClassVerdict ghgh_class(const BooleanFunction& g, const BooleanFunction& h,
                        std::uint64_t budget) {
  if (g.n_vars() != h.n_vars()) throw std::invalid_argument("g and h differ in size");
  require_bent(g, "g");
  require_bent(h, "h");
  const int n = g.n_vars();
  const std::array pieces{g, h};
  ClassVerdict verdict;
  verdict.budget = budget;
  const auto shared = find_common_m_subspace(pieces, n / 2, budget, &verdict.nodes_explored);
  if (shared) {
    verdict.membership = Membership::Inside;
    verdict.witness = shared->embedded(n + 2).with(Point{1} << (n + 1));
    verdict.reason = "g and h share an " + std::to_string(n / 2) + "-dimensional M-subspace";
    if (!is_m_subspace(concat4(g, h, g, h.complement()), *verdict.witness)) {
      throw std::logic_error("constructed witness is not an M-subspace");
    }
  } else {
    verdict.reason = "g and h share no " + std::to_string(n / 2) + "-dimensional M-subspace";
  }
  return verdict;
}

std::pair<BooleanFunction, BooleanFunction> korsakova_pair(const BooleanFunction& g,
                                                           Point alpha) {
  require_bent(g, "g");
  const auto shifted = g ^ BooleanFunction::linear(g.n_vars(), alpha);
  auto f = concat4(g, shifted, g, shifted.complement());
  auto f_prime = concat4(g, shifted, shifted, g.complement());
  return {require_bent(std::move(f), "f"), require_bent(std::move(f_prime), "f'")};
}

std::optional<UniqueSubspaceBent> unique_m_subspace(const BooleanFunction& q,
                                                    std::uint64_t budget) {
  if (q.n_vars() % 2 != 0) return std::nullopt;
  const auto outcome =
      search_m_subspaces(PairRelation(q), q.n_vars() / 2, {.budget = budget, .max_results = 2});
  if (!outcome.complete) throw BudgetExceeded(outcome.nodes, budget);
  if (outcome.subspaces.size() != 1) return std::nullopt;
  return UniqueSubspaceBent{q, outcome.subspaces.front()};
}

UniqueSubspaceBent find_unique_msubspace_bent(int n, std::uint64_t max_samples, Rng& rng) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and positive");
  const int m = n / 2;
  for (std::uint64_t i = 0; i < max_samples; ++i) {
    const auto pi = PermutationSpec::of(m, random_permutation(m, rng));
    const auto g = random_function(m, rng);
    if (auto hit = unique_m_subspace(mm_function(pi, g))) return std::move(*hit);
  }
  throw SearchExhausted("no bent function with a unique M-subspace found", max_samples);
}

PermutationSpec find_unique_msubspace_permutation(int m, std::uint64_t max_samples, Rng& rng) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  for (std::uint64_t i = 0; i < max_samples; ++i) {
    auto pi = PermutationSpec::of(m, random_permutation(m, rng));
    if (unique_m_subspace(mm_function(pi))) return pi;
  }
  throw SearchExhausted("no permutation with a unique M-subspace found", max_samples);
}

BooleanFunction random_bent(int n, Rng& rng) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and positive");
  const int m = n / 2;
  const auto pi = PermutationSpec::of(m, random_permutation(m, rng));
  const auto base = mm_function(pi, random_function(m, rng));
  AffineTransform t{random_invertible(n, rng), static_cast<Point>(uniform_below(rng, base.size())),
                    static_cast<Point>(uniform_below(rng, base.size())), uniform_below(rng, 2) == 1};
  return require_bent(apply_ea(base, t), "affine image of a bent function");
}

BinaryMatrix find_invertible_pair(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const auto id = BinaryMatrix::identity(n);
  for (;;) {
    auto a = random_invertible(n, rng);
    if ((a + id).invertible()) return a;
  }
}

namespace {

constexpr std::uint64_t kPoolSamples = 100000;

// Lexicographically first a < b with D_a D_b g != 0.
std::pair<Point, Point> first_nonvanishing_pair(const BooleanFunction& g) {
  const PairRelation relation(g);
  const Point size = Point{1} << g.n_vars();
  for (Point a = 1; a < size; ++a) {
    for (Point b = a + 1; b < size; ++b) {
      if (!relation.related(a, b)) return {a, b};
    }
  }
  throw ConstructionError("every second derivative of g vanishes");
}

// Invertible A with A a, A b a pair of independent vectors of v; variant
// indexes the ordered pairs of v.
BinaryMatrix map_pair_into(Point a, Point b, const Subspace& v, int n, int variant) {
  const auto elements = v.elements();
  std::vector<std::pair<Point, Point>> targets;
  for (Point c : elements) {
    for (Point d : elements) {
      if (c != 0 && d != 0 && c != d) targets.emplace_back(c, d);
    }
  }
  if (targets.empty()) throw ConstructionError("subspace too small to hold two directions");
  const auto [c, d] = targets[static_cast<std::size_t>(variant) % targets.size()];
  const std::array source{a, b};
  const std::array target{c, d};
  return BinaryMatrix::mapping(complete_basis(source, n), complete_basis(target, n));
}

UniqueSubspaceBent require_unique(const BooleanFunction& q, std::uint64_t budget) {
  auto unique = unique_m_subspace(q, budget);
  if (!unique) {
    throw PremiseViolated("unique subspace", "q does not have exactly one M-subspace of half dimension");
  }
  return std::move(*unique);
}

}  // namespace

OutsideExtension extend_outside(const BooleanFunction& g, std::span<const BooleanFunction> pool,
                                Rng& rng, int variant, std::uint64_t budget) {
  const int n = g.n_vars();
  if (n < 6 || n % 2 != 0) throw std::invalid_argument("g must have an even number n >= 6 of variables");
  require_bent(g, "g");
  const auto [a, b] = first_nonvanishing_pair(g);

  std::optional<UniqueSubspaceBent> q;
  for (const auto& candidate : pool) {
    if (candidate.n_vars() != n || !is_bent(candidate)) continue;
    q = unique_m_subspace(candidate, budget);
    if (q) break;
  }
  if (!q) {
    if (!pool.empty()) throw SearchExhausted("pool holds no unique-subspace bent function", pool.size());
    q = find_unique_msubspace_bent(n, kPoolSamples, rng);
  }

  auto transform = map_pair_into(a, b, q->subspace, n, variant);
  auto partner = compose(q->function, transform);
  auto f = ghgh(g, partner);
  if (ghgh_class(g, partner, budget).inside()) {
    throw ConstructionError("extension unexpectedly shares a subspace with g");
  }
  return {std::move(f), std::move(partner), std::move(transform), a, b};
}

TwistPair twist_pair(const BooleanFunction& g, const BooleanFunction& q, std::uint64_t budget) {
  const int n = g.n_vars();
  if (n < 6 || n % 2 != 0 || q.n_vars() != n) {
    throw std::invalid_argument("g and q must share an even number n >= 6 of variables");
  }
  const auto membership = is_in_completed_mm(g, budget);
  if (!membership.inside()) throw PremiseViolated("g in M#", "g has no M-subspace of half dimension");
  const auto unique = require_unique(q, budget);

  const auto& w = *membership.witness;
  auto inside_transform = BinaryMatrix::mapping(complete_basis(w.basis(), n),
                                                complete_basis(unique.subspace.basis(), n));
  const auto [a, b] = first_nonvanishing_pair(g);
  auto outside_transform = map_pair_into(a, b, unique.subspace, n, 0);

  const auto inside_partner = compose(q, inside_transform);
  const auto outside_partner = compose(q, outside_transform);
  if (!ghgh_class(g, inside_partner, budget).inside() ||
      ghgh_class(g, outside_partner, budget).inside()) {
    throw ConstructionError("twist pair failed verification");
  }
  return {ghgh(g, inside_partner), ghgh(g, outside_partner), std::move(inside_transform),
          std::move(outside_transform)};
}

BooleanFunction rind_construction(const PermutationSpec& pi, const BinaryMatrix& a,
                                  std::uint64_t budget) {
  const auto g = mm_function(pi);
  const int n = g.n_vars();
  if (a.size() != n) throw std::invalid_argument("matrix size must match 2m");
  if (!a.invertible()) throw SingularMatrix("A is singular");
  if (!(a + BinaryMatrix::identity(n)).invertible()) throw SingularMatrix("I + A is singular");
  const auto unique = unique_m_subspace(g, budget);
  if (!unique) throw ConstructionError("x . pi(y) does not have a unique M-subspace");
  if (unique->subspace.image(a) == unique->subspace) {
    throw PremiseViolated("A(V) != V", "A maps the unique M-subspace onto itself");
  }
  const auto h = compose(g, a);
  auto f = ghgh(g, h);
  if (ghgh_class(g, h, budget).inside()) {
    throw std::logic_error("g and g o A share an M-subspace");
  }
  return f;
}

Subspace period_space(const BooleanFunction& f) {
  const auto ac = autocorrelation(f);
  const auto full = static_cast<std::int64_t>(f.size());
  std::vector<Point> periods;
  for (std::size_t a = 0; a < ac.size(); ++a) {
    if (ac[a] == full) periods.push_back(static_cast<Point>(a));
  }
  return Subspace::span(f.n_vars(), periods);
}

bool theorem_rind_bound_check(const BooleanFunction& g, const BooleanFunction& h, int k,
                              IntersectionMode mode, std::uint64_t budget) {
  if (g.n_vars() != h.n_vars()) throw std::invalid_argument("g and h differ in size");
  const int n = g.n_vars();
  if (!is_bent(g)) throw PremiseViolated("g bent", "g is not bent");
  if (!is_bent(h)) throw PremiseViolated("h bent", "h is not bent");
  if (k == n / 2) return !ghgh_class(g, h, budget).inside();
  if (k < 1 || !(2 * k < n - 2)) {
    throw PremiseViolated("k < n/2 - 1", "k = " + std::to_string(k) + ", n = " + std::to_string(n));
  }

  for (const auto* f : {&g, &h}) {
    if (find_common_m_subspace(std::span(f, 1), k + 1, budget)) {
      throw PremiseViolated("maximal dimension k",
                            std::string(f == &g ? "g" : "h") + " has a (k+1)-dimensional M-subspace");
    }
  }

  const auto family_g = enumerate_m_subspaces(g, k, budget);
  const auto family_h = enumerate_m_subspaces(h, k, budget);
  const auto meet = [](const std::vector<Subspace>& xs, const std::vector<Subspace>& ys, bool same) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = same ? i + 1 : 0; j < ys.size(); ++j) {
        if (!xs[i].intersects_trivially(ys[j])) return true;
      }
    }
    return false;
  };
  if (meet(family_g, family_h, false) ||
      (mode == IntersectionMode::CrossAndWithin &&
       (meet(family_g, family_g, true) || meet(family_h, family_h, true)))) {
    throw PremiseViolated("non-intersecting", "two maximal M-subspaces share a nonzero vector");
  }

  // A (k-1)-dimensional subspace avoiding every a with D_a g != D_a h is a
  // subspace of the periods of g + h.
  if (period_space(g ^ h).dim() >= k - 1) {
    throw PremiseViolated("derivative separation",
                          "some (k-1)-dimensional subspace has D_a g = D_a h throughout");
  }

  const auto f = ghgh(g, h);
  return !find_common_m_subspace(std::span(&f, 1), k + 1, budget).has_value();
}

}  // namespace bentcat
