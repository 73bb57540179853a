#include "bentcat/random.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "bentcat/anf.hpp"

namespace bentcat {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Largest multiple of bound representable, so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw < limit) return draw % bound;
  }
}

BooleanFunction random_function(int n_vars, Rng& rng) {
  BooleanFunction f(n_vars);
  auto words = f.words();
  for (auto& w : words) w = rng();
  if (n_vars < 6) words[0] &= (std::uint64_t{1} << (std::size_t{1} << n_vars)) - 1;
  return f;
}

BooleanFunction random_function_of_degree(int n_vars, int max_degree, Rng& rng) {
  std::vector<Point> monomials;
  for (Point u = 0; u < (Point{1} << n_vars); ++u) {
    if (std::popcount(u) <= max_degree && (rng() & 1u)) monomials.push_back(u);
  }
  return from_anf(AnfPolynomial::from_monomials(n_vars, std::move(monomials)));
}

std::vector<Point> random_permutation(int m, Rng& rng) {
  std::vector<Point> images(std::size_t{1} << m);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = images.size(); i > 1; --i) {
    std::swap(images[i - 1], images[uniform_below(rng, i)]);
  }
  return images;
}

BinaryMatrix random_invertible(int n, Rng& rng) {
  for (;;) {
    std::vector<Point> rows(static_cast<std::size_t>(n));
    for (auto& r : rows) r = static_cast<Point>(uniform_below(rng, std::uint64_t{1} << n));
    auto m = BinaryMatrix::from_rows(std::move(rows));
    if (m.invertible()) return m;
  }
}

}  // namespace bentcat
