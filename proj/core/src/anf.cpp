#include "bentcat/anf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bentcat {

namespace {

// Positions whose index has bit j set, j < 6.
constexpr std::uint64_t kHighHalf[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

}  // namespace

AnfPolynomial AnfPolynomial::from_monomials(int n_vars,
                                            std::vector<Point> monomials) {
  const Point limit = Point{1} << n_vars;
  for (auto u : monomials) {
    if (u >= limit) throw std::invalid_argument("monomial uses a missing variable");
  }
  std::sort(monomials.begin(), monomials.end());
  std::vector<Point> kept;
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) kept.push_back(monomials[i]);
    i = j;
  }
  AnfPolynomial p;
  p.n_vars = n_vars;
  p.monomials = std::move(kept);
  for (auto u : p.monomials) p.degree = std::max(p.degree, std::popcount(u));
  return p;
}

BooleanFunction moebius_transform(const BooleanFunction& f) {
  BooleanFunction out = f;
  auto words = out.words();
  const int n = f.n_vars();
  for (int j = 0; j < std::min(n, 6); ++j) {
    const unsigned shift = 1u << j;
    for (auto& w : words) w ^= (w << shift) & kHighHalf[j];
  }
  for (int j = 6; j < n; ++j) {
    const std::size_t stride = std::size_t{1} << (j - 6);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if ((i & stride) == 0) words[i | stride] ^= words[i];
    }
  }
  return out;
}

AnfPolynomial anf(const BooleanFunction& f) {
  const auto coefficients = moebius_transform(f);
  std::vector<Point> monomials;
  for (Point u = 0; u < f.size(); ++u) {
    if (coefficients[u]) monomials.push_back(u);
  }
  return AnfPolynomial::from_monomials(f.n_vars(), std::move(monomials));
}

BooleanFunction from_anf(const AnfPolynomial& p) {
  BooleanFunction coefficients(p.n_vars);
  for (auto u : p.monomials) coefficients.set(u, !coefficients[u]);
  return moebius_transform(coefficients);
}

int algebraic_degree(const BooleanFunction& f) { return anf(f).degree; }

}  // namespace bentcat
