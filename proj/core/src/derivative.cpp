#include "bentcat/derivative.hpp"

#include <algorithm>
#include <stdexcept>

namespace bentcat {

namespace {

// Positions whose index has bit j clear, j < 6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

void check_point(const BooleanFunction& f, Point a) {
  if (a >= f.size()) throw std::out_of_range("direction outside the domain");
}

}  // namespace

std::uint64_t xor_permute_word(std::uint64_t word, unsigned r) noexcept {
  for (int j = 0; j < 6; ++j) {
    if (r & (1u << j)) {
      const unsigned s = 1u << j;
      word = ((word & kLowHalf[j]) << s) | ((word >> s) & kLowHalf[j]);
    }
  }
  return word;
}

BooleanFunction translate(const BooleanFunction& f, Point r) {
  check_point(f, r);
  BooleanFunction out(f.n_vars());
  const auto in = f.words();
  auto dst = out.words();
  const std::size_t word_shift = r >> 6;
  const unsigned bit_shift = r & 63;
  for (std::size_t w = 0; w < in.size(); ++w) {
    dst[w ^ word_shift] = xor_permute_word(in[w], bit_shift);
  }
  return out;
}

BooleanFunction derivative(const BooleanFunction& f, Point a) {
  return f ^ translate(f, a);
}

BooleanFunction higher_derivative(const BooleanFunction& f,
                                  std::span<const Point> generators) {
  BooleanFunction out = f;
  for (auto a : generators) out = derivative(out, a);
  return out;
}

BooleanFunction second_derivative(const BooleanFunction& f, Point a, Point b) {
  return derivative(derivative(f, a), b);
}

bool second_derivative_vanishes(const BooleanFunction& f, Point a, Point b) {
  check_point(f, a);
  check_point(f, b);
  const auto da = derivative(f, a);
  const auto in = da.words();
  const std::size_t word_shift = b >> 6;
  const unsigned bit_shift = b & 63;
  for (std::size_t w = 0; w < in.size(); ++w) {
    if (in[w ^ word_shift] != xor_permute_word(in[w], bit_shift)) return false;
  }
  return true;
}

}  // namespace bentcat
