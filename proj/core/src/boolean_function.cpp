#include "bentcat/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bentcat {

namespace {

void check_arity(int n_vars) {
  if (n_vars < 0 || n_vars > kMaxVars) {
    throw std::invalid_argument("number of variables must be in [0, 16], got " +
                                std::to_string(n_vars));
  }
}

}  // namespace

BooleanFunction::BooleanFunction(int n_vars) : n_vars_(n_vars) {
  check_arity(n_vars);
  words_.assign(word_count(n_vars), 0);
}

BooleanFunction BooleanFunction::from_words(int n_vars,
                                            std::vector<std::uint64_t> words) {
  BooleanFunction f(n_vars);
  if (words.size() != f.words_.size()) {
    throw std::invalid_argument("wrong word count for a " +
                                std::to_string(n_vars) + "-variable table");
  }
  if ((words.back() & ~f.tail_mask()) != 0) {
    throw std::invalid_argument("bits set beyond the end of the table");
  }
  f.words_ = std::move(words);
  return f;
}

BooleanFunction BooleanFunction::constant(int n_vars, bool value) {
  BooleanFunction f(n_vars);
  if (value) {
    std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
    f.words_.back() &= f.tail_mask();
  }
  return f;
}

BooleanFunction BooleanFunction::coordinate(int n_vars, int index) {
  if (index < 0 || index >= n_vars) {
    throw std::out_of_range("coordinate index out of range");
  }
  return linear(n_vars, Point{1} << index);
}

BooleanFunction BooleanFunction::linear(int n_vars, Point mask) {
  return from_predicate(n_vars, [mask](Point x) {
    return (std::popcount(mask & x) & 1) != 0;
  });
}

bool BooleanFunction::evaluate(Point x) const {
  if (x >= size()) {
    throw std::out_of_range("point " + std::to_string(x) +
                            " outside F_2^" + std::to_string(n_vars_));
  }
  return (*this)[x];
}

void BooleanFunction::set(Point x, bool value) {
  if (x >= size()) throw std::out_of_range("point outside the domain");
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (value) {
    words_[x >> 6] |= bit;
  } else {
    words_[x >> 6] &= ~bit;
  }
}

std::size_t BooleanFunction::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BooleanFunction::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

BooleanFunction& BooleanFunction::operator^=(const BooleanFunction& other) {
  if (other.n_vars_ != n_vars_) {
    throw std::invalid_argument("adding functions of different arity");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BooleanFunction BooleanFunction::complement() const {
  return *this ^ constant(n_vars_, true);
}

std::uint64_t BooleanFunction::tail_mask() const noexcept {
  return n_vars_ >= 6 ? ~std::uint64_t{0}
                      : (std::uint64_t{1} << (std::size_t{1} << n_vars_)) - 1;
}

}  // namespace bentcat
