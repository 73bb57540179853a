#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bentcat {

/// A vector of F_2^n encoded as an integer: bit i holds coordinate x_{i+1}.
using Point = std::uint32_t;

inline constexpr int kMaxVars = 16;

/// Bit-packed truth table of an n-variable Boolean function.
///
/// Bit x of the table is f(x) under the Point encoding, so x_1 is the least
/// significant bit of the index. Tables with fewer than 64 entries occupy the
/// low bits of a single word; the unused high bits are always zero.
class BooleanFunction {
 public:
  BooleanFunction() : BooleanFunction(0) {}
  explicit BooleanFunction(int n_vars);

  template <class Predicate>
  static BooleanFunction from_predicate(int n_vars, Predicate&& predicate) {
    BooleanFunction f(n_vars);
    for (Point x = 0; x < f.size(); ++x) {
      if (predicate(x)) f.set(x, true);
    }
    return f;
  }

  /// Takes ownership of a packed table. Throws std::invalid_argument if the
  /// word count is wrong or bits beyond 2^n are set.
  static BooleanFunction from_words(int n_vars, std::vector<std::uint64_t> words);

  static BooleanFunction constant(int n_vars, bool value);
  /// The coordinate function x_{index+1}.
  static BooleanFunction coordinate(int n_vars, int index);
  /// x -> mask . x
  static BooleanFunction linear(int n_vars, Point mask);

  int n_vars() const noexcept { return n_vars_; }
  std::size_t size() const noexcept { return std::size_t{1} << n_vars_; }

  bool operator[](Point x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  /// Checked access; throws std::out_of_range for x >= 2^n.
  bool evaluate(Point x) const;
  void set(Point x, bool value);

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;

  BooleanFunction& operator^=(const BooleanFunction& other);
  friend BooleanFunction operator^(BooleanFunction lhs,
                                   const BooleanFunction& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  /// f + 1
  BooleanFunction complement() const;

  friend bool operator==(const BooleanFunction&,
                         const BooleanFunction&) = default;
  friend auto operator<=>(const BooleanFunction&,
                          const BooleanFunction&) = default;

 private:
  std::uint64_t tail_mask() const noexcept;

  int n_vars_;
  std::vector<std::uint64_t> words_;
};

/// Number of 64-bit words backing an n-variable table.
constexpr std::size_t word_count(int n_vars) noexcept {
  return n_vars <= 6 ? 1 : std::size_t{1} << (n_vars - 6);
}

}  // namespace bentcat
