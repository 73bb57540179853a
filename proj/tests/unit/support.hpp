#pragma once

#include <string_view>

#include "bentcat/anf.hpp"
#include "bentcat/boolean_function.hpp"
#include "bentcat/text_format.hpp"

namespace bentcat::testing {

inline BooleanFunction poly(int n, std::string_view expression) {
  return from_anf(parse_anf(n, expression));
}

/// Unit vector e_i, 1-based like the variable names.
constexpr Point e(int i) { return Point{1} << (i - 1); }

}  // namespace bentcat::testing
