#pragma once

#include <string>
#include <string_view>

#include "bentcat/anf.hpp"
#include "bentcat/boolean_function.hpp"
#include "bentcat/gf2.hpp"

namespace bentcat {

// Truth-table text:
//
//   n=<k>
//   <hex digits>
//
// Digit j (0-based, left to right) holds points 4j..4j+3, point 4j in the
// least significant bit, so k >= 2. Whitespace inside the hex body is ignored
// and lines starting with '#' are comments.
//
// ANF text uses the same header followed by an expression such as
// x1*x3*x4+x2+1; "0" is the zero polynomial and "1" the constant one.

/// Hex body only. Throws std::invalid_argument for n < 2.
std::string to_hex(const BooleanFunction& f);
BooleanFunction from_hex(int n_vars, std::string_view hex);

std::string format_truth_table(const BooleanFunction& f);
BooleanFunction parse_truth_table(std::string_view text);

std::string format_anf(const AnfPolynomial& p);
AnfPolynomial parse_anf(int n_vars, std::string_view expression);

enum class FunctionFormat { Auto, TruthTable, Anf };

/// Parses a header plus either body. With Auto, a body of exactly 2^k/4 hex
/// digits is a truth table and anything else is read as ANF.
BooleanFunction parse_function(std::string_view text,
                               FunctionFormat format = FunctionFormat::Auto);

/// Lowercase hex without prefix.
std::string hex_point(Point v);
Point parse_hex_point(std::string_view text);

/// One basis row per line as a hex vector.
std::string format_subspace(const Subspace& v);
Subspace parse_subspace(int ambient_n, std::string_view text);

}  // namespace bentcat
