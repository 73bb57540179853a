#include "bentcat/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bentcat/errors.hpp"

namespace bentcat {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

struct Line {
  std::string_view text;
  int number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  while (!text.empty()) {
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

bool is_blank_or_comment(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

// Parses "n=<k>" and returns k; `next` receives the index of the line after it.
int parse_header(const std::vector<Line>& lines, std::size_t& next) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_blank_or_comment(lines[i].text)) continue;
    const auto line = lines[i].text;
    std::size_t pos = line.find_first_not_of(" \t");
    if (line.substr(pos, 2) != "n=") {
      throw ParseError("expected header 'n=<k>'", lines[i].number,
                       static_cast<int>(pos) + 1);
    }
    pos += 2;
    int value = 0;
    std::size_t digits = 0;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
      value = value * 10 + (line[pos] - '0');
      ++pos;
      if (++digits > 2) break;
    }
    const auto rest = line.find_first_not_of(" \t", pos);
    if (digits == 0 || digits > 2 || rest != std::string_view::npos) {
      throw ParseError("malformed variable count", lines[i].number,
                       static_cast<int>(pos) + 1);
    }
    if (value > kMaxVars) {
      throw ParseError("at most 16 variables are supported", lines[i].number, 3);
    }
    next = i + 1;
    return value;
  }
  throw ParseError("missing header 'n=<k>'", static_cast<int>(lines.size()) + 1, 1);
}

struct Body {
  std::string text;                         // non-whitespace characters
  std::vector<std::pair<int, int>> origin;  // (line, column) of each one
};

Body collect_body(const std::vector<Line>& lines, std::size_t start) {
  Body body;
  for (std::size_t i = start; i < lines.size(); ++i) {
    if (is_blank_or_comment(lines[i].text)) continue;
    for (std::size_t c = 0; c < lines[i].text.size(); ++c) {
      const char ch = lines[i].text[c];
      if (ch == ' ' || ch == '\t') continue;
      body.text.push_back(ch);
      body.origin.emplace_back(lines[i].number, static_cast<int>(c) + 1);
    }
  }
  return body;
}

BooleanFunction table_from_body(int n_vars, const Body& body, int header_line) {
  if (n_vars < 2) {
    throw ParseError("truth tables need at least 2 variables", header_line, 3);
  }
  const std::size_t expected = (std::size_t{1} << n_vars) / 4;
  for (std::size_t i = 0; i < body.text.size(); ++i) {
    if (hex_value(body.text[i]) < 0) {
      throw ParseError(std::string("invalid hex digit '") + body.text[i] + "'",
                       body.origin[i].first, body.origin[i].second);
    }
  }
  if (body.text.size() != expected) {
    const auto [line, column] = body.text.size() < expected || body.origin.empty()
                                    ? std::pair{header_line, 1}
                                    : body.origin[expected];
    throw ParseError("expected " + std::to_string(expected) +
                         " hex digits, found " + std::to_string(body.text.size()),
                     line, column);
  }
  return from_hex(n_vars, body.text);
}

}  // namespace

std::string to_hex(const BooleanFunction& f) {
  if (f.n_vars() < 2) throw std::invalid_argument("hex tables need at least 2 variables");
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = f.size() / 4;
  std::string out(digits, '0');
  const auto words = f.words();
  for (std::size_t j = 0; j < digits; ++j) {
    const std::size_t bit = 4 * j;
    out[j] = kDigits[(words[bit >> 6] >> (bit & 63)) & 0xF];
  }
  return out;
}

BooleanFunction from_hex(int n_vars, std::string_view hex) {
  if (n_vars < 2) throw std::invalid_argument("hex tables need at least 2 variables");
  BooleanFunction f(n_vars);
  const std::size_t digits = f.size() / 4;
  if (hex.size() != digits) {
    throw std::invalid_argument("expected " + std::to_string(digits) + " hex digits");
  }
  auto words = f.words();
  for (std::size_t j = 0; j < digits; ++j) {
    const int d = hex_value(hex[j]);
    if (d < 0) throw std::invalid_argument("invalid hex digit");
    const std::size_t bit = 4 * j;
    words[bit >> 6] |= static_cast<std::uint64_t>(d) << (bit & 63);
  }
  return f;
}

std::string format_truth_table(const BooleanFunction& f) {
  return "n=" + std::to_string(f.n_vars()) + "\n" + to_hex(f) + "\n";
}

BooleanFunction parse_truth_table(std::string_view text) {
  return parse_function(text, FunctionFormat::TruthTable);
}

std::string format_anf(const AnfPolynomial& p) {
  if (p.monomials.empty()) return "0";
  std::string out;
  for (auto u : p.monomials) {
    if (!out.empty()) out += '+';
    if (u == 0) {
      out += '1';
      continue;
    }
    bool first = true;
    for (int j = 0; j < p.n_vars; ++j) {
      if (!(u >> j & 1u)) continue;
      if (!first) out += '*';
      out += 'x' + std::to_string(j + 1);
      first = false;
    }
  }
  return out;
}

AnfPolynomial parse_anf(int n_vars, std::string_view expression) {
  std::string compact;
  std::vector<int> column;
  for (std::size_t i = 0; i < expression.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(expression[i]))) continue;
    compact.push_back(expression[i]);
    column.push_back(static_cast<int>(i) + 1);
  }
  const auto fail = [&](const std::string& what, std::size_t at) -> ParseError {
    return ParseError(what, 1,
                      at < column.size() ? column[at]
                                         : static_cast<int>(expression.size()) + 1);
  };
  if (compact.empty()) throw fail("empty ANF expression", 0);
  if (compact == "0") return AnfPolynomial::from_monomials(n_vars, {});

  std::vector<Point> monomials;
  std::size_t pos = 0;
  for (;;) {
    Point monomial = 0;
    if (pos < compact.size() && compact[pos] == '1' &&
        (pos + 1 == compact.size() || compact[pos + 1] == '+')) {
      ++pos;
    } else {
      for (;;) {
        if (pos >= compact.size() || compact[pos] != 'x') {
          throw fail("expected a variable 'x<i>' or the constant 1", pos);
        }
        const std::size_t start = ++pos;
        int index = 0;
        while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
          index = index * 10 + (compact[pos] - '0');
          if (index > kMaxVars) break;
          ++pos;
        }
        if (pos == start || index < 1 || index > n_vars) {
          throw fail("variable index out of range", start);
        }
        monomial |= Point{1} << (index - 1);
        if (pos < compact.size() && compact[pos] == '*') {
          ++pos;
          continue;
        }
        break;
      }
    }
    monomials.push_back(monomial);
    if (pos == compact.size()) break;
    if (compact[pos] != '+') throw fail("expected '+'", pos);
    ++pos;
  }
  return AnfPolynomial::from_monomials(n_vars, std::move(monomials));
}

BooleanFunction parse_function(std::string_view text, FunctionFormat format) {
  const auto lines = split_lines(text);
  std::size_t next = 0;
  const int n_vars = parse_header(lines, next);
  const int header_line = lines[next - 1].number;
  const Body body = collect_body(lines, next);

  if (format == FunctionFormat::Auto) {
    const bool looks_like_table =
        n_vars >= 2 && body.text.size() == (std::size_t{1} << n_vars) / 4 &&
        std::all_of(body.text.begin(), body.text.end(),
                    [](char c) { return hex_value(c) >= 0; });
    format = looks_like_table ? FunctionFormat::TruthTable : FunctionFormat::Anf;
  }
  if (format == FunctionFormat::TruthTable) {
    return table_from_body(n_vars, body, header_line);
  }
  if (body.text.empty()) throw ParseError("missing ANF expression", header_line + 1, 1);
  try {
    return from_anf(parse_anf(n_vars, body.text));
  } catch (const ParseError& e) {
    // Map the column inside the compacted body back to the source position.
    const auto idx = static_cast<std::size_t>(std::max(0, e.column() - 1));
    const auto [line, column] =
        idx < body.origin.size() ? body.origin[idx] : body.origin.back();
    std::string what = e.what();
    what = what.substr(what.find(": ") + 2);
    throw ParseError(what, line, column);
  }
}

std::string hex_point(Point v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

Point parse_hex_point(std::string_view text) {
  if (text.empty() || text.size() > 8) throw std::invalid_argument("bad hex vector");
  Point v = 0;
  for (char c : text) {
    const int d = hex_value(c);
    if (d < 0) throw std::invalid_argument("bad hex vector '" + std::string(text) + "'");
    v = (v << 4) | static_cast<Point>(d);
  }
  return v;
}

std::string format_subspace(const Subspace& v) {
  std::string out;
  for (auto r : v.basis()) out += hex_point(r) + "\n";
  return out;
}

Subspace parse_subspace(int ambient_n, std::string_view text) {
  std::vector<Point> rows;
  for (const auto& line : split_lines(text)) {
    if (is_blank_or_comment(line.text)) continue;
    const auto first = line.text.find_first_not_of(" \t");
    const auto last = line.text.find_last_not_of(" \t");
    const auto token = line.text.substr(first, last - first + 1);
    try {
      rows.push_back(parse_hex_point(token));
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid hex vector", line.number, static_cast<int>(first) + 1);
    }
    if (rows.back() >= (Point{1} << ambient_n)) {
      throw ParseError("vector outside the ambient space", line.number,
                       static_cast<int>(first) + 1);
    }
  }
  return Subspace::span(ambient_n, rows);
}

}  // namespace bentcat
