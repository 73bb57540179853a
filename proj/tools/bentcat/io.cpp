#include "io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bentcat::cli {

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

LoadedFunction load_function(const std::filesystem::path& path, FunctionFormat format) {
  const auto text = read_file(path);
  return {parse_function(text, format), path.string(), digest(text)};
}

std::vector<std::filesystem::path> fixture_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".tt" || ext == ".anf" || ext == ".txt")) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FunctionFormat parse_format(const std::string& name) {
  if (name == "auto") return FunctionFormat::Auto;
  if (name == "tt") return FunctionFormat::TruthTable;
  if (name == "anf") return FunctionFormat::Anf;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::vector<Point> parse_points(const Json& list) {
  if (!list.is_array()) throw std::invalid_argument("expected a list of vectors");
  std::vector<Point> out;
  for (const auto& v : list) {
    if (v.is_string()) {
      out.push_back(parse_hex_point(v.get<std::string>()));
    } else if (v.is_number_unsigned()) {
      out.push_back(v.get<Point>());
    } else {
      throw std::invalid_argument("vectors are hex strings or non-negative integers");
    }
  }
  return out;
}

Json points_json(const std::vector<Point>& points) {
  Json out = Json::array();
  for (Point p : points) out.push_back(hex_point(p));
  return out;
}

PermutationSpec parse_permutation(int m, const Json& spec) {
  if (spec.is_string() && spec.get<std::string>() == "identity") return PermutationSpec::identity(m);
  return PermutationSpec::of(m, parse_points(spec));
}

BinaryMatrix parse_matrix(int n, const Json& rows) {
  auto a = BinaryMatrix::from_rows(parse_points(rows));
  if (a.size() != n) throw std::invalid_argument("matrix must have " + std::to_string(n) + " rows");
  return a;
}

Json matrix_json(const BinaryMatrix& a) { return points_json(a.rows()); }

}  // namespace bentcat::cli
