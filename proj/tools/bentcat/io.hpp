#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bentcat/boolean_function.hpp"
#include "bentcat/construct.hpp"
#include "bentcat/text_format.hpp"
#include "json.hpp"

namespace bentcat::cli {

using Json = nlohmann::ordered_json;

/// "fnv1a64:" followed by 16 hex digits.
std::string digest(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

struct LoadedFunction {
  BooleanFunction function;
  std::string source;
  std::string digest;
};

LoadedFunction load_function(const std::filesystem::path& path, FunctionFormat format);

/// Truth-table files, ANF files and plain text in a fixture directory,
/// sorted by name.
std::vector<std::filesystem::path> fixture_files(const std::filesystem::path& dir);

FunctionFormat parse_format(const std::string& name);

/// Image list given as hex strings or integers.
std::vector<Point> parse_points(const Json& list);
Json points_json(const std::vector<Point>& points);

PermutationSpec parse_permutation(int m, const Json& spec);
BinaryMatrix parse_matrix(int n, const Json& rows);
Json matrix_json(const BinaryMatrix& a);

}  // namespace bentcat::cli
