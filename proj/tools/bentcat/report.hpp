#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bentcat/concat.hpp"
#include "bentcat/msubspace.hpp"
#include "io.hpp"

namespace bentcat::cli {

inline constexpr const char* kSchema = "bentcat-report/1";

struct CommonOptions {
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::uint64_t> seed;
  std::string json_out;
  bool timing = false;
};

/// Schema-versioned JSON report. Key order is fixed and timing is only
/// included on request, so equal inputs give byte-identical output.
class Report {
 public:
  Report(std::string command, std::vector<std::string> args, const CommonOptions& options);

  Json& body() { return body_; }
  void add_input(const std::string& source, const std::string& input_digest);
  void charge(std::uint64_t nodes) { nodes_used_ += nodes; }
  void budget_exhausted() { exhausted_ = true; }
  void disagreement() { ++disagreements_; }

  /// Writes the report to stdout and --json-out; returns the exit code.
  int finish();

 private:
  std::string command_;
  std::vector<std::string> args_;
  CommonOptions options_;
  Json inputs_ = Json::array();
  Json body_ = Json::object();
  std::uint64_t nodes_used_ = 0;
  bool exhausted_ = false;
  std::uint64_t disagreements_ = 0;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json subspace_json(const Subspace& v);
Json spectrum_json(const BooleanFunction& f);
Json class_verdict_json(const ClassVerdict& v);
/// {construction, pieces, verdict, condition, witness_subspace?,
/// witness_vectors?, cross_check, ...}
Json concat_verdict_json(const ConcatVerdict& v, const std::string& construction,
                         std::span<const BooleanFunction> pieces);

/// {function, k, verdict, witness?, nodes_explored, budget}
Json certificate_json(const BooleanFunction& f, int k, const ClassVerdict& v);

Json function_json(const BooleanFunction& f);

}  // namespace bentcat::cli
