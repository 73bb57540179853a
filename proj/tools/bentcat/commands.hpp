#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace bentcat::cli {

struct AnalyzeOptions {
  std::vector<std::string> inputs;
  std::string fixture_dir;
  std::string format = "auto";
  bool skip_search = false;
};

struct ConstructOptions {
  std::string recipe;
  std::string output;
  bool classify = false;
};

struct VerifyOptions {
  std::string theorem;
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::uint64_t count = 20;
  int n = 0;  // 0 picks the theorem's default piece size
  int k = -1;
};

int run_analyze(const AnalyzeOptions& options, Report& report, const CommonOptions& common);
int run_construct(const ConstructOptions& options, Report& report, const CommonOptions& common);
int run_verify(const VerifyOptions& options, Report& report, const CommonOptions& common);

}  // namespace bentcat::cli
