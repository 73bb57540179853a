#include <filesystem>

#include "bentcat/anf.hpp"
#include "bentcat/errors.hpp"
#include "bentcat/text_format.hpp"
#include "bentcat/transforms.hpp"
#include "commands.hpp"

namespace bentcat::cli {

namespace {

Json analyze_one(const BooleanFunction& f, Report& report, const AnalyzeOptions& options,
                 const CommonOptions& common) {
  Json out = function_json(f);
  out["degree"] = algebraic_degree(f);
  out["weight"] = f.weight();
  out["spectrum"] = spectrum_json(f);
  const bool bent = is_bent(f);
  if (bent && f.n_vars() >= 2) out["dual"] = to_hex(dual(f));
  if (options.skip_search) return out;

  try {
    out["max_m_dimension"] = max_m_dimension(f, common.budget);
  } catch (const BudgetExceeded& e) {
    report.budget_exhausted();
    report.charge(e.nodes());
    out["max_m_dimension"] = nullptr;
  }
  if (bent) {
    try {
      const auto verdict = is_in_completed_mm(f, common.budget);
      report.charge(verdict.nodes_explored);
      out["mm"] = class_verdict_json(verdict);
      out["certificate"] = certificate_json(f, f.n_vars() / 2, verdict);
    } catch (const BudgetExceeded& e) {
      report.budget_exhausted();
      report.charge(e.nodes());
      out["mm"] = {{"membership", nullptr}, {"reason", e.what()}};
    }
  }
  return out;
}

}  // namespace

int run_analyze(const AnalyzeOptions& options, Report& report, const CommonOptions& common) {
  std::vector<std::filesystem::path> paths(options.inputs.begin(), options.inputs.end());
  if (!options.fixture_dir.empty()) {
    for (auto& p : fixture_files(options.fixture_dir)) paths.push_back(std::move(p));
  }
  if (paths.empty()) throw std::invalid_argument("analyze needs --input or --fixture-dir");

  const auto format = parse_format(options.format);
  Json results = Json::array();
  for (const auto& path : paths) {
    const auto loaded = load_function(path, format);
    report.add_input(loaded.source, loaded.digest);
    auto entry = analyze_one(loaded.function, report, options, common);
    entry["source"] = loaded.source;
    results.push_back(std::move(entry));
  }
  report.body()["results"] = std::move(results);
  return report.finish();
}

}  // namespace bentcat::cli
