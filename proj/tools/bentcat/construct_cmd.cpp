#include <filesystem>
#include <stdexcept>

#include "bentcat/affine.hpp"
#include "bentcat/construct.hpp"
#include "bentcat/errors.hpp"
#include "bentcat/text_format.hpp"
#include "bentcat/transforms.hpp"
#include "commands.hpp"

namespace bentcat::cli {

namespace {

constexpr std::uint64_t kDefaultSamples = 100000;

struct Built {
  BooleanFunction function;
  Json provenance;
  Json sweep;  // korsakova with alpha "all"
  std::vector<std::pair<Point, BooleanFunction>> sweep_functions;
};

class RecipeContext {
 public:
  RecipeContext(std::filesystem::path base, Report& report, const CommonOptions& common)
      : base_(std::move(base)), report_(report), common_(common) {
    if (common.seed) rng_.seed(*common.seed);
  }

  Rng& rng(const char* what) {
    if (!common_.seed) throw std::invalid_argument(std::string(what) + " samples randomly; pass --seed");
    return rng_;
  }

  std::uint64_t budget() const { return common_.budget; }

  BooleanFunction function(const Json& spec) {
    if (!spec.is_object()) throw std::invalid_argument("function spec must be an object");
    if (spec.contains("construction")) return build(spec).function;
    if (spec.contains("file")) {
      const auto loaded = load_function(base_ / spec.at("file").get<std::string>(), FunctionFormat::Auto);
      report_.add_input(loaded.source, loaded.digest);
      return loaded.function;
    }
    if (spec.contains("table")) {
      return from_hex(spec.at("n").get<int>(), spec.at("table").get<std::string>());
    }
    if (spec.contains("anf")) {
      return from_anf(parse_anf(spec.at("n").get<int>(), spec.at("anf").get<std::string>()));
    }
    if (spec.contains("random_bent")) return random_bent(spec.at("random_bent").get<int>(), rng("random_bent"));
    throw std::invalid_argument("function spec needs construction, file, table, anf or random_bent");
  }

  Built build(const Json& recipe) {
    const auto name = recipe.at("construction").get<std::string>();
    Json params = Json::object();
    Built out;
    if (name == "mm") {
      const int m = recipe.at("m").get<int>();
      const auto pi = parse_permutation(m, recipe.at("pi"));
      const auto g = recipe.contains("g") ? function(recipe.at("g")) : BooleanFunction(m);
      out.function = mm_function(pi, g);
      params = {{"m", m}, {"pi", points_json(pi.images)}, {"g", function_json(g)}};
    } else if (name == "thm2") {
      const int k = recipe.at("k").get<int>();
      PermutationSpec pi1{k, k + 1, parse_points(recipe.at("pi1"))};
      PermutationSpec pi2{k, k + 1, parse_points(recipe.at("pi2"))};
      const auto h1 = recipe.contains("h1") ? function(recipe.at("h1")) : BooleanFunction(k);
      const auto h2 = recipe.contains("h2") ? function(recipe.at("h2")) : BooleanFunction(k);
      out.function = theorem2_halfconcat(pi1, pi2, h1, h2);
      params = {{"k", k}, {"pi1", points_json(pi1.images)}, {"pi2", points_json(pi2.images)}};
    } else if (name == "ghgh") {
      const auto g = function(recipe.at("g"));
      const auto h = function(recipe.at("h"));
      out.function = ghgh(g, h);
      params = {{"g", function_json(g)}, {"h", function_json(h)}};
    } else if (name == "korsakova") {
      const auto g = function(recipe.at("g"));
      const auto which = recipe.value("which", std::string("f"));
      if (which != "f" && which != "f'") throw std::invalid_argument("which is \"f\" or \"f'\"");
      const auto pick = [&](Point alpha) {
        auto [f, f_prime] = korsakova_pair(g, alpha);
        return which == "f" ? f : f_prime;
      };
      params = {{"g", function_json(g)}, {"which", which}};
      const auto& alpha = recipe.at("alpha");
      if (alpha.is_string() && alpha.get<std::string>() == "all") {
        out.sweep = Json::array();
        for (Point a = 0; a < g.size(); ++a) {
          auto f = pick(a);
          out.sweep.push_back({{"alpha", hex_point(a)}, {"bent", is_bent(f)}, {"digest", digest(to_hex(f))}});
          out.sweep_functions.emplace_back(a, std::move(f));
        }
        out.function = out.sweep_functions.front().second;
        params["alpha"] = "all";
      } else {
        const Point a = parse_points(Json::array({alpha})).front();
        out.function = pick(a);
        params["alpha"] = hex_point(a);
      }
    } else if (name == "rind") {
      const int m = recipe.at("m").get<int>();
      const auto samples = recipe.value("max_samples", kDefaultSamples);
      const auto pi = recipe.contains("pi") ? parse_permutation(m, recipe.at("pi"))
                                            : find_unique_msubspace_permutation(m, samples, rng("rind"));
      const auto a = recipe.contains("A") ? parse_matrix(2 * m, recipe.at("A"))
                                          : find_invertible_pair(2 * m, rng("rind"));
      out.function = rind_construction(pi, a, budget());
      params = {{"m", m}, {"pi", points_json(pi.images)}, {"A", matrix_json(a)}};
    } else if (name == "extend") {
      const auto g = function(recipe.at("g"));
      std::vector<BooleanFunction> pool;
      for (const auto& spec : recipe.value("pool", Json::array())) pool.push_back(function(spec));
      const int variant = recipe.value("variant", 0);
      auto ext = extend_outside(g, pool, rng("extend"), variant, budget());
      out.function = std::move(ext.function);
      params = {{"g", function_json(g)}, {"partner", function_json(ext.partner)},
                {"A", matrix_json(ext.transform)}, {"a", hex_point(ext.a)},
                {"b", hex_point(ext.b)}, {"variant", variant}};
    } else if (name == "twist") {
      const auto g = function(recipe.at("g"));
      const auto q = function(recipe.at("q"));
      const auto select = recipe.value("select", std::string("outside"));
      auto pair = twist_pair(g, q, budget());
      if (select == "inside") {
        out.function = std::move(pair.inside);
      } else if (select == "outside") {
        out.function = std::move(pair.outside);
      } else {
        throw std::invalid_argument("select is \"inside\" or \"outside\"");
      }
      params = {{"g", function_json(g)}, {"q", function_json(q)}, {"select", select},
                {"A", matrix_json(pair.inside_transform)}, {"B", matrix_json(pair.outside_transform)}};
    } else {
      throw std::invalid_argument("unknown construction '" + name + "'");
    }
    out.provenance = {{"construction", name}, {"parameters", std::move(params)}};
    return out;
  }

 private:
  std::filesystem::path base_;
  Report& report_;
  const CommonOptions& common_;
  Rng rng_;
};

std::string function_file(const BooleanFunction& f, const Json& provenance) {
  return "# construction: " + provenance.at("construction").get<std::string>() + "\n" +
         "# provenance: " + provenance.dump() + "\n" + format_truth_table(f);
}

}  // namespace

int run_construct(const ConstructOptions& options, Report& report, const CommonOptions& common) {
  const auto text = read_file(options.recipe);
  report.add_input(options.recipe, digest(text));
  const auto recipe = Json::parse(text);
  RecipeContext context(std::filesystem::path(options.recipe).parent_path(), report, common);
  auto built = context.build(recipe);

  Json result = function_json(built.function);
  const bool bent = is_bent(built.function);
  result["bent"] = bent;
  if (!bent) throw NotBent("constructed function failed the bentness check");
  if (options.classify && built.function.n_vars() % 2 == 0) {
    try {
      const auto verdict = is_in_completed_mm(built.function, common.budget);
      report.charge(verdict.nodes_explored);
      result["mm"] = class_verdict_json(verdict);
    } catch (const BudgetExceeded& e) {
      report.charge(e.nodes());
      report.budget_exhausted();
      result["mm"] = {{"membership", nullptr}, {"reason", e.what()}};
    }
  }

  auto& body = report.body();
  body["provenance"] = built.provenance;
  body["result"] = std::move(result);
  if (!built.sweep.is_null()) body["sweep"] = built.sweep;

  if (!options.output.empty()) {
    if (built.sweep_functions.empty()) {
      write_file(options.output, function_file(built.function, built.provenance));
    } else {
      // The output names a directory holding one file per alpha.
      for (const auto& [alpha, f] : built.sweep_functions) {
        auto provenance = built.provenance;
        provenance["parameters"]["alpha"] = hex_point(alpha);
        write_file(std::filesystem::path(options.output) / ("alpha_" + hex_point(alpha) + ".tt"),
                   function_file(f, provenance));
      }
    }
  }
  return report.finish();
}

}  // namespace bentcat::cli
