#include <functional>
#include <stdexcept>

#include "bentcat/affine.hpp"
#include "bentcat/concat.hpp"
#include "bentcat/construct.hpp"
#include "bentcat/errors.hpp"
#include "bentcat/oracle.hpp"
#include "bentcat/random.hpp"
#include "bentcat/transforms.hpp"
#include "commands.hpp"

namespace bentcat::cli {

namespace {

struct Check {
  Json structural;
  Json oracle;
  bool agree = false;
  Json detail = Json::object();
};

// Direct M# verdict: exhaustive over all half-dimensional subspaces when the
// ambient space is small enough, pruned search otherwise.
std::pair<bool, const char*> direct_inside(const BooleanFunction& f, std::uint64_t budget) {
  if (f.n_vars() <= oracle::kMaxSubspaceVars) {
    return {oracle::naive_m_check(f).inside(), "exhaustive"};
  }
  return {is_in_completed_mm(f, budget).inside(), "pruned-search"};
}

bool direct_has_subspace(const BooleanFunction& f, int dim, std::uint64_t budget) {
  if (f.n_vars() <= oracle::kMaxSubspaceVars) return !oracle::naive_m_subspaces(f, dim).empty();
  return !enumerate_m_subspaces(f, dim, budget).empty();
}

std::vector<Subspace> direct_subspaces(const BooleanFunction& f, int dim, std::uint64_t budget) {
  if (f.n_vars() <= oracle::kMaxSubspaceVars) return oracle::naive_m_subspaces(f, dim);
  return enumerate_m_subspaces(f, dim, budget);
}

const char* inside_str(bool inside) { return inside ? "Inside" : "Outside"; }

class Verifier {
 public:
  Verifier(const VerifyOptions& options, Report& report, const CommonOptions& common)
      : options_(options), report_(report), common_(common) {
    if (common.seed) rng_.seed(*common.seed);
  }

  int run() {
    const auto& id = options_.theorem;
    std::function<Check(std::uint64_t)> check;
    if (id == "thm1") {
      check = [this](std::uint64_t) { return thm1(pair_source(5)); };
    } else if (id == "cor1") {
      check = [this](std::uint64_t) { return cor1(pair_source(5)); };
    } else if (id == "thm3") {
      check = [this](std::uint64_t) { return thm3(random_quadruple(4)); };
    } else if (id == "cor2") {
      check = [this](std::uint64_t i) { return cor2(bent_quadruple(4, i)); };
    } else if (id == "insideMMgh") {
      check = [this](std::uint64_t i) { return inside_mm_gh(i); };
    } else if (id == "rind-bound") {
      check = [this](std::uint64_t) { return rind_bound(); };
    } else if (id == "dual-sum") {
      check = [this](std::uint64_t i) { return dual_sum(i); };
    } else if (id == "korsakova-class") {
      return korsakova_class();
    } else {
      throw std::invalid_argument("unknown theorem id '" + id + "'");
    }

    const std::uint64_t count = inputs_given() ? 1 : options_.count;
    Json instances = Json::array();
    std::uint64_t agreements = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      Json entry{{"index", i}};
      try {
        auto c = check(i);
        entry["structural"] = c.structural;
        entry["oracle"] = c.oracle;
        entry["agree"] = c.agree;
        if (!c.detail.empty()) entry["detail"] = c.detail;
        if (c.agree) {
          ++agreements;
        } else {
          report_.disagreement();
        }
      } catch (const BudgetExceeded& e) {
        report_.budget_exhausted();
        report_.charge(e.nodes());
        entry["error"] = e.what();
      } catch (const PremiseViolated& e) {
        entry["premise_violated"] = e.premise();
        entry["error"] = e.what();
      }
      instances.push_back(std::move(entry));
    }
    auto& body = report_.body();
    body["theorem"] = id;
    body["instances"] = count;
    body["agreements"] = agreements;
    body["checks"] = std::move(instances);
    return report_.finish();
  }

 private:
  bool inputs_given() const { return !options_.inputs.empty(); }

  int piece_n(int fallback) const { return options_.n > 0 ? options_.n : fallback; }

  Rng& rng() {
    if (!common_.seed) throw std::invalid_argument("generated instances need --seed");
    return rng_;
  }

  BooleanFunction input(std::size_t index) {
    if (index >= options_.inputs.size()) {
      throw std::invalid_argument("theorem " + options_.theorem + " needs " +
                                  std::to_string(index + 1) + " input files");
    }
    const auto loaded = load_function(options_.inputs[index], parse_format(options_.format));
    report_.add_input(loaded.source, loaded.digest);
    return loaded.function;
  }

  // A bent function on n+1 variables; its halves are semi-bent with
  // disjoint spectra.
  BooleanFunction pair_source(int fallback) {
    if (inputs_given()) return input(0);
    return random_bent(piece_n(fallback) + 1, rng());
  }

  std::vector<BooleanFunction> random_quadruple(int fallback) {
    if (inputs_given()) return restrictions(input(0), 4);
    const int n = piece_n(fallback);
    std::vector<BooleanFunction> out;
    for (int i = 0; i < 4; ++i) out.push_back(random_function(n, rng()));
    return out;
  }

  std::vector<BooleanFunction> bent_quadruple(int fallback, std::uint64_t i) {
    if (inputs_given()) return restrictions(input(0), 4);
    const int n = piece_n(fallback);
    if (i % 2 == 0) return restrictions(random_bent(n + 2, rng()), 4);
    return restrictions(ghgh(random_bent(n, rng()), random_bent(n, rng())), 4);
  }

  Check thm1(const BooleanFunction& f) {
    const auto pieces = restrictions(f, 2);
    const int n = pieces[0].n_vars();
    Check c;
    c.structural = Json::array();
    c.oracle = Json::array();
    c.agree = true;
    c.detail["disjoint_spectra"] = disjoint_spectra(pieces[0], pieces[1]);
    for (int k = 0; k <= n; ++k) {
      const auto v = theorem1_verdict(pieces[0], pieces[1], k, {.budget = common_.budget});
      report_.charge(v.nodes_explored);
      const bool direct = direct_has_subspace(f, k + 1, common_.budget);
      c.structural.push_back(v.condition);
      c.oracle.push_back(direct);
      c.agree = c.agree && direct == v.inside_mm;
    }
    return c;
  }

  Check cor1(const BooleanFunction& f) {
    const auto pieces = restrictions(f, 2);
    const auto v = corollary1_outside_mm(pieces[0], pieces[1], {.budget = common_.budget, .cross_check = true});
    report_.charge(v.nodes_explored);
    const auto [direct, method] = direct_inside(f, common_.budget);
    Check c{concat_verdict_json(v, "concat2", pieces), inside_str(direct), direct == v.inside_mm};
    c.detail["oracle_method"] = method;
    return c;
  }

  Check thm3(const std::vector<BooleanFunction>& pieces) {
    const std::span<const BooleanFunction, 4> four(pieces.data(), 4);
    const auto f = concat4(pieces[0], pieces[1], pieces[2], pieces[3]);
    const int n = pieces[0].n_vars();
    Check c;
    c.structural = Json::array();
    c.oracle = Json::array();
    c.agree = true;
    for (int k = -1; k <= n; ++k) {
      const auto forms = theorem3_enumerate_forms(four, k, common_.budget);
      std::vector<Subspace> built;
      for (const auto& form : forms) built.push_back(form.subspace);
      const auto direct = direct_subspaces(f, k + 2, common_.budget);
      c.structural.push_back(built.size());
      c.oracle.push_back(direct.size());
      c.agree = c.agree && built == direct;
    }
    return c;
  }

  Check cor2(const std::vector<BooleanFunction>& pieces) {
    const std::span<const BooleanFunction, 4> four(pieces.data(), 4);
    const auto v = corollary2_outside_mm(four, {.budget = common_.budget, .cross_check = true});
    report_.charge(v.nodes_explored);
    const auto f = concat4(pieces[0], pieces[1], pieces[2], pieces[3]);
    const auto [direct, method] = direct_inside(f, common_.budget);
    Check c{concat_verdict_json(v, "concat4", pieces), inside_str(direct), direct == v.inside_mm};
    c.detail["oracle_method"] = method;
    return c;
  }

  Check inside_mm_gh(std::uint64_t i) {
    BooleanFunction g;
    BooleanFunction h;
    if (inputs_given()) {
      g = input(0);
      h = input(1);
    } else {
      const int n = piece_n(6);
      const int m = n / 2;
      if (i % 2 == 0) {
        // Both built on F_2^m x {0}.
        g = mm_function(PermutationSpec::of(m, random_permutation(m, rng())), random_function(m, rng()));
        h = mm_function(PermutationSpec::of(m, random_permutation(m, rng())), random_function(m, rng()));
      } else {
        g = find_unique_msubspace_bent(n, 100000, rng()).function;
        h = i % 4 == 1 ? compose(g, random_invertible(n, rng())) : random_bent(n, rng());
      }
    }
    const auto v = ghgh_class(g, h, common_.budget);
    report_.charge(v.nodes_explored);
    const auto [direct, method] = direct_inside(ghgh(g, h), common_.budget);
    Check c{class_verdict_json(v), inside_str(direct), direct == v.inside()};
    c.detail["oracle_method"] = method;
    return c;
  }

  Check rind_bound() {
    BooleanFunction g;
    BooleanFunction h;
    if (inputs_given()) {
      g = input(0);
      h = input(1);
    } else {
      const int m = piece_n(6) / 2;
      const auto pi = find_unique_msubspace_permutation(m, 100000, rng());
      g = mm_function(pi);
      h = compose(g, find_invertible_pair(2 * m, rng()));
    }
    const int k = options_.k >= 0 ? options_.k : g.n_vars() / 2;
    const bool bound = theorem_rind_bound_check(g, h, k, IntersectionMode::CrossOnly, common_.budget);
    const bool direct = direct_has_subspace(ghgh(g, h), k + 1, common_.budget);
    Check c{bound ? "bound holds" : "bound fails", direct ? "has (k+1)-subspace" : "no (k+1)-subspace",
            bound == !direct};
    c.detail["k"] = k;
    return c;
  }

  Check dual_sum(std::uint64_t i) {
    std::vector<BooleanFunction> pieces;
    const char* kind = "input";
    if (inputs_given()) {
      pieces = restrictions(input(0), 4);
    } else {
      const int n = piece_n(6);
      const auto g = random_bent(n, rng());
      const auto h = random_bent(n, rng());
      switch (i % 4) {
        case 0:
          kind = "ghgh";
          pieces = {g, h, g, h.complement()};
          break;
        case 1: {
          kind = "korsakova-f'";
          const auto shifted = g ^ BooleanFunction::linear(n, static_cast<Point>(uniform_below(rng(), g.size())));
          pieces = {g, shifted, shifted, g.complement()};
          break;
        }
        case 2:
          kind = "independent";
          pieces = {g, h, random_bent(n, rng()), random_bent(n, rng())};
          break;
        default:
          kind = "one-non-bent";
          pieces = {g, h, random_bent(n, rng()), random_function(n, rng())};
          break;
      }
    }
    const auto f = concat4(pieces[0], pieces[1], pieces[2], pieces[3]);
    const std::int64_t half = std::int64_t{1} << (f.n_vars() / 2);
    bool direct = f.n_vars() % 2 == 0;
    for (auto w : oracle::naive_walsh(f).values) direct = direct && (w == half || w == -half);

    Check c;
    c.detail["kind"] = kind;
    const bool all_bent = std::all_of(pieces.begin(), pieces.end(), [](const auto& p) { return is_bent(p); });
    if (all_bent) {
      const bool sum = bent4_dual_sum(std::span<const BooleanFunction, 4>(pieces.data(), 4));
      c.structural = sum;
      c.agree = sum == direct;
    } else {
      // With three bent pieces the fourth must be bent for the whole to be.
      const int bent_count = static_cast<int>(
          std::count_if(pieces.begin(), pieces.end(), [](const auto& p) { return is_bent(p); }));
      c.structural = bent_count == 3 ? Json(false) : Json("not applicable");
      c.agree = bent_count != 3 || !direct;
    }
    c.oracle = direct;
    return c;
  }

  int korsakova_class() {
    BooleanFunction g;
    if (inputs_given()) {
      g = input(0);
    } else {
      g = random_bent(piece_n(6), rng());
    }
    const auto [g_inside, g_method] = direct_inside(g, common_.budget);
    std::vector<Point> alphas;
    if (options_.count >= g.size()) {
      for (Point a = 0; a < g.size(); ++a) alphas.push_back(a);
    } else {
      for (std::uint64_t i = 0; i < options_.count; ++i) {
        alphas.push_back(static_cast<Point>(uniform_below(rng(), g.size())));
      }
    }
    Json checks = Json::array();
    std::uint64_t agreements = 0;
    for (Point a : alphas) {
      Json entry{{"alpha", hex_point(a)}};
      try {
        const auto [f, f_prime] = korsakova_pair(g, a);
        const auto [f_inside, method] = direct_inside(f, common_.budget);
        const auto [fp_inside, method2] = direct_inside(f_prime, common_.budget);
        const bool agree = f_inside == g_inside && fp_inside == g_inside;
        entry["f"] = inside_str(f_inside);
        entry["f_prime"] = inside_str(fp_inside);
        entry["oracle_method"] = method;
        entry["agree"] = agree;
        if (agree) {
          ++agreements;
        } else {
          report_.disagreement();
        }
      } catch (const BudgetExceeded& e) {
        report_.budget_exhausted();
        entry["error"] = e.what();
      }
      checks.push_back(std::move(entry));
    }
    auto& body = report_.body();
    body["theorem"] = options_.theorem;
    body["g"] = {{"function", function_json(g)}, {"mm", inside_str(g_inside)}, {"oracle_method", g_method}};
    body["instances"] = alphas.size();
    body["agreements"] = agreements;
    body["checks"] = std::move(checks);
    return report_.finish();
  }

  const VerifyOptions& options_;
  Report& report_;
  const CommonOptions& common_;
  Rng rng_;
};

}  // namespace

int run_verify(const VerifyOptions& options, Report& report, const CommonOptions& common) {
  return Verifier(options, report, common).run();
}

}  // namespace bentcat::cli
