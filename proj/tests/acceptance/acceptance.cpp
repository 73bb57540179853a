// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bentcat/affine.hpp"
#include "bentcat/anf.hpp"
#include "bentcat/concat.hpp"
#include "bentcat/construct.hpp"
#include "bentcat/errors.hpp"
#include "bentcat/msubspace.hpp"
#include "bentcat/oracle.hpp"
#include "bentcat/random.hpp"
#include "bentcat/text_format.hpp"
#include "bentcat/transforms.hpp"
#include "json.hpp"

namespace {

using namespace bentcat;

constexpr std::uint64_t kBudget = 100'000'000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message; later checks still run.
class Check {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && failure_.empty()) failure_ = what;
  }
  Outcome done(std::string summary) const {
    if (!failure_.empty()) return {false, failure_};
    return {true, std::move(summary)};
  }

 private:
  std::string failure_;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Point> hex_list(const nlohmann::json& values) {
  std::vector<Point> out;
  for (const auto& v : values) out.push_back(parse_hex_point(v.get<std::string>()));
  return out;
}

BooleanFunction outside_fixture() {
  return parse_function(read_text(std::string(BENTCAT_FIXTURE_DIR) + "/rind_outside_8.tt"));
}

// Verdict at 10 variables by the pruned half-dimension search, with the
// witness re-checked pointwise.
Membership certified_membership(const BooleanFunction& f, Check& check, std::uint64_t* nodes) {
  const auto verdict = is_in_completed_mm(f, kBudget);
  *nodes = std::max(*nodes, verdict.nodes_explored);
  if (verdict.inside()) {
    check.expect(verdict.witness && verdict.witness->dim() == f.n_vars() / 2 &&
                     oracle::naive_is_m_subspace(f, *verdict.witness),
                 "witness failed the pointwise check");
  }
  return verdict.membership;
}

Outcome transforms() {
  Check check;
  std::size_t compared = 0;
  const auto parseval = [](const WalshSpectrum& w) {
    std::int64_t sum = 0;
    for (auto v : w.values) sum += v * v;
    return sum == std::int64_t{1} << (2 * w.n_vars);
  };
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
    for (std::uint64_t t = 0; t < count; ++t) {
      const auto f = BooleanFunction::from_words(n, {t});
      const auto w = walsh_transform(f);
      check.expect(w == oracle::naive_walsh(f), "mismatch at n=" + std::to_string(n));
      check.expect(parseval(w), "Parseval fails at n=" + std::to_string(n));
      ++compared;
    }
  }
  Rng rng(1001);
  for (int n : {6, 8, 10, 12}) {
    for (int i = 0; i < 1000; ++i) {
      const auto f = random_function(n, rng);
      const auto w = walsh_transform(f);
      check.expect(w == oracle::naive_walsh(f), "mismatch at n=" + std::to_string(n));
      check.expect(parseval(w), "Parseval fails at n=" + std::to_string(n));
      ++compared;
    }
  }
  return check.done(std::to_string(compared) + " functions, fast = naive, Parseval exact");
}

Outcome derivative_formulas() {
  Check check;
  Rng rng(1002);
  std::size_t instances = 0;
  for (int n : {4, 5, 6}) {
    const auto size = std::uint64_t{1} << n;
    for (int cu = 0; cu < 2; ++cu) {
      for (int cv = cu; cv < 2; ++cv) {
        for (int i = 0; i < 1000; ++i) {
          const auto f1 = random_function(n, rng);
          const auto f2 = random_function(n, rng);
          const Direction2 u{static_cast<Point>(uniform_below(rng, size)), cu == 1};
          const Direction2 v{static_cast<Point>(uniform_below(rng, size)), cv == 1};
          // Both orders, so the four ordered flag cases are all exercised.
          for (bool swap : {false, true}) {
            const auto& p = swap ? v : u;
            const auto& q = swap ? u : v;
            const auto direct = oracle::direct_second_derivative(
                concat2(f1, f2), p.a | Point{p.flag} << n, q.a | Point{q.flag} << n);
            check.expect(second_derivative_concat2(f1, f2, p, q) == direct,
                         "concat2 flags " + std::to_string(cu) + std::to_string(cv));
            ++instances;
          }
        }
      }
    }
    for (int cu = 0; cu < 4; ++cu) {
      for (int cv = cu; cv < 4; ++cv) {
        for (int i = 0; i < 1000; ++i) {
          const std::array pieces{random_function(n, rng), random_function(n, rng),
                                  random_function(n, rng), random_function(n, rng)};
          const auto f = concat4(pieces[0], pieces[1], pieces[2], pieces[3]);
          Direction4 u{static_cast<Point>(uniform_below(rng, size)), (cu & 1) != 0, (cu & 2) != 0};
          Direction4 v{static_cast<Point>(uniform_below(rng, size)), (cv & 1) != 0, (cv & 2) != 0};
          if (i % 2) std::swap(u, v);
          const auto direct = oracle::direct_second_derivative(
              f, u.a | Point{u.first} << n | Point{u.second} << (n + 1),
              v.a | Point{v.first} << n | Point{v.second} << (n + 1));
          check.expect(second_derivative_concat4(pieces, u, v) == direct,
                       "concat4 flags " + std::to_string(cu) + std::to_string(cv));
          ++instances;
        }
      }
    }
  }
  return check.done(std::to_string(instances) + " instances: 4 ordered concat2 and 10 unordered concat4 flag cases at n = 4, 5, 6");
}

Outcome theorem1_iff() {
  Check check;
  Rng rng(1003);
  std::size_t pairs = 0;
  std::set<std::string> conditions;
  while (pairs < 120) {
    const auto halves = restrictions(random_bent(6, rng), 2);
    const auto& f1 = halves[0];
    const auto& f2 = halves[1];
    check.expect(disjoint_spectra(f1, f2), "halves without disjoint spectra");
    check.expect(classify_spectrum(walsh_transform(f1)).tag == SpectrumTag::SemiBent, "piece not semi-bent");
    const auto f = concat2(f1, f2);
    for (int k = 0; k <= 5; ++k) {
      const auto verdict = theorem1_verdict(f1, f2, k, {kBudget, true});
      const bool direct = !oracle::naive_m_subspaces(f, k + 1).empty();
      check.expect(verdict.inside_mm == direct, "disagreement at k=" + std::to_string(k));
      conditions.insert(verdict.condition);
    }
    const auto corollary = corollary1_outside_mm(f1, f2, {kBudget, true});
    check.expect(corollary.inside_mm == oracle::naive_m_check(f).inside(), "corollary disagreement");
    ++pairs;
  }
  std::string seen;
  for (const auto& c : conditions) seen += (seen.empty() ? "" : ",") + c;
  return check.done(std::to_string(pairs) + " pairs x k = 0..5 agree (conditions " + seen + ")");
}

Outcome theorem3_completeness() {
  Check check;
  Rng rng(1004);
  std::size_t sets = 0;
  std::size_t subspaces = 0;
  std::set<char> forms;
  for (int t = 0; t < 60; ++t) {
    const int degree = t % 3 == 0 ? 4 : (t % 3 == 1 ? 2 : 1);
    const std::array pieces{random_function_of_degree(4, degree, rng), random_function_of_degree(4, degree, rng),
                            random_function_of_degree(4, degree, rng), random_function_of_degree(4, degree, rng)};
    const auto f = concat4(pieces[0], pieces[1], pieces[2], pieces[3]);
    for (int k = -1; k <= 4; ++k) {
      std::vector<Subspace> formed;
      for (const auto& w : theorem3_enumerate_forms(pieces, k, kBudget)) formed.push_back(w.subspace);
      const auto direct = oracle::naive_m_subspaces(f, k + 2);
      check.expect(formed == direct, "set mismatch at dimension " + std::to_string(k + 2));
      subspaces += direct.size();
      for (const auto& w : theorem3_enumerate_forms(pieces, k, kBudget)) forms.insert(to_char(w.form));
      ++sets;
    }
  }
  check.expect(forms.size() == 5, "not every form occurred");
  return check.done("60 tuples, dimensions 1..6, " + std::to_string(sets) + " sets equal (" +
                    std::to_string(subspaces) + " subspaces, all five forms)");
}

Outcome inside_mm_gh() {
  Check check;
  Rng rng(1005);
  int inside = 0;
  int outside = 0;
  for (int i = 0; i < 60; ++i) {
    BooleanFunction g;
    BooleanFunction h;
    if (i % 2 == 0) {
      // Two MM functions moved by one linear map share its preimage of V.
      const auto a = random_invertible(6, rng);
      g = compose(mm_function(PermutationSpec::of(3, random_permutation(3, rng)), random_function(3, rng)), a);
      h = compose(mm_function(PermutationSpec::of(3, random_permutation(3, rng)), random_function(3, rng)), a);
    } else {
      const auto q = find_unique_msubspace_bent(6, 10000, rng);
      g = q.function;
      const auto a = find_invertible_pair(6, rng);
      h = i % 4 == 1 ? compose(g, a) : random_bent(6, rng);
    }
    const auto verdict = ghgh_class(g, h, kBudget);
    const auto direct = oracle::naive_m_check(ghgh(g, h));
    check.expect(verdict.membership == direct.membership, "disagreement on pair " + std::to_string(i));
    (verdict.inside() ? inside : outside)++;
  }
  check.expect(inside > 0 && outside > 0, "only one outcome sampled");
  return check.done("60 pairs agree with the 200787-subspace scan (" + std::to_string(inside) + " Inside, " +
                    std::to_string(outside) + " Outside)");
}

Outcome outside_witness() {
  Check check;
  const auto fixture = outside_fixture();
  const auto recipe =
      nlohmann::json::parse(read_text(std::string(BENTCAT_FIXTURE_DIR) + "/rind_outside_8.json"));
  const int m = recipe.at("m").get<int>();
  const auto pi = PermutationSpec::of(m, hex_list(recipe.at("pi")));
  const auto a = BinaryMatrix::from_rows(hex_list(recipe.at("A")));
  const auto rebuilt = rind_construction(pi, a, kBudget);
  check.expect(rebuilt == fixture, "rebuilt function differs from the fixture");
  check.expect(is_bent(fixture), "fixture is not bent");
  const auto verdict = oracle::naive_m_check(fixture);
  check.expect(verdict.membership == Membership::Outside, "exhaustive scan found an M-subspace");
  return check.done("fixture rebuilt from its recipe; " + std::to_string(verdict.nodes_explored) +
                    " subspaces scanned, none is an M-subspace");
}

Outcome explicit_design_chain() {
  Check check;
  Rng rng(1007);
  const auto g = outside_fixture();
  std::uint64_t nodes = 0;
  const auto mm = mm_function(PermutationSpec::of(4, random_permutation(4, rng)), random_function(4, rng));
  const auto six = mm_function(PermutationSpec::of(3, random_permutation(3, rng)), random_function(3, rng));
  const auto korsakova = korsakova_pair(six, 0x2b).first;
  for (const auto* h : {&mm, &korsakova, &g}) {
    const auto f = ghgh(g, *h);
    check.expect(certified_membership(f, check, &nodes) == Membership::Outside, "expected Outside");
    check.expect(!ghgh_class(g, *h, kBudget).inside(), "ghgh_class disagrees");
  }
  int controls = 0;
  for (int i = 0; i < 3; ++i) {
    const auto pi1 = PermutationSpec::of(4, random_permutation(4, rng));
    const auto pi2 = PermutationSpec::of(4, random_permutation(4, rng));
    const auto f = ghgh(mm_function(pi1, random_function(4, rng)), mm_function(pi2, random_function(4, rng)));
    check.expect(certified_membership(f, check, &nodes) == Membership::Inside, "control not Inside");
    ++controls;
  }
  return check.done("3 Outside at 10 variables, " + std::to_string(controls) +
                    " Inside controls, max nodes " + std::to_string(nodes) + " of budget 1e8");
}

Outcome korsakova_sweep() {
  Check check;
  Rng rng(1008);
  const auto g = mm_function(PermutationSpec::of(3, random_permutation(3, rng)), random_function(3, rng));
  for (Point alpha = 0; alpha < 64; ++alpha) {
    const auto [f, f_prime] = korsakova_pair(g, alpha);
    for (const auto* x : {&f, &f_prime}) {
      check.expect(is_bent(*x), "not bent");
      const auto verdict = is_in_completed_mm(*x, kBudget);
      check.expect(verdict.inside() && oracle::naive_is_m_subspace(*x, *verdict.witness),
                   "not certified Inside");
    }
  }
  const auto outside = outside_fixture();
  std::uint64_t nodes = 0;
  int sampled = 0;
  for (int i = 0; i < 8; ++i) {
    const auto alpha = static_cast<Point>(uniform_below(rng, 256));
    const auto [f, f_prime] = korsakova_pair(outside, alpha);
    check.expect(certified_membership(f, check, &nodes) == Membership::Outside, "f not Outside");
    check.expect(certified_membership(f_prime, check, &nodes) == Membership::Outside, "f' not Outside");
    ++sampled;
  }
  return check.done("64 alphas x 2 Inside at 8 variables; " + std::to_string(sampled) +
                    " sampled alphas x 2 Outside at 10 variables, max nodes " + std::to_string(nodes));
}

Outcome special_case_identity() {
  Check check;
  Rng rng(1009);
  std::vector<BooleanFunction> tested;
  for (int i = 0; i < 10; ++i) tested.push_back(random_bent(6, rng));
  tested.push_back(outside_fixture());
  int outside = 0;
  for (const auto& f1 : tested) {
    const int n = f1.n_vars();
    const auto f = concat4(f1, f1, f1, f1.complement());
    const auto expected = BooleanFunction::from_predicate(n + 2, [&](Point x) {
      return f1[x & ((Point{1} << n) - 1)] ^ ((x >> n) == 3);
    });
    check.expect(f == expected, "table differs from f1 + y1 y2");
    const auto before = n <= oracle::kMaxSubspaceVars ? oracle::naive_m_check(f1).membership
                                                      : is_in_completed_mm(f1, kBudget).membership;
    const auto after = is_in_completed_mm(f, kBudget).membership;
    check.expect(before == after, "verdict changed");
    outside += after == Membership::Outside;
  }
  check.expect(outside == 1, "expected exactly the fixture to stay Outside");
  return check.done(std::to_string(tested.size()) + " functions, tables equal, verdicts preserved (" +
                    std::to_string(outside) + " Outside)");
}

Outcome half_concatenation() {
  Check check;
  Rng rng(1010);
  int built = 0;
  for (int k : {2, 3}) {
    for (int i = 0; i < 12; ++i) {
      std::vector<Point> images(std::size_t{2} << k);
      for (Point v = 0; v < images.size(); ++v) images[v] = v;
      for (std::size_t j = images.size() - 1; j > 0; --j) std::swap(images[j], images[uniform_below(rng, j + 1)]);
      const std::size_t half = std::size_t{1} << k;
      const PermutationSpec pi1{k, k + 1, {images.begin(), images.begin() + half}};
      const PermutationSpec pi2{k, k + 1, {images.begin() + half, images.end()}};
      const auto f = theorem2_halfconcat(pi1, pi2, random_function(k, rng), random_function(k, rng));
      const auto witness = canonical_mm_subspace(k + 1);
      check.expect(is_bent(f), "not bent");
      check.expect(oracle::naive_is_m_subspace(f, witness), "canonical subspace is not an M-subspace");
      check.expect(witness.dim() == f.n_vars() / 2, "witness is not half-dimensional");
      ++built;
    }
  }
  return check.done(std::to_string(built) + " half-concatenations at k = 2, 3 bent with F_2^{k+1} x 0");
}

Outcome dual_sum() {
  Check check;
  Rng rng(1011);
  int positives = 0;
  int negatives = 0;
  for (int i = 0; i < 120; ++i) {
    std::array<BooleanFunction, 4> pieces{random_bent(6, rng), random_bent(6, rng), random_bent(6, rng),
                                          random_bent(6, rng)};
    switch (i % 3) {
      case 0:  // g || h || g || h+1
        pieces[2] = pieces[0];
        pieces[3] = pieces[1].complement();
        break;
      case 1: {  // four duals summing to 1 in a shuffled order
        pieces[1] = pieces[0].complement();
        pieces[3] = pieces[2];
        std::swap(pieces[uniform_below(rng, 4)], pieces[uniform_below(rng, 4)]);
        break;
      }
      default:
        break;
    }
    const bool direct = is_bent(concat4(pieces[0], pieces[1], pieces[2], pieces[3]));
    check.expect(bent4_dual_sum(pieces) == direct, "disagreement on quadruple " + std::to_string(i));
    (direct ? positives : negatives)++;
  }
  int refused = 0;
  for (int i = 0; i < 20; ++i) {
    std::array<BooleanFunction, 4> pieces{random_bent(6, rng), random_bent(6, rng), random_bent(6, rng),
                                          random_function(6, rng)};
    std::swap(pieces[3], pieces[uniform_below(rng, 4)]);
    try {
      bent4_dual_sum(pieces);
    } catch (const NotBent&) {
      ++refused;
    }
  }
  check.expect(positives > 0 && negatives > 0, "only one outcome sampled");
  check.expect(refused == 20, "non-bent piece accepted");
  return check.done("120 all-bent quadruples agree (" + std::to_string(positives) + " bent, " +
                    std::to_string(negatives) + " not); " + std::to_string(refused) +
                    " mixed quadruples refused");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"walsh transform vs naive sum", transforms},
      {"second-derivative formulas", derivative_formulas},
      {"two-piece verdict iff", theorem1_iff},
      {"four-piece form completeness", theorem3_completeness},
      {"ghgh class iff", inside_mm_gh},
      {"outside witness at 8 variables", outside_witness},
      {"outside chain at 10 variables", explicit_design_chain},
      {"korsakova sweep", korsakova_sweep},
      {"f1 + y1 y2 identity", special_case_identity},
      {"half-concatenation witness", half_concatenation},
      {"dual-sum criterion", dual_sum},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", index, name,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += !outcome.pass;
  }
  return failures;
}
