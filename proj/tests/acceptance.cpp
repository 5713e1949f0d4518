// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "brace_checks.hpp"
#include "oracles.hpp"
#include "ybe/abelian_union.hpp"
#include "ybe/brace.hpp"
#include "ybe/retraction.hpp"
#include "ybe/solution.hpp"

using namespace ybe;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string describe(const std::map<std::string, int>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : m) {
    os << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

Outcome census_counts() {
  const auto t0 = Clock::now();
  const auto c3 = enumerate_2reductive(3, 1);
  const auto c4 = enumerate_2reductive(4, 1);
  const double elapsed = seconds_since(t0);
  std::map<std::string, int> by;
  for (const auto& u : c4) ++by[orbit_type(u)];
  const std::map<std::string, int> expected{
      {"Z4", 3}, {"Z3+Z1", 20}, {"Z2+Z2", 42}, {"Z2+Z1+Z1", 30}, {"Z1+Z1+Z1+Z1", 1}};
  const bool pass = c3.size() == 14 && c4.size() == 96 && by == expected && elapsed < 10.0;
  return {pass, "n=3: " + std::to_string(c3.size()) + " (expected 14); n=4: " + std::to_string(c4.size()) +
                    " (expected 96) [" + describe(by) + "] (expected [" + describe(expected) + "]); " +
                    fmt_seconds(elapsed)};
}

Outcome census_refinement() {
  int involutive = 0, square_free = 0, disagreements = 0;
  const auto c3 = enumerate_2reductive(3);
  for (const auto& u : c3) {
    const auto p = union_predicates(u);
    const Solution s = union_to_solution(u);
    involutive += p.involutive;
    square_free += p.square_free;
    disagreements += p.involutive != is_involutive(s) || p.square_free != is_square_free(s);
  }
  const bool pass = c3.size() == 14 && involutive == 5 && square_free == 3 && disagreements == 0;
  return {pass, "census size " + std::to_string(c3.size()) + " (expected 14), involutive " +
                    std::to_string(involutive) + " (expected 5), square-free " + std::to_string(square_free) +
                    " (expected 3), predicate disagreements " + std::to_string(disagreements)};
}

// Every pair of tables whose rows are permutations, filtered by verify and
// is_2reductive, then deduplicated with the all-bijections oracle.
Outcome completeness_oracle() {
  const auto t0 = Clock::now();
  std::ostringstream detail;
  bool pass = true;
  for (int n : {2, 3}) {
    const auto perms = oracle::all_permutations(n);
    std::vector<oracle::Table> tables;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      oracle::Table t;
      for (auto i : idx) t.push_back(perms[i]);
      tables.push_back(std::move(t));
      int k = 0;
      while (k < n && ++idx[k] == perms.size()) idx[k++] = 0;
      if (k == n) break;
    }
    std::vector<std::pair<oracle::Table, oracle::Table>> kept;
    std::size_t pairs = 0;
    int oracle_mismatch = 0;
    for (const auto& sigma : tables)
      for (const auto& tau : tables) {
        ++pairs;
        const auto res = verify(sigma, tau);
        const bool lib = res && is_2reductive(*res.solution).all();
        const bool ref = oracle::is_solution(sigma, tau) && oracle::two_reductive(sigma, tau);
        oracle_mismatch += lib != ref;
        if (lib) kept.emplace_back(sigma, tau);
      }
    const int classes = oracle::count_classes(kept);
    const std::size_t enumerated = enumerate_2reductive(n).size();
    pass = pass && oracle_mismatch == 0 && static_cast<std::size_t>(classes) == enumerated;
    detail << "n=" << n << ": " << pairs << " pairs, " << kept.size() << " 2-reductive, " << classes
           << " classes vs " << enumerated << " enumerated, " << oracle_mismatch << " filter mismatches; ";
  }
  const double elapsed = seconds_since(t0);
  detail << fmt_seconds(elapsed);
  return {pass && elapsed < 60.0, detail.str()};
}

Outcome round_trip() {
  std::mt19937 rng(2024);
  int round_trip_failures = 0, checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& u : enumerate_2reductive(n)) {
      const Solution s = union_to_solution(u);
      ++checked;
      if (!unions_isomorphic(solution_to_union(s).u, u)) ++round_trip_failures;
      const Perm phi = oracle::random_perm(n, rng);
      if (!unions_isomorphic(solution_to_union(relabel(s, phi)).u, u)) ++round_trip_failures;
    }

  int mismatches = 0;
  std::size_t pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto census = enumerate_2reductive(n);
    std::vector<Solution> sols;
    std::vector<Solution> scrambled;
    std::vector<AbelianUnion> scrambled_unions;
    for (const auto& u : census) {
      sols.push_back(union_to_solution(u));
      scrambled.push_back(relabel(sols.back(), oracle::random_perm(n, rng)));
      scrambled_unions.push_back(solution_to_union(scrambled.back()).u);
    }
    for (std::size_t i = 0; i < census.size(); ++i)
      for (std::size_t j = 0; j < census.size(); ++j) {
        ++pairs;
        const bool by_union = unions_isomorphic(census[i], scrambled_unions[j]).has_value();
        const bool by_force = oracle::isomorphic(sols[i].sigma_table(), sols[i].tau_table(),
                                                 scrambled[j].sigma_table(), scrambled[j].tau_table());
        mismatches += by_union != by_force;
      }
  }
  return {round_trip_failures == 0 && mismatches == 0,
          std::to_string(checked) + " entries (n<=5), " + std::to_string(round_trip_failures) +
              " round-trip failures; " + std::to_string(pairs) + " pairs (n<=4), " + std::to_string(mismatches) +
              " isomorphism mismatches"};
}

bool rows_equal(const Table& t) {
  for (const auto& row : t)
    if (row != t.front()) return false;
  return true;
}

// Retracts until a single element remains or the size stops shrinking.
std::optional<int> tower_level(const Solution& s) {
  Solution cur = s;
  int steps = 0;
  while (cur.size() > 1) {
    Solution next = retraction(cur).solution;
    if (next.size() == cur.size()) return std::nullopt;
    cur = std::move(next);
    ++steps;
  }
  return steps;
}

Outcome retraction_properties() {
  int violations = 0, checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& u : enumerate_2reductive(n)) {
      const Solution s = union_to_solution(u);
      ++checked;
      const Solution ret = retraction(s).solution;
      bool ok = true;
      for (int x = 0; x < static_cast<int>(ret.size()); ++x)
        for (int y = 0; y < static_cast<int>(ret.size()); ++y)
          ok = ok && ret.sigma(x, y) == y && ret.tau(y, x) == x;
      ok = ok && is_abelian(permutation_groups(s).g_full);
      const auto level = tower_level(s);
      ok = ok && level && *level <= 2;
      const bool permutational = rows_equal(s.sigma_table()) && rows_equal(s.tau_table());
      ok = ok && level && (*level == 2) == !permutational;
      const auto reported = multipermutation_level(s);
      ok = ok && level && reported.finite && reported.level == *level;
      violations += !ok;
    }
  return {violations == 0, std::to_string(checked) + " census entries (n<=5), " + std::to_string(violations) +
                               " violations"};
}

Outcome brace_catalog_suite() {
  const auto t0 = Clock::now();
  const std::array<std::pair<const char*, std::function<bool(const SkewBrace&)>>, 7> props{{
      {"a", checks::lambda_is_circle_hom},
      {"b", checks::rho_is_circle_antihom},
      {"c", checks::socle_is_kernel_meet},
      {"d", checks::biskew_routes_agree},
      {"e", checks::opposite_gives_inverse},
      {"f", checks::profile_consistent},
      {"g", checks::retraction_matches_socle_quotient},
  }};
  const auto catalog = checks::brace_catalog();
  int violations = 0;
  std::string failed;
  for (const auto& [name, b] : catalog) {
    if (!verify_brace(b.dot(), b.circle())) {
      ++violations;
      failed += " " + name + "(brace law)";
    }
    for (const auto& [tag, check] : props)
      if (!check(b)) {
        ++violations;
        failed += " " + name + "(" + tag + ")";
      }
  }
  const double elapsed = seconds_since(t0);
  return {violations == 0 && elapsed < 30.0, std::to_string(catalog.size()) + " braces, " +
                                                 std::to_string(violations) + " violations" +
                                                 (failed.empty() ? "" : ":" + failed) + "; " + fmt_seconds(elapsed)};
}

Outcome named_examples() {
  std::vector<std::string> failed;
  int total = 0;
  auto expect = [&](bool ok, const char* what) {
    ++total;
    if (!ok) failed.emplace_back(what);
  };

  const SkewBrace z6 = z2n_brace(3);
  const Solution s = associated_solution(z6);
  expect(is_left_distributive(s), "Z6 left distributive");
  expect(!is_right_distributive(s), "Z6 not right distributive");
  const auto lvl = multipermutation_level(s);
  expect(!lvl.finite && lvl.stabilized_size == 6, "Z6 irretractable");
  expect(socle(z6) == Subset{0}, "Z6 socle {0}");
  const auto k = kernel_ideals(z6);
  expect(k.ker_rho == Subset{0, 3}, "Z6 ker rho {0,3}");
  expect(!is_normal(z6.dot(), k.ker_rho), "Z6 ker rho not normal");

  const SkewBrace d = dihedral_example_brace();
  const int f_e1 = dihedral_example_element(1, 1), f = dihedral_example_element(1, 0);
  const int e1 = dihedral_example_element(0, 1), f_e3 = dihedral_example_element(1, 3);
  expect(d.rho(f_e1, e1) == f_e3, "dihedral rho_{f+e1}(e1) = f+e3");
  expect(d.mul(f_e1, f) != f_e3, "dihedral (f+e1)+f != f+e3");

  const AbelianUnion u{{abelian_group({2}), abelian_group({})}, {{0, 0}, {0, 0}}, {{0, 0}, {1, 0}}};
  const auto inj = injectivity_necessary_checks(u);
  expect(inj.diagonal_ok && !inj.order_ok, "Z2+Z1 order condition fails");

  std::string detail = std::to_string(total) + " checks";
  for (const auto& f_name : failed) detail += "; failed: " + f_name;
  return {failed.empty(), detail};
}

Outcome seven_identities() {
  const auto identities = checks::seven_identities();
  int qualifying = 0, violations = 0;
  std::string failed;
  for (const auto& [name, b] : checks::brace_catalog()) {
    if (!is_2reductive(associated_solution(b)).all()) continue;
    ++qualifying;
    for (std::size_t i = 0; i < identities.size(); ++i)
      if (!identities[i](b)) {
        ++violations;
        failed += " " + name + "(" + std::to_string(i + 1) + ")";
      }
  }
  return {qualifying > 0 && violations == 0, std::to_string(qualifying) + " 2-reductive braces, " +
                                                 std::to_string(violations) + " violations" +
                                                 (failed.empty() ? "" : ":" + failed)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"census counts", census_counts},
      {"census refinement", census_refinement},
      {"completeness oracle", completeness_oracle},
      {"round trip", round_trip},
      {"retraction properties", retraction_properties},
      {"brace catalog suite", brace_catalog_suite},
      {"named examples", named_examples},
      {"seven identities", seven_identities},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
