#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ybe/solution.hpp"

using namespace ybe;

namespace {

const std::vector<std::pair<Table, Table>>& all3() {
  static const auto sols = oracle::all_solutions(3);
  return sols;
}

}  // namespace

TEST_CASE("projection solution satisfies every predicate") {
  const Solution p = projection_solution(3);
  CHECK(is_involutive(p));
  CHECK(is_square_free(p));
  CHECK(is_permutational(p));
  CHECK(is_projection(p));
  CHECK(has_lri(p));
  CHECK(is_2reductive(p).all());
  CHECK(is_left_distributive(p));
  CHECK(is_right_distributive(p));
  CHECK(satisfies_condition_star(p));
}

TEST_CASE("Lyubashenko permutational solution") {
  const Perm f{1, 2, 3, 0};
  const Perm g{2, 3, 0, 1};
  REQUIRE(compose(f, g) == compose(g, f));
  const Solution s = permutational_solution(f, g);
  CHECK(is_permutational(s));
  CHECK_FALSE(is_projection(s));
  CHECK(oracle::is_solution(s.sigma_table(), s.tau_table()));
}

TEST_CASE("verify agrees with the brute-force braid check on all 16 candidates at n=2") {
  const Perm id{0, 1}, sw{1, 0};
  int accepted = 0;
  for (int mask = 0; mask < 16; ++mask) {
    Table s{mask & 1 ? sw : id, mask & 2 ? sw : id};
    Table t{mask & 4 ? sw : id, mask & 8 ? sw : id};
    const auto res = verify(s, t);
    CHECK(static_cast<bool>(res) == oracle::is_solution(s, t));
    accepted += static_cast<bool>(res);
  }
  CHECK(accepted == static_cast<int>(oracle::all_solutions(2).size()));

  // σ_0 = σ_1 = (0 1), τ_0 = id, τ_1 = (0 1)
  const Table s{sw, sw}, t{id, sw};
  CHECK(static_cast<bool>(verify(s, t)) == oracle::is_solution(s, t));
}

TEST_CASE("violation witnesses") {
  SUBCASE("non-permutation row") {
    const auto res = verify({{0, 1, 2}, {0, 0, 1}, {0, 1, 2}}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
    REQUIRE(res.violation);
    CHECK(res.violation->kind == ViolationKind::kSigmaNotPermutation);
    CHECK(res.violation->witness == std::vector<int>{1});
  }
  SUBCASE("tau row") {
    const auto res = verify({{0, 1}, {0, 1}}, {{0, 1}, {1, 1}});
    REQUIRE(res.violation);
    CHECK(res.violation->kind == ViolationKind::kTauNotPermutation);
    CHECK(res.violation->witness == std::vector<int>{1});
  }
  SUBCASE("r not bijective") {
    const auto res = verify({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}});
    REQUIRE(res.violation);
    CHECK(res.violation->kind == ViolationKind::kNotBijective);
    CHECK(res.violation->witness == std::vector<int>{0, 1, 1, 0});
  }
  SUBCASE("shape errors throw") {
    CHECK_THROWS_AS(verify({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(verify({{0, 1}, {0, 1}}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(verify({{0, 2}, {0, 1}}, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Solution::from_tables({{0, 1}, {1, 1}}, {{0, 1}, {0, 1}}), std::invalid_argument);
  }
}

TEST_CASE("braid and birack checks agree on random tables") {
  std::mt19937 rng(11);
  int failures_seen = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 2 + trial % 3;
    Table s, t;
    for (int i = 0; i < n; ++i) {
      s.push_back(oracle::random_perm(n, rng));
      t.push_back(oracle::random_perm(n, rng));
    }
    const bool braid = !braid_violation(s, t);
    const bool birack = !birack_violation(s, t);
    CHECK(braid == birack);
    CHECK(braid == oracle::braid_holds(s, t));
    const auto res = verify(s, t);
    CHECK(static_cast<bool>(res) == oracle::is_solution(s, t));
    if (res.violation && res.violation->kind >= ViolationKind::kBirack1) {
      ++failures_seen;
      const auto& w = res.violation->witness;
      CHECK(w.size() == 3);
      CHECK(res.violation->kind != ViolationKind::kBraid);
    }
  }
  CHECK(failures_seen > 0);
}

TEST_CASE("birack witness is the lexicographically least failing triple") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3;
    Table s, t;
    for (int i = 0; i < n; ++i) {
      s.push_back(oracle::random_perm(n, rng));
      t.push_back(oracle::random_perm(n, rng));
    }
    const auto b = birack_violation(s, t);
    if (!b) continue;
    auto fails = [&](int x, int y, int z) {
      std::vector<int> bad;
      if (s[x][s[y][z]] != s[s[x][y]][s[t[y][x]][z]]) bad.push_back(1);
      if (t[s[t[y][x]][z]][s[x][y]] != s[t[s[y][z]][x]][t[z][y]]) bad.push_back(2);
      if (t[x][t[y][z]] != t[t[x][y]][t[s[y][x]][z]]) bad.push_back(3);
      return bad;
    };
    std::vector<int> first;
    std::vector<int> ids;
    for (int x = 0; x < n && first.empty(); ++x)
      for (int y = 0; y < n && first.empty(); ++y)
        for (int z = 0; z < n && first.empty(); ++z) {
          ids = fails(x, y, z);
          if (!ids.empty()) first = {x, y, z};
        }
    CHECK(b->witness == first);
    CHECK(static_cast<int>(b->kind) - static_cast<int>(ViolationKind::kBirack1) + 1 == ids.front());
  }
}

TEST_CASE("inverse solution") {
  for (const auto& [s, t] : all3()) {
    const Solution sol = Solution::from_tables(s, t);
    const Solution inv = inverse_solution(sol);
    CHECK(inverse_solution(inv) == sol);
    // r ∘ r^{-1} = id
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) {
        const int x = inv.sigma(u, v), y = inv.tau(v, u);
        CHECK(sol.sigma(x, y) == u);
        CHECK(sol.tau(y, x) == v);
      }
    if (is_involutive(sol)) CHECK(inv == sol);
  }
}

TEST_CASE("inverses of the trivial and almost trivial solutions on S3") {
  const FiniteGroup g = symmetric_group(3);
  auto build = [](auto sig, auto ta) {
    Table s(6, std::vector<int>(6)), t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        s[a][b] = sig(a, b);
        t[b][a] = ta(b, a);
      }
    return Solution::from_tables(s, t);
  };
  // λ_a(b) = b, ρ_b(a) = b⁻¹ab
  const Solution triv = build([](int, int b) { return b; },
                              [&](int b, int a) { return g.mul(g.mul(g.inv(b), a), b); });
  // λ_a(b) = a⁻¹ba, ρ_b(a) = a
  const Solution almost = build([&](int a, int b) { return g.mul(g.mul(g.inv(a), b), a); },
                                [](int, int a) { return a; });
  // λ̂_a(b) = b, ρ̂_b(a) = bab⁻¹
  const Solution almost_hat = build([](int, int b) { return b; },
                                    [&](int b, int a) { return g.mul(g.mul(b, a), g.inv(b)); });
  // aba⁻¹ and a: the almost trivial form over the opposite multiplication
  const Solution triv_hat = build([&](int a, int b) { return g.mul(g.mul(a, b), g.inv(a)); },
                                  [](int, int a) { return a; });
  CHECK(inverse_solution(almost) == almost_hat);
  CHECK(inverse_solution(triv) == triv_hat);
  CHECK_FALSE(is_involutive(triv));
}

TEST_CASE("distributivity routes agree on every solution of size 3") {
  for (const auto& [s, t] : all3()) {
    const Solution sol = Solution::from_tables(s, t);
    const auto left = left_distributivity_routes(sol);
    const auto right = right_distributivity_routes(sol);
    CHECK(left.agree());
    CHECK(right.agree());
    CHECK(left.defining == is_left_distributive(sol));
    CHECK(right.defining == is_right_distributive(sol));
    CHECK(is_left_distributive(sol) == is_right_distributive(inverse_solution(sol)));
    const auto red = is_2reductive(sol);
    CHECK(red.all() == oracle::two_reductive(s, t));
  }
}

TEST_CASE("square-free solutions satisfy condition star") {
  for (const auto& [s, t] : all3()) {
    const Solution sol = Solution::from_tables(s, t);
    if (is_square_free(sol)) CHECK(satisfies_condition_star(sol));
  }
}

TEST_CASE("relabeling and isomorphism search") {
  std::mt19937 rng(3);
  const auto& sols = all3();
  for (std::size_t i = 0; i < sols.size(); i += 3) {
    const Solution a = Solution::from_tables(sols[i].first, sols[i].second);
    const Perm phi = oracle::random_perm(3, rng);
    const Solution b = relabel(a, phi);
    const auto found = find_isomorphism(a, b);
    REQUIRE(found);
    CHECK(relabel(a, *found) == b);
    CHECK(is_automorphism(a, identity_perm(3)));
  }
  // Compare with brute force on a slice of pairs.
  for (std::size_t i = 0; i < sols.size(); i += 5) {
    for (std::size_t j = i; j < sols.size(); j += 7) {
      const Solution a = Solution::from_tables(sols[i].first, sols[i].second);
      const Solution b = Solution::from_tables(sols[j].first, sols[j].second);
      CHECK(find_isomorphism(a, b).has_value() ==
            oracle::isomorphic(sols[i].first, sols[i].second, sols[j].first, sols[j].second));
    }
  }
  CHECK_FALSE(find_isomorphism(projection_solution(2), projection_solution(3)));
}

TEST_CASE("predicates are isomorphism invariants") {
  std::mt19937 rng(9);
  for (const auto& [s, t] : all3()) {
    const Solution a = Solution::from_tables(s, t);
    const Solution b = relabel(a, oracle::random_perm(3, rng));
    CHECK(is_involutive(a) == is_involutive(b));
    CHECK(is_square_free(a) == is_square_free(b));
    CHECK(has_lri(a) == has_lri(b));
    CHECK(is_2reductive(a) == is_2reductive(b));
    CHECK(satisfies_condition_star(a) == satisfies_condition_star(b));
  }
}
