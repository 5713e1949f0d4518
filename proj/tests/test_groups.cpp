#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ybe/groups.hpp"

using namespace ybe;

TEST_CASE("permutation helpers follow the apply-right-first convention") {
  const Perm p{1, 2, 0};
  const Perm q{1, 0, 2};
  CHECK(compose(p, q) == Perm{2, 1, 0});
  CHECK(compose(p, inverse(p)) == identity_perm(3));
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation(std::vector<int>{0, 0, 1}));
  CHECK_FALSE(is_permutation(std::vector<int>{0, 3, 1}));
}

TEST_CASE("from_table rejects malformed tables") {
  CHECK_THROWS_AS(FiniteGroup::from_table({}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), std::invalid_argument);
  // Latin square without associativity.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), std::invalid_argument);
  const std::vector<std::vector<int>> bad{{1, 2, 0, 3, 4}, {2, 0, 3, 4, 1}, {0, 3, 4, 1, 2}, {3, 4, 1, 2, 0}, {4, 1, 2, 0, 3}};
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), std::invalid_argument);
}

TEST_CASE("abelian_group basics") {
  const AbelianGroup triv = abelian_group({});
  CHECK(triv.size() == 1);
  CHECK(triv.factors().empty());
  CHECK(triv.name() == "Z1");

  const AbelianGroup z2 = abelian_group({2});
  CHECK(z2.group().table() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

  CHECK(abelian_group({2, 4}) != abelian_group({8}));
  CHECK(abelian_group({3, 2}) == abelian_group({6}));
  CHECK(abelian_group({4, 2}).factors() == std::vector<int>{2, 4});
  CHECK(abelian_group({2, 1, 2}).name() == "Z2xZ2");
  CHECK_THROWS_AS(abelian_group({0}), std::invalid_argument);
  CHECK_THROWS_AS(abelian_group({-3}), std::invalid_argument);
}

TEST_CASE("abelian group tables are commutative with factors dividing each other") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& a : abelian_groups_of_order(n)) {
      CHECK(a.size() == static_cast<std::size_t>(n));
      const auto& f = a.factors();
      for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) CHECK(a.add(x, y) == a.add(y, x));
      for (int x = 0; x < n; ++x) CHECK(a.encode(a.coords(x)) == x);
    }
  }
}

TEST_CASE("abelian_groups_of_order counts") {
  CHECK(abelian_groups_of_order(1).size() == 1);
  const auto four = abelian_groups_of_order(4);
  REQUIRE(four.size() == 2);
  CHECK(four[0].name() == "Z4");
  CHECK(four[1].name() == "Z2xZ2");
  CHECK(abelian_groups_of_order(8).size() == 3);
  CHECK(abelian_groups_of_order(12).size() == 2);
  CHECK(abelian_groups_of_order(16).size() == 5);
  CHECK(abelian_groups_of_order(36).size() == 4);
  CHECK_THROWS_AS(abelian_groups_of_order(0), std::invalid_argument);
}

TEST_CASE("order 8 abelian classes agree with brute-force isomorphism") {
  // Every ordered factorization of 8 into cyclic orders, built independently.
  const std::vector<std::vector<int>> shapes{{8}, {2, 4}, {4, 2}, {2, 2, 2}};
  std::vector<oracle::Table> reps;
  for (const auto& shape : shapes) {
    const auto t = oracle::cyclic_product_table(shape);
    bool fresh = true;
    for (const auto& r : reps) fresh = fresh && !oracle::groups_isomorphic(t, r);
    if (fresh) reps.push_back(t);
  }
  CHECK(reps.size() == abelian_groups_of_order(8).size());
  for (const auto& a : abelian_groups_of_order(8)) {
    int matches = 0;
    for (const auto& r : reps) matches += oracle::groups_isomorphic(a.group().table(), r);
    CHECK(matches == 1);
  }
}

TEST_CASE("automorphism counts of small abelian groups") {
  CHECK(automorphisms(abelian_group({})).size() == 1);
  CHECK(automorphisms(abelian_group({3})).size() == 2);
  CHECK(automorphisms(abelian_group({8})).size() == 4);
  CHECK(automorphisms(abelian_group({2, 2})).size() == 6);
  CHECK(automorphisms(abelian_group({2, 4})).size() == 8);
  CHECK(automorphisms(abelian_group({2, 2, 2})).size() == 168);
  for (const auto& a : abelian_groups_of_order(8)) {
    const auto auts = automorphisms(a);
    CHECK(auts.front() == identity_perm(8));
    for (const auto& f : auts) {
      for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) CHECK(f[a.add(x, y)] == a.add(f[x], f[y]));
    }
  }
}

TEST_CASE("generated_by") {
  const AbelianGroup z22 = abelian_group({2, 2});
  CHECK_FALSE(z22.generated_by(std::vector<int>{1}));
  CHECK(z22.generated_by(std::vector<int>{1, 2}));
  CHECK(abelian_group({}).generated_by(std::vector<int>{}));
  CHECK(abelian_group({3}).generated_by(std::vector<int>{0, 2}));
}

TEST_CASE("subgroup machinery") {
  const FiniteGroup s3 = symmetric_group(3);
  CHECK(center(s3) == Subset{s3.identity()});
  const FiniteGroup z6 = cyclic_group(6);
  CHECK(element_order(z6, 2) == 3);
  const auto q = quotient(z6, {0, 3});
  CHECK(q.group.size() == 3);
  CHECK(q.representatives == std::vector<int>{0, 1, 2});
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(q.projection[z6.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));
  CHECK(subgroup_generated(z6, {2}) == Subset{0, 2, 4});
  CHECK(is_normal(z6, {0, 2, 4}));
  CHECK_FALSE(is_normal(z6, {0, 1}));
}

TEST_CASE("non-normal subgroups of S3 cannot be quotiented") {
  const FiniteGroup s3 = symmetric_group(3);
  for (int a = 0; a < 6; ++a) {
    if (element_order(s3, a) != 2) continue;
    const Subset h = subgroup_generated(s3, {a});
    CHECK(is_subgroup(s3, h));
    CHECK_FALSE(is_normal(s3, h));
    CHECK_THROWS_AS(quotient(s3, h), std::invalid_argument);
  }
}

TEST_CASE("quotients of every small group by every normal subgroup") {
  for (const auto& [name, g] : small_groups(8)) {
    const int n = static_cast<int>(g.size());
    for (int a = 0; a < n; ++a) {
      const Subset h = subgroup_generated(g, {a});
      if (!is_normal(g, h)) continue;
      const auto q = quotient(g, h);
      CAPTURE(name);
      CHECK(q.group.size() * h.size() == g.size());
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          CHECK(q.projection[g.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));
    }
  }
}

TEST_CASE("small_groups catalog") {
  const auto gs = small_groups(8);
  CHECK(gs.size() == 14);
  std::set<std::string> names;
  for (const auto& g : gs) names.insert(g.name);
  CHECK(names == std::set<std::string>{"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "Z7", "Z8",
                                       "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8"});
  for (const auto& g : gs) {
    const bool abelian = g.name != "S3" && g.name != "D4" && g.name != "Q8";
    CHECK(g.group.is_abelian() == abelian);
  }
  CHECK(nilpotency_class(quaternion_group()) == 2);
  CHECK(nilpotency_class(dihedral_group(4)) == 2);
  CHECK(nilpotency_class(symmetric_group(3)) == std::nullopt);
  CHECK(nilpotency_class(cyclic_group(1)) == 0);
  CHECK(nilpotency_class(cyclic_group(5)) == 1);
  CHECK(center(quaternion_group()).size() == 2);
}

TEST_CASE("opposite group") {
  const FiniteGroup s3 = symmetric_group(3);
  const FiniteGroup op = s3.opposite();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(op.mul(a, b) == s3.mul(b, a));
  CHECK(op.opposite() == s3);
}

TEST_CASE("permutation group closure and orbits") {
  CHECK(perm_group_closure({{1, 0}}).order() == 2);
  const auto s3 = perm_group_closure({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(is_abelian(s3));
  CHECK_THROWS_AS(perm_group_closure({{1, 0}, {0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(perm_group_closure({}), std::invalid_argument);

  CHECK(orbits(perm_group_closure({{0, 1, 2}})) == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(orbits(perm_group_closure({{1, 0, 2}})) == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(std::is_sorted(s3.elements().begin(), s3.elements().end()));
  CHECK(s3.contains({2, 1, 0}));
}

TEST_CASE("closure is independent of generator order and closed") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int deg = 2 + trial % 5;
    std::vector<Perm> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) gens.push_back(oracle::random_perm(deg, rng));
    auto shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    const auto g1 = PermGroup::closure(deg, gens);
    const auto g2 = PermGroup::closure(deg, shuffled);
    CHECK(g1.elements() == g2.elements());
    CHECK(g1.contains(identity_perm(deg)));
    for (const auto& p : g1.elements()) {
      CHECK(g1.contains(inverse(p)));
      for (const auto& q : g1.elements()) CHECK(g1.contains(compose(p, q)));
    }
    int fact = 1;
    for (int i = 2; i <= deg; ++i) fact *= i;
    CHECK(fact % static_cast<int>(g1.order()) == 0);

    // Orbits are the components of the generators' functional graphs.
    std::vector<int> comp(deg);
    std::iota(comp.begin(), comp.end(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : gens)
        for (int x = 0; x < deg; ++x) {
          const int m = std::min(comp[x], comp[p[x]]);
          if (comp[x] != m || comp[p[x]] != m) {
            comp[x] = comp[p[x]] = m;
            changed = true;
          }
        }
    }
    for (const auto& orb : orbits(g1))
      for (int x : orb) CHECK(comp[x] == orb.front());
  }
}
