#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "ybe/abelian_union.hpp"

namespace ybe {

namespace {

// Multisets of group types whose orders sum to n, each sorted by decreasing
// type.
std::vector<std::vector<AbelianGroup>> orbit_types(int n) {
  std::vector<AbelianGroup> types;
  for (int m = 1; m <= n; ++m)
    for (const auto& a : abelian_groups_of_order(m)) types.push_back(a);
  std::sort(types.begin(), types.end(), std::greater<>());

  std::vector<std::vector<AbelianGroup>> out;
  std::vector<AbelianGroup> cur;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t t = from; t < types.size(); ++t) {
      if (static_cast<int>(types[t].size()) > left) continue;
      cur.push_back(types[t]);
      self(self, t, left - static_cast<int>(types[t].size()));
      cur.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

// Every (c_{0,j}..c_{k-1,j}, d_{0,j}..d_{k-1,j}) generating A.
std::vector<std::vector<int>> generating_columns(const AbelianGroup& a, std::size_t k) {
  const std::size_t len = 2 * k;
  const int m = static_cast<int>(a.size());
  std::vector<std::vector<int>> out;
  std::vector<int> col(len, 0);
  while (true) {
    if (a.generated_by(col)) out.push_back(col);
    std::size_t p = 0;
    while (p < len && ++col[p] == m) col[p++] = 0;
    if (p == len) break;
  }
  return out;
}

std::vector<AbelianUnion> enumerate_cell(const std::vector<AbelianGroup>& groups) {
  const std::size_t k = groups.size();
  std::vector<std::vector<std::vector<int>>> cols;
  for (const auto& g : groups) cols.push_back(generating_columns(g, k));

  std::set<std::pair<Table, Table>> seen;
  AbelianUnion u;
  u.groups = groups;
  u.c.assign(k, std::vector<int>(k));
  u.d.assign(k, std::vector<int>(k));
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& col = cols[j][pick[j]];
      for (std::size_t i = 0; i < k; ++i) {
        u.c[i][j] = col[i];
        u.d[i][j] = col[k + i];
      }
    }
    AbelianUnion canon = canonical_form(u);
    seen.emplace(std::move(canon.c), std::move(canon.d));

    std::size_t p = 0;
    while (p < k && ++pick[p] == cols[p].size()) pick[p++] = 0;
    if (p == k) break;
  }

  std::vector<AbelianUnion> out;
  for (const auto& [c, d] : seen) out.push_back(AbelianUnion{groups, c, d});
  return out;
}

}  // namespace

std::vector<AbelianUnion> enumerate_2reductive(int n, int jobs) {
  if (n <= 0) throw std::invalid_argument("census size must be positive");
  const auto cells = orbit_types(n);
  std::vector<std::vector<AbelianUnion>> results(cells.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = enumerate_cell(cells[i]);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<AbelianUnion> out;
  for (auto& r : results)
    for (auto& u : r) out.push_back(std::move(u));
  std::sort(out.begin(), out.end(), union_less);
  return out;
}

}  // namespace ybe
