#include "ybe/retraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ybe {

SolutionPartition SolutionPartition::from_blocks(std::size_t n,
                                                 std::vector<std::vector<int>> blocks,
                                                 RelationKind kind) {
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("partition has an empty block");
    for (int x : blocks[b]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw std::invalid_argument("partition element " + std::to_string(x) + " out of range");
      }
      if (owner[x] != -1) {
        throw std::invalid_argument("element " + std::to_string(x) + " lies in two blocks");
      }
      owner[x] = static_cast<int>(b);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (owner[x] == -1) throw std::invalid_argument("element " + std::to_string(x) + " is not covered");
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());

  SolutionPartition p;
  p.kind = kind;
  p.block_of.assign(n, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) p.block_of[x] = static_cast<int>(b);
  p.blocks = std::move(blocks);
  return p;
}

namespace {

template <class Key>
SolutionPartition partition_by(std::size_t n, RelationKind kind, Key key) {
  std::map<decltype(key(0)), std::vector<int>> groups;
  for (std::size_t x = 0; x < n; ++x) groups[key(static_cast<int>(x))].push_back(static_cast<int>(x));
  std::vector<std::vector<int>> blocks;
  for (auto& [k, b] : groups) blocks.push_back(std::move(b));
  return SolutionPartition::from_blocks(n, std::move(blocks), kind);
}

}  // namespace

SolutionPartition relation(const Solution& s, RelationKind kind) {
  switch (kind) {
    case RelationKind::kSim:
      return partition_by(s.size(), kind, [&](int x) { return s.sigma_row(x); });
    case RelationKind::kCosim:
      return partition_by(s.size(), kind, [&](int x) { return s.tau_row(x); });
    case RelationKind::kApprox:
      return partition_by(s.size(), kind,
                          [&](int x) { return std::pair{s.sigma_row(x), s.tau_row(x)}; });
    case RelationKind::kCustom:
      break;
  }
  throw std::invalid_argument("custom partitions are not derived from a solution");
}

SolutionPartition meet(const SolutionPartition& a, const SolutionPartition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("partitions of different sets");
  return partition_by(a.size(), RelationKind::kCustom,
                      [&](int x) { return std::pair{a.block_of[x], b.block_of[x]}; });
}

bool is_congruence(const Solution& s, const SolutionPartition& p) {
  const int n = static_cast<int>(s.size());
  if (p.size() != s.size()) return false;
  const int k = static_cast<int>(p.blocks.size());
  // For each of the four maps, the block of the output must depend only on
  // the blocks of the inputs.
  for (int which = 0; which < 4; ++which) {
    std::vector<int> seen(static_cast<std::size_t>(k) * k, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int v = 0;
        switch (which) {
          case 0: v = s.sigma(x, y); break;
          case 1: v = s.sigma_inv(x, y); break;
          case 2: v = s.tau(x, y); break;
          default: v = s.tau_inv(x, y); break;
        }
        int& slot = seen[p.block_of[x] * k + p.block_of[y]];
        if (slot == -1) slot = p.block_of[v];
        else if (slot != p.block_of[v]) return false;
      }
    }
  }
  return true;
}

QuotientSolution quotient_solution(const Solution& s, const SolutionPartition& p) {
  if (!is_congruence(s, p)) throw std::invalid_argument("partition is not a congruence of the solution");
  const std::size_t k = p.blocks.size();
  Table sg(k, std::vector<int>(k)), tg(k, std::vector<int>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const int x = p.blocks[a].front(), y = p.blocks[b].front();
      sg[a][b] = p.block_of[s.sigma(x, y)];
      tg[a][b] = p.block_of[s.tau(x, y)];
    }
  }
  return {Solution::from_tables(std::move(sg), std::move(tg)), p.block_of};
}

QuotientSolution retraction(const Solution& s) {
  return quotient_solution(s, relation(s, RelationKind::kApprox));
}

MultipermutationLevel multipermutation_level(const Solution& s) {
  MultipermutationLevel out;
  Solution cur = s;
  out.tower.push_back(cur.size());
  for (std::size_t step = 0; step <= s.size(); ++step) {
    if (cur.size() == 1) {
      out.finite = true;
      out.level = static_cast<int>(step);
      out.stabilized_size = 1;
      return out;
    }
    Solution next = retraction(cur).solution;
    if (next.size() == cur.size()) {
      out.finite = false;
      out.level = static_cast<int>(step);
      out.stabilized_size = cur.size();
      return out;
    }
    cur = std::move(next);
    out.tower.push_back(cur.size());
  }
  throw std::logic_error("retraction tower did not terminate");
}

PermutationGroups permutation_groups(const Solution& s) {
  const std::size_t n = s.size();
  std::vector<Perm> left, right;
  for (std::size_t x = 0; x < n; ++x) {
    left.push_back(s.sigma_row(static_cast<int>(x)));
    right.push_back(s.tau_row(static_cast<int>(x)));
  }
  std::vector<Perm> both = left;
  both.insert(both.end(), right.begin(), right.end());
  return {PermGroup::closure(n, std::move(left)), PermGroup::closure(n, std::move(right)),
          PermGroup::closure(n, std::move(both))};
}

}  // namespace ybe
