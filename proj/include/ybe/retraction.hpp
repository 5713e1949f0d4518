#pragma once

#include <cstddef>
#include <vector>

#include "ybe/groups.hpp"
#include "ybe/solution.hpp"

namespace ybe {

enum class RelationKind {
  kSim,     // equal σ rows
  kCosim,   // equal τ rows
  kApprox,  // equal σ rows and equal τ rows
  kCustom,
};

// Partition of {0..n-1}. Blocks are sorted internally and ordered by their
// minimum; block_of[x] is the index of the block containing x.
struct SolutionPartition {
  RelationKind kind = RelationKind::kCustom;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;

  // Canonicalizes arbitrary blocks. Throws std::invalid_argument unless they
  // are disjoint, non-empty and cover {0..n-1}.
  static SolutionPartition from_blocks(std::size_t n, std::vector<std::vector<int>> blocks,
                                       RelationKind kind = RelationKind::kCustom);

  std::size_t size() const { return block_of.size(); }
  friend bool operator==(const SolutionPartition& a, const SolutionPartition& b) {
    return a.blocks == b.blocks;
  }
};

SolutionPartition relation(const Solution& s, RelationKind kind);

// Blockwise intersection.
SolutionPartition meet(const SolutionPartition& a, const SolutionPartition& b);

// Related inputs give related outputs under σ_x^{±1} and τ_x^{±1}.
bool is_congruence(const Solution& s, const SolutionPartition& p);

struct QuotientSolution {
  Solution solution;
  std::vector<int> projection;  // carrier element -> block index
};

// Throws std::invalid_argument when p is not a congruence.
QuotientSolution quotient_solution(const Solution& s, const SolutionPartition& p);

// Quotient by ≈.
QuotientSolution retraction(const Solution& s);

struct MultipermutationLevel {
  bool finite = true;
  // Number of retraction steps to a single element when finite, otherwise
  // the number of steps taken before the tower stopped shrinking.
  int level = 0;
  std::size_t stabilized_size = 1;
  std::vector<std::size_t> tower;  // carrier sizes, starting with the input
};

MultipermutationLevel multipermutation_level(const Solution& s);

struct PermutationGroups {
  PermGroup g_left;   // ⟨σ_x⟩
  PermGroup g_right;  // ⟨τ_x⟩
  PermGroup g_full;   // ⟨σ_x, τ_x⟩
};

PermutationGroups permutation_groups(const Solution& s);

}  // namespace ybe
