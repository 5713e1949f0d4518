#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ybe/groups.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Data ((A_i), C, D) of a disjoint union of abelian groups. Entries of
// column j of both matrices are elements of A_j in the group's mixed-radix
// encoding.
//
// The built solution lives on the concatenation of the blocks: for x in A_i
// and y in A_j, σ_x(y) = y + c[i][j] and τ_x(y) = y + d[i][j].
struct AbelianUnion {
  std::vector<AbelianGroup> groups;
  Table c;
  Table d;

  std::size_t blocks() const { return groups.size(); }
  std::size_t carrier_size() const;
  // First carrier index of each block.
  std::vector<int> offsets() const;

  friend bool operator==(const AbelianUnion&, const AbelianUnion&) = default;
};

// Display order: fewer blocks first, then larger groups first, then C and
// D row-major.
bool union_less(const AbelianUnion& a, const AbelianUnion& b);

// Throws std::invalid_argument on shape errors or entries outside their
// column group; also when a column fails to generate its group unless
// permit_non_generating is set.
void validate_union(const AbelianUnion& u, bool permit_non_generating = false);

// A_j = ⟨c_{i,j}, d_{i,j} : i⟩ for every j.
bool satisfies_generation(const AbelianUnion& u);

Solution union_to_solution(const AbelianUnion& u, bool permit_non_generating = false);

struct UnionDecomposition {
  AbelianUnion u;
  // carrier_map[x] is the carrier index of x in union_to_solution(u), so
  // relabel(s, carrier_map) == union_to_solution(u).
  Perm carrier_map;
};

// Blocks are the orbits of ⟨σ_x, τ_x⟩ in order of their minimum; each orbit
// gets the regular abelian group structure with its minimum as zero.
// Throws std::invalid_argument when s is not 2-reductive.
UnionDecomposition solution_to_union(const Solution& s);

struct UnionIsomorphism {
  Perm pi;                // block i of the first union goes to block pi[i]
  std::vector<Perm> psi;  // psi[j]: A_j -> A'_{pi[j]}
};

std::optional<UnionIsomorphism> unions_isomorphic(const AbelianUnion& a, const AbelianUnion& b);

// Applies a witness-shaped transformation: block pi[i] of the result is
// block i of u, entries of column j are mapped by psi[j].
AbelianUnion transform_union(const AbelianUnion& u, const UnionIsomorphism& w);

// Least union in the isomorphism class: blocks sorted by decreasing
// (size, invariant factors), then C followed by D compared row-major.
AbelianUnion canonical_form(const AbelianUnion& u);

// "Z3+Z1", "Z2xZ2", "Z1+Z1+Z1".
std::string orbit_type(const AbelianUnion& u);

// Isomorphism classes of 2-reductive solutions of size n as canonical
// unions, sorted by union_less. Cells of equal orbit type run on up to
// `jobs` threads; the result does not depend on `jobs`.
std::vector<AbelianUnion> enumerate_2reductive(int n, int jobs = 1);

struct UnionPredicates {
  bool involutive = false;      // d_{i,j} = -c_{i,j}
  bool square_free = false;     // c_{i,i} = d_{i,i} = 0
  bool condition_star = false;  // every column of C and every column of D has a zero
  friend bool operator==(const UnionPredicates&, const UnionPredicates&) = default;
};

UnionPredicates union_predicates(const AbelianUnion& u);

// ((A_i), -D, -C): builds the inverse solution.
AbelianUnion opposite_union(const AbelianUnion& u);

// Necessary conditions for injectivity. A false flag proves the solution is
// not injective; two true flags prove nothing.
struct InjectivityReport {
  bool diagonal_ok = false;  // c_{i,i} = -d_{i,i}
  bool order_ok = false;     // o(c_{i,j} + d_{i,j}) = o(c_{j,i} + d_{j,i})
};

InjectivityReport injectivity_necessary_checks(const AbelianUnion& u);
// Decomposes first; throws std::invalid_argument when s is not 2-reductive.
InjectivityReport injectivity_necessary_checks(const Solution& s);

}  // namespace ybe
