#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ybe {

// A permutation of {0..n-1} stored as an index array: p[x] is the image of x.
using Perm = std::vector<int>;

// Sorted list of element indices.
using Subset = std::vector<int>;

Perm identity_perm(std::size_t n);

// (p∘q)(x) = p[q[x]], i.e. q is applied first.
Perm compose(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

bool is_permutation(std::span<const int> p);

// Group with elements 0..n-1 given by its Cayley table.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates the table: square, entries in range, identity, inverses and
  // associativity. Throws std::invalid_argument on failure.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  std::size_t size() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }

  std::vector<std::vector<int>> table() const;

  // Same carrier with a *op b = b * a.
  FiniteGroup opposite() const;

  bool is_abelian() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup(std::size_t n, std::vector<int> table);

  std::size_t n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  int id_ = 0;
};

struct QuotientGroup {
  FiniteGroup group;
  // projection[a] is the index of the coset of a in `group`.
  std::vector<int> projection;
  // representatives[k] is the minimum element of coset k.
  std::vector<int> representatives;
};

Subset center(const FiniteGroup& g);
int element_order(const FiniteGroup& g, int x);
bool is_subgroup(const FiniteGroup& g, const Subset& s);
// False when s is not a subgroup.
bool is_normal(const FiniteGroup& g, const Subset& s);
// Cosets are re-indexed by their minimum element. Throws std::invalid_argument
// when s is not a normal subgroup.
QuotientGroup quotient(const FiniteGroup& g, const Subset& s);
Subset subgroup_generated(const FiniteGroup& g, const Subset& s);

// Carrier of G×H is indexed as a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Length of the upper central series, or nullopt when it stalls above the
// trivial group. The trivial group has class 0.
std::optional<int> nilpotency_class(const FiniteGroup& g);

FiniteGroup cyclic_group(int m);
FiniteGroup symmetric_group(int k);
// Dihedral group of order 2m.
FiniteGroup dihedral_group(int m);
FiniteGroup quaternion_group();

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// One representative of every isomorphism class of groups of order
// 1..max_order. Supports max_order <= 8.
std::vector<NamedGroup> small_groups(int max_order);

// Direct product of cyclic groups, normalized to invariant factors
// d1 | d2 | ... (each >= 2). Elements are enumerated in mixed-radix order with
// the first factor most significant.
class AbelianGroup {
 public:
  // Accepts any multiset of cyclic orders; entries equal to 1 are dropped.
  // Throws std::invalid_argument for entries <= 0.
  explicit AbelianGroup(const std::vector<int>& cyclic_orders = {});

  const std::vector<int>& factors() const { return factors_; }
  std::size_t size() const { return size_; }

  int zero() const { return 0; }
  int add(int a, int b) const { return group_.mul(a, b); }
  int neg(int a) const { return group_.inv(a); }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int order(int a) const;

  std::vector<int> coords(int a) const;
  int encode(std::span<const int> coords) const;

  bool generated_by(std::span<const int> elems) const;

  const FiniteGroup& group() const { return group_; }

  // "Z1", "Z4", "Z2xZ2", ...
  std::string name() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }
  // Orders by (size, factors).
  friend std::strong_ordering operator<=>(const AbelianGroup& a, const AbelianGroup& b);

 private:
  std::vector<int> factors_;
  std::size_t size_ = 1;
  FiniteGroup group_;
};

std::vector<int> invariant_factors(const std::vector<int>& cyclic_orders);

AbelianGroup abelian_group(const std::vector<int>& factors);

// One group per isomorphism class, sorted by (number of factors, factors).
std::vector<AbelianGroup> abelian_groups_of_order(int n);

// All automorphisms as element permutations, found by trying every image of
// the standard generators. Identity comes first.
std::vector<Perm> automorphisms(const AbelianGroup& a);

// Permutation group given by generators. The closure is computed once at
// construction; elements are sorted lexicographically.
class PermGroup {
 public:
  // Throws std::invalid_argument if a generator is not a permutation of
  // the given degree.
  static PermGroup closure(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Perm& p) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

// Degree is taken from the generators; an empty list is rejected.
PermGroup perm_group_closure(std::vector<Perm> generators);

// Orbits sorted internally and by minimum element.
std::vector<std::vector<int>> orbits(const PermGroup& g);

bool is_abelian(const PermGroup& g);

// Cayley table of the closure, elements indexed in sorted order.
FiniteGroup cayley_group(const PermGroup& g);

}  // namespace ybe
