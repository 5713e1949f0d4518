#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/groups.hpp"
#include "ybe/solution.hpp"

namespace ybe {

struct BraceViolation {
  // First triple (a, b, c) in lexicographic order with
  // a∘(b·c) != (a∘b)·a⁻¹·(a∘c).
  std::vector<int> witness;
  std::string describe() const;
};

struct BraceVerifyResult;

// A finite skew left brace (B, ·, ∘) on {0..n-1}. Instances only come out of
// verification and are immutable.
class SkewBrace {
 public:
  // Verifies and throws std::invalid_argument with the violation text.
  static SkewBrace from_tables(const Table& dot, const Table& circle);
  static SkewBrace from_groups(const FiniteGroup& dot, const FiniteGroup& circle);

  std::size_t size() const { return dot_.size(); }
  const FiniteGroup& dot() const { return dot_; }
  const FiniteGroup& circle() const { return circle_; }

  int mul(int a, int b) const { return dot_.mul(a, b); }
  int circ(int a, int b) const { return circle_.mul(a, b); }
  int inv(int a) const { return dot_.inv(a); }  // a⁻¹
  int bar(int a) const { return circle_.inv(a); }  // ā
  int identity() const { return dot_.identity(); }

  // λ_a(b) = a⁻¹·(a∘b)
  int lambda(int a, int b) const { return lambda_[a][b]; }
  // ρ_y(x) = \overline{λ_x(y)}∘x∘y
  int rho(int y, int x) const { return rho_[y][x]; }

  const std::vector<Perm>& lambda_rows() const { return lambda_; }
  const std::vector<Perm>& rho_rows() const { return rho_; }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) {
    return a.dot_ == b.dot_ && a.circle_ == b.circle_;
  }

 private:
  friend BraceVerifyResult verify_brace(const FiniteGroup& dot, const FiniteGroup& circle);
  SkewBrace(FiniteGroup dot, FiniteGroup circle);

  FiniteGroup dot_, circle_;
  std::vector<Perm> lambda_, rho_;
};

struct BraceVerifyResult {
  std::optional<SkewBrace> brace;
  std::optional<BraceViolation> violation;

  explicit operator bool() const { return brace.has_value(); }
};

// Both tables must be groups on the same carrier, otherwise
// std::invalid_argument is thrown. The brace law is checked on all triples.
BraceVerifyResult verify_brace(const Table& dot, const Table& circle);
BraceVerifyResult verify_brace(const FiniteGroup& dot, const FiniteGroup& circle);

// λ_a for every a.
std::vector<Perm> lambda_map(const SkewBrace& b);
// ρ_y for every y.
std::vector<Perm> rho_map(const SkewBrace& b);

// (B, λ, ρ): sigma row a is λ_a and tau row y is ρ_y.
Solution associated_solution(const SkewBrace& b);

// (B, ·op, ∘)
SkewBrace opposite_brace(const SkewBrace& b);

struct BiskewRoutes {
  bool swapped_law = false;         // (B, ∘, ·) is a skew left brace
  bool lambda_dot_antihom = false;  // λ_{a·b} = λ_b λ_a
  bool left_distributive = false;   // of the associated solution

  bool agree() const {
    return swapped_law == lambda_dot_antihom && swapped_law == left_distributive;
  }
};

BiskewRoutes biskew_routes(const SkewBrace& b);
// Throws std::logic_error when the routes disagree.
bool is_biskew(const SkewBrace& b);

// Normal in (B,·) and (B,∘) and λ_a-stable for all a.
bool is_ideal(const SkewBrace& b, const Subset& s);

struct SocleRoutes {
  Subset defining;        // a∘x = a·x = x·a for all x
  Subset kernels;         // Ker λ ∩ Ker ρ
  Subset lambda_center;   // Ker λ ∩ Z(B,·)

  bool agree() const { return defining == kernels && defining == lambda_center; }
};

SocleRoutes socle_routes(const SkewBrace& b);
// Throws std::logic_error when the routes disagree or the result is not an
// ideal.
Subset socle(const SkewBrace& b);

struct QuotientBrace {
  SkewBrace brace;
  std::vector<int> projection;       // element -> coset index
  std::vector<int> representatives;  // coset index -> minimum element
};

// Cosets are indexed by their minimum element. Throws std::invalid_argument
// when s is not an ideal, and std::logic_error when the ·-cosets and the
// ∘-cosets differ.
QuotientBrace quotient_brace(const SkewBrace& b, const Subset& s);

struct SocleSeries {
  std::vector<SkewBrace> terms;  // B_0 = B, B_{k+1} = B_k / Soc(B_k)
  // Least k with |B_k| = 1; empty when the series stalls above size 1, in
  // which case the last term is the stabilized quotient.
  std::optional<int> nilpotency_class;
};

SocleSeries socle_series(const SkewBrace& b);

struct KernelIdeals {
  Subset ker_lambda;
  Subset ker_rho;
  bool ker_lambda_is_ideal = false;
  bool ker_rho_is_ideal = false;
};

KernelIdeals kernel_ideals(const SkewBrace& b);

struct ReductivityProfile {
  // On the associated solution.
  bool red1 = false;
  bool red2 = false;
  bool red3 = false;
  bool red4 = false;
  // On the tables.
  bool lambda_dot_hom = false;      // λ_{a·b} = λ_a λ_b
  bool lambda_dot_antihom = false;  // λ_{a·b} = λ_b λ_a
  bool rho_dot_hom = false;         // ρ_{a·b} = ρ_a ρ_b
  bool rho_dot_antihom = false;     // ρ_{a·b} = ρ_b ρ_a
  // λ_{a·b} = λ_{b·a} = λ_{a∘b} and the same for ρ.
  bool products_agree = false;
  bool level_at_most_2 = false;
  bool class_at_most_2 = false;
  bool opposite_class_at_most_2 = false;

  bool all_red() const { return red1 && red2 && red3 && red4; }
  // Every pairing that should be an equivalence holds as one.
  bool consistent() const;
};

// Every field is computed on its own. Throws std::logic_error listing the
// broken equivalences when consistent() is false.
ReductivityProfile reductivity_profile(const SkewBrace& b);
// Same computation without the consistency check.
ReductivityProfile reductivity_profile_unchecked(const SkewBrace& b);

// Sufficient test only: Soc(B) is always a trivial brace, so B is
// meta-trivial when B/Soc(B) is trivial. A false result decides nothing.
bool meta_trivial_by_socle(const SkewBrace& b);

SkewBrace trivial_brace(const FiniteGroup& g);
// (G, ·, ·op)
SkewBrace almost_trivial_brace(const FiniteGroup& g);
// Carrier index a·|B2| + b.
SkewBrace product_brace(const SkewBrace& b1, const SkewBrace& b2);
// On Z_{2n}: x·y = x + (-1)^x y, ∘ = +. Requires odd n >= 1.
SkewBrace z2n_brace(int n);
// On Z_{2n}: · = +, x∘y = x + (-1)^x y. Requires odd n >= 1.
SkewBrace z2n_dual_brace(int n);
// (Z_2^3, +, ∘) with (εf+e_i)∘(ζf+e_j) = (ε+ζ)f + e_{i+3^ε j}, f = (1,1,1),
// e_0 = 0 and e_1, e_2, e_3 the unit vectors. The vector v has index
// v_1 + 2 v_2 + 4 v_3.
SkewBrace dihedral_example_brace();
// Index of εf + e_i in dihedral_example_brace().
int dihedral_example_element(int eps, int i);

}  // namespace ybe
