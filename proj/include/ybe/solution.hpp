#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/groups.hpp"

namespace ybe {

using Table = std::vector<std::vector<int>>;

enum class ViolationKind {
  kSigmaNotPermutation,  // witness {x}
  kTauNotPermutation,    // witness {y}
  kNotBijective,         // witness {x1, y1, x2, y2}: both pairs share an image
  kBirack1,              // witness {x, y, z}
  kBirack2,
  kBirack3,
  kBraid,                // witness {x, y, z, component}
};

struct Violation {
  ViolationKind kind;
  std::vector<int> witness;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyResult;
VerifyResult verify(const Table& sigma, const Table& tau);

// A finite non-degenerate set-theoretic solution of the braid relation on
// {0..n-1}, r(x,y) = (σ_x(y), τ_y(x)).
//
// Storage follows the subscript: sigma_row(x) is σ_x and tau_row(y) is τ_y,
// so sigma(x, y) = σ_x(y) and tau(y, x) = τ_y(x). Instances only come out of
// verification and are immutable.
class Solution {
 public:
  // Verifies and throws std::invalid_argument with the violation text.
  static Solution from_tables(Table sigma, Table tau);

  std::size_t size() const { return sigma_.size(); }

  int sigma(int x, int y) const { return sigma_[x][y]; }
  int tau(int y, int x) const { return tau_[y][x]; }
  int sigma_inv(int x, int y) const { return sigma_inv_[x][y]; }
  int tau_inv(int y, int x) const { return tau_inv_[y][x]; }

  const Perm& sigma_row(int x) const { return sigma_[x]; }
  const Perm& tau_row(int y) const { return tau_[y]; }

  const Table& sigma_table() const { return sigma_; }
  const Table& tau_table() const { return tau_; }

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.sigma_ == b.sigma_ && a.tau_ == b.tau_;
  }

 private:
  friend VerifyResult verify(const Table& sigma, const Table& tau);
  Solution(Table sigma, Table tau);

  Table sigma_, tau_, sigma_inv_, tau_inv_;
};

struct VerifyResult {
  std::optional<Solution> solution;
  std::optional<Violation> violation;

  explicit operator bool() const { return solution.has_value(); }
};

// Checks non-degeneracy, bijectivity of r and the braid relation on all
// triples. Tables that are not n×n with entries in range are rejected with
// std::invalid_argument. A failing braid relation is reported through the
// first failing triple of the three component identities.
VerifyResult verify(const Table& sigma, const Table& tau);

// Compares (id×r)(r×id)(id×r) with (r×id)(id×r)(r×id) on every triple.
// Tables must already be square with permutation rows.
std::optional<Violation> braid_violation(const Table& sigma, const Table& tau);

// Checks the three component identities of the braid relation:
//   σ_x σ_y = σ_{σ_x(y)} σ_{τ_y(x)}
//   τ_{σ_{τ_y(x)}(z)} σ_x(y) = σ_{τ_{σ_y(z)}(x)} τ_z(y)
//   τ_x τ_y = τ_{τ_x(y)} τ_{σ_y(x)}
std::optional<Violation> birack_violation(const Table& sigma, const Table& tau);

Solution projection_solution(std::size_t n);
// σ_x = f and τ_y = g for all x, y.
Solution permutational_solution(const Perm& f, const Perm& g);

// The solution given by r^{-1}.
Solution inverse_solution(const Solution& s);

bool is_involutive(const Solution& s);
bool is_square_free(const Solution& s);
bool is_permutational(const Solution& s);
bool is_projection(const Solution& s);
bool has_lri(const Solution& s);

struct ReductivityReport {
  bool red1 = false;  // σ_{σ_x(y)} = σ_y
  bool red2 = false;  // τ_{τ_x(y)} = τ_y
  bool red3 = false;  // σ_{τ_x(y)} = σ_y
  bool red4 = false;  // τ_{σ_x(y)} = τ_y

  bool all() const { return red1 && red2 && red3 && red4; }
  friend bool operator==(const ReductivityReport&, const ReductivityReport&) = default;
};

ReductivityReport is_2reductive(const Solution& s);

bool is_left_distributive(const Solution& s);
bool is_right_distributive(const Solution& s);

// Equivalent characterizations of left (right) distributivity, each computed
// on its own.
struct DistributivityRoutes {
  bool defining = false;        // σ_xσ_y = σ_{σ_x(y)}σ_x   | τ_xτ_y = τ_{τ_x(y)}τ_x
  bool reductive = false;       // σ_{τ_x(y)} = σ_y         | τ_{σ_x(y)} = τ_y
  bool hat_identity = false;    // σ_{σ̂_x(y)} = σ_y         | τ_{τ̂_x(y)} = τ_y
  bool hat_inverse = false;     // τ̂_x = σ_x^{-1}           | σ̂_x = τ_x^{-1}
  bool automorphisms = false;   // every σ_x (τ_x) is an automorphism of the solution

  bool agree() const {
    return defining == reductive && defining == hat_identity && defining == hat_inverse &&
           defining == automorphisms;
  }
};

DistributivityRoutes left_distributivity_routes(const Solution& s);
DistributivityRoutes right_distributivity_routes(const Solution& s);

// ∀x ∃y σ_y(x) = x, and ∀x ∃y τ_y(x) = x.
bool satisfies_condition_star(const Solution& s);

// φσ_x = σ_{φ(x)}φ and φτ_x = τ_{φ(x)}φ for all x.
bool is_automorphism(const Solution& s, const Perm& phi);

// The solution transported along the bijection phi.
Solution relabel(const Solution& s, const Perm& phi);

// Backtracking search over carrier bijections. Returns φ with
// relabel(a, φ) == b.
std::optional<Perm> find_isomorphism(const Solution& a, const Solution& b);

}  // namespace ybe
