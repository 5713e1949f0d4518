#include "ybe/solution.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace ybe {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

void check_shape(const Table& sigma, const Table& tau) {
  const std::size_t n = sigma.size();
  if (n == 0) throw std::invalid_argument("solution tables are empty");
  if (tau.size() != n) throw std::invalid_argument("sigma and tau have different sizes");
  for (const Table* t : {&sigma, &tau}) {
    const char* name = t == &sigma ? "sigma" : "tau";
    for (std::size_t r = 0; r < n; ++r) {
      if ((*t)[r].size() != n) {
        throw std::invalid_argument(std::string(name) + " row " + std::to_string(r) +
                                    " has length " + std::to_string((*t)[r].size()) +
                                    ", expected " + std::to_string(n));
      }
      for (int v : (*t)[r]) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw std::invalid_argument(std::string(name) + " row " + std::to_string(r) +
                                      " has entry " + std::to_string(v) + " out of range");
        }
      }
    }
  }
}

Table invert_rows(const Table& t) {
  Table out;
  out.reserve(t.size());
  for (const auto& row : t) out.push_back(inverse(row));
  return out;
}

}  // namespace

std::string Violation::describe() const {
  const std::string w = "(" + join(witness) + ")";
  switch (kind) {
    case ViolationKind::kSigmaNotPermutation:
      return "sigma_" + std::to_string(witness.at(0)) + " is not a permutation";
    case ViolationKind::kTauNotPermutation:
      return "tau_" + std::to_string(witness.at(0)) + " is not a permutation";
    case ViolationKind::kNotBijective:
      return "r is not bijective: r(" + std::to_string(witness.at(0)) + ", " +
             std::to_string(witness.at(1)) + ") = r(" + std::to_string(witness.at(2)) + ", " +
             std::to_string(witness.at(3)) + ")";
    case ViolationKind::kBirack1:
      return "birack identity 1 fails at (x, y, z) = " + w;
    case ViolationKind::kBirack2:
      return "birack identity 2 fails at (x, y, z) = " + w;
    case ViolationKind::kBirack3:
      return "birack identity 3 fails at (x, y, z) = " + w;
    case ViolationKind::kBraid:
      return "braid relation fails at (x, y, z) = (" + std::to_string(witness.at(0)) + ", " +
             std::to_string(witness.at(1)) + ", " + std::to_string(witness.at(2)) +
             ") in component " + std::to_string(witness.at(3));
  }
  return "unknown violation";
}

Solution::Solution(Table sigma, Table tau)
    : sigma_(std::move(sigma)),
      tau_(std::move(tau)),
      sigma_inv_(invert_rows(sigma_)),
      tau_inv_(invert_rows(tau_)) {}

Solution Solution::from_tables(Table sigma, Table tau) {
  auto result = verify(sigma, tau);
  if (!result) throw std::invalid_argument(result.violation->describe());
  return std::move(*result.solution);
}

std::optional<Violation> braid_violation(const Table& sigma, const Table& tau) {
  const int n = static_cast<int>(sigma.size());
  // r(a, b) = (sigma[a][b], tau[b][a])
  auto r = [&](int a, int b) { return std::pair{sigma[a][b], tau[b][a]}; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        // (id×r)(r×id)(id×r)
        auto [a1, b1] = r(y, z);
        auto [a2, b2] = r(x, a1);
        auto [a3, b3] = r(b2, b1);
        const int lhs[3] = {a2, a3, b3};
        // (r×id)(id×r)(r×id)
        auto [c1, d1] = r(x, y);
        auto [c2, d2] = r(d1, z);
        auto [c3, d3] = r(c1, c2);
        const int rhs[3] = {c3, d3, d2};
        for (int k = 0; k < 3; ++k) {
          if (lhs[k] != rhs[k]) return Violation{ViolationKind::kBraid, {x, y, z, k}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> birack_violation(const Table& sigma, const Table& tau) {
  const int n = static_cast<int>(sigma.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (sigma[x][sigma[y][z]] != sigma[sigma[x][y]][sigma[tau[y][x]][z]]) {
          return Violation{ViolationKind::kBirack1, {x, y, z}};
        }
        if (tau[sigma[tau[y][x]][z]][sigma[x][y]] != sigma[tau[sigma[y][z]][x]][tau[z][y]]) {
          return Violation{ViolationKind::kBirack2, {x, y, z}};
        }
        if (tau[x][tau[y][z]] != tau[tau[x][y]][tau[sigma[y][x]][z]]) {
          return Violation{ViolationKind::kBirack3, {x, y, z}};
        }
      }
    }
  }
  return std::nullopt;
}

VerifyResult verify(const Table& sigma, const Table& tau) {
  check_shape(sigma, tau);
  const int n = static_cast<int>(sigma.size());
  for (int x = 0; x < n; ++x) {
    if (!is_permutation(sigma[x])) return {std::nullopt, Violation{ViolationKind::kSigmaNotPermutation, {x}}};
  }
  for (int y = 0; y < n; ++y) {
    if (!is_permutation(tau[y])) return {std::nullopt, Violation{ViolationKind::kTauNotPermutation, {y}}};
  }

  std::vector<int> first(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int image = sigma[x][y] * n + tau[y][x];
      if (first[image] >= 0) {
        return {std::nullopt,
                Violation{ViolationKind::kNotBijective, {first[image] / n, first[image] % n, x, y}}};
      }
      first[image] = x * n + y;
    }
  }

  auto braid = braid_violation(sigma, tau);
#ifndef NDEBUG
  if (!braid && birack_violation(sigma, tau)) {
    throw std::logic_error("braid check and birack identities disagree");
  }
#endif
  if (braid) {
    auto birack = birack_violation(sigma, tau);
    if (!birack) throw std::logic_error("braid check and birack identities disagree");
    return {std::nullopt, birack};
  }
  return {Solution(sigma, tau), std::nullopt};
}

Solution projection_solution(std::size_t n) {
  Table id(n, identity_perm(n));
  return Solution::from_tables(id, id);
}

Solution permutational_solution(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw std::invalid_argument("permutations have different degrees");
  return Solution::from_tables(Table(f.size(), f), Table(g.size(), g));
}

Solution inverse_solution(const Solution& s) {
  const int n = static_cast<int>(s.size());
  Table sh(n, std::vector<int>(n)), th(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int u = s.sigma(x, y);
      const int v = s.tau(y, x);
      sh[u][v] = x;
      th[v][u] = y;
    }
  }
  return Solution::from_tables(std::move(sh), std::move(th));
}

bool is_involutive(const Solution& s) {
  const int n = static_cast<int>(s.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int u = s.sigma(x, y);
      const int v = s.tau(y, x);
      if (s.sigma(u, v) != x || s.tau(v, u) != y) return false;
    }
  }
  return true;
}

bool is_square_free(const Solution& s) {
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    if (s.sigma(x, x) != x || s.tau(x, x) != x) return false;
  }
  return true;
}

bool is_permutational(const Solution& s) {
  for (int x = 1; x < static_cast<int>(s.size()); ++x) {
    if (s.sigma_row(x) != s.sigma_row(0) || s.tau_row(x) != s.tau_row(0)) return false;
  }
  return true;
}

bool is_projection(const Solution& s) {
  const Perm id = identity_perm(s.size());
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    if (s.sigma_row(x) != id || s.tau_row(x) != id) return false;
  }
  return true;
}

bool has_lri(const Solution& s) {
  const int n = static_cast<int>(s.size());
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      if (s.sigma(x, s.tau(x, z)) != z) return false;
    }
  }
  return true;
}

ReductivityReport is_2reductive(const Solution& s) {
  const int n = static_cast<int>(s.size());
  ReductivityReport rep{true, true, true, true};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      rep.red1 = rep.red1 && s.sigma_row(s.sigma(x, y)) == s.sigma_row(y);
      rep.red2 = rep.red2 && s.tau_row(s.tau(x, y)) == s.tau_row(y);
      rep.red3 = rep.red3 && s.sigma_row(s.tau(x, y)) == s.sigma_row(y);
      rep.red4 = rep.red4 && s.tau_row(s.sigma(x, y)) == s.tau_row(y);
    }
  }
  return rep;
}

namespace {

// t[x][t[y][z]] == t[t[x][y]][t[x][z]] for all x, y, z.
bool self_distributive(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[x][t[y][z]] != t[t[x][y]][t[x][z]]) return false;
  return true;
}

}  // namespace

bool is_left_distributive(const Solution& s) { return self_distributive(s.sigma_table()); }
bool is_right_distributive(const Solution& s) { return self_distributive(s.tau_table()); }

DistributivityRoutes left_distributivity_routes(const Solution& s) {
  const int n = static_cast<int>(s.size());
  const Solution hat = inverse_solution(s);
  DistributivityRoutes out;
  out.defining = is_left_distributive(s);
  out.reductive = is_2reductive(s).red3;
  out.hat_identity = true;
  out.hat_inverse = true;
  out.automorphisms = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s.sigma_row(hat.sigma(x, y)) != s.sigma_row(y)) out.hat_identity = false;
      if (hat.tau(x, y) != s.sigma_inv(x, y)) out.hat_inverse = false;
    }
    if (!is_automorphism(s, s.sigma_row(x))) out.automorphisms = false;
  }
  return out;
}

DistributivityRoutes right_distributivity_routes(const Solution& s) {
  const int n = static_cast<int>(s.size());
  const Solution hat = inverse_solution(s);
  DistributivityRoutes out;
  out.defining = is_right_distributive(s);
  out.reductive = is_2reductive(s).red4;
  out.hat_identity = true;
  out.hat_inverse = true;
  out.automorphisms = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s.tau_row(hat.tau(x, y)) != s.tau_row(y)) out.hat_identity = false;
      if (hat.sigma(x, y) != s.tau_inv(x, y)) out.hat_inverse = false;
    }
    if (!is_automorphism(s, s.tau_row(x))) out.automorphisms = false;
  }
  return out;
}

bool satisfies_condition_star(const Solution& s) {
  const int n = static_cast<int>(s.size());
  for (int x = 0; x < n; ++x) {
    bool sigma_fixed = false;
    bool tau_fixed = false;
    for (int y = 0; y < n; ++y) {
      sigma_fixed = sigma_fixed || s.sigma(y, x) == x;
      tau_fixed = tau_fixed || s.tau(y, x) == x;
    }
    if (!sigma_fixed || !tau_fixed) return false;
  }
  return true;
}

bool is_automorphism(const Solution& s, const Perm& phi) {
  const int n = static_cast<int>(s.size());
  if (phi.size() != s.size() || !is_permutation(phi)) return false;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (phi[s.sigma(x, y)] != s.sigma(phi[x], phi[y])) return false;
      if (phi[s.tau(x, y)] != s.tau(phi[x], phi[y])) return false;
    }
  }
  return true;
}

Solution relabel(const Solution& s, const Perm& phi) {
  const int n = static_cast<int>(s.size());
  if (phi.size() != s.size() || !is_permutation(phi)) {
    throw std::invalid_argument("relabeling map is not a bijection of the carrier");
  }
  Table sg(n, std::vector<int>(n)), tg(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      sg[phi[x]][phi[y]] = phi[s.sigma(x, y)];
      tg[phi[x]][phi[y]] = phi[s.tau(x, y)];
    }
  }
  return Solution::from_tables(std::move(sg), std::move(tg));
}

std::optional<Perm> find_isomorphism(const Solution& a, const Solution& b) {
  const int n = static_cast<int>(a.size());
  if (a.size() != b.size()) return std::nullopt;

  Perm phi(n, -1), back(n, -1);

  // Every table entry whose inputs are mapped must agree with b wherever the
  // output is also mapped, and must not land on the image of another point.
  auto consistent = [&](int upto) {
    for (int p = 0; p <= upto; ++p) {
      for (int q = 0; q <= upto; ++q) {
        for (int which = 0; which < 2; ++which) {
          const int w = which == 0 ? a.sigma(p, q) : a.tau(p, q);
          const int t = which == 0 ? b.sigma(phi[p], phi[q]) : b.tau(phi[p], phi[q]);
          if (phi[w] >= 0 && phi[w] != t) return false;
          if (back[t] >= 0 && back[t] != w) return false;
        }
      }
    }
    return true;
  };

  std::function<bool(int)> extend = [&](int x) {
    if (x == n) return true;
    for (int v = 0; v < n; ++v) {
      if (back[v] >= 0) continue;
      phi[x] = v;
      back[v] = x;
      if (consistent(x) && extend(x + 1)) return true;
      phi[x] = -1;
      back[v] = -1;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return phi;
}

}  // namespace ybe
