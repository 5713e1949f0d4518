#include "ybe/abelian_union.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ybe {

std::size_t AbelianUnion::carrier_size() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

std::vector<int> AbelianUnion::offsets() const {
  std::vector<int> off(groups.size(), 0);
  for (std::size_t i = 1; i < groups.size(); ++i) off[i] = off[i - 1] + static_cast<int>(groups[i - 1].size());
  return off;
}

bool union_less(const AbelianUnion& a, const AbelianUnion& b) {
  if (a.blocks() != b.blocks()) return a.blocks() < b.blocks();
  for (std::size_t i = 0; i < a.blocks(); ++i) {
    if (a.groups[i] != b.groups[i]) return a.groups[i] > b.groups[i];
  }
  return std::tie(a.c, a.d) < std::tie(b.c, b.d);
}

bool satisfies_generation(const AbelianUnion& u) {
  const std::size_t k = u.blocks();
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<int> gens;
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back(u.c[i][j]);
      gens.push_back(u.d[i][j]);
    }
    if (!u.groups[j].generated_by(gens)) return false;
  }
  return true;
}

void validate_union(const AbelianUnion& u, bool permit_non_generating) {
  const std::size_t k = u.blocks();
  if (k == 0) throw std::invalid_argument("union has no blocks");
  if (u.c.size() != k || u.d.size() != k) throw std::invalid_argument("constant matrices must be k x k");
  for (std::size_t i = 0; i < k; ++i) {
    if (u.c[i].size() != k || u.d[i].size() != k) {
      throw std::invalid_argument("constant matrices must be k x k");
    }
    for (std::size_t j = 0; j < k; ++j) {
      const int size = static_cast<int>(u.groups[j].size());
      for (int v : {u.c[i][j], u.d[i][j]}) {
        if (v < 0 || v >= size) {
          throw std::invalid_argument("constant " + std::to_string(v) + " at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ") is not an element of " +
                                      u.groups[j].name());
        }
      }
    }
  }
  if (!permit_non_generating && !satisfies_generation(u)) {
    throw std::invalid_argument("constants of some column do not generate its group");
  }
}

Solution union_to_solution(const AbelianUnion& u, bool permit_non_generating) {
  validate_union(u, permit_non_generating);
  const std::size_t n = u.carrier_size();
  const auto off = u.offsets();
  std::vector<int> block(n), local(n);
  for (std::size_t i = 0; i < u.blocks(); ++i)
    for (std::size_t a = 0; a < u.groups[i].size(); ++a) {
      block[off[i] + a] = static_cast<int>(i);
      local[off[i] + a] = static_cast<int>(a);
    }
  Table sigma(n, std::vector<int>(n)), tau(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int i = block[x], j = block[y];
      const AbelianGroup& g = u.groups[j];
      sigma[x][y] = off[j] + g.add(local[y], u.c[i][j]);
      tau[x][y] = off[j] + g.add(local[y], u.d[i][j]);
    }
  }
  return Solution::from_tables(std::move(sigma), std::move(tau));
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

struct OrbitGroup {
  std::vector<int> elements;  // sorted, elements.front() is the zero
  std::map<int, Perm> shift;  // shift[u] maps zero to u
};

int orbit_order(const OrbitGroup& o, int u) {
  const int zero = o.elements.front();
  int k = 1;
  for (int v = u; v != zero; v = o.shift.at(u)[v]) ++k;
  return k;
}

std::map<int, int> order_histogram(const AbelianGroup& a) {
  std::map<int, int> h;
  for (std::size_t x = 0; x < a.size(); ++x) ++h[a.order(static_cast<int>(x))];
  return h;
}

// Returns iso[x] in A for every x of the orbit, as a map from carrier index.
std::map<int, int> match_orbit(const OrbitGroup& o, const AbelianGroup& a) {
  const std::size_t r = a.factors().size();
  std::vector<int> gens(r);
  for (std::size_t t = 0; t < r; ++t) {
    std::vector<int> coords(r, 0);
    coords[t] = 1;
    gens[t] = a.encode(coords);
  }
  std::vector<int> images(r);
  std::map<int, int> result;

  auto add = [&](int u, int v) { return o.shift.at(u)[v]; };
  auto try_images = [&]() {
    std::map<int, int> to_a;
    for (std::size_t x = 0; x < a.size(); ++x) {
      const auto co = a.coords(static_cast<int>(x));
      int v = o.elements.front();
      for (std::size_t t = 0; t < r; ++t)
        for (int rep = 0; rep < co[t]; ++rep) v = add(v, images[t]);
      if (!to_a.emplace(v, static_cast<int>(x)).second) return false;
    }
    result = std::move(to_a);
    return true;
  };

  auto search = [&](auto&& self, std::size_t t) -> bool {
    if (t == r) return try_images();
    for (int v : o.elements) {
      if (orbit_order(o, v) != a.factors()[t]) continue;
      images[t] = v;
      if (self(self, t + 1)) return true;
    }
    return false;
  };
  if (!search(search, 0)) throw std::logic_error("orbit group does not match its order statistics");
  return result;
}

}  // namespace

UnionDecomposition solution_to_union(const Solution& s) {
  if (!is_2reductive(s).all()) throw std::invalid_argument("solution is not 2-reductive");
  const int n = static_cast<int>(s.size());

  std::vector<Perm> gens;
  for (int x = 0; x < n; ++x) {
    gens.push_back(s.sigma_row(x));
    gens.push_back(s.tau_row(x));
  }
  // Orbits by union-find over all translations.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (int x = 0; x < n; ++x) {
      const int a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<OrbitGroup> blocks;
  std::vector<int> block_of(n, -1);
  for (int x = 0; x < n; ++x) {
    const int root = find(x);
    if (block_of[root] == -1) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    block_of[x] = block_of[root];
    blocks[block_of[x]].elements.push_back(x);
  }

  // shift[u] is a product of translations carrying the orbit minimum to u.
  for (auto& b : blocks) {
    const int zero = b.elements.front();
    b.shift[zero] = identity_perm(n);
    std::deque<int> queue{zero};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        const int v = g[u];
        if (b.shift.count(v)) continue;
        b.shift[v] = compose(g, b.shift[u]);
        queue.push_back(v);
      }
    }
  }

  UnionDecomposition out;
  std::vector<std::map<int, int>> iso;
  for (const auto& b : blocks) {
    const int m = static_cast<int>(b.elements.size());
    std::map<int, int> hist;
    for (int u : b.elements) ++hist[orbit_order(b, u)];
    std::optional<AbelianGroup> match;
    for (const auto& a : abelian_groups_of_order(m)) {
      if (order_histogram(a) == hist) {
        match = a;
        break;
      }
    }
    if (!match) throw std::logic_error("orbit is not a regular abelian group");
    iso.push_back(match_orbit(b, *match));
    out.u.groups.push_back(*match);
  }

  const std::size_t k = blocks.size();
  out.u.c.assign(k, std::vector<int>(k));
  out.u.d.assign(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const int e = blocks[i].elements.front(), f = blocks[j].elements.front();
      out.u.c[i][j] = iso[j].at(s.sigma(e, f));
      out.u.d[i][j] = iso[j].at(s.tau(e, f));
    }
  }

  const auto off = out.u.offsets();
  out.carrier_map.assign(n, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (int x : blocks[i].elements) out.carrier_map[x] = off[i] + iso[i].at(x);

  if (relabel(s, out.carrier_map) != union_to_solution(out.u)) {
    throw std::logic_error("decomposition does not reproduce the solution");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism and canonical form

namespace {

const std::vector<Perm>& cached_automorphisms(const AbelianGroup& a) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::vector<Perm>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(a.factors());
  if (it == cache.end()) it = cache.emplace(a.factors(), automorphisms(a)).first;
  return it->second;
}

}  // namespace

AbelianUnion transform_union(const AbelianUnion& u, const UnionIsomorphism& w) {
  const std::size_t k = u.blocks();
  AbelianUnion out;
  out.groups.resize(k);
  out.c.assign(k, std::vector<int>(k));
  out.d.assign(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i) out.groups[w.pi[i]] = u.groups[i];
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      out.c[w.pi[i]][w.pi[j]] = w.psi[j][u.c[i][j]];
      out.d[w.pi[i]][w.pi[j]] = w.psi[j][u.d[i][j]];
    }
  return out;
}

std::optional<UnionIsomorphism> unions_isomorphic(const AbelianUnion& a, const AbelianUnion& b) {
  const std::size_t k = a.blocks();
  if (b.blocks() != k) return std::nullopt;
  {
    auto ga = a.groups, gb = b.groups;
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    if (ga != gb) return std::nullopt;
  }

  Perm pi(k, -1);
  std::vector<char> used(k, 0);
  UnionIsomorphism w;
  w.psi.assign(k, {});

  // Once pi is complete, each column needs its own ψ_j.
  auto columns_match = [&]() {
    for (std::size_t j = 0; j < k; ++j) {
      bool found = false;
      for (const Perm& psi : cached_automorphisms(a.groups[j])) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          ok = psi[a.c[i][j]] == b.c[pi[i]][pi[j]] && psi[a.d[i][j]] == b.d[pi[i]][pi[j]];
        }
        if (ok) {
          w.psi[j] = psi;
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return columns_match();
    for (std::size_t t = 0; t < k; ++t) {
      if (used[t] || a.groups[i] != b.groups[t]) continue;
      used[t] = 1;
      pi[i] = static_cast<int>(t);
      if (self(self, i + 1)) return true;
      used[t] = 0;
    }
    pi[i] = -1;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  w.pi = pi;
  return w;
}

AbelianUnion canonical_form(const AbelianUnion& u) {
  const std::size_t k = u.blocks();

  // Sort blocks by decreasing type; π then only permutes equal types.
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return u.groups[x] > u.groups[y]; });
  std::vector<AbelianGroup> groups;
  for (int i : order) groups.push_back(u.groups[i]);

  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t s = 0; s < k;) {
    std::size_t e = s;
    while (e < k && groups[e] == groups[s]) ++e;
    classes.emplace_back(s, e);
    s = e;
  }

  // src[p] is the original block placed at position p.
  std::vector<int> src = order;
  std::optional<AbelianUnion> best;
  AbelianUnion cand;
  cand.groups = groups;
  cand.c.assign(k, std::vector<int>(k));
  cand.d.assign(k, std::vector<int>(k));
  std::vector<int> col(2 * k), best_col(2 * k);

  while (true) {
    for (std::size_t q = 0; q < k; ++q) {
      const int j = src[q];
      bool first = true;
      for (const Perm& psi : cached_automorphisms(groups[q])) {
        for (std::size_t p = 0; p < k; ++p) {
          col[p] = psi[u.c[src[p]][j]];
          col[k + p] = psi[u.d[src[p]][j]];
        }
        if (first || col < best_col) {
          best_col = col;
          first = false;
        }
      }
      for (std::size_t p = 0; p < k; ++p) {
        cand.c[p][q] = best_col[p];
        cand.d[p][q] = best_col[k + p];
      }
    }
    if (!best || std::tie(cand.c, cand.d) < std::tie(best->c, best->d)) best = cand;

    // Next arrangement within the type classes, odometer style.
    std::size_t t = 0;
    for (; t < classes.size(); ++t) {
      auto [s, e] = classes[t];
      if (std::next_permutation(src.begin() + s, src.begin() + e)) break;
    }
    if (t == classes.size()) break;
  }
  return *best;
}

std::string orbit_type(const AbelianUnion& u) {
  auto groups = u.groups;
  std::sort(groups.begin(), groups.end(), std::greater<>());
  std::string out;
  for (const auto& g : groups) out += (out.empty() ? "" : "+") + g.name();
  return out;
}

// ---------------------------------------------------------------------------
// Predicates

UnionPredicates union_predicates(const AbelianUnion& u) {
  validate_union(u, true);
  const std::size_t k = u.blocks();
  UnionPredicates p{true, true, true};
  for (std::size_t j = 0; j < k; ++j) {
    const AbelianGroup& g = u.groups[j];
    bool c_zero = false, d_zero = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (u.d[i][j] != g.neg(u.c[i][j])) p.involutive = false;
      c_zero = c_zero || u.c[i][j] == 0;
      d_zero = d_zero || u.d[i][j] == 0;
    }
    if (u.c[j][j] != 0 || u.d[j][j] != 0) p.square_free = false;
    if (!c_zero || !d_zero) p.condition_star = false;
  }
  return p;
}

AbelianUnion opposite_union(const AbelianUnion& u) {
  AbelianUnion out = u;
  for (std::size_t i = 0; i < u.blocks(); ++i)
    for (std::size_t j = 0; j < u.blocks(); ++j) {
      out.c[i][j] = u.groups[j].neg(u.d[i][j]);
      out.d[i][j] = u.groups[j].neg(u.c[i][j]);
    }
  return out;
}

InjectivityReport injectivity_necessary_checks(const AbelianUnion& u) {
  validate_union(u, true);
  const std::size_t k = u.blocks();
  InjectivityReport r{true, true};
  for (std::size_t i = 0; i < k; ++i) {
    if (u.c[i][i] != u.groups[i].neg(u.d[i][i])) r.diagonal_ok = false;
    for (std::size_t j = 0; j < k; ++j) {
      const int ij = u.groups[j].order(u.groups[j].add(u.c[i][j], u.d[i][j]));
      const int ji = u.groups[i].order(u.groups[i].add(u.c[j][i], u.d[j][i]));
      if (ij != ji) r.order_ok = false;
    }
  }
  return r;
}

InjectivityReport injectivity_necessary_checks(const Solution& s) {
  return injectivity_necessary_checks(solution_to_union(s).u);
}

}  // namespace ybe
