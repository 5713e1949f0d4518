#include "ybe/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ybe {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

bool is_permutation(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup() : FiniteGroup(1, {0}) {}

FiniteGroup::FiniteGroup(std::size_t n, std::vector<int> table)
    : n_(n), table_(std::move(table)), inv_(n, 0) {
  for (std::size_t a = 0; a < n_; ++a) {
    if (mul(static_cast<int>(a), static_cast<int>(a)) == static_cast<int>(a)) {
      id_ = static_cast<int>(a);
      break;
    }
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (mul(static_cast<int>(a), static_cast<int>(b)) == id_) {
        inv_[a] = static_cast<int>(b);
        break;
      }
    }
  }
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  std::vector<int> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw std::invalid_argument("group table row " + std::to_string(a) + " has wrong length");
    }
    if (!is_permutation(table[a])) {
      throw std::invalid_argument("group table row " + std::to_string(a) +
                                  " is not a permutation of the carrier");
    }
    flat.insert(flat.end(), table[a].begin(), table[a].end());
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<int> column(n);
    for (std::size_t a = 0; a < n; ++a) column[a] = flat[a * n + b];
    if (!is_permutation(column)) {
      throw std::invalid_argument("group table column " + std::to_string(b) +
                                  " is not a permutation of the carrier");
    }
  }
  // A Latin square with an idempotent is a loop with that identity; the
  // remaining requirement is associativity.
  FiniteGroup g(n, std::move(flat));
  const int e = g.id_;
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul(e, static_cast<int>(a)) != static_cast<int>(a) ||
        g.mul(static_cast<int>(a), e) != static_cast<int>(a)) {
      throw std::invalid_argument("group table has no two-sided identity");
    }
  }
  for (int a = 0; a < static_cast<int>(n); ++a) {
    for (int b = 0; b < static_cast<int>(n); ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < static_cast<int>(n); ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw std::invalid_argument("group table is not associative at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return g;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = table_[a * n_ + b];
  return t;
}

FiniteGroup FiniteGroup::opposite() const {
  std::vector<int> t(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a * n_ + b] = table_[b * n_ + a];
  return FiniteGroup(n_, std::move(t));
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subgroups and quotients

Subset center(const FiniteGroup& g) {
  Subset z;
  const int n = static_cast<int>(g.size());
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

int element_order(const FiniteGroup& g, int x) {
  int k = 1;
  for (int p = x; p != g.identity(); p = g.mul(p, x)) ++k;
  return k;
}

namespace {

std::vector<char> membership(std::size_t n, const Subset& s) {
  std::vector<char> in(n, 0);
  for (int a : s) {
    if (a < 0 || static_cast<std::size_t>(a) >= n) {
      throw std::invalid_argument("subset element " + std::to_string(a) + " out of range");
    }
    in[a] = 1;
  }
  return in;
}

}  // namespace

bool is_subgroup(const FiniteGroup& g, const Subset& s) {
  const auto in = membership(g.size(), s);
  if (!in[g.identity()]) return false;
  for (int a : s) {
    for (int b : s)
      if (!in[g.mul(a, g.inv(b))]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subset& s) {
  if (!is_subgroup(g, s)) return false;
  const auto in = membership(g.size(), s);
  for (int x = 0; x < static_cast<int>(g.size()); ++x) {
    for (int a : s)
      if (!in[g.mul(g.mul(x, a), g.inv(x))]) return false;
  }
  return true;
}

QuotientGroup quotient(const FiniteGroup& g, const Subset& s) {
  if (!is_normal(g, s)) throw std::invalid_argument("quotient by a subset that is not a normal subgroup");
  const std::size_t n = g.size();
  std::vector<int> projection(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < static_cast<int>(n); ++a) {
    if (projection[a] != -1) continue;
    // a is the smallest element not yet covered, hence the coset minimum.
    const int k = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int h : s) projection[g.mul(a, h)] = k;
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i][j] = projection[g.mul(reps[i], reps[j])];
  return {FiniteGroup::from_table(table), std::move(projection), std::move(reps)};
}

Subset subgroup_generated(const FiniteGroup& g, const Subset& s) {
  auto in = membership(g.size(), s);
  std::fill(in.begin(), in.end(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int gen : s) {
      const int p = g.mul(members[i], gen);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = static_cast<int>(g.size());
  const int nh = static_cast<int>(h.size());
  std::vector<std::vector<int>> t(ng * nh, std::vector<int>(ng * nh));
  for (int a = 0; a < ng * nh; ++a)
    for (int b = 0; b < ng * nh; ++b)
      t[a][b] = g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh);
  return FiniteGroup::from_table(t);
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  FiniteGroup cur = g;
  int steps = 0;
  while (cur.size() > 1) {
    const Subset z = center(cur);
    if (z.size() == 1) return std::nullopt;
    cur = quotient(cur, z).group;
    ++steps;
  }
  return steps;
}

// ---------------------------------------------------------------------------
// Named groups

FiniteGroup cyclic_group(int m) {
  if (m <= 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return FiniteGroup::from_table(t);
}

FiniteGroup symmetric_group(int k) {
  if (k <= 0) throw std::invalid_argument("symmetric group degree must be positive");
  std::vector<Perm> gens;
  if (k > 1) {
    Perm swap = identity_perm(k);
    std::swap(swap[0], swap[1]);
    Perm cycle(k);
    for (int x = 0; x < k; ++x) cycle[x] = (x + 1) % k;
    gens = {swap, cycle};
  }
  return cayley_group(PermGroup::closure(k, gens));
}

FiniteGroup dihedral_group(int m) {
  if (m <= 0) throw std::invalid_argument("dihedral group parameter must be positive");
  // r^k s^e is stored as k + m*e.
  const int n = 2 * m;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int a = x % m, e = x / m, b = y % m, f = y / m;
      const int k = ((a + (e ? -b : b)) % m + m) % m;
      t[x][y] = k + m * ((e + f) % 2);
    }
  }
  return FiniteGroup::from_table(t);
}

FiniteGroup quaternion_group() {
  // Index = 4*sign + unit with units 1,i,j,k and sign 1 meaning negative.
  // unit_mul[u][v] = (sign, unit) of u*v.
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      const int sign = (x / 4 + y / 4 + kSign[u][v]) % 2;
      t[x][y] = 4 * sign + kUnit[u][v];
    }
  }
  return FiniteGroup::from_table(t);
}

std::vector<NamedGroup> small_groups(int max_order) {
  if (max_order > 8) throw std::invalid_argument("small_groups supports orders up to 8");
  std::vector<NamedGroup> out;
  for (int m = 1; m <= max_order; ++m) {
    for (const auto& a : abelian_groups_of_order(m)) out.push_back({a.name(), a.group()});
    if (m == 6) out.push_back({"S3", symmetric_group(3)});
    if (m == 8) {
      out.push_back({"D4", dihedral_group(4)});
      out.push_back({"Q8", quaternion_group()});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Abelian groups

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> pf;
  for (int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) pf.emplace_back(p, e);
  }
  if (n > 1) pf.emplace_back(n, 1);
  return pf;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<int> invariant_factors(const std::vector<int>& cyclic_orders) {
  std::map<int, std::vector<int>> powers;  // prime -> exponents
  for (int d : cyclic_orders) {
    if (d <= 0) throw std::invalid_argument("cyclic order must be positive, got " + std::to_string(d));
    for (auto [p, e] : factorize(d)) powers[p].push_back(e);
  }
  std::size_t r = 0;
  for (auto& [p, es] : powers) {
    std::sort(es.begin(), es.end(), std::greater<>());
    r = std::max(r, es.size());
  }
  // Factor k (counted from the largest) takes the k-th largest power of each prime.
  std::vector<int> factors(r, 1);
  for (const auto& [p, es] : powers)
    for (std::size_t k = 0; k < es.size(); ++k) factors[r - 1 - k] *= ipow(p, es[k]);
  return factors;
}

AbelianGroup::AbelianGroup(const std::vector<int>& cyclic_orders)
    : factors_(invariant_factors(cyclic_orders)) {
  size_ = 1;
  for (int d : factors_) size_ *= static_cast<std::size_t>(d);
  const int n = static_cast<int>(size_);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<int> ca, cb, cs(factors_.size());
  for (int a = 0; a < n; ++a) {
    ca = coords(a);
    for (int b = 0; b < n; ++b) {
      cb = coords(b);
      for (std::size_t k = 0; k < factors_.size(); ++k) cs[k] = (ca[k] + cb[k]) % factors_[k];
      t[a][b] = encode(cs);
    }
  }
  group_ = FiniteGroup::from_table(t);
}

int AbelianGroup::order(int a) const { return element_order(group_, a); }

std::vector<int> AbelianGroup::coords(int a) const {
  std::vector<int> c(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    c[k] = a % factors_[k];
    a /= factors_[k];
  }
  return c;
}

int AbelianGroup::encode(std::span<const int> coords) const {
  int a = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const int d = factors_[k];
    a = a * d + ((coords[k] % d) + d) % d;
  }
  return a;
}

bool AbelianGroup::generated_by(std::span<const int> elems) const {
  return subgroup_generated(group_, Subset(elems.begin(), elems.end())).size() == size_;
}

std::string AbelianGroup::name() const {
  if (factors_.empty()) return "Z1";
  std::string s;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k > 0) s += "x";
    s += "Z" + std::to_string(factors_[k]);
  }
  return s;
}

std::strong_ordering operator<=>(const AbelianGroup& a, const AbelianGroup& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.factors_ <=> b.factors_;
}

AbelianGroup abelian_group(const std::vector<int>& factors) { return AbelianGroup(factors); }

std::vector<AbelianGroup> abelian_groups_of_order(int n) {
  if (n <= 0) throw std::invalid_argument("group order must be positive");
  std::vector<std::vector<int>> choices{{}};  // lists of cyclic orders
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<int>> next;
    for (const auto& base : choices) {
      for (const auto& part : parts) {
        auto c = base;
        for (int k : part) c.push_back(ipow(p, k));
        next.push_back(std::move(c));
      }
    }
    choices = std::move(next);
  }
  std::vector<AbelianGroup> out;
  for (const auto& c : choices) out.emplace_back(c);
  std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
    if (a.factors().size() != b.factors().size()) return a.factors().size() < b.factors().size();
    return a.factors() < b.factors();
  });
  return out;
}

std::vector<Perm> automorphisms(const AbelianGroup& a) {
  const auto& f = a.factors();
  const int n = static_cast<int>(a.size());
  const std::size_t r = f.size();
  if (r == 0) return {identity_perm(1)};

  // Candidate images for generator k: elements whose order divides f[k].
  std::vector<std::vector<int>> candidates(r);
  for (std::size_t k = 0; k < r; ++k)
    for (int x = 0; x < n; ++x)
      if (f[k] % a.order(x) == 0) candidates[k].push_back(x);

  std::vector<std::vector<int>> coords(n);
  for (int x = 0; x < n; ++x) coords[x] = a.coords(x);

  std::vector<Perm> out;
  std::vector<std::size_t> idx(r, 0);
  std::vector<std::vector<int>> multiples(r);  // multiples[k][m] = m * image_k
  while (true) {
    for (std::size_t k = 0; k < r; ++k) {
      const int g = candidates[k][idx[k]];
      multiples[k].assign(f[k], 0);
      for (int m = 1; m < f[k]; ++m) multiples[k][m] = a.add(multiples[k][m - 1], g);
    }
    Perm phi(n);
    for (int x = 0; x < n; ++x) {
      int v = 0;
      for (std::size_t k = 0; k < r; ++k) v = a.add(v, multiples[k][coords[x][k]]);
      phi[x] = v;
    }
    if (is_permutation(phi)) out.push_back(std::move(phi));

    std::size_t k = 0;
    while (k < r && ++idx[k] == candidates[k].size()) idx[k++] = 0;
    if (k == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Permutation groups

PermGroup PermGroup::closure(std::size_t degree, std::vector<Perm> generators) {
  for (const auto& g : generators) {
    if (g.size() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!is_permutation(g)) throw std::invalid_argument("generator is not a permutation");
  }
  PermGroup pg;
  pg.degree_ = degree;
  pg.generators_ = std::move(generators);

  std::set<Perm> seen{identity_perm(degree)};
  std::deque<Perm> queue{identity_perm(degree)};
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : pg.generators_) {
      Perm q = compose(g, p);
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  pg.elements_.assign(seen.begin(), seen.end());
  return pg;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermGroup perm_group_closure(std::vector<Perm> generators) {
  if (generators.empty()) throw std::invalid_argument("cannot infer degree from an empty generator list");
  const std::size_t degree = generators.front().size();
  return PermGroup::closure(degree, std::move(generators));
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : g.generators()) {
    for (std::size_t x = 0; x < n; ++x) {
      const int a = find(static_cast<int>(x)), b = find(p[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    const int r = find(static_cast<int>(x));
    if (slot[r] == -1) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(static_cast<int>(x));
  }
  return out;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

FiniteGroup cayley_group(const PermGroup& g) {
  const auto& el = g.elements();
  const std::size_t n = el.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Perm ab = compose(el[a], el[b]);
      t[a][b] = static_cast<int>(std::lower_bound(el.begin(), el.end(), ab) - el.begin());
    }
  }
  return FiniteGroup::from_table(t);
}

}  // namespace ybe
