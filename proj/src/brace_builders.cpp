#include <array>
#include <stdexcept>

#include "ybe/brace.hpp"

namespace ybe {

namespace {

void require_odd(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 1");
}

// x + (-1)^x y on Z_m
Table twisted_sum(int m) {
  Table t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[x][y] = ((x % 2 == 0 ? x + y : x - y) % m + m) % m;
  return t;
}

constexpr std::array<int, 4> kUnit{0, 1, 2, 4};

}  // namespace

SkewBrace trivial_brace(const FiniteGroup& g) { return SkewBrace::from_groups(g, g); }

SkewBrace almost_trivial_brace(const FiniteGroup& g) { return SkewBrace::from_groups(g, g.opposite()); }

SkewBrace product_brace(const SkewBrace& b1, const SkewBrace& b2) {
  return SkewBrace::from_groups(direct_product(b1.dot(), b2.dot()), direct_product(b1.circle(), b2.circle()));
}

SkewBrace z2n_brace(int n) {
  require_odd(n);
  return SkewBrace::from_groups(FiniteGroup::from_table(twisted_sum(2 * n)), cyclic_group(2 * n));
}

SkewBrace z2n_dual_brace(int n) {
  require_odd(n);
  return SkewBrace::from_groups(cyclic_group(2 * n), FiniteGroup::from_table(twisted_sum(2 * n)));
}

int dihedral_example_element(int eps, int i) {
  if (eps < 0 || eps > 1 || i < 0 || i > 3) throw std::invalid_argument("element out of range");
  return kUnit[i] ^ (eps ? 7 : 0);
}

SkewBrace dihedral_example_brace() {
  std::array<std::pair<int, int>, 8> decode{};
  for (int eps = 0; eps < 2; ++eps)
    for (int i = 0; i < 4; ++i) decode[dihedral_example_element(eps, i)] = {eps, i};

  Table dot(8, std::vector<int>(8)), circle(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      dot[a][b] = a ^ b;
      const auto [e, i] = decode[a];
      const auto [z, j] = decode[b];
      circle[a][b] = dihedral_example_element((e + z) % 2, (i + (e ? 3 * j : j)) % 4);
    }
  return SkewBrace::from_tables(dot, circle);
}

}  // namespace ybe
