#include "ybe/brace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ybe/retraction.hpp"

namespace ybe {

std::string BraceViolation::describe() const {
  std::ostringstream os;
  os << "brace law fails at (a, b, c) = (" << witness.at(0) << ", " << witness.at(1) << ", "
     << witness.at(2) << ")";
  return os.str();
}

SkewBrace::SkewBrace(FiniteGroup dot, FiniteGroup circle)
    : dot_(std::move(dot)), circle_(std::move(circle)) {
  const int n = static_cast<int>(dot_.size());
  lambda_.assign(n, Perm(n));
  rho_.assign(n, Perm(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) lambda_[a][x] = dot_.mul(dot_.inv(a), circle_.mul(a, x));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      rho_[y][x] = circle_.mul(circle_.mul(circle_.inv(lambda_[x][y]), x), y);
}

SkewBrace SkewBrace::from_tables(const Table& dot, const Table& circle) {
  auto r = verify_brace(dot, circle);
  if (!r) throw std::invalid_argument(r.violation->describe());
  return *std::move(r.brace);
}

SkewBrace SkewBrace::from_groups(const FiniteGroup& dot, const FiniteGroup& circle) {
  auto r = verify_brace(dot, circle);
  if (!r) throw std::invalid_argument(r.violation->describe());
  return *std::move(r.brace);
}

BraceVerifyResult verify_brace(const Table& dot, const Table& circle) {
  return verify_brace(FiniteGroup::from_table(dot), FiniteGroup::from_table(circle));
}

BraceVerifyResult verify_brace(const FiniteGroup& dot, const FiniteGroup& circle) {
  if (dot.size() != circle.size())
    throw std::invalid_argument("the two groups live on carriers of different size");
  const int n = static_cast<int>(dot.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int lhs = circle.mul(a, dot.mul(b, c));
        const int rhs = dot.mul(dot.mul(circle.mul(a, b), dot.inv(a)), circle.mul(a, c));
        if (lhs != rhs) return {std::nullopt, BraceViolation{{a, b, c}}};
      }
  return {SkewBrace(dot, circle), std::nullopt};
}

std::vector<Perm> lambda_map(const SkewBrace& b) { return b.lambda_rows(); }

std::vector<Perm> rho_map(const SkewBrace& b) { return b.rho_rows(); }

Solution associated_solution(const SkewBrace& b) {
  return Solution::from_tables(b.lambda_rows(), b.rho_rows());
}

SkewBrace opposite_brace(const SkewBrace& b) {
  return SkewBrace::from_groups(b.dot().opposite(), b.circle());
}

namespace {

int isize(const SkewBrace& b) { return static_cast<int>(b.size()); }

// f_{a·b} == combine(f_a, f_b) for all a, b.
template <typename Combine>
bool dot_law(const SkewBrace& b, const std::vector<Perm>& f, Combine combine) {
  for (int x = 0; x < isize(b); ++x)
    for (int y = 0; y < isize(b); ++y)
      if (f[b.mul(x, y)] != combine(f[x], f[y])) return false;
  return true;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Subset kernel(const std::vector<Perm>& rows) {
  Subset out;
  for (std::size_t a = 0; a < rows.size(); ++a)
    if (is_identity(rows[a])) out.push_back(static_cast<int>(a));
  return out;
}

Subset intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

BiskewRoutes biskew_routes(const SkewBrace& b) {
  BiskewRoutes r;
  r.swapped_law = static_cast<bool>(verify_brace(b.circle(), b.dot()));
  r.lambda_dot_antihom =
      dot_law(b, b.lambda_rows(), [](const Perm& p, const Perm& q) { return compose(q, p); });
  r.left_distributive = is_left_distributive(associated_solution(b));
  return r;
}

bool is_biskew(const SkewBrace& b) {
  const auto r = biskew_routes(b);
  if (!r.agree()) throw std::logic_error("bi-skew characterizations disagree");
  return r.swapped_law;
}

bool is_ideal(const SkewBrace& b, const Subset& s) {
  Subset sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (!is_normal(b.dot(), sorted) || !is_normal(b.circle(), sorted)) return false;
  for (int a = 0; a < isize(b); ++a)
    for (int x : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), b.lambda(a, x))) return false;
  return true;
}

SocleRoutes socle_routes(const SkewBrace& b) {
  SocleRoutes r;
  for (int a = 0; a < isize(b); ++a) {
    bool in = true;
    for (int x = 0; x < isize(b) && in; ++x)
      in = b.circ(a, x) == b.mul(a, x) && b.mul(a, x) == b.mul(x, a);
    if (in) r.defining.push_back(a);
  }
  const Subset kl = kernel(b.lambda_rows());
  r.kernels = intersect(kl, kernel(b.rho_rows()));
  r.lambda_center = intersect(kl, center(b.dot()));
  return r;
}

Subset socle(const SkewBrace& b) {
  auto r = socle_routes(b);
  if (!r.agree()) throw std::logic_error("socle characterizations disagree");
  if (!is_ideal(b, r.defining)) throw std::logic_error("socle is not an ideal");
  return r.defining;
}

QuotientBrace quotient_brace(const SkewBrace& b, const Subset& s) {
  if (!is_ideal(b, s)) throw std::invalid_argument("quotient requires an ideal");
  Subset sorted = s;
  std::sort(sorted.begin(), sorted.end());
  auto qd = quotient(b.dot(), sorted);
  auto qc = quotient(b.circle(), sorted);
  if (qd.projection != qc.projection) throw std::logic_error("cosets of an ideal differ between the two groups");
  return {SkewBrace::from_groups(qd.group, qc.group), std::move(qd.projection), std::move(qd.representatives)};
}

SocleSeries socle_series(const SkewBrace& b) {
  SocleSeries out;
  out.terms.push_back(b);
  while (out.terms.back().size() > 1) {
    const SkewBrace& cur = out.terms.back();
    const Subset soc = socle(cur);
    if (soc.size() == 1) return out;
    SkewBrace next = quotient_brace(cur, soc).brace;
    out.terms.push_back(std::move(next));
  }
  out.nilpotency_class = static_cast<int>(out.terms.size()) - 1;
  return out;
}

KernelIdeals kernel_ideals(const SkewBrace& b) {
  KernelIdeals k;
  k.ker_lambda = kernel(b.lambda_rows());
  k.ker_rho = kernel(b.rho_rows());
  k.ker_lambda_is_ideal = is_ideal(b, k.ker_lambda);
  k.ker_rho_is_ideal = is_ideal(b, k.ker_rho);
  return k;
}

bool ReductivityProfile::consistent() const {
  if (red1 != lambda_dot_hom || red2 != rho_dot_hom || red3 != lambda_dot_antihom ||
      red4 != rho_dot_antihom)
    return false;
  const bool r = all_red();
  return products_agree == r && level_at_most_2 == r && class_at_most_2 == r &&
         opposite_class_at_most_2 == r;
}

ReductivityProfile reductivity_profile_unchecked(const SkewBrace& b) {
  ReductivityProfile p;
  const Solution s = associated_solution(b);
  const auto red = is_2reductive(s);
  p.red1 = red.red1;
  p.red2 = red.red2;
  p.red3 = red.red3;
  p.red4 = red.red4;

  auto hom = [](const Perm& f, const Perm& g) { return compose(f, g); };
  auto anti = [](const Perm& f, const Perm& g) { return compose(g, f); };
  p.lambda_dot_hom = dot_law(b, b.lambda_rows(), hom);
  p.lambda_dot_antihom = dot_law(b, b.lambda_rows(), anti);
  p.rho_dot_hom = dot_law(b, b.rho_rows(), hom);
  p.rho_dot_antihom = dot_law(b, b.rho_rows(), anti);

  p.products_agree = true;
  for (int x = 0; x < isize(b) && p.products_agree; ++x)
    for (int y = 0; y < isize(b) && p.products_agree; ++y) {
      const int xy = b.mul(x, y), yx = b.mul(y, x), xoy = b.circ(x, y);
      p.products_agree = b.lambda_rows()[xy] == b.lambda_rows()[yx] &&
                         b.lambda_rows()[xy] == b.lambda_rows()[xoy] &&
                         b.rho_rows()[xy] == b.rho_rows()[yx] && b.rho_rows()[xy] == b.rho_rows()[xoy];
    }

  const auto lvl = multipermutation_level(s);
  p.level_at_most_2 = lvl.finite && lvl.level <= 2;
  const auto cls = socle_series(b).nilpotency_class;
  p.class_at_most_2 = cls && *cls <= 2;
  const auto ocls = socle_series(opposite_brace(b)).nilpotency_class;
  p.opposite_class_at_most_2 = ocls && *ocls <= 2;
  return p;
}

ReductivityProfile reductivity_profile(const SkewBrace& b) {
  auto p = reductivity_profile_unchecked(b);
  if (!p.consistent()) {
    std::ostringstream os;
    os << "reductivity characterizations disagree: red=" << p.red1 << p.red2 << p.red3 << p.red4
       << " hom=" << p.lambda_dot_hom << p.rho_dot_hom << " antihom=" << p.lambda_dot_antihom
       << p.rho_dot_antihom << " products=" << p.products_agree << " level=" << p.level_at_most_2
       << " class=" << p.class_at_most_2 << " opposite=" << p.opposite_class_at_most_2;
    throw std::logic_error(os.str());
  }
  return p;
}

bool meta_trivial_by_socle(const SkewBrace& b) {
  const auto q = quotient_brace(b, socle(b));
  return q.brace.dot() == q.brace.circle();
}

}  // namespace ybe
