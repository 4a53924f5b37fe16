#include "hilbop/correlators.hpp"

#include <set>

#include "hilbop/characters.hpp"
#include "hilbop/errors.hpp"
#include "hilbop/operators.hpp"

namespace hilbop {

namespace {

void require_sizes(const Partition& lambda, const Partition& mu, const char* who) {
  if (lambda.size() != mu.size())
    throw domain_error(std::string(who) + ": |lambda| != |mu| for " + lambda.str() + ", " +
                       mu.str());
}

SpacePtr inflated_all(const SpacePtr& space, const std::vector<size_t>& vars, int extra_pole,
                      int extra_degree) {
  std::vector<VarSpec> vs = space->vars();
  for (size_t v : vars) {
    vs[v].max_pole += extra_pole;
    vs[v].max_degree += extra_degree;
  }
  return make_space(std::move(vs), space->caps());
}

// sum_nu chi^nu(lambda) chi^nu(mu) / (z_lambda z_mu) * prod_i eig_nu(z_i)
Series diagonal_pairing(const Partition& lambda, const Partition& mu,
                        const std::vector<size_t>& z_vars, const SpacePtr& space,
                        DiagonalOperator::Kind kind) {
  CharTable& chi = global_char_table();
  const Rational norm = (z_factor(lambda) * z_factor(mu)).inverse();
  Series acc(space);
  for (const auto& nu : partitions_of(lambda.size())) {
    const Rational weight =
        Rational(chi.character(nu, lambda)) * Rational(chi.character(nu, mu)) * norm;
    if (weight.is_zero()) continue;
    Series prod = Series::constant(space, weight);
    for (size_t v : z_vars) prod *= diagonal_eigenvalue({kind, v, 0}, nu, space);
    acc += prod;
  }
  return acc;
}

}  // namespace

Series f_bullet(const Partition& lambda, const Partition& mu, const std::vector<size_t>& z_vars,
                const SpacePtr& space, FMethod method) {
  require_sizes(lambda, mu, "f_bullet");
  if (z_vars.empty()) {
    return lambda == mu ? Series::constant(space, z_factor(lambda).inverse()) : Series(space);
  }
  for (size_t v : z_vars)
    if (space->var(v).max_pole < 1)
      throw window_error("f_bullet: variable " + space->var(v).name + " needs max_pole >= 1");
  if (method == FMethod::commutator) {
    return epsilon_product_vev(lambda, mu, std::vector<int>(z_vars.size(), 0), z_vars, space);
  }
  return diagonal_pairing(lambda, mu, z_vars, space, DiagonalOperator::Kind::epsilon0);
}

Series one_point_closed_form(const Partition& lambda, const Partition& mu, const SpacePtr& space,
                             size_t var) {
  require_sizes(lambda, mu, "one_point_closed_form");
  if (space->var(var).max_pole < 1)
    throw window_error("one_point_closed_form: variable " + space->var(var).name +
                       " needs max_pole >= 1");
  SpacePtr work = inflated_all(space, {var}, 0, 2);
  const Series vs_inv = varsigma_inverse(work, var);
  const Rational zl_inv = z_factor(lambda).inverse();
  Series acc(work);
  const int r = lambda.length();
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::set<int> U;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) U.insert(i + 1);
    const Partition lam_u = subpartition(lambda, U);
    const Partition sum = combine(lam_u, mu);
    if (!contains(sum, lambda)) continue;
    const Partition diff = subtract(sum, lambda);
    Series term = vs_inv.scaled(zl_inv * z_factor(diff).inverse());
    for (int p : lam_u.parts()) term *= varsigma(work, var, Rational(p));
    for (int p : diff.parts()) term *= varsigma(work, var, Rational(p));
    acc += term;
  }
  return acc.restricted_to(space);
}

Series g_npoint(const Partition& lambda, const Partition& mu, const std::vector<size_t>& z_vars,
                const SpacePtr& space, GMethod method) {
  require_sizes(lambda, mu, "g_npoint");
  if (z_vars.empty()) {
    return lambda == mu ? Series::constant(space, z_factor(lambda).inverse()) : Series(space);
  }
  if (method == GMethod::diagonal) {
    Series g = diagonal_pairing(lambda, mu, z_vars, space, DiagonalOperator::Kind::master);
    for (size_t v : z_vars)
      if (g.has_pole_in(v)) throw domain_error("g_npoint: result has an uncancelled pole");
    return g;
  }

  // Prop-style inclusion-exclusion over variable subsets:
  // G = (1/prod vs(z_i)) sum_U (-1)^{N-|U|} F(z_U) / prod_{i not in U} vs(z_i).
  const size_t n = z_vars.size();
  SpacePtr work = inflated_all(space, z_vars, 2, 4);
  std::vector<Series> vs_inv;
  vs_inv.reserve(n);
  for (size_t v : z_vars) vs_inv.push_back(varsigma_inverse(work, v));
  Series acc(work);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<size_t> zu;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) zu.push_back(z_vars[i]);
    Series term = f_bullet(lambda, mu, zu, work);
    if ((n - zu.size()) % 2 == 1) term = -term;
    for (size_t i = 0; i < n; ++i)
      if (!(mask & (1u << i))) term *= vs_inv[i];
    acc += term;
  }
  for (size_t i = 0; i < n; ++i) acc *= vs_inv[i];
  Series g = acc.restricted_to(space);
  for (size_t v : z_vars)
    if (g.has_pole_in(v))
      throw domain_error("g_npoint: inclusion-exclusion left an uncancelled pole");
  return g;
}

Series g_one_point_theorem(const Partition& lambda, const Partition& mu, const SpacePtr& space,
                           size_t var) {
  require_sizes(lambda, mu, "g_one_point_theorem");
  SpacePtr work = inflated_all(space, {var}, 2, 4);
  const Series vs_inv = varsigma_inverse(work, var);
  Series acc(work);
  const int r = lambda.length();
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::set<int> U;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) U.insert(i + 1);
    const Partition lam_u = subpartition(lambda, U);
    const Partition sum = combine(lam_u, mu);
    if (!contains(sum, lambda)) continue;
    const Partition diff = subtract(sum, lambda);
    Series term = Series::constant(work, z_factor(diff).inverse());
    for (int p : lam_u.parts()) term *= varsigma(work, var, Rational(p));
    for (int p : diff.parts()) term *= varsigma(work, var, Rational(p));
    acc += term;
  }
  if (lambda == mu) acc -= Series::constant(work, Rational(1));
  acc = acc * vs_inv * vs_inv;
  acc = acc.scaled(z_factor(lambda).inverse());
  Series g = acc.restricted_to(space);
  if (g.has_pole_in(var))
    throw domain_error("g_one_point_theorem: the delta subtraction left a pole");
  return g;
}

}  // namespace hilbop
