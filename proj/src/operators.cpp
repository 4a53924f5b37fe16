#include "hilbop/operators.hpp"

#include <algorithm>
#include <map>

#include "hilbop/characters.hpp"
#include "hilbop/errors.hpp"

namespace hilbop {

namespace {

// Work space with extra room on one variable; intermediate products with
// poles need both headroom above (lost top orders) and below (pole order 2
// before cancellation).
SpacePtr inflated(const SpacePtr& space, size_t var, int extra_pole, int extra_degree) {
  std::vector<VarSpec> vars = space->vars();
  vars[var].max_pole += extra_pole;
  vars[var].max_degree += extra_degree;
  return make_space(std::move(vars), space->caps());
}

void require_pole(const SpacePtr& space, size_t var, int needed, const char* who) {
  if (space->var(var).max_pole < needed)
    throw window_error(std::string(who) + ": variable " + space->var(var).name +
                       " needs max_pole >= " + std::to_string(needed));
}

Series assert_pole_free(Series s, size_t var, const char* who) {
  if (s.has_pole_in(var))
    throw domain_error(std::string(who) + ": pole failed to cancel in " +
                       s.space()->var(var).name);
  return s;
}

}  // namespace

Series varsigma(const SpacePtr& space, size_t var, const Rational& scale) {
  const int order = space->var(var).max_degree;
  const Rational half = scale * Rational(1, 2);
  return exp_linear(space, half, var, order) - exp_linear(space, -half, var, order);
}

Series varsigma_inverse(const SpacePtr& space, size_t var) {
  require_pole(space, var, 1, "varsigma inverse");
  // varsigma has a simple zero; two extra top orders keep the window exact.
  SpacePtr work = inflated(space, var, 0, 2);
  return varsigma(work, var).inverse().restricted_to(space);
}

Series chern_eigenvalue(const Partition& lambda, const SpacePtr& space, size_t var) {
  const int order = space->var(var).max_degree;
  Series sum(space);
  for (int c : contents(lambda)) sum += exp_linear(space, Rational(c), var, order);
  return sum;
}

Series epsilon0_eigenvalue(const Partition& lambda, const SpacePtr& space, size_t var) {
  require_pole(space, var, 1, "epsilon0 eigenvalue");
  SpacePtr work = inflated(space, var, 0, 2);
  const int order = work->var(var).max_degree;
  Series sum = varsigma(work, var).inverse();
  for (int i = 1; i <= lambda.length(); ++i) {
    // e^{z(lambda_i - i + 1/2)} - e^{z(-i + 1/2)}
    sum += exp_linear(work, Rational(2 * (lambda.part(i - 1) - i) + 1, 2), var, order);
    sum -= exp_linear(work, Rational(-2 * i + 1, 2), var, order);
  }
  return sum.restricted_to(space);
}

Series master_eigenvalue(const Partition& lambda, const SpacePtr& space, size_t var) {
  // Intermediate arithmetic reaches pole order 2 and cancels exactly.
  SpacePtr work = inflated(space, var, 2, 4);
  Series vs_inv = varsigma(work, var).inverse();
  Series eps = epsilon0_eigenvalue(lambda, work, var);
  Series master = vs_inv * (eps - vs_inv);
  return assert_pole_free(master.restricted_to(space), var, "master eigenvalue");
}

Series twist_correction(long m, const SpacePtr& space, size_t var) {
  require_pole(space, var, 1, "twist correction");
  SpacePtr work = inflated(space, var, 2, 4);
  const int order = work->var(var).max_degree;
  Series em = exp_linear(work, Rational(m), var, order) -
              Series::constant(work, Rational(1));
  Series vs_inv = varsigma(work, var).inverse();
  return (em * vs_inv * vs_inv).restricted_to(space);
}

Series twisted_eigenvalue(const Partition& lambda, long m, const SpacePtr& space, size_t var) {
  SpacePtr work = inflated(space, var, 2, 4);
  const int order = work->var(var).max_degree;
  Series correction = twist_correction(m, work, var);
  ExpVec pole(work->arity(), 0);
  pole[var] = -1;
  const Rational residue = correction.coefficient(pole);
  if (residue != Rational(m))
    throw domain_error("twisted eigenvalue: residue of (e^{mz}-1)/vs^2 is " + residue.str() +
                       ", expected " + Rational(m).str());
  correction -= Series::monomial(work, pole, residue);
  Series value = exp_linear(work, Rational(m), var, order) *
                     master_eigenvalue(lambda, work, var) +
                 correction;
  return assert_pole_free(value.restricted_to(space), var, "twisted eigenvalue");
}

std::vector<Rational> twisted_eigenvalue_taylor(const Partition& lambda, long m, int k_max) {
  SpacePtr sp = univariate_space("z", 1, k_max);
  Series eig = twisted_eigenvalue(lambda, m, sp, 0);
  std::vector<Rational> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) out.push_back(eig.coefficient({k}));
  return out;
}

Series diagonal_eigenvalue(const DiagonalOperator& op, const Partition& lambda,
                           const SpacePtr& space) {
  switch (op.kind) {
    case DiagonalOperator::Kind::chern:
      return chern_eigenvalue(lambda, space, op.var);
    case DiagonalOperator::Kind::epsilon0:
      return epsilon0_eigenvalue(lambda, space, op.var);
    case DiagonalOperator::Kind::master:
      return master_eigenvalue(lambda, space, op.var);
    case DiagonalOperator::Kind::chern_twisted:
      return twisted_eigenvalue(lambda, op.m, space, op.var);
  }
  throw structural_error("diagonal eigenvalue: unknown operator kind");
}

FockVector<Series> apply_diagonal(const std::vector<DiagonalOperator>& ops,
                                  const FockVector<Series>& v) {
  const Basis original = v.basis();
  FockVector<Series> fixed = basis_change(v, Basis::fixed_point);
  FockVector<Series> scaled(Basis::fixed_point);
  for (const auto& [lambda, coef] : fixed.terms()) {
    Series c = coef;
    for (const auto& op : ops) c *= diagonal_eigenvalue(op, lambda, coef.space());
    scaled.add_term(lambda, c);
  }
  return basis_change(scaled, original);
}

namespace {

// Vacuum expectation <0| p_{a_1}..p_{a_k} eps_r(z) p_{-b_1}..p_{-b_l} |0>
// by the commutator recursion.  Annihilators move right one at a time; each
// either shifts the eps factor or consumes a matching creation.  Once only
// the eps is left of the creations it absorbs them all in turn, and
// <eps_r> = delta_{r,0}/varsigma(z).
class SingleEpsEvaluator {
public:
  SingleEpsEvaluator(SpacePtr space, size_t var) : space_(std::move(space)), var_(var) {}

  Series vev(const Partition& lambda, int r, const Partition& mu) {
    return eval(lambda.parts(), r, mu.parts());
  }

private:
  const Series& vs(int a) {
    auto it = vs_cache_.find(a);
    if (it == vs_cache_.end())
      it = vs_cache_.emplace(a, varsigma(space_, var_, Rational(a))).first;
    return it->second;
  }

  const Series& vs_inverse() {
    if (!vs_inv_) vs_inv_ = varsigma_inverse(space_, var_);
    return *vs_inv_;
  }

  Series eval(std::vector<int> anns, int r, std::vector<int> creations) {
    if (anns.empty()) {
      if (creations.empty())
        return r == 0 ? vs_inverse() : Series(space_);
      // move eps right past the first creation; the passing term dies on <0|
      const int b = creations.front();
      std::vector<int> rest(creations.begin() + 1, creations.end());
      return vs(b) * eval({}, r - b, std::move(rest));
    }
    const int a = anns.back();
    anns.pop_back();
    Series total = vs(a) * eval(anns, r + a, creations);
    const auto hit = std::find(creations.begin(), creations.end(), a);
    if (hit != creations.end()) {
      const int mult = static_cast<int>(std::count(creations.begin(), creations.end(), a));
      std::vector<int> fewer = creations;
      fewer.erase(std::find(fewer.begin(), fewer.end(), a));
      total += eval(anns, r, std::move(fewer)).scaled(Rational(a) * Rational(mult));
    }
    return total;
  }

  SpacePtr space_;
  size_t var_;
  std::map<int, Series> vs_cache_;
  std::optional<Series> vs_inv_;
};

}  // namespace

Series epsilon_product_vev(const Partition& lambda, const Partition& mu,
                           const std::vector<int>& r_list, const std::vector<size_t>& z_vars,
                           const SpacePtr& space) {
  if (r_list.size() != z_vars.size())
    throw structural_error("epsilon product vev: r_list and z_vars length mismatch");
  if (lambda.size() != mu.size())
    throw domain_error("epsilon product vev: |lambda| != |mu|");

  if (r_list.empty()) {
    return lambda == mu ? Series::constant(space, z_factor(lambda).inverse()) : Series(space);
  }

  // Weight bookkeeping: eps_r lowers the Fock degree by r.
  long shift = 0;
  for (int r : r_list) shift += r;
  if (lambda.size() != mu.size() - shift) return Series(space);

  SingleEpsEvaluator eval(space, z_vars.front());
  const Rational norm = (z_factor(lambda) * z_factor(mu)).inverse();
  Series first = eval.vev(lambda, r_list.front(), mu);

  if (r_list.size() == 1) return first.scaled(norm);

  // Resolve the state after the trailing factors: degree of the intermediate
  // slot, then sum over its basis with the z_nu weights of the pairing.
  const std::vector<int> rest_r(r_list.begin() + 1, r_list.end());
  const std::vector<size_t> rest_v(z_vars.begin() + 1, z_vars.end());
  long rest_shift = 0;
  for (int r : rest_r) rest_shift += r;
  const long mid_degree = mu.size() - rest_shift;
  if (mid_degree < 0) return Series(space);

  Series acc(space);
  for (const auto& nu : partitions_of(static_cast<int>(mid_degree))) {
    Series left = eval.vev(lambda, r_list.front(), nu)
                      .scaled((z_factor(lambda) * z_factor(nu)).inverse());
    if (left.is_zero()) continue;
    Series right = epsilon_product_vev(nu, mu, rest_r, rest_v, space);
    if (right.is_zero()) continue;
    acc += left.scaled(z_factor(nu)) * right;
  }
  return acc;
}

}  // namespace hilbop
