#include "hilbop/traces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hilbop/errors.hpp"
#include "hilbop/operators.hpp"

namespace hilbop {

Series q_pochhammer(const SpacePtr& space, size_t qvar, const Rational& c,
                    std::optional<size_t> zvar) {
  const int q_order = space->var(qvar).max_degree;
  const Series one = Series::constant(space, Rational(1));
  Series ez = one;
  if (zvar && !c.is_zero())
    ez = exp_linear(space, c, *zvar, space->var(*zvar).max_degree);
  Series acc = one;
  for (int j = 1; j <= q_order; ++j) {
    ExpVec qe(space->arity(), 0);
    qe[qvar] = j;
    acc = acc * (one - Series::monomial(space, qe, Rational(1)) * ez);
  }
  return acc;
}

Theta::Theta(int z_degree, int q_degree) : q_degree_(q_degree) {
  SpacePtr wq = make_space(
      {VarSpec{"w", 0, z_degree + kMaxDeriv}, VarSpec{"q", 0, q_degree}});
  const Series vs = varsigma(wq, 0);
  const Series plus = q_pochhammer(wq, 1, Rational(1), 0);
  const Series minus = q_pochhammer(wq, 1, Rational(-1), 0);
  const Series qq_inv = q_pochhammer(wq, 1, Rational(0), std::nullopt).inverse();
  base_.push_back(vs * plus * minus * qq_inv * qq_inv);
  for (int k = 1; k <= kMaxDeriv; ++k) base_.push_back(base_.back().derivative(0));
}

Series Theta::at(int deriv, const std::vector<std::pair<size_t, Rational>>& z_form,
                 const SpacePtr& target) const {
  if (deriv < 0) return Series(target);  // Theta^{(k)} = 0 for k < 0
  if (deriv > kMaxDeriv)
    throw structural_error("theta: derivative order beyond what is kept");
  return base_[deriv].substituted_linear(0, z_form, target);
}

Series jacobi_sum_form(const SpacePtr& space, size_t zvar, size_t qvar) {
  const int q_order = space->var(qvar).max_degree;
  const int z_order = space->var(zvar).max_degree;
  Series acc(space);
  for (int m = -(q_order + 2); m <= q_order + 2; ++m) {
    const long qexp = (static_cast<long>(m) * (m + 1)) / 2;
    if (qexp > q_order) continue;
    ExpVec e(space->arity(), 0);
    e[qvar] = static_cast<int32_t>(qexp);
    const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
    acc += Series::monomial(space, e, sign) *
           exp_linear(space, Rational(2 * m + 1, 2), zvar, z_order);
  }
  return acc;
}

Series q_trace(const std::vector<TraceFactorKind>& factors, const std::vector<size_t>& z_vars,
               size_t qvar, int n_max, const SpacePtr& space) {
  if (factors.size() != z_vars.size())
    throw structural_error("q_trace: factors and z_vars length mismatch");
  if (n_max < space->var(qvar).max_degree)
    throw window_error("q_trace: n_max " + std::to_string(n_max) +
                       " below the q window of " + space->var(qvar).name);
  Series acc(space);
  for (int n = 0; n <= n_max; ++n) {
    ExpVec qe(space->arity(), 0);
    qe[qvar] = n;
    if (!space->in_window(qe)) break;
    for (const auto& lam : partitions_of(n)) {
      Series prod = Series::monomial(space, qe, Rational(1));
      for (size_t j = 0; j < factors.size(); ++j) {
        const auto kind = factors[j] == TraceFactorKind::epsilon0
                              ? DiagonalOperator::Kind::epsilon0
                              : DiagonalOperator::Kind::chern;
        prod *= diagonal_eigenvalue({kind, z_vars[j], 0}, lam, space);
      }
      acc += prod;
    }
  }
  return acc;
}

namespace {

Series series_det(const std::vector<std::vector<Series>>& m, const SpacePtr& space) {
  const size_t k = m.size();
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Series det(space);
  // Leibniz over permutations; k <= 3 here so this stays tiny.
  std::vector<size_t> perm = idx;
  do {
    int sign = 1;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Series prod = Series::constant(space, Rational(sign));
    for (size_t i = 0; i < k; ++i) prod = prod * m[i][perm[i]];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Theta evaluations at scaled arguments, cached per scale.
class ScaledThetaCache {
public:
  ScaledThetaCache(const Theta& theta, SpacePtr space, size_t zvar)
      : theta_(theta), space_(std::move(space)), zvar_(zvar) {}

  const Series& value(int deriv, const Rational& scale) {
    const auto key = std::make_pair(deriv, scale.str());
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, theta_.at(deriv, {{zvar_, scale}}, space_)).first;
    return it->second;
  }

  const Series& inverse(const Rational& scale) {
    auto it = inv_cache_.find(scale.str());
    if (it == inv_cache_.end())
      it = inv_cache_.emplace(scale.str(), value(0, scale).inverse()).first;
    return it->second;
  }

private:
  const Theta& theta_;
  SpacePtr space_;
  size_t zvar_;
  std::map<std::pair<int, std::string>, Series> cache_;
  std::map<std::string, Series> inv_cache_;
};

Series bo_sigma_sum_impl(ScaledThetaCache& cache, const std::vector<Rational>& scales,
                         const SpacePtr& node_space) {
  const size_t k = scales.size();
  if (k == 0) return Series::constant(node_space, Rational(1));
  std::vector<size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Series acc(node_space);
  do {
    // prefix sums of the permuted scales; prefix[j] = scale of the first j
    std::vector<Rational> prefix(k + 1, Rational(0));
    for (size_t j = 0; j < k; ++j) prefix[j + 1] = prefix[j] + scales[perm[j]];
    std::vector<std::vector<Series>> m(k, std::vector<Series>(k, Series(node_space)));
    for (size_t i = 1; i <= k; ++i) {
      for (size_t j = 1; j <= k; ++j) {
        const int deriv = static_cast<int>(j) - static_cast<int>(i) + 1;
        if (deriv < 0) continue;
        m[i - 1][j - 1] =
            cache.value(deriv, prefix[k - j]).scaled(Rational::factorial(deriv).inverse());
      }
    }
    Series term = series_det(m, node_space);
    for (size_t j = 1; j <= k; ++j) term = term * cache.inverse(prefix[j]);
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace

Series bo_sigma_sum_specialized(const Theta& theta, const std::vector<Rational>& scales,
                                const SpacePtr& node_space, size_t zvar) {
  ScaledThetaCache cache(theta, node_space, zvar);
  return bo_sigma_sum_impl(cache, scales, node_space);
}

namespace {

// Exact interpolation: coefficients (exponents lo..lo+W-1) of the Laurent
// polynomial through (nodes[i], values[i]); nodes distinct and nonzero.
std::vector<Rational> interpolate_laurent(const std::vector<Rational>& nodes,
                                          const std::vector<Rational>& values, int lo) {
  const size_t w = nodes.size();
  std::vector<Rational> dd(w);
  for (size_t i = 0; i < w; ++i) dd[i] = values[i] * nodes[i].pow(-lo);
  // Newton divided differences
  for (size_t level = 1; level < w; ++level)
    for (size_t i = w - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
  // Horner expansion of the Newton form:
  // p = dd[w-1]; for i = w-2..0: p = p*(x - nodes[i]) + dd[i]
  std::vector<Rational> coef(w, Rational(0));
  coef[0] = dd[w - 1];
  size_t deg = 0;
  for (size_t i = w - 1; i-- > 0;) {
    for (size_t j = deg + 1; j > 0; --j) coef[j] = coef[j - 1] - nodes[i] * coef[j];
    coef[0] = dd[i] - nodes[i] * coef[0];
    ++deg;
  }
  return coef;
}

}  // namespace

namespace {

struct GridReconstruction {
  // node_value(c) = the specialized series in (z, q); c has one scale per z
  // variable with the last fixed scale supplied by this driver.
  std::function<Series(const std::vector<Rational>&)> node_value;
  SpacePtr target;
  std::vector<size_t> z_vars;
  size_t qvar = 0;
  int lo = 0;          // per-variable exponent floor of the reconstructed box
  int node_floor = 0;  // slices below this total degree must vanish per node

  Series run() const;
};

Series GridReconstruction::run() const {
  const size_t n = z_vars.size();
  const size_t dims = n - 1;  // last variable rides at scale 1
  int dmax = 0;
  for (size_t v : z_vars) dmax += target->var(v).max_degree;
  const int width = dmax - static_cast<int>(n) * lo + 1;
  const int q_order = target->var(qvar).max_degree;

  std::vector<Rational> axis(width);
  for (int i = 0; i < width; ++i) axis[i] = Rational(i + 1);

  // evaluate every grid node
  size_t grid_size = 1;
  for (size_t d = 0; d < dims; ++d) grid_size *= width;
  std::vector<Series> values;
  values.reserve(grid_size);
  for (size_t g = 0; g < grid_size; ++g) {
    std::vector<Rational> c(n, Rational(1));
    size_t rest = g;
    for (size_t d = 0; d < dims; ++d) {
      c[d] = axis[rest % width];
      rest /= width;
    }
    values.push_back(node_value(c));
  }

  // slices below the claimed node floor must vanish identically
  for (size_t g = 0; g < grid_size; ++g) {
    for (const auto& [e, c] : values[g].terms()) {
      if (e[0] < node_floor)
        throw domain_error("grid reconstruction: node value has total degree " +
                           std::to_string(e[0]) + " below the floor " +
                           std::to_string(node_floor));
    }
  }

  Series result(target);
  for (int e = 0; e <= q_order; ++e) {
    for (int d = node_floor; d <= dmax; ++d) {
      // slice the grid values
      std::vector<Rational> data(grid_size);
      bool any = false;
      for (size_t g = 0; g < grid_size; ++g) {
        data[g] = values[g].coefficient({d, e});
        any = any || !data[g].is_zero();
      }
      if (!any) continue;
      // tensor interpolation dimension by dimension
      size_t stride = 1;
      for (size_t dim = 0; dim < dims; ++dim) {
        std::vector<Rational> line(width), fitted;
        for (size_t block = 0; block < grid_size / (stride * width); ++block) {
          for (size_t off = 0; off < stride; ++off) {
            const size_t base = block * stride * width + off;
            for (int i = 0; i < width; ++i) line[i] = data[base + i * stride];
            fitted = interpolate_laurent(axis, line, lo);
            for (int i = 0; i < width; ++i) data[base + i * stride] = fitted[i];
          }
        }
        stride *= width;
      }
      // distribute the fitted coefficients into the target box
      for (size_t g = 0; g < grid_size; ++g) {
        if (data[g].is_zero()) continue;
        ExpVec exp(target->arity(), 0);
        exp[qvar] = e;
        long total = 0;
        size_t rest = g;
        for (size_t dim = 0; dim < dims; ++dim) {
          const int a = lo + static_cast<int>(rest % width);
          rest /= width;
          exp[z_vars[dim]] = a;
          total += a;
        }
        const long last = d - total;
        exp[z_vars[dims]] = static_cast<int32_t>(last);
        if (!target->in_window(exp)) continue;
        result += Series::monomial(target, exp, data[g]);
      }
    }
  }
  return result;
}

SpacePtr node_space_for(int dmax, int margin, int pole, int q_order) {
  return make_space({VarSpec{"z", pole, dmax + margin}, VarSpec{"q", 0, q_order}});
}

}  // namespace

Series bloch_okounkov_rhs(const std::vector<size_t>& z_vars, size_t qvar,
                          const SpacePtr& space) {
  const size_t n = z_vars.size();
  if (n == 0)
    return q_pochhammer(space, qvar, Rational(0), std::nullopt).inverse();
  for (size_t v : z_vars)
    if (space->var(v).max_pole < 1)
      throw window_error("bloch_okounkov_rhs: variable " + space->var(v).name +
                         " needs max_pole >= 1");
  const int q_order = space->var(qvar).max_degree;

  if (n == 1) {
    const size_t zv = z_vars[0];
    std::vector<VarSpec> vars = space->vars();
    vars[zv].max_degree += 4;
    SpacePtr work = make_space(std::move(vars), space->caps());
    Theta theta(work->var(zv).max_degree, q_order);
    const Series th = theta.at(0, {{zv, Rational(1)}}, work);
    const Series thp0 = theta.at(1, {}, work);
    const Series qq_inv = q_pochhammer(work, qvar, Rational(0), std::nullopt).inverse();
    return (qq_inv * thp0 * th.inverse()).restricted_to(space);
  }

  int dmax = 0;
  for (size_t v : z_vars) dmax += space->var(v).max_degree;
  const int margin = 7 * static_cast<int>(n) + 2;
  SpacePtr node = node_space_for(dmax, margin, static_cast<int>(n) + 1, q_order);
  auto theta = std::make_shared<Theta>(node->var(0).max_degree, q_order);
  const Series qq_inv = q_pochhammer(node, 1, Rational(0), std::nullopt).inverse();

  GridReconstruction rec;
  rec.node_value = [node, theta, qq_inv](const std::vector<Rational>& c) {
    return qq_inv * bo_sigma_sum_specialized(*theta, c, node, 0);
  };
  rec.target = space;
  rec.z_vars = z_vars;
  rec.qvar = qvar;
  rec.lo = -1;
  rec.node_floor = -static_cast<int>(n);
  return rec.run();
}

Series trace_theorem_rhs(const std::vector<size_t>& z_vars, size_t qvar,
                         const SpacePtr& space) {
  const size_t n = z_vars.size();
  if (n == 0)
    return q_pochhammer(space, qvar, Rational(0), std::nullopt).inverse();
  const int q_order = space->var(qvar).max_degree;

  if (n == 1) {
    const size_t zv = z_vars[0];
    std::vector<VarSpec> vars = space->vars();
    vars[zv].max_pole += 3;
    vars[zv].max_degree += 6;
    SpacePtr work = make_space(std::move(vars), space->caps());
    Theta theta(work->var(zv).max_degree, q_order);
    const Series th_inv = theta.at(0, {{zv, Rational(1)}}, work).inverse();
    const Series vs_inv = varsigma_inverse(work, zv);
    const Series qq_inv = q_pochhammer(work, qvar, Rational(0), std::nullopt).inverse();
    Series out = (qq_inv * vs_inv * (th_inv - vs_inv)).restricted_to(space);
    if (out.has_pole_in(zv))
      throw domain_error("trace_theorem_rhs: pole failed to cancel");
    return out;
  }

  int dmax = 0;
  for (size_t v : z_vars) dmax += space->var(v).max_degree;
  const int margin = 9 * static_cast<int>(n) + 2;
  SpacePtr node = node_space_for(dmax, margin, 3 * static_cast<int>(n) + 1, q_order);
  auto theta = std::make_shared<Theta>(node->var(0).max_degree, q_order);
  const Series qq_inv = q_pochhammer(node, 1, Rational(0), std::nullopt).inverse();

  GridReconstruction rec;
  rec.node_value = [node, theta, qq_inv, n](const std::vector<Rational>& c) {
    ScaledThetaCache cache(*theta, node, 0);
    std::map<std::string, Series> vs_inv;
    for (const auto& s : c) {
      if (!vs_inv.count(s.str())) {
        SpacePtr work = make_space({VarSpec{"z", node->var(0).max_pole,
                                            node->var(0).max_degree + 2},
                                    node->var(1)});
        vs_inv.emplace(s.str(), varsigma(work, 0, s).inverse().restricted_to(node));
      }
    }
    Series acc(node);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Rational> sub;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(c[i]);
      Series term = bo_sigma_sum_impl(cache, sub, node);
      if ((n - sub.size()) % 2 == 1) term = -term;
      for (size_t i = 0; i < n; ++i)
        if (!(mask & (1u << i))) term = term * vs_inv.at(c[i].str());
      acc += term;
    }
    for (size_t i = 0; i < n; ++i) acc = acc * vs_inv.at(c[i].str());
    return qq_inv * acc;
  };
  rec.target = space;
  rec.z_vars = z_vars;
  rec.qvar = qvar;
  rec.lo = 0;
  rec.node_floor = -3 * static_cast<int>(n);
  Series out = rec.run();
  for (size_t v : z_vars)
    if (out.has_pole_in(v))
      throw domain_error("trace_theorem_rhs: reconstructed series has a pole");
  return out;
}

}  // namespace hilbop
