#pragma once

#include <vector>

#include "hilbop/fock.hpp"
#include "hilbop/partition.hpp"
#include "hilbop/series.hpp"

namespace hilbop {

// varsigma(scale * z) = e^{scale z/2} - e^{-scale z/2} on the named variable,
// built to the full degree window.
Series varsigma(const SpacePtr& space, size_t var, const Rational& scale = Rational(1));

// 1/varsigma(z), exact through the full window; requires max_pole >= 1 on the
// variable.  Internally computed on an inflated window.
Series varsigma_inverse(const SpacePtr& space, size_t var);

// Eigenvalue of the Chern character operator on [lambda]:
// sum over boxes of e^{z c_box}; pole-free, constant term |lambda|.
Series chern_eigenvalue(const Partition& lambda, const SpacePtr& space, size_t var);

// Eigenvalue of epsilon_0(z) on [lambda], in regularized closed form:
// sum_{i<=l} (e^{z(lambda_i-i+1/2)} - e^{z(-i+1/2)}) + 1/varsigma(z).
// Laurent with pole order exactly 1; the z^{-1} coefficient is 1.
Series epsilon0_eigenvalue(const Partition& lambda, const SpacePtr& space, size_t var);

// (1/varsigma)(epsilon0 - 1/varsigma): equals chern_eigenvalue after exact
// pole cancellation.
Series master_eigenvalue(const Partition& lambda, const SpacePtr& space, size_t var);

// (e^{mz}-1)/varsigma(z)^2 = m z^{-1} + sum_k c_k^{(m)} z^k / k!;
// pole order 1, residue m.
Series twist_correction(long m, const SpacePtr& space, size_t var);

// Eigenvalue of the twisted Chern operator on the charge-m sector, with the
// m z^{-1} part stripped: e^{mz} * master_eigenvalue + (twist_correction - m/z).
// Pole-free; reduces to chern_eigenvalue at m = 0.
Series twisted_eigenvalue(const Partition& lambda, long m, const SpacePtr& space, size_t var);

// z^k Taylor coefficients of the twisted eigenvalue, k = 0..k_max.
std::vector<Rational> twisted_eigenvalue_taylor(const Partition& lambda, long m, int k_max);

struct DiagonalOperator {
  enum class Kind { chern, epsilon0, master, chern_twisted };
  Kind kind = Kind::chern;
  size_t var = 0;  // index of the operator's variable in the series space
  long m = 0;      // charge, chern_twisted only
};

Series diagonal_eigenvalue(const DiagonalOperator& op, const Partition& lambda,
                           const SpacePtr& space);

// Applies a product of diagonal operators: converts to the fixed-point basis,
// scales each [lambda] by the eigenvalue product, converts back to the input
// basis.
FockVector<Series> apply_diagonal(const std::vector<DiagonalOperator>& ops,
                                  const FockVector<Series>& v);

// <p_{-lambda}, eps_{r_1}(z_{v_1}) ... eps_{r_N}(z_{v_N}) p_{-mu}> evaluated by
// the commutator recursion ([p_k, eps_r(z)] = varsigma(kz) eps_{k+r}(z) plus
// the vacuum rules), independent of the diagonalization route.  Products of
// several factors are reduced to single-factor values by inserting the
// resolution of identity at the intermediate Fock degrees.
Series epsilon_product_vev(const Partition& lambda, const Partition& mu,
                           const std::vector<int>& r_list, const std::vector<size_t>& z_vars,
                           const SpacePtr& space);

}  // namespace hilbop
