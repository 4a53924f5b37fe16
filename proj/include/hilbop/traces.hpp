#pragma once

#include <optional>
#include <vector>

#include "hilbop/partition.hpp"
#include "hilbop/series.hpp"

namespace hilbop {

// (q e^{cz}; q)_inf = prod_{j>=1} (1 - q^j e^{cz}) truncated to the q window.
// With c = 0 (or no z variable) this is (q; q)_inf.
Series q_pochhammer(const SpacePtr& space, size_t qvar, const Rational& c,
                    std::optional<size_t> zvar);

// Normalized genus-1 theta kernel
//   Theta(w; q) = varsigma(w) (q e^w; q)_inf (q e^{-w}; q)_inf / (q; q)_inf^2,
// an honest power series in (w, q): the fractional q-powers of the classical
// normalization cancel in this form.  Derivatives in w up to order 4 are kept
// so determinant entries can be formed; arguments are substituted as linear
// forms sum_j c_j z_j (the empty form means w = 0).  Target spaces must carry
// their q variable under the name "q".
class Theta {
public:
  Theta(int z_degree, int q_degree);

  int q_degree() const { return q_degree_; }

  Series at(int deriv, const std::vector<std::pair<size_t, Rational>>& z_form,
            const SpacePtr& target) const;

  static constexpr int kMaxDeriv = 4;

private:
  int q_degree_;
  std::vector<Series> base_;  // base_[k] = d^k/dw^k Theta on the internal (w, q) space
};

// sum_m (-1)^m q^{m(m+1)/2} e^{(m+1/2) z}: the theta sum with the q^{1/8}
// prefactor stripped; equals (q;q)_inf varsigma(z) (qe^z;q)_inf (qe^{-z};q)_inf
// by the Jacobi triple product.
Series jacobi_sum_form(const SpacePtr& space, size_t zvar, size_t qvar);

enum class TraceFactorKind { epsilon0, chern };

// Direct q-trace of a product of diagonal operators:
//   Tr_q prod_j D_j = sum_lambda q^{|lambda|} prod_j eig_j(lambda),
// summed through Fock degree n_max.  n_max must cover the q window.
Series q_trace(const std::vector<TraceFactorKind>& factors, const std::vector<size_t>& z_vars,
               size_t qvar, int n_max, const SpacePtr& space);

// Right-hand side of the Bloch-Okounkov determinant formula for
// Tr_q(eps_0(z_1)...eps_0(z_N)).  N = 1 is evaluated symbolically; N >= 2 is
// evaluated on rational specializations z_i = c_i z and reconstructed exactly
// by tensor interpolation (the result is the unique series with per-variable
// pole <= 1 matching every specialization).
Series bloch_okounkov_rhs(const std::vector<size_t>& z_vars, size_t qvar, const SpacePtr& space);

// Right-hand side of the inclusion-exclusion trace formula for
// Tr_q(G_{z_1}...G_{z_N}); pole-free.  Same evaluation strategy.
Series trace_theorem_rhs(const std::vector<size_t>& z_vars, size_t qvar, const SpacePtr& space);

// sum over sigma in S_k of det M_{U,sigma}/Theta_{U,sigma} with the variables
// of U specialized to scales[i] * z: the sigma-sum building block of both
// formulas above, exposed for the denominator-cleared verification.
Series bo_sigma_sum_specialized(const Theta& theta, const std::vector<Rational>& scales,
                                const SpacePtr& node_space, size_t zvar);

}  // namespace hilbop
