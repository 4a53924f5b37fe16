#pragma once

#include <string>
#include <vector>

#include "hilbop/series.hpp"

namespace hilbop {

// Twist constants: (e^{mz}-1)/varsigma(z)^2 = m z^{-1} + sum_k c_k^{(m)} z^k/k!.
// Returns c_0..c_{k_max}; the z^{-1} coefficient is asserted to equal m.
std::vector<Rational> c_constants(long m, int k_max);

struct TauRequest {
  long m = 0;           // charge
  int K = 1;            // variable index bound: t_1..t_K, s_1..s_K, x_0..x_K
  int total_degree = 2; // total-degree truncation D
  int n_max = 2;        // Fock degree cutoff (>= total_degree per the window contract)
};

// Space of a tau series: variables t1..tK, s1..sK, x0..xK, capped by total
// degree D and by t- and s-weight n_max (weight k on t_k and s_k): the
// t_lambda s_mu coefficient draws on Fock degree |lambda| <= n_max only.
SpacePtr tau_space(int K, int total_degree, int n_max);

// tau(x, t, s, m) = sum_{|lambda|=|mu|} t_lambda s_mu
//   <p_{-lambda}, exp(sum_{k<=K} x_k twisted_G_k) p_{-mu}>
// with the twisted operators acting by eigenvalue on the fixed-point basis.
Series tau(const TauRequest& req);

struct TodaReport {
  Series residual;  // cross-multiplied: tau(m)^2 d2/dt1ds1 ln tau(m) - tau(m+1) tau(m-1)
  int max_total_degree_checked = 0;
  bool pass = false;
  std::string detail;  // first offending coefficient when failing
};

// Checks the lowest 2-Toda equation at the request's window; the taus are
// computed on internally inflated windows so every reported coefficient is
// certified (derivatives do not commute with truncation at the boundary).
TodaReport toda_residual(const TauRequest& req);

// Reduced tau(u, x1) = sum_n w^n <(1/n!) p_{-1}^n, exp(x1 G_1) (1/n!) p_{-1}^n>
// with w = e^u a formal group-like variable.
Series reduced_tau(int w_order, int x1_order);

// Residual of the reduced Toda equation, cross-multiplied:
//   ((w d/dw)^2 ln tau) tau^2 - w tau(u+x1) tau(u-x1),
// where the shifts u +- x1 act as w -> w e^{+-x1}.  Identically zero within
// the window when the equation holds.
Series reduced_toda_residual(int w_order, int x1_order);

}  // namespace hilbop
