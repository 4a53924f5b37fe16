#pragma once

#include <vector>

#include "hilbop/partition.hpp"
#include "hilbop/series.hpp"

namespace hilbop {

enum class FMethod { diagonal, commutator };
enum class GMethod { diagonal, inclusion_exclusion };

// Disconnected N-point series F(z_1,...,z_N) =
// <p_{-lambda}, eps_0(z_1)...eps_0(z_N) p_{-mu}>.  Needs max_pole >= 1 on each
// z variable; the result has pole order <= 1 in each.  The diagonal route is
// the default; the commutator route is an independent oracle.
Series f_bullet(const Partition& lambda, const Partition& mu,
                const std::vector<size_t>& z_vars, const SpacePtr& space,
                FMethod method = FMethod::diagonal);

// Closed form for the 1-point F: sum over position subsets U of {1..l(lambda)}
// with lambda contained in lambda_U + mu of
//   vs(lambda_U, z) vs(lambda_U + mu - lambda, z) / (z_l z_{lambda_U+mu-lambda} vs(z)).
Series one_point_closed_form(const Partition& lambda, const Partition& mu,
                             const SpacePtr& space, size_t var);

// N-point function G(z_1,...,z_N) = <p_{-lambda}, H(z_1)...H(z_N) p_{-mu}>;
// pole-free.  The inclusion-exclusion route goes through F of variable
// subsets and needs max_pole >= 2 per variable on the way.
Series g_npoint(const Partition& lambda, const Partition& mu,
                const std::vector<size_t>& z_vars, const SpacePtr& space,
                GMethod method = GMethod::diagonal);

// Closed form for the 1-point G:
//   (1/(z_lambda vs^2)) (sum_U vs(lambda_U,z) vs(lambda_U+mu-lambda,z)
//                        / z_{lambda_U+mu-lambda} - delta_{lambda,mu}).
Series g_one_point_theorem(const Partition& lambda, const Partition& mu,
                           const SpacePtr& space, size_t var);

}  // namespace hilbop
