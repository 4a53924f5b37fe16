#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "hilbop/partition.hpp"

namespace hilbop {

// Cache of symmetric-group character values chi^lambda(mu), computed by the
// Murnaghan-Nakayama border-strip recursion on beta-sets and memoized by
// (lambda, mu).  Build happens on first use; reads afterwards are safe to
// share.
class CharTable {
public:
  // Requires |lambda| = |mu|.
  long long character(const Partition& lambda, const Partition& mu);

  // chi^lambda((1^n)) = n!/h(lambda).
  long long dimension(const Partition& lambda);

private:
  long long mn(const Partition& lambda, const std::vector<int>& mu_rest, size_t mu_pos);

  std::map<std::pair<Partition, std::vector<int>>, long long> memo_;
};

// Process-wide table used by basis conversions.
CharTable& global_char_table();

}  // namespace hilbop
