#include "hilbop/characters.hpp"

#include <algorithm>

#include "hilbop/errors.hpp"

namespace hilbop {

namespace {

// Beta-set of lambda with exactly slots entries: beta_i = lambda_i + slots - 1 - i,
// strictly decreasing.
std::vector<int> beta_set(const Partition& lambda, int slots) {
  std::vector<int> beta(slots);
  for (int i = 0; i < slots; ++i) {
    const int part = i < lambda.length() ? lambda.part(i) : 0;
    beta[i] = part + slots - 1 - i;
  }
  return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> parts;
  const int slots = static_cast<int>(beta.size());
  for (int i = 0; i < slots; ++i) {
    const int part = beta[i] - (slots - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

}  // namespace

long long CharTable::character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw domain_error("character: |lambda| != |mu| for " + lambda.str() + ", " + mu.str());
  return mn(lambda, mu.parts(), 0);
}

long long CharTable::dimension(const Partition& lambda) {
  std::vector<int> ones(lambda.size(), 1);
  return character(lambda, Partition(ones));
}

long long CharTable::mn(const Partition& lambda, const std::vector<int>& mu_rest, size_t mu_pos) {
  if (mu_pos == mu_rest.size()) return lambda.empty() ? 1 : 0;

  std::vector<int> key_mu(mu_rest.begin() + static_cast<long>(mu_pos), mu_rest.end());
  const auto key = std::make_pair(lambda, key_mu);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Remove a border strip of length t: pick beta with beta - t >= 0 not in the
  // set; the sign is (-1)^{#betas strictly between beta-t and beta}.
  const int t = mu_rest[mu_pos];
  const int slots = lambda.length();
  const std::vector<int> beta = beta_set(lambda, slots);
  long long total = 0;
  for (int i = 0; i < slots; ++i) {
    const int target = beta[i] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossings = 0;
    for (int j = 0; j < slots; ++j)
      if (beta[j] > target && beta[j] < beta[i]) ++crossings;
    std::vector<int> nb = beta;
    nb[i] = target;
    const long long sub = mn(partition_from_beta(std::move(nb)), mu_rest, mu_pos + 1);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  memo_.emplace(key, total);
  return total;
}

CharTable& global_char_table() {
  static CharTable table;
  return table;
}

}  // namespace hilbop
