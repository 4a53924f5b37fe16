#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbop/rational.hpp"

namespace hilbop {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is the unique partition of 0.  Value type with canonical storage.
class Partition {
public:
  Partition() = default;
  // Sorts the parts; throws domain_error on nonpositive entries.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }        // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }  // ell(lambda)
  bool empty() const { return parts_.empty(); }
  int part(size_t i) const { return parts_[i]; }  // 0-based
  int multiplicity(int r) const;

  Partition transposed() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Reverse-lexicographic: (4) < (3,1) < (2,2) < ... via lex on padded parts,
  // descending; gives the canonical enumeration and map ordering.
  friend bool operator<(const Partition& a, const Partition& b);

  std::string str() const;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in reverse-lexicographic order, deterministic.
std::vector<Partition> partitions_of(int n);

// Centralizer order z_lambda = prod r^{m_r} m_r!.
Rational z_factor(const Partition& lambda);

// Product of hook numbers of the Young diagram.
Rational hook_product(const Partition& lambda);

// Multiset of contents {j - i} over boxes (i, j), row by row.
std::vector<int> contents(const Partition& lambda);

// Parts of lambda and mu merged.
Partition combine(const Partition& lambda, const Partition& mu);
// Multiplicity-wise inclusion.
bool contains(const Partition& outer, const Partition& inner);
// outer - inner multiplicity-wise; requires contains(outer, inner).
Partition subtract(const Partition& outer, const Partition& inner);
// Parts indexed by U (1-based positions into lambda); equal parts are
// distinct by position.
Partition subpartition(const Partition& lambda, const std::set<int>& U);
// Complementary positions.
Partition subpartition_complement(const Partition& lambda, const std::set<int>& U);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace hilbop
