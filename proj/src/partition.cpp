#include "hilbop/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hilbop/errors.hpp"

namespace hilbop {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw domain_error("partition: parts must be positive");
  std::sort(parts_.rbegin(), parts_.rend());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int r) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
}

Partition Partition::transposed() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    t.resize(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) t[j] += 1;
  }
  return Partition(std::move(t));
}

bool operator<(const Partition& a, const Partition& b) {
  // Reverse-lexicographic: larger first part comes earlier.
  const size_t n = std::max(a.parts_.size(), b.parts_.size());
  for (size_t i = 0; i < n; ++i) {
    const int x = i < a.parts_.size() ? a.parts_[i] : 0;
    const int y = i < b.parts_.size() ? b.parts_[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << "]";
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw domain_error("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;  // descending first parts = reverse-lexicographic
}

Rational z_factor(const Partition& lambda) {
  Rational z(1);
  std::map<int, int> mult;
  for (int p : lambda.parts()) mult[p] += 1;
  for (const auto& [r, m] : mult) {
    z *= Rational(r).pow(m);
    z *= Rational::factorial(m);
  }
  return z;
}

Rational hook_product(const Partition& lambda) {
  const auto& parts = lambda.parts();
  const Partition t = lambda.transposed();
  Rational h(1);
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      // arm + leg + 1
      const int arm = parts[i] - j - 1;
      const int leg = t.parts()[j] - static_cast<int>(i) - 1;
      h *= Rational(arm + leg + 1);
    }
  }
  return h;
}

std::vector<int> contents(const Partition& lambda) {
  std::vector<int> cs;
  const auto& parts = lambda.parts();
  for (size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) cs.push_back(j - static_cast<int>(i));
  return cs;
}

Partition combine(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts = lambda.parts();
  parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
  return Partition(std::move(parts));
}

bool contains(const Partition& outer, const Partition& inner) {
  std::map<int, int> mult;
  for (int p : outer.parts()) mult[p] += 1;
  for (int p : inner.parts())
    if (--mult[p] < 0) return false;
  return true;
}

Partition subtract(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner))
    throw domain_error("partition subtract: " + inner.str() + " not contained in " + outer.str());
  std::map<int, int> mult;
  for (int p : outer.parts()) mult[p] += 1;
  for (int p : inner.parts()) mult[p] -= 1;
  std::vector<int> parts;
  for (const auto& [r, m] : mult)
    for (int k = 0; k < m; ++k) parts.push_back(r);
  return Partition(std::move(parts));
}

Partition subpartition(const Partition& lambda, const std::set<int>& U) {
  std::vector<int> parts;
  for (int i : U) {
    if (i < 1 || i > lambda.length())
      throw domain_error("subpartition: index out of range in " + lambda.str());
    parts.push_back(lambda.part(i - 1));
  }
  return Partition(std::move(parts));
}

Partition subpartition_complement(const Partition& lambda, const std::set<int>& U) {
  std::vector<int> parts;
  for (int i = 1; i <= lambda.length(); ++i)
    if (!U.count(i)) parts.push_back(lambda.part(i - 1));
  for (int i : U)
    if (i < 1 || i > lambda.length())
      throw domain_error("subpartition: index out of range in " + lambda.str());
  return Partition(std::move(parts));
}

nlohmann::json partition_to_json(const Partition& p) {
  nlohmann::json j = nlohmann::json::array();
  for (int x : p.parts()) j.push_back(x);
  return j;
}

Partition partition_from_json(const nlohmann::json& j) {
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& ex) {
    throw structural_error(std::string("partition json: ") + ex.what());
  }
}

}  // namespace hilbop
