#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "hilbop/characters.hpp"
#include "hilbop/errors.hpp"
#include "hilbop/partition.hpp"
#include "hilbop/series.hpp"

namespace hilbop {

enum class Basis { power_sum, fixed_point };

inline bool coef_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coef_is_zero(const Series& c) { return c.is_zero(); }
inline Rational coef_scale(const Rational& c, const Rational& r) { return c * r; }
inline Series coef_scale(const Series& c, const Rational& r) { return c.scaled(r); }

// Element of the Fock space: finite linear combination of partition-indexed
// basis vectors.  The basis tag says whether terms mean the normalized
// power-sum vectors p_{-lambda} or the fixed-point vectors [lambda].
// Coefficients are exact rationals or truncated series; all series
// coefficients of one vector share a space.
template <class Coef>
class FockVector {
public:
  FockVector() = default;
  explicit FockVector(Basis basis) : basis_(basis) {}

  static FockVector vacuum(Basis basis, const Coef& one) {
    FockVector v(basis);
    v.add_term(Partition(), one);
    return v;
  }
  static FockVector basis_vector(Basis basis, const Partition& p, const Coef& one) {
    FockVector v(basis);
    v.add_term(p, one);
    return v;
  }

  Basis basis() const { return basis_; }
  const std::map<Partition, Coef>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coef coefficient(const Partition& p, const Coef& zero) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? zero : it->second;
  }

  void add_term(const Partition& p, const Coef& c) {
    if (coef_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (coef_is_zero(it->second)) terms_.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o) {
    check_basis(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  FockVector& operator-=(const FockVector& o) {
    check_basis(o);
    for (const auto& [p, c] : o.terms_) add_term(p, coef_scale(c, Rational(-1)));
    return *this;
  }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

  FockVector scaled(const Rational& r) const {
    FockVector v(basis_);
    if (r.is_zero()) return v;
    for (const auto& [p, c] : terms_) v.terms_.emplace(p, coef_scale(c, r));
    return v;
  }

  // Keeps only terms of Fock degree <= cap.
  FockVector degree_capped(int cap) const {
    FockVector v(basis_);
    for (const auto& [p, c] : terms_)
      if (p.size() <= cap) v.terms_.emplace(p, c);
    return v;
  }

  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

private:
  void check_basis(const FockVector& o) const {
    if (basis_ != o.basis_) throw structural_error("fock: mixed bases in vector arithmetic");
  }

  Basis basis_ = Basis::power_sum;
  std::map<Partition, Coef> terms_;
};

// Heisenberg action on the normalized power-sum basis.  k < 0 creates a part
// |k|: p_{-|k|} p_{-lambda} = (z_{lambda+(|k|)}/z_lambda) p_{-(lambda+(|k|))}.
// k > 0 annihilates a part k (the normalized scalar is 1, fixed by the
// commutation relation [p_k, p_{-k}] = k).  k = 0 acts as zero.
template <class Coef>
FockVector<Coef> apply_p(int k, const FockVector<Coef>& v) {
  if (v.basis() != Basis::power_sum)
    throw structural_error("apply_p: vector must be in the power-sum basis");
  FockVector<Coef> out(Basis::power_sum);
  if (k == 0) return out;
  for (const auto& [lambda, c] : v.terms()) {
    if (k < 0) {
      const Partition grown = combine(lambda, Partition({-k}));
      out.add_term(grown, coef_scale(c, z_factor(grown) / z_factor(lambda)));
    } else {
      if (lambda.multiplicity(k) == 0) continue;
      out.add_term(subtract(lambda, Partition({k})), c);
    }
  }
  return out;
}

// Bilinear form: <p_{-lambda}, p_{-mu}> = delta/z_lambda on the power-sum
// basis, <[lambda],[mu]> = delta on the fixed-point basis.  Mixed bases are a
// structural error; convert first.
template <class Coef>
Coef inner_product(const FockVector<Coef>& v, const FockVector<Coef>& w, const Coef& zero) {
  if (v.basis() != w.basis())
    throw structural_error("inner_product: mixed bases; convert first");
  Coef acc = zero;
  const auto& a = v.terms();
  const auto& b = w.terms();
  for (const auto& [p, cv] : a) {
    auto it = b.find(p);
    if (it == b.end()) continue;
    Coef prod = cv;
    prod *= it->second;
    if (v.basis() == Basis::power_sum) prod = coef_scale(prod, z_factor(p).inverse());
    acc += prod;
  }
  return acc;
}

inline Rational inner_product(const FockVector<Rational>& v, const FockVector<Rational>& w) {
  return inner_product(v, w, Rational(0));
}

// Basis change via the character dictionary:
//   p_{-mu}  = sum_lambda chi^lambda(mu)/z_mu [lambda]
//   [lambda] = sum_mu chi^lambda(mu) p_{-mu}
// The round trip is the identity.
template <class Coef>
FockVector<Coef> basis_change(const FockVector<Coef>& v, Basis target) {
  if (v.basis() == target) return v;
  CharTable& chi = global_char_table();
  FockVector<Coef> out(target);
  for (const auto& [p, c] : v.terms()) {
    if (v.basis() == Basis::power_sum) {
      const Rational zinv = z_factor(p).inverse();
      for (const auto& lam : partitions_of(p.size()))
        out.add_term(lam, coef_scale(c, Rational(chi.character(lam, p)) * zinv));
    } else {
      for (const auto& mu : partitions_of(p.size()))
        out.add_term(mu, coef_scale(c, Rational(chi.character(p, mu))));
    }
  }
  return out;
}

// Rational vector -> series-coefficient vector over a given space.
FockVector<Series> promoted(const FockVector<Rational>& v, const SpacePtr& space);

// Half vertex operator Gamma_-(s) = exp(sum_{k>0} s_k p_{-k}/k) applied to v,
// truncated to Fock degrees <= degree_cap.  s_values maps the index k to the
// series coefficient s_k (indices absent from the map are zero).
FockVector<Series> gamma_minus(const std::map<int, Series>& s_values, const FockVector<Series>& v,
                               int degree_cap);
// Adjoint half vertex operator Gamma_+(t): <Gamma_+(t) v, w> = <v, Gamma_-(t) w>.
FockVector<Series> gamma_plus(const std::map<int, Series>& t_values, const FockVector<Series>& v,
                              int degree_cap);

nlohmann::json fock_to_json(const FockVector<Rational>& v);
nlohmann::json fock_to_json(const FockVector<Series>& v);
FockVector<Rational> fock_rational_from_json(const nlohmann::json& j);
FockVector<Series> fock_series_from_json(const nlohmann::json& j);

}  // namespace hilbop
