#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hilbop/rational.hpp"

namespace hilbop {

// One formal variable with its truncation window: exponents are kept in
// [-max_pole, max_degree].
struct VarSpec {
  std::string name;
  int max_pole = 0;
  int max_degree = 0;

  friend bool operator==(const VarSpec& a, const VarSpec& b) {
    return a.name == b.name && a.max_pole == b.max_pole && a.max_degree == b.max_degree;
  }
};

// Optional extra truncation rule: terms with sum_i weights[i]*exp[i] > cap are
// discarded.  Weights of all ones gives a plain total-degree cap; partition
// generating functions use weighted caps (weight k on t_k) to bound the Fock
// degree a coefficient draws on.
struct GradingCap {
  std::vector<int> weights;
  long cap = 0;

  friend bool operator==(const GradingCap& a, const GradingCap& b) {
    return a.weights == b.weights && a.cap == b.cap;
  }
};

using ExpVec = std::vector<int32_t>;

// Immutable description of a truncated Laurent-series ring: the ordered
// variable list with windows, plus optional grading caps.  Series over the
// same space (by content) are compatible for arithmetic.
class SeriesSpace {
public:
  explicit SeriesSpace(std::vector<VarSpec> vars, std::vector<GradingCap> caps = {});

  size_t arity() const { return vars_.size(); }
  const VarSpec& var(size_t i) const { return vars_[i]; }
  const std::vector<VarSpec>& vars() const { return vars_; }
  const std::vector<GradingCap>& caps() const { return caps_; }

  size_t index_of(const std::string& name) const;  // throws structural_error
  std::optional<size_t> find(const std::string& name) const;

  bool in_window(const ExpVec& e) const;
  // Upper bound on the total degree span reachable inside the window; used to
  // bound fixed-point iterations for exp/log/inverse.
  long iteration_bound() const;

  friend bool operator==(const SeriesSpace& a, const SeriesSpace& b) {
    return a.vars_ == b.vars_ && a.caps_ == b.caps_;
  }

private:
  std::vector<VarSpec> vars_;
  std::vector<GradingCap> caps_;
};

using SpacePtr = std::shared_ptr<const SeriesSpace>;

SpacePtr make_space(std::vector<VarSpec> vars, std::vector<GradingCap> caps = {});

// Sparse truncated multivariate Laurent series with exact rational
// coefficients.  Canonical form: no zero coefficients stored, terms ordered
// lexicographically by exponent vector.  Values are immutable in spirit: all
// operations return new series.
class Series {
public:
  explicit Series(SpacePtr space);  // zero series
  static Series constant(SpacePtr space, const Rational& c);
  static Series monomial(SpacePtr space, const ExpVec& e, const Rational& c);
  static Series variable(SpacePtr space, size_t var_index);

  const SpacePtr& space() const { return space_; }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  Rational coefficient(const ExpVec& e) const;
  Rational constant_term() const;
  bool has_pole() const;              // any negative exponent anywhere
  bool has_pole_in(size_t var) const; // negative exponent in one variable

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series scaled(const Rational& c) const;
  Series pow(unsigned k) const;

  // Multiplicative inverse.  Requires a unique lowest total-degree term; the
  // inverse's pole must fit the window.
  Series inverse() const;
  // exp(a) for a with no poles and zero constant term.
  Series exp() const;
  // log(a) for a with no poles and constant term 1.
  Series log() const;

  Series derivative(size_t var) const;

  // Coefficient of var^k as a series over the space with that variable
  // removed.
  Series slice(size_t var, int k) const;
  // Injects into a space containing at least the same variables (matched by
  // name) with windows holding every present term; new variables enter with
  // exponent zero.  Lossless: throws window_error if a term does not fit.
  Series extended_to(const SpacePtr& target) const;
  // Drops terms outside the target window.  Explicitly lossy.
  Series restricted_to(const SpacePtr& target) const;
  // Substitutes var -> c * target_var (a monomial; negative exponents fine).
  // var and target must both exist in the target space; var keeps exponent 0.
  Series substituted_monomial(size_t var, const Rational& c, size_t target_var,
                              const SpacePtr& target) const;
  // Substitutes var -> sum_j form[j].second * target_var(form[j].first) for a
  // series with no poles in var.
  Series substituted_linear(size_t var,
                            const std::vector<std::pair<size_t, Rational>>& form,
                            const SpacePtr& target) const;

  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  std::string str() const;

private:
  void insert_clipped(const ExpVec& e, const Rational& c);
  void prune();

  SpacePtr space_;
  std::map<ExpVec, Rational> terms_;
};

// sum_{k<=order} (c x_var)^k / k!, truncated to the window as well.
Series exp_linear(const SpacePtr& space, const Rational& c, size_t var, int order);

// Convenience spaces.
SpacePtr univariate_space(const std::string& name, int max_pole, int max_degree);

}  // namespace hilbop
