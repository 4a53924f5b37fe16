#include "hilbop/series.hpp"

#include <algorithm>
#include <sstream>

#include "hilbop/errors.hpp"

namespace hilbop {

SeriesSpace::SeriesSpace(std::vector<VarSpec> vars, std::vector<GradingCap> caps)
    : vars_(std::move(vars)), caps_(std::move(caps)) {
  for (const auto& v : vars_) {
    if (v.max_pole < 0 || v.max_degree < 0)
      throw structural_error("series space: negative window for variable " + v.name);
  }
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i].name == vars_[j].name)
        throw structural_error("series space: duplicate variable " + vars_[i].name);
  for (const auto& c : caps_) {
    if (c.weights.size() != vars_.size())
      throw structural_error("series space: grading cap arity mismatch");
  }
}

size_t SeriesSpace::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw structural_error("series space: unknown variable " + name);
}

std::optional<size_t> SeriesSpace::find(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

bool SeriesSpace::in_window(const ExpVec& e) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (e[i] < -vars_[i].max_pole || e[i] > vars_[i].max_degree) return false;
  for (const auto& c : caps_) {
    long w = 0;
    for (size_t i = 0; i < vars_.size(); ++i) w += static_cast<long>(c.weights[i]) * e[i];
    if (w > c.cap) return false;
  }
  return true;
}

long SeriesSpace::iteration_bound() const {
  long span = 0;
  for (const auto& v : vars_) span += v.max_pole + v.max_degree;
  for (const auto& c : caps_) {
    // A pure total-degree cap can cut the bound down sharply.
    bool all_ones = true;
    for (int w : c.weights) all_ones = all_ones && w == 1;
    long poles = 0;
    for (const auto& v : vars_) poles += v.max_pole;
    if (all_ones) span = std::min(span, c.cap + poles + poles);
  }
  return std::max<long>(span, 1);
}

SpacePtr make_space(std::vector<VarSpec> vars, std::vector<GradingCap> caps) {
  return std::make_shared<SeriesSpace>(std::move(vars), std::move(caps));
}

SpacePtr univariate_space(const std::string& name, int max_pole, int max_degree) {
  return make_space({VarSpec{name, max_pole, max_degree}});
}

namespace {

void check_same_space(const Series& a, const Series& b, const char* op) {
  if (a.space() == b.space()) return;
  if (*a.space() == *b.space()) return;
  throw structural_error(std::string("series ") + op + ": mismatched variable lists");
}

long total_degree(const ExpVec& e) {
  long t = 0;
  for (auto x : e) t += x;
  return t;
}

}  // namespace

Series::Series(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw structural_error("series: null space");
}

Series Series::constant(SpacePtr space, const Rational& c) {
  Series s(std::move(space));
  if (!c.is_zero()) {
    ExpVec zero(s.space_->arity(), 0);
    if (s.space_->in_window(zero)) s.terms_.emplace(std::move(zero), c);
  }
  return s;
}

Series Series::monomial(SpacePtr space, const ExpVec& e, const Rational& c) {
  Series s(std::move(space));
  if (e.size() != s.space_->arity()) throw structural_error("series monomial: exponent arity");
  if (!s.space_->in_window(e))
    throw window_error("series monomial: exponent outside window");
  if (!c.is_zero()) s.terms_.emplace(e, c);
  return s;
}

Series Series::variable(SpacePtr space, size_t var_index) {
  if (var_index >= space->arity()) throw structural_error("series variable: index out of range");
  ExpVec e(space->arity(), 0);
  e[var_index] = 1;
  return monomial(std::move(space), e, Rational(1));
}

Rational Series::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const { return coefficient(ExpVec(space_->arity(), 0)); }

bool Series::has_pole() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x < 0) return true;
  return false;
}

bool Series::has_pole_in(size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] < 0) return true;
  return false;
}

Series Series::operator-() const {
  Series r(space_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Series& Series::operator+=(const Series& o) {
  check_same_space(*this, o, "add");
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_same_space(*this, o, "sub");
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

void Series::insert_clipped(const ExpVec& e, const Rational& c) {
  if (c.is_zero() || !space_->in_window(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Series::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

Series operator*(const Series& a, const Series& b) {
  check_same_space(a, b, "mul");
  Series r(a.space_);
  const size_t n = a.space_->arity();
  ExpVec e(n);
  // Product terms falling outside any window or cap are discarded eagerly.
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      if (!r.space_->in_window(e)) continue;
      Rational c = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  r.prune();
  return r;
}

Series Series::scaled(const Rational& c) const {
  Series r(space_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Series Series::pow(unsigned k) const {
  Series r = Series::constant(space_, Rational(1));
  Series base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

Series Series::inverse() const {
  if (terms_.empty()) throw domain_error("series inverse: division by zero series");
  // Locate the unique lowest total-degree term.
  auto lead = terms_.begin();
  long lead_deg = total_degree(lead->first);
  bool unique = true;
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    long d = total_degree(it->first);
    if (d < lead_deg) {
      lead = it;
      lead_deg = d;
      unique = true;
    } else if (d == lead_deg) {
      unique = false;
    }
  }
  if (!unique)
    throw domain_error("series inverse: lowest total-degree term is not unique");

  const ExpVec e0 = lead->first;
  ExpVec neg(e0.size());
  for (size_t i = 0; i < e0.size(); ++i) {
    neg[i] = -e0[i];
    if (neg[i] < -space_->var(i).max_pole)
      throw window_error("series inverse: pole exceeds max_pole of " + space_->var(i).name);
    if (neg[i] > space_->var(i).max_degree)
      throw window_error("series inverse: exponent exceeds max_degree of " + space_->var(i).name);
  }
  const Rational c0inv = lead->second.inverse();

  // The unit part is inverted in a window shifted by e0 so that multiplying by
  // x^{-e0} afterwards still fills the requested window.
  std::vector<VarSpec> wvars = space_->vars();
  for (size_t i = 0; i < wvars.size(); ++i) {
    if (e0[i] > 0)
      wvars[i].max_degree += e0[i];
    else
      wvars[i].max_pole += -e0[i];
  }
  std::vector<GradingCap> wcaps = space_->caps();
  for (auto& c : wcaps) {
    long shift = 0;
    for (size_t i = 0; i < e0.size(); ++i) shift += static_cast<long>(c.weights[i]) * e0[i];
    if (shift > 0) c.cap += shift;
  }
  SpacePtr work = make_space(std::move(wvars), std::move(wcaps));

  // a = c0 x^{e0} (1 + h) with h of positive total degree; invert the unit by
  // the geometric series in Horner form.
  Series h(work);
  for (const auto& [e, c] : terms_) {
    if (e == e0) continue;
    ExpVec shifted(e.size());
    for (size_t i = 0; i < e.size(); ++i) shifted[i] = e[i] - e0[i];
    h.insert_clipped(shifted, c * c0inv);
  }
  const Series one = Series::constant(work, Rational(1));
  Series acc = one;
  const long bound = work->iteration_bound();
  for (long k = 0; k < bound; ++k) {
    Series next = one - h * acc;
    if (next == acc) break;
    acc = std::move(next);
  }
  Series shift = Series::monomial(work, neg, c0inv);
  return (shift * acc).restricted_to(space_);
}

Series Series::exp() const {
  if (has_pole()) throw domain_error("series exp: input has pole terms");
  if (!constant_term().is_zero()) throw domain_error("series exp: nonzero constant term");
  const long bound = space_->iteration_bound();
  // Horner: 1 + a(1 + a/2(1 + a/3(...)))
  Series r = Series::constant(space_, Rational(1));
  for (long k = bound; k >= 1; --k) {
    r = Series::constant(space_, Rational(1)) + (*this * r).scaled(Rational(1, k));
  }
  return r;
}

Series Series::log() const {
  if (has_pole()) throw domain_error("series log: input has pole terms");
  if (!constant_term().is_one()) throw domain_error("series log: constant term is not 1");
  Series b = *this - Series::constant(space_, Rational(1));
  const long bound = space_->iteration_bound();
  // log(1+b) = b(1 - b(1/2 - b(1/3 - ...)))  via S_k = 1/k - b S_{k+1}.
  Series s = Series::constant(space_, Rational(1, std::max<long>(bound, 1)));
  for (long k = bound - 1; k >= 1; --k) {
    s = Series::constant(space_, Rational(1, k)) - b * s;
  }
  return b * s;
}

Series Series::derivative(size_t var) const {
  if (var >= space_->arity()) throw structural_error("series derivative: unknown variable");
  // The degree window shrinks by one; a pole window grows by one if needed.
  std::vector<VarSpec> vars = space_->vars();
  vars[var].max_degree = std::max(vars[var].max_degree - 1, 0);
  if (has_pole_in(var)) vars[var].max_pole += 1;
  std::vector<GradingCap> caps = space_->caps();
  for (auto& c : caps) c.cap -= c.weights[var];
  Series r(make_space(std::move(vars), std::move(caps)));
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec d = e;
    d[var] -= 1;
    r.insert_clipped(d, c * Rational(e[var]));
  }
  return r;
}

Series Series::slice(size_t var, int k) const {
  if (var >= space_->arity()) throw structural_error("series slice: unknown variable");
  std::vector<VarSpec> vars;
  for (size_t i = 0; i < space_->arity(); ++i)
    if (i != var) vars.push_back(space_->var(i));
  std::vector<GradingCap> caps;
  for (const auto& c : space_->caps()) {
    GradingCap nc;
    nc.cap = c.cap - static_cast<long>(c.weights[var]) * k;
    for (size_t i = 0; i < c.weights.size(); ++i)
      if (i != var) nc.weights.push_back(c.weights[i]);
    caps.push_back(std::move(nc));
  }
  Series r(make_space(std::move(vars), std::move(caps)));
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    ExpVec d;
    d.reserve(e.size() - 1);
    for (size_t i = 0; i < e.size(); ++i)
      if (i != var) d.push_back(e[i]);
    r.insert_clipped(d, c);
  }
  return r;
}

Series Series::extended_to(const SpacePtr& target) const {
  std::vector<size_t> where(space_->arity());
  for (size_t i = 0; i < space_->arity(); ++i) where[i] = target->index_of(space_->var(i).name);
  Series r(target);
  for (const auto& [e, c] : terms_) {
    ExpVec d(target->arity(), 0);
    for (size_t i = 0; i < e.size(); ++i) d[where[i]] = e[i];
    if (!target->in_window(d))
      throw window_error("series extend: term does not fit window of target space");
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

Series Series::restricted_to(const SpacePtr& target) const {
  std::vector<size_t> where(space_->arity());
  for (size_t i = 0; i < space_->arity(); ++i) where[i] = target->index_of(space_->var(i).name);
  Series r(target);
  for (const auto& [e, c] : terms_) {
    ExpVec d(target->arity(), 0);
    for (size_t i = 0; i < e.size(); ++i) d[where[i]] = e[i];
    r.insert_clipped(d, c);
  }
  return r;
}

Series Series::substituted_monomial(size_t var, const Rational& c, size_t target_var,
                                    const SpacePtr& target) const {
  if (var >= space_->arity()) throw structural_error("series substitute: unknown variable");
  std::vector<std::optional<size_t>> where(space_->arity());
  for (size_t i = 0; i < space_->arity(); ++i) {
    if (i == var) continue;
    where[i] = target->index_of(space_->var(i).name);
  }
  const size_t tgt = target_var;
  if (tgt >= target->arity()) throw structural_error("series substitute: bad target variable");
  Series r(target);
  for (const auto& [e, cf] : terms_) {
    if (e[var] != 0 && c.is_zero()) {
      if (e[var] < 0) throw domain_error("series substitute: pole at zero scale");
      continue;
    }
    ExpVec d(target->arity(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (where[i]) d[*where[i]] += e[i];
    d[tgt] += e[var];
    r.insert_clipped(d, cf * c.pow(e[var]));
  }
  return r;
}

Series Series::substituted_linear(size_t var,
                                  const std::vector<std::pair<size_t, Rational>>& form,
                                  const SpacePtr& target) const {
  if (var >= space_->arity()) throw structural_error("series substitute: unknown variable");
  if (has_pole_in(var))
    throw domain_error("series substitute: linear form into a pole in " + space_->var(var).name);
  Series lin(target);
  for (const auto& [ti, cf] : form) lin += Series::variable(target, ti).scaled(cf);

  // Group by the exponent of var and use Horner over descending powers.
  int max_k = 0;
  for (const auto& [e, c] : terms_) max_k = std::max(max_k, static_cast<int>(e[var]));
  std::vector<Series> by_power;
  by_power.reserve(max_k + 1);
  for (int k = 0; k <= max_k; ++k) by_power.push_back(slice(var, k).extended_to(target));
  Series r(target);
  for (int k = max_k; k >= 0; --k) r = r * lin + by_power[k];
  return r;
}

bool operator==(const Series& a, const Series& b) {
  if (!(a.space_ == b.space_ || *a.space_ == *b.space_)) return false;
  return a.terms_ == b.terms_;
}

std::string Series::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << space_->var(i).name;
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Series exp_linear(const SpacePtr& space, const Rational& c, size_t var, int order) {
  if (var >= space->arity()) throw structural_error("exp_linear: unknown variable");
  if (order > space->var(var).max_degree)
    throw window_error("exp_linear: order exceeds max_degree of " + space->var(var).name);
  Series r(space);
  Rational coef(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) coef *= c / Rational(k);
    if (coef.is_zero()) break;
    ExpVec e(space->arity(), 0);
    e[var] = k;
    if (space->in_window(e)) r += Series::monomial(space, e, coef);
  }
  return r;
}

}  // namespace hilbop
