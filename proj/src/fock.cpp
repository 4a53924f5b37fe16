#include "hilbop/fock.hpp"

#include "hilbop/json_io.hpp"

namespace hilbop {

FockVector<Series> promoted(const FockVector<Rational>& v, const SpacePtr& space) {
  FockVector<Series> out(v.basis());
  for (const auto& [p, c] : v.terms()) out.add_term(p, Series::constant(space, c));
  return out;
}

namespace {

// One application of sum_k coef_k p_{sign*k}/k, degree-filtered.
FockVector<Series> half_vertex_step(const std::map<int, Series>& values, int sign,
                                    const FockVector<Series>& v, int degree_cap) {
  FockVector<Series> out(v.basis());
  for (const auto& [k, coef] : values) {
    if (k <= 0) throw domain_error("half vertex operator: indices must be positive");
    if (coef.is_zero()) continue;
    FockVector<Series> moved = apply_p(sign * k, v);
    for (const auto& [p, c] : moved.terms()) {
      if (p.size() > degree_cap) continue;
      out.add_term(p, (c * coef).scaled(Rational(1, k)));
    }
  }
  return out;
}

FockVector<Series> half_vertex(const std::map<int, Series>& values, int sign,
                               const FockVector<Series>& v, int degree_cap) {
  FockVector<Series> acc = v.degree_capped(degree_cap);
  FockVector<Series> term = acc;
  // exp expansion: sum_j A^j v / j!; A shifts the Fock degree, so the loop
  // ends once the term dies or overflows the cap.
  for (int j = 1; !term.is_zero() && j <= 2 * degree_cap + 2; ++j) {
    term = half_vertex_step(values, sign, term, degree_cap).scaled(Rational(1, j));
    acc += term;
  }
  return acc;
}

}  // namespace

FockVector<Series> gamma_minus(const std::map<int, Series>& s_values, const FockVector<Series>& v,
                               int degree_cap) {
  return half_vertex(s_values, -1, v, degree_cap);
}

FockVector<Series> gamma_plus(const std::map<int, Series>& t_values, const FockVector<Series>& v,
                              int degree_cap) {
  return half_vertex(t_values, +1, v, degree_cap);
}

namespace {

const char* basis_name(Basis b) { return b == Basis::power_sum ? "power_sum" : "fixed_point"; }

Basis basis_from_name(const std::string& s) {
  if (s == "power_sum") return Basis::power_sum;
  if (s == "fixed_point") return Basis::fixed_point;
  throw structural_error("fock json: unknown basis '" + s + "'");
}

template <class Coef, class CoefToJson>
nlohmann::json fock_to_json_impl(const FockVector<Coef>& v, CoefToJson to_json) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : v.terms())
    terms.push_back({{"partition", partition_to_json(p)}, {"coef", to_json(c)}});
  return {{"basis", basis_name(v.basis())}, {"terms", std::move(terms)}};
}

}  // namespace

nlohmann::json fock_to_json(const FockVector<Rational>& v) {
  return fock_to_json_impl(v, [](const Rational& c) { return nlohmann::json(c.str()); });
}

nlohmann::json fock_to_json(const FockVector<Series>& v) {
  return fock_to_json_impl(v, [](const Series& c) { return series_to_json(c); });
}

FockVector<Rational> fock_rational_from_json(const nlohmann::json& j) {
  try {
    FockVector<Rational> v(basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms"))
      v.add_term(partition_from_json(t.at("partition")),
                 Rational::parse(t.at("coef").get<std::string>()));
    return v;
  } catch (const nlohmann::json::exception& ex) {
    throw structural_error(std::string("fock json: ") + ex.what());
  }
}

FockVector<Series> fock_series_from_json(const nlohmann::json& j) {
  try {
    FockVector<Series> v(basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms"))
      v.add_term(partition_from_json(t.at("partition")), series_from_json(t.at("coef")));
    return v;
  } catch (const nlohmann::json::exception& ex) {
    throw structural_error(std::string("fock json: ") + ex.what());
  }
}

}  // namespace hilbop
