#include "hilbop/json_io.hpp"

#include <sstream>

#include "hilbop/errors.hpp"

namespace hilbop {

nlohmann::json series_to_json(const Series& s) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : s.space()->vars())
    vars.push_back({{"name", v.name}, {"max_pole", v.max_pole}, {"max_degree", v.max_degree}});
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) {
    nlohmann::json exp = nlohmann::json::array();
    for (auto x : e) exp.push_back(x);
    terms.push_back({{"exp", std::move(exp)}, {"coef", c.str()}});
  }
  nlohmann::json j{{"vars", std::move(vars)}, {"terms", std::move(terms)}};
  if (!s.space()->caps().empty()) {
    nlohmann::json caps = nlohmann::json::array();
    for (const auto& c : s.space()->caps())
      caps.push_back({{"weights", c.weights}, {"cap", c.cap}});
    j["caps"] = std::move(caps);
  }
  return j;
}

Series series_from_json(const nlohmann::json& j) {
  try {
    std::vector<VarSpec> vars;
    for (const auto& v : j.at("vars"))
      vars.push_back(VarSpec{v.at("name").get<std::string>(), v.at("max_pole").get<int>(),
                             v.at("max_degree").get<int>()});
    std::vector<GradingCap> caps;
    if (j.contains("caps")) {
      for (const auto& c : j.at("caps")) {
        GradingCap gc;
        gc.weights = c.at("weights").get<std::vector<int>>();
        gc.cap = c.at("cap").get<long>();
        caps.push_back(std::move(gc));
      }
    }
    SpacePtr space = make_space(std::move(vars), std::move(caps));
    Series s(space);
    for (const auto& t : j.at("terms")) {
      ExpVec e;
      for (const auto& x : t.at("exp")) e.push_back(x.get<int32_t>());
      s += Series::monomial(space, e, Rational::parse(t.at("coef").get<std::string>()));
    }
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw structural_error(std::string("series json: ") + ex.what());
  }
}

std::string series_to_csv(const Series& s) {
  std::ostringstream os;
  os << "exponent_vector,value\n";
  for (const auto& [e, c] : s.terms()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) os << "|";
      os << e[i];
    }
    os << "," << c.str() << "\n";
  }
  return os.str();
}

}  // namespace hilbop
