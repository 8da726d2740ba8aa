#include "localmodel/ideal.hpp"

#include "localmodel/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace localmodel {

using algebra::Polynomial;

std::optional<std::size_t> PolyIdealSpec::index_of(std::string_view name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables.begin());
}

void PolyIdealSpec::validate() const {
  if (variables.size() > algebra::kMaxVars) throw DomainError("too many variables");
  std::set<std::string> seen(variables.begin(), variables.end());
  if (seen.size() != variables.size()) throw DomainError("duplicate variable names");
  for (const auto& g : generators)
    if (g.arity() > variables.size()) throw DomainError("generator uses an undeclared variable");
}

PolyIdealSpec make_ideal(std::vector<std::string> variables, const std::vector<Polynomial>& raw) {
  PolyIdealSpec ideal;
  ideal.variables = std::move(variables);
  ideal.raw_count = raw.size();
  for (const auto& g : raw) {
    if (g.is_zero()) continue;
    if (std::find(ideal.generators.begin(), ideal.generators.end(), g) != ideal.generators.end()) continue;
    ideal.generators.push_back(g);
  }
  ideal.validate();
  return ideal;
}

std::string to_text(const PolyIdealSpec& ideal) {
  std::ostringstream os;
  os << "vars: ";
  for (std::size_t i = 0; i < ideal.variables.size(); ++i) os << (i ? ", " : "") << ideal.variables[i];
  os << '\n';
  for (const auto& g : ideal.generators) os << algebra::to_string(g, ideal.variables) << '\n';
  return os.str();
}

PolyIdealSpec ideal_from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || !line.starts_with("vars:")) throw DomainError("ideal text must start with 'vars:'");
  PolyIdealSpec ideal;
  std::istringstream vs(line.substr(5));
  std::string name;
  while (std::getline(vs, name, ',')) {
    const auto b = name.find_first_not_of(" \t");
    const auto e = name.find_last_not_of(" \t\r");
    if (b == std::string::npos) continue;
    ideal.variables.push_back(name.substr(b, e - b + 1));
  }
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ideal.generators.push_back(algebra::parse_polynomial(line, ideal.variables));
  }
  ideal.raw_count = ideal.generators.size();
  ideal.validate();
  return ideal;
}

std::string to_json(const PolyIdealSpec& ideal) {
  nlohmann::json doc;
  doc["vars"] = ideal.variables;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators) gens.push_back(algebra::to_string(g, ideal.variables));
  doc["gens"] = std::move(gens);
  return doc.dump(2) + "\n";
}

PolyIdealSpec ideal_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  PolyIdealSpec ideal;
  ideal.variables = doc.at("vars").get<std::vector<std::string>>();
  for (const auto& g : doc.at("gens")) ideal.generators.push_back(algebra::parse_polynomial(g.get<std::string>(), ideal.variables));
  ideal.raw_count = ideal.generators.size();
  ideal.validate();
  return ideal;
}

} // namespace localmodel
