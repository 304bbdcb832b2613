#include "cartan/fixture.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cartan/ratfn_parse.hpp"

namespace cartan {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& builtin_fixture_table();
}

namespace {

RationalFn parse_entry(const nlohmann::json& j, const std::vector<std::string>& coords, const std::string& where) {
  if (j.is_number_integer()) return RationalFn::constant(coords.size(), Rational(j.get<long>()));
  if (!j.is_string()) throw GeometryError(where + ": expected a rational-function string");
  try {
    return parse_ratfn(j.get<std::string>(), coords);
  } catch (const ParseError& e) {
    throw GeometryError(where + ": " + e.what());
  }
}

}  // namespace

Fixture parse_fixture(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(std::string("fixture is not valid JSON: ") + e.what());
  }
  try {
    Fixture fx;
    fx.name = doc.at("name").get<std::string>();
    const auto coords = doc.at("coords").get<std::vector<std::string>>();
    const auto dim = doc.at("dim").get<std::size_t>();
    if (coords.size() != dim) throw GeometryError(fx.name + ": dim does not match the coordinate list");
    Chart chart(coords);
    const auto eta = doc.at("eta").get<std::vector<int>>();
    const auto& rows = doc.at("coframe");
    if (!rows.is_array() || rows.size() != dim) throw GeometryError(fx.name + ": coframe must have dim rows");
    Matrix coframe(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      if (!rows[a].is_array() || rows[a].size() != dim) throw GeometryError(fx.name + ": coframe row has wrong length");
      for (std::size_t mu = 0; mu < dim; ++mu)
        coframe(a, mu) = parse_entry(rows[a][mu], coords, fx.name + " coframe[" + std::to_string(a) + "][" + std::to_string(mu) + "]");
    }
    fx.geometry = Geometry::create(std::move(chart), std::move(coframe), eta);
    if (doc.contains("killing_vectors")) {
      for (const auto& [name, comps] : doc.at("killing_vectors").items()) {
        if (!comps.is_array() || comps.size() != dim)
          throw GeometryError(fx.name + ": Killing vector '" + name + "' needs dim components");
        KillingVector kv{name, {}};
        for (std::size_t mu = 0; mu < dim; ++mu)
          kv.components.push_back(parse_entry(comps[mu], coords, fx.name + " killing '" + name + "'"));
        if (!is_killing(*fx.geometry, kv.components))
          throw GeometryError(fx.name + ": declared Killing vector '" + name + "' does not preserve the metric");
        fx.killing_vectors.push_back(std::move(kv));
      }
    }
    if (doc.contains("notes")) fx.notes = doc.at("notes").get<std::string>();
    return fx;
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(std::string("malformed fixture: ") + e.what());
  }
}

Fixture load_fixture(const std::string& name_or_path) {
  for (const auto& [name, text] : detail::builtin_fixture_table())
    if (name == name_or_path) return parse_fixture(text);
  std::ifstream in(name_or_path);
  if (!in) throw GeometryError("unknown fixture '" + name_or_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

std::vector<std::string> builtin_fixture_names() {
  std::vector<std::string> names;
  for (const auto& entry : detail::builtin_fixture_table()) names.emplace_back(entry.first);
  return names;
}

}  // namespace cartan
