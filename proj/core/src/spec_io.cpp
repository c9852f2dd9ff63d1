#include "vmrt/spec_io.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"

#include "vmrt/poly_parser.hpp"

namespace vmrt {

using nlohmann::json;

namespace {

Scalar scalar_of(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw ParseError("expected an integer or a rational string, got " + j.dump());
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return obj.at(name);
}

std::size_t index_of(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw ParseError(std::string("field '") + name + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

OmegaForm omega_from(const json& j, std::size_t dim_w) {
  const std::size_t dim_u = index_of(j, "dimU");
  OmegaForm omega(dim_w, dim_u);
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("omega entries must be an array");
  for (const json& e : entries) {
    const std::size_t i = index_of(e, "i");
    const std::size_t k = index_of(e, "j");
    if (i >= dim_w || k >= dim_w) throw ParseError("omega entry index out of range for dim W");
    const json& uv = field(e, "uVector");
    if (!uv.is_array() || uv.size() != dim_u) throw ParseError("uVector must have dimU components");
    Vec value;
    for (const json& c : uv) value.push_back(scalar_of(c));
    if (i == k) {
      if (!is_zero(value)) throw ParseError("omega(e_i, e_i) must vanish");
      continue;
    }
    omega.set(i, k, value);
  }
  return omega;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json strings_of(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

json omega_json(const OmegaForm& omega) {
  json entries = json::array();
  for (std::size_t i = 0; i < omega.dim_w(); ++i)
    for (std::size_t j = i + 1; j < omega.dim_w(); ++j) {
      const Vec v = omega.on_basis(i, j);
      if (is_zero(v)) continue;
      entries.push_back({{"i", i}, {"j", j}, {"uVector", strings_of(v)}});
    }
  return {{"dimU", omega.dim_u()}, {"entries", entries}};
}

}  // namespace

VarietySpec parse_variety_spec(std::string_view json_text) {
  const json doc = parse_json(json_text);
  try {
    const std::string label = field(doc, "label").get<std::string>();
    const auto variables = field(doc, "variables").get<std::vector<std::string>>();
    const auto coordinates = field(doc, "coordinates").get<std::vector<std::string>>();
    if (coordinates.empty()) throw ParseError("a variety spec needs at least one coordinate");
    PolyVec coords;
    for (const auto& text : coordinates) coords.push_back(parse_polynomial(text, variables));
    VarietySpec spec;
    spec.chart = std::make_shared<const VarietyChart>(label, variables.size(), std::move(coords), variables);
    if (doc.contains("omega") && !doc.at("omega").is_null())
      spec.omega = omega_from(doc.at("omega"), spec.chart->ambient_dim());
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad variety spec: ") + e.what());
  }
}

OmegaForm parse_omega(std::string_view json_text, std::size_t dim_w) {
  const json doc = parse_json(json_text);
  try {
    return omega_from(doc, dim_w);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad omega table: ") + e.what());
  }
}

VarietySpec load_variety_spec(const std::string& source) {
  if (source.starts_with(kBuiltinPrefix)) {
    try {
      return builtin_spec(source.substr(kBuiltinPrefix.size()));
    } catch (const UnsupportedChart& e) {
      throw ParseError(e.what());
    }
  }
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open variety spec '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_variety_spec(text.str());
}

std::string omega_to_json(const OmegaForm& omega, int indent) { return omega_json(omega).dump(indent); }

std::string construction_to_json(const OmegaConstruction& c, int indent) {
  json basis = json::array();
  for (std::size_t r = 0; r < c.w_prime_basis.rows(); ++r) basis.push_back(strings_of(c.w_prime_basis.row(r)));
  json doc;
  doc["label"] = c.label;
  doc["dimW"] = c.omega.dim_w();
  doc["dimLambda2"] = c.dim_lambda2;
  doc["dimWprime"] = c.dim_w_prime();
  doc["dimU"] = c.dim_u;
  doc["seed"] = c.seed;
  doc["wPrimeBasis"] = basis;
  doc["complement"] = c.complement_coordinates;
  doc["omegaTable"] = omega_json(c.omega);
  return doc.dump(indent);
}

}  // namespace vmrt
