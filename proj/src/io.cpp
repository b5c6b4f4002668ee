#include "cumulant/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cumulant/errors.hpp"

namespace cumulant::io {

namespace {

const Json& require(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) throw SchemaError(where + ": expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(where + ": missing key '" + key + "'");
  return *it;
}

std::string require_string(const Json& doc, const char* key, const std::string& where) {
  const Json& v = require(doc, key, where);
  if (!v.is_string()) throw SchemaError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

int require_int(const Json& doc, const char* key, const std::string& where) {
  const Json& v = require(doc, key, where);
  if (!v.is_number_integer()) throw SchemaError(where + ": '" + key + "' must be an integer");
  return v.get<int>();
}

const Json& require_array(const Json& doc, const char* key, const std::string& where) {
  const Json& v = require(doc, key, where);
  if (!v.is_array()) throw SchemaError(where + ": '" + key + "' must be an array");
  return v;
}

Monomial parse_factor_list(const Json& names, const GradedSpace& space, int& sign, bool& vanishes) {
  if (!names.is_array() || names.empty()) throw SchemaError("monomial must be a nonempty array of generator names");
  std::vector<int> factors;
  for (const auto& n : names) {
    if (!n.is_string()) throw SchemaError("monomial factors must be generator names");
    factors.push_back(space.index(n.get<std::string>()));
  }
  auto normal = normalize_monomial(factors, space);
  vanishes = !normal;
  if (!normal) return {};
  sign = normal->second;
  return std::move(normal->first);
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Scalar parse_coefficient(const Json& value) {
  if (value.is_string()) return parse_scalar(value.get<std::string>());
  if (value.is_number_integer()) return parse_scalar(std::to_string(value.get<long long>()));
  throw SchemaError("coefficient must be a \"p/q\" string");
}

Vector parse_vector(const Json& doc, const GradedSpace& space) {
  if (!doc.is_array()) throw SchemaError("vector must be an array of {gen, coeff}");
  Vector v;
  for (const auto& term : doc) {
    v.add(space.index(require_string(term, "gen", "vector term")), parse_coefficient(require(term, "coeff", "vector term")));
  }
  return v;
}

SElement parse_element(const Json& doc, const GradedSpace& space) {
  if (!doc.is_array()) throw SchemaError("element must be an array of {monomial, coeff}");
  SElement v;
  for (const auto& term : doc) {
    int sign = 1;
    bool vanishes = false;
    Monomial m = parse_factor_list(require(term, "monomial", "element term"), space, sign, vanishes);
    if (!vanishes) v.add(m, parse_coefficient(require(term, "coeff", "element term")) * sign);
  }
  return v;
}

SpacePtr parse_space(const Json& doc, const std::string& label) {
  const Json& gens = require_array(doc, "generators", "space");
  std::vector<Generator> generators;
  for (const auto& g : gens) generators.push_back({require_string(g, "name", "generator"), require_int(g, "degree", "generator")});
  std::string name = label;
  if (name.empty() && doc.contains("name") && doc["name"].is_string()) name = doc["name"].get<std::string>();
  return make_space(std::move(generators), name);
}

Algebra parse_algebra(const Json& doc) {
  for (const char* key : {"modulus", "characteristic", "prime"}) {
    if (doc.is_object() && doc.contains(key)) throw SchemaError(std::string("algebras are over Q only; '") + key + "' is not supported");
  }
  SpacePtr space = parse_space(doc);
  ProductTable stated;
  if (doc.contains("products")) {
    const Json& products = require_array(doc, "products", "algebra");
    for (const auto& entry : products) {
      const int l = space->index(require_string(entry, "left", "product"));
      const int r = space->index(require_string(entry, "right", "product"));
      if (stated.count({l, r})) {
        throw SchemaError("product " + space->name(l) + "*" + space->name(r) + " stated twice");
      }
      stated.emplace(std::pair{l, r}, parse_vector(require(entry, "value", "product"), *space));
    }
  }
  ProductTable table = stated;
  for (const auto& [key, value] : stated) {
    const auto [l, r] = key;
    if (stated.count({r, l})) continue;
    table.emplace(std::pair{r, l}, Scalar(koszul_factor(space->degree(l), space->degree(r))) * value);
  }
  return Algebra::build(std::move(space), std::move(table));
}

LinearMap parse_linear_map(const Json& doc, const SpacePtr& source, const SpacePtr& target) {
  const int degree = require_int(doc, "degree", "linear map");
  std::map<int, Vector> columns;
  for (const auto& entry : require_array(doc, "entries", "linear map")) {
    const int g = source->index(require_string(entry, "gen", "linear map entry"));
    if (columns.count(g)) throw SchemaError("linear map entry for '" + source->name(g) + "' stated twice");
    columns.emplace(g, parse_vector(require(entry, "value", "linear map entry"), *target));
  }
  return LinearMap::build(source, target, degree, std::move(columns));
}

TaylorFamily parse_taylor_family(const Json& doc, const SpacePtr& source, const SpacePtr& target) {
  TaylorFamily family{source, target, require_int(doc, "degree", "Taylor family"), {}};
  const Json& arities = require(doc, "arities", "Taylor family");
  if (!arities.is_object()) throw SchemaError("Taylor family: 'arities' must be an object");
  for (const auto& [key, entries] : arities.items()) {
    int arity = 0;
    try {
      std::size_t used = 0;
      arity = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SchemaError("Taylor family: arity key '" + key + "' is not an integer");
    }
    if (arity < 1) throw SchemaError("Taylor family: arity must be positive");
    if (!entries.is_array()) throw SchemaError("Taylor family: arity " + key + " must list entries");
    for (const auto& entry : entries) {
      int sign = 1;
      bool vanishes = false;
      Monomial m = parse_factor_list(require(entry, "monomial", "Taylor entry"), *source, sign, vanishes);
      Vector value = parse_vector(require(entry, "value", "Taylor entry"), *target);
      if (vanishes) {
        if (!value.is_zero()) throw SchemaError("Taylor entry on a vanishing monomial (repeated odd factor)");
        continue;
      }
      if (m.weight() != arity) throw SchemaError("Taylor entry of weight " + std::to_string(m.weight()) + " under arity " + key);
      if (!family.value(m).is_zero()) throw SchemaError("Taylor entry on " + render(*source, m) + " stated twice");
      value *= Scalar(sign);
      family.set(m, std::move(value));
    }
  }
  family.validate();
  return family;
}

RetractData parse_retract(const Json& doc) {
  Algebra algebra = parse_algebra(require(doc, "algebra", "retract"));
  SpacePtr complex = parse_space(require(doc, "complex", "retract"), "C");
  const SpacePtr& a = algebra.space();
  auto map = [&](const char* key, const SpacePtr& s, const SpacePtr& t) {
    return parse_linear_map(require(doc, key, "retract"), s, t);
  };
  LinearMap differential = map("differential", a, a);
  LinearMap complex_differential = map("complex_differential", complex, complex);
  LinearMap inclusion = map("inclusion", complex, a);
  LinearMap projection = map("projection", a, complex);
  LinearMap homotopy = map("homotopy", a, a);
  return RetractData{std::move(algebra),  std::move(complex),   std::move(differential), std::move(complex_differential),
                     std::move(inclusion), std::move(projection), std::move(homotopy)};
}

TransferInput parse_transfer(const Json& doc) {
  RetractData retract = parse_retract(require(doc, "retract", "transfer"));
  TaylorFamily d_infinity = parse_taylor_family(require(doc, "d_infinity", "transfer"), retract.complex, retract.complex);
  TaylorFamily iota = parse_taylor_family(require(doc, "iota", "transfer"), retract.complex, retract.algebra.space());
  return TransferInput{std::move(retract), std::move(d_infinity), std::move(iota)};
}

MomentSequence parse_moments(const Json& doc) {
  const Json& values = require_array(doc, "moments", "moments");
  if (values.empty()) throw SchemaError("moments: need at least one moment");
  MomentSequence moments;
  for (const auto& v : values) moments.push_back(parse_coefficient(v));
  return moments;
}

Json to_json(const Scalar& s) { return format_scalar(s); }

Json to_json(const Vector& v, const GradedSpace& space) {
  Json out = Json::array();
  for (const auto& [g, c] : v) out.push_back({{"gen", space.name(g)}, {"coeff", format_scalar(c)}});
  return out;
}

Json to_json(const SElement& v, const GradedSpace& space) {
  Json out = Json::array();
  for (const auto& [m, c] : v) out.push_back({{"monomial", factor_names(space, m)}, {"coeff", format_scalar(c)}});
  return out;
}

Json to_json(const TaylorFamily& family) {
  Json arities = Json::object();
  for (const auto& [n, table] : family.arities) {
    Json entries = Json::array();
    for (const auto& [m, v] : table) {
      entries.push_back({{"monomial", factor_names(*family.source, m)}, {"value", to_json(v, *family.target)}});
    }
    arities[std::to_string(n)] = std::move(entries);
  }
  return {{"degree", family.degree}, {"arities", std::move(arities)}};
}

Json to_json(const LinearMap& map) {
  Json entries = Json::array();
  for (const auto& [g, v] : map.columns()) {
    entries.push_back({{"gen", map.source()->name(g)}, {"value", to_json(v, *map.target())}});
  }
  return {{"source", map.source()->label()}, {"target", map.target()->label()}, {"degree", map.degree()},
          {"entries", std::move(entries)}};
}

Json to_json(const CheckReport& report) {
  Json out = {{"name", report.name}, {"passed", report.passed}, {"checked", report.checked}};
  if (!report.passed) {
    out["witness"] = report.witness;
    out["detail"] = report.detail;
  }
  return out;
}

Json to_json(const ClosedFormComparison& comparison, const GradedSpace& source, const GradedSpace& target) {
  Json mismatches = Json::array();
  for (const auto& m : comparison.mismatches) {
    mismatches.push_back({{"monomial", factor_names(source, m.monomial)},
                          {"computed", to_json(m.computed, target)},
                          {"closed_form", to_json(m.closed_form, target)}});
  }
  return {{"expression", comparison.expression},
          {"checked", comparison.checked},
          {"agrees", comparison.agrees()},
          {"mismatches", std::move(mismatches)}};
}

Json space_to_json(const GradedSpace& space) {
  Json gens = Json::array();
  for (const auto& g : space.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  Json out = {{"generators", std::move(gens)}};
  if (!space.label().empty()) out["name"] = space.label();
  return out;
}

Json algebra_to_json(const Algebra& algebra) {
  Json out = space_to_json(*algebra.space());
  Json products = Json::array();
  for (const auto& [key, value] : algebra.table()) {
    products.push_back({{"left", algebra.space()->name(key.first)},
                        {"right", algebra.space()->name(key.second)},
                        {"value", to_json(value, *algebra.space())}});
  }
  out["products"] = std::move(products);
  return out;
}

Json table_to_json(const TabulatedMap& map) {
  Json out = Json::array();
  for (const auto& [m, v] : map.table()) {
    out.push_back({{"monomial", factor_names(*map.source(), m)}, {"value", to_json(v, *map.target())}});
  }
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cumulant::io
