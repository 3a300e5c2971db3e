#include "jordan/io/instance_spec.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "jordan/errors.hpp"
#include "jordan/scalar/prime_field.hpp"

namespace jordan {

namespace {

using nlohmann::json;

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  throw ParseError("scalar must be a string or a number");
}

Shape read_shape(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() || !v[1].is_number_unsigned()) {
    throw ParseError(std::string(what) + " must be [rows, cols]");
  }
  return {v[0].get<std::size_t>(), v[1].get<std::size_t>()};
}

void flatten_tensor(const json& v, std::size_t outer, std::size_t middle, std::vector<std::string>& out) {
  auto expect = [](const json& a, std::size_t n) {
    if (!a.is_array() || a.size() != n) throw ParseError("structure tensor has wrong dimensions");
  };
  expect(v, outer);
  for (const auto& a : v) {
    expect(a, middle);
    for (const auto& b : a) {
      expect(b, outer);
      for (const auto& c : b) {
        expect(c, outer);
        for (const auto& d : c) out.push_back(scalar_text(d));
      }
    }
  }
}

ScalarRows read_rows(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  ScalarRows out;
  for (const auto& row : v) {
    std::vector<std::string> r;
    if (row.is_array()) {
      for (const auto& x : row) r.push_back(scalar_text(x));
    } else {
      r.push_back(scalar_text(row));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

InstanceSpec parse_instance_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance spec must be a JSON object");
  InstanceSpec spec;
  try {
    spec.name = doc.value("name", std::string("unnamed"));
    spec.ring = doc.value("ring", std::string("q"));
    if (!doc.contains("kind")) throw ParseError("instance spec needs a 'kind'");
    spec.kind = doc.at("kind").get<std::string>();
    if (doc.contains("parameters")) {
      for (const auto& [k, v] : doc.at("parameters").items()) {
        if (k == "family") {
          spec.family = v.get<std::string>();
        } else if (v.is_number_integer()) {
          spec.parameters[k] = v.get<long>();
        } else {
          throw ParseError("parameter '" + k + "' must be an integer");
        }
      }
    }
    if (doc.contains("structure_tensor")) {
      const json& t = doc.at("structure_tensor");
      spec.plus_shape = read_shape(t.at("plus_shape"), "plus_shape");
      spec.minus_shape = read_shape(t.at("minus_shape"), "minus_shape");
      flatten_tensor(t.at("plus"), spec.plus_shape.size(), spec.minus_shape.size(), spec.tensor_plus);
      if (t.contains("minus")) {
        flatten_tensor(t.at("minus"), spec.minus_shape.size(), spec.plus_shape.size(), spec.tensor_minus);
      }
    }
    if (doc.contains("deformation")) {
      const json& d = doc.at("deformation");
      DeformationSpec def;
      def.kind = d.at("kind").get<std::string>();
      if (def.kind != "element" && def.kind != "alpha") {
        throw ParseError("deformation kind must be 'element' or 'alpha'");
      }
      def.value = read_rows(d.at("value"), "deformation value");
      spec.deformation = std::move(def);
    }
    if (doc.contains("beta")) {
      const json& b = doc.at("beta");
      spec.beta = BetaSpec{read_rows(b.at("b1"), "b1"), read_rows(b.at("b2"), "b2"), b.value("skew", false)};
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance spec: ") + e.what());
  }
  if (spec.kind != "rectangular" && spec.kind != "tensor" && spec.kind != "algebra" && spec.kind != "jts" &&
      spec.kind != "grassmann") {
    throw UnknownInstance("unknown instance kind '" + spec.kind + "'");
  }
  if (spec.kind == "tensor" && spec.tensor_plus.empty()) throw ParseError("tensor instance needs a structure_tensor");
  if (spec.kind == "grassmann" && !spec.beta) throw ParseError("grassmann instance needs a 'beta'");
  return spec;
}

InstanceSpec load_instance_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read instance spec " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_instance_spec(os.str());
}

long spec_parameter(const InstanceSpec& spec, const std::string& key, std::optional<long> fallback) {
  const auto it = spec.parameters.find(key);
  if (it != spec.parameters.end()) {
    if (it->second <= 0) throw ParseError("parameter '" + key + "' must be positive");
    return it->second;
  }
  if (fallback) return *fallback;
  throw ParseError("instance spec is missing parameter '" + key + "'");
}

RingSelector parse_ring_selector(const std::string& text) {
  if (text == "q") return {RingSelector::Kind::Rational, 0};
  if (text == "f64") return {RingSelector::Kind::Float, 0};
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
      throw ParseError("bad prime in ring selector '" + text + "'");
    }
    const std::uint64_t p = std::stoull(digits);
    try {
      PrimeFieldElement::check_modulus(p);
    } catch (const InvalidInput& e) {
      throw ParseError(std::string("ring selector '") + text + "': " + e.what());
    }
    return {RingSelector::Kind::PrimeField, p};
  }
  throw ParseError("unknown ring selector '" + text + "' (expected q, gf:p or f64)");
}

std::string to_string(const RingSelector& r) {
  switch (r.kind) {
    case RingSelector::Kind::Rational:
      return "q";
    case RingSelector::Kind::Float:
      return "f64";
    case RingSelector::Kind::PrimeField:
      return "gf:" + std::to_string(r.modulus);
  }
  return "q";
}

}  // namespace jordan
