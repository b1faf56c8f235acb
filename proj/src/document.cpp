#include "arrdmod/document.hpp"

#include <json.hpp>

#include "arrdmod/error.hpp"

namespace arrdmod {

using json = nlohmann::ordered_json;

namespace {

Rational rational_field(const json& value, const std::string& field) {
  if (value.is_string()) return parse_rational(value.get<std::string>(), field);
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(Integer(std::to_string(value.get<std::uint64_t>())))
                                      : Rational(Integer(std::to_string(value.get<std::int64_t>())));
  }
  throw ValidationError(field + " must be a rational string \"p\" or \"p/q\"");
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError("missing field " + where + (where.empty() ? "" : ".") + key);
  }
  return obj.at(key);
}

const json& array_field(const json& value, const std::string& field) {
  if (!value.is_array()) throw ValidationError(field + " must be an array");
  return value;
}

json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

Arrangement InputDocument::arrangement() const {
  std::vector<Hyperplane> hs;
  hs.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) hs.emplace_back(h.coeffs, h.constant);
  return Arrangement(dim, std::move(hs));
}

std::optional<ExponentVector> InputDocument::exponents() const {
  if (!beta) return std::nullopt;
  return ExponentVector(*beta);
}

std::optional<ResolutionData> InputDocument::resolution() const {
  if (!multiplicities) return std::nullopt;
  return user_resolution(hyperplanes.size(), *multiplicities);
}

InputDocument parse_input(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("input must be a JSON object");

  InputDocument doc;
  const json& dim = member(root, "dim", "");
  if (!dim.is_number_unsigned()) throw ValidationError("dim must be a natural number");
  doc.dim = dim.get<std::size_t>();

  const json& hs = array_field(member(root, "hyperplanes", ""), "hyperplanes");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string where = "hyperplanes[" + std::to_string(i) + "]";
    const json& coeffs = array_field(member(hs[i], "coeffs", where), where + ".coeffs");
    if (coeffs.size() != doc.dim) {
      throw ValidationError(where + ".coeffs has " + std::to_string(coeffs.size()) +
                            " entries, expected dim = " + std::to_string(doc.dim));
    }
    HyperplaneSpec spec;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      spec.coeffs.push_back(rational_field(coeffs[j], where + ".coeffs[" + std::to_string(j) + "]"));
    spec.constant = hs[i].contains("constant")
                        ? rational_field(hs[i].at("constant"), where + ".constant")
                        : Rational(0);
    doc.hyperplanes.push_back(std::move(spec));
  }

  if (root.contains("beta") && !root.at("beta").is_null()) {
    const json& beta = array_field(root.at("beta"), "beta");
    if (beta.size() != doc.hyperplanes.size()) {
      throw ValidationError("beta has " + std::to_string(beta.size()) +
                            " entries, expected one per hyperplane (" +
                            std::to_string(doc.hyperplanes.size()) + ")");
    }
    std::vector<Rational> values;
    for (std::size_t i = 0; i < beta.size(); ++i)
      values.push_back(rational_field(beta[i], "beta[" + std::to_string(i) + "]"));
    doc.beta = std::move(values);
  }

  if (root.contains("resolution") && !root.at("resolution").is_null()) {
    const json& rows =
        array_field(member(root.at("resolution"), "multiplicities", "resolution"),
                    "resolution.multiplicities");
    std::vector<std::vector<Integer>> matrix;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const std::string where = "resolution.multiplicities[" + std::to_string(j) + "]";
      const json& row = array_field(rows[j], where);
      if (row.size() != doc.hyperplanes.size()) {
        throw ValidationError(where + " has " + std::to_string(row.size()) +
                              " entries, expected " + std::to_string(doc.hyperplanes.size()));
      }
      std::vector<Integer> values;
      for (std::size_t i = 0; i < row.size(); ++i) {
        const std::string field = where + "[" + std::to_string(i) + "]";
        const Rational r = rational_field(row[i], field);
        if (!is_integer(r) || r < 0) throw ValidationError(field + " must be a nonnegative integer");
        values.push_back(r.get_num());
      }
      matrix.push_back(std::move(values));
    }
    doc.multiplicities = std::move(matrix);
  }
  return doc;
}

std::string render_input(const InputDocument& doc) {
  json root;
  root["dim"] = doc.dim;
  json hs = json::array();
  for (const auto& h : doc.hyperplanes) {
    json coeffs = json::array();
    for (const auto& c : h.coeffs) coeffs.push_back(rational_json(c));
    hs.push_back({{"coeffs", coeffs}, {"constant", rational_json(h.constant)}});
  }
  root["hyperplanes"] = hs;
  if (doc.beta) {
    json beta = json::array();
    for (const auto& b : *doc.beta) beta.push_back(rational_json(b));
    root["beta"] = beta;
  }
  if (doc.multiplicities) {
    json rows = json::array();
    for (const auto& row : *doc.multiplicities) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.get_str());
      rows.push_back(r);
    }
    root["resolution"] = {{"multiplicities", rows}};
  }
  return root.dump(2) + "\n";
}

}  // namespace arrdmod
