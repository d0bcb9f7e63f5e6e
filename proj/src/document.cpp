#include "malcev/document.hpp"

#include <cstddef>
#include <json.hpp>
#include <string>
#include <vector>

#include "malcev/errors.hpp"

namespace malcev {

using json = nlohmann::ordered_json;

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

bool all_zero(const std::string& s) {
  return s.find_first_not_of('0') == std::string::npos;
}

void require(bool ok, const std::string& detail) {
  if (!ok) throw Error(Errc::ParseError, detail);
}

std::size_t label_index(const std::vector<std::string>& basis,
                        const std::string& label) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return i;
  throw Error(Errc::UnknownBasisLabel, "\"" + label + "\"");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string digits = num;
  if (!digits.empty() && digits.front() == '-') digits.erase(digits.begin());
  if (!all_digits(digits) || !all_digits(den))
    throw Error(Errc::MalformedRational, "\"" + text + "\"");
  if (all_zero(den))
    throw Error(Errc::MalformedRational, "\"" + text + "\" divides by zero");
  Rational r(num + "/" + den, 10);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

Algebra parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  require(doc.is_object(), "top level is not an object");
  for (const char* field : {"name", "dim", "basis", "brackets"})
    require(doc.contains(field), std::string("missing field \"") + field + "\"");
  require(doc["name"].is_string(), "\"name\" is not a string");
  require(doc["dim"].is_number_unsigned(), "\"dim\" is not a nonnegative integer");
  require(doc["basis"].is_array(), "\"basis\" is not an array");
  require(doc["brackets"].is_array(), "\"brackets\" is not an array");

  std::vector<std::string> basis;
  for (const auto& item : doc["basis"]) {
    require(item.is_string(), "basis labels must be strings");
    basis.push_back(item.get<std::string>());
  }
  require(doc["dim"].get<std::size_t>() == basis.size(),
          "\"dim\" disagrees with the basis length");

  std::vector<Algebra::Entry> entries;
  for (const auto& item : doc["brackets"]) {
    require(item.is_object(), "bracket entries must be objects");
    for (const char* field : {"left", "right", "value"})
      require(item.contains(field),
              std::string("bracket entry missing \"") + field + "\"");
    require(item["left"].is_string() && item["right"].is_string(),
            "\"left\" and \"right\" must be basis labels");
    require(item["value"].is_object(), "\"value\" is not an object");

    Algebra::Entry entry;
    entry.left = label_index(basis, item["left"].get<std::string>());
    entry.right = label_index(basis, item["right"].get<std::string>());
    entry.value = zero_vec(basis.size());
    for (const auto& [label, coeff] : item["value"].items()) {
      require(coeff.is_string(), "coefficients must be rational strings");
      entry.value[label_index(basis, label)] =
          parse_rational(coeff.get<std::string>());
    }
    entries.push_back(std::move(entry));
  }

  return Algebra(doc["name"].get<std::string>(), std::move(basis), entries);
}

std::string serialize_algebra(const Algebra& a) {
  json doc;
  doc["name"] = a.name();
  doc["dim"] = a.dim();
  doc["basis"] = a.basis_names();
  json brackets = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Vec& value = a.constants(i, j);
      if (vec_is_zero(value)) continue;
      json entry;
      entry["left"] = a.basis_names()[i];
      entry["right"] = a.basis_names()[j];
      json coeffs = json::object();
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (value[k] != 0) coeffs[a.basis_names()[k]] = format_rational(value[k]);
      entry["value"] = std::move(coeffs);
      brackets.push_back(std::move(entry));
    }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2) + "\n";
}

}  // namespace malcev
