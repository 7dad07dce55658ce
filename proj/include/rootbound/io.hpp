#ifndef ROOTBOUND_IO_HPP
#define ROOTBOUND_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rootbound/zero_bounds.hpp"

namespace rootbound {

/// {"n": int, "entries": [[re, im], ...]} row-major, n*n entries.
inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "matrix JSON must be an object");
    const auto& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() < 1) throw Error(ErrorKind::InvalidInput, "\"n\" must be a positive integer");
    const auto n = static_cast<std::size_t>(jn.get<long long>());
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n * n) {
      throw Error(ErrorKind::InvalidInput, "\"entries\" must hold n*n = " + std::to_string(n * n) + " pairs");
    }
    ComplexVector values;
    values.reserve(n * n);
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw Error(ErrorKind::InvalidInput, "each entry must be [re, im]");
      }
      values.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return ComplexMatrix(n, std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("matrix JSON: ") + e.what());
  }
}

inline nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::ordered_json j;
  j["n"] = m.size();
  j["entries"] = nlohmann::ordered_json::array();
  for (const Complex& z : m.entries()) j["entries"].push_back({z.real(), z.imag()});
  return j;
}

/// JSON has no literal for inf/nan, so non-finite values surface as parse errors or nulls.
inline ComplexMatrix parse_matrix_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

inline ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_matrix_json(buf.str());
}

inline const char* to_string(DSequence s) { return s == DSequence::direct ? "direct" : "printed"; }

inline nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["polynomial"] = format_polynomial(r.polynomial);
  j["degree"] = r.polynomial.degree();
  j["d_source"] = to_string(r.source);
  j["max_root_modulus"] = r.max_root_modulus;
  j["bounds"] = nlohmann::ordered_json::array();
  for (const auto& [name, value] : r.entries) {
    j["bounds"].push_back({{"name", name}, {"value", value}, {"gap", value - r.max_root_modulus}});
  }
  return j;
}

inline BoundReport bound_report_from_json(const nlohmann::json& j) {
  BoundReport r{{}, j.at("max_root_modulus").get<double>(), parse_polynomial(j.at("polynomial").get<std::string>()),
                j.at("d_source").get<std::string>() == "printed" ? DSequence::printed : DSequence::direct};
  for (const auto& b : j.at("bounds")) r.entries.emplace_back(b.at("name").get<std::string>(), b.at("value").get<double>());
  return r;
}

}  // namespace rootbound

#endif  // ROOTBOUND_IO_HPP
