#include "hypercross/config_io.hpp"

#include <fstream>
#include <sstream>

#include "hypercross/error.hpp"

namespace hypercross {

nlohmann::json rationals_to_json(const RationalVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& x : v) out.push_back(x.str());
  return out;
}

RationalVector rationals_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::kParse, "expected an array of rationals");
  RationalVector out;
  for (const auto& x : j) {
    if (x.is_string()) {
      out.push_back(Rational::parse(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      out.emplace_back(x.get<long>());
    } else {
      throw Error(ErrorKind::kParse, "rationals must be strings like \"p/q\" or integers");
    }
  }
  return out;
}

nlohmann::json to_json(const PointConfig& c) {
  nlohmann::json pts = nlohmann::json::array();
  for (const Point& p : c.points) pts.push_back(rationals_to_json(p));
  return {{"dim", c.dim}, {"points", pts}};
}

PointConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw Error(ErrorKind::kParse, "configuration needs \"dim\" and \"points\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    throw Error(ErrorKind::kParse, "\"dim\" must be a positive integer");
  PointConfig c{j["dim"].get<std::size_t>(), {}};
  for (const auto& p : j["points"]) c.points.push_back(rationals_from_json(p));
  validate_shape(c);
  return c;
}

PointConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
  return config_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kParameter, "cannot write " + path);
  out << text;
}

}  // namespace hypercross
