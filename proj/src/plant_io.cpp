#include <fstream>
#include <set>
#include <sstream>

#include "boatune/control.hpp"
#include "json.hpp"

namespace boatune::control {
namespace {

using nlohmann::json;

const std::set<std::string> kPlantKeys = {"a", "b", "washout_time_constant", "sensed_state",
                                          "input_row"};

std::size_t one_based_index(const json& doc, const char* key, std::size_t n) {
  if (!doc.contains(key)) throw InvalidPlant(std::string("plant is missing '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) throw InvalidPlant(std::string("'") + key + "' must be an integer");
  const auto idx = v.get<long long>();
  if (idx < 1 || static_cast<std::size_t>(idx) > n) {
    throw InvalidPlant(std::string("'") + key + "' must be in 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(idx - 1);
}

}  // namespace

StateSpacePlant parse_plant_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidPlant(std::string("plant JSON does not parse: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidPlant("plant JSON must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (!kPlantKeys.contains(key)) throw InvalidPlant("unknown plant key '" + key + "'");
  }
  if (!doc.contains("a") || !doc["a"].is_array() || doc["a"].empty()) {
    throw InvalidPlant("plant 'a' must be a non-empty array of rows");
  }

  const auto& rows = doc["a"];
  const std::size_t n = rows.size();
  std::vector<double> a_data;
  a_data.reserve(n * n);
  try {
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw InvalidPlant("plant 'a' must be square");
      for (const auto& v : row) a_data.push_back(v.get<double>());
    }
  } catch (const json::exception&) {
    throw InvalidPlant("plant 'a' entries must be numbers");
  }

  if (!doc.contains("b") || !doc["b"].is_array() || doc["b"].size() != n) {
    throw InvalidPlant("plant 'b' must be an array with one entry per state");
  }
  std::vector<double> b_data;
  try {
    for (const auto& v : doc["b"]) b_data.push_back(v.get<double>());
  } catch (const json::exception&) {
    throw InvalidPlant("plant 'b' entries must be numbers");
  }

  StateSpacePlant plant;
  try {
    plant.a = Matrix(n, n, std::move(a_data));
    plant.b = Matrix(n, 1, std::move(b_data));
  } catch (const numerics::NumericsError& e) {
    throw InvalidPlant(e.what());
  }
  if (!doc.contains("washout_time_constant") || !doc["washout_time_constant"].is_number()) {
    throw InvalidPlant("plant 'washout_time_constant' must be a number");
  }
  plant.washout_time_constant = doc["washout_time_constant"].get<double>();
  plant.sensed_state = one_based_index(doc, "sensed_state", n);
  plant.input_row = one_based_index(doc, "input_row", n);
  plant.validate();
  return plant;
}

StateSpacePlant load_plant(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidPlant("cannot open plant file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_plant_json(buffer.str());
}

std::string plant_to_json(const StateSpacePlant& plant) {
  json doc;
  const std::size_t n = plant.order();
  json a = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(plant.a(i, j));
    a.push_back(row);
  }
  json b = json::array();
  for (std::size_t i = 0; i < n; ++i) b.push_back(plant.b(i, 0));
  doc["a"] = a;
  doc["b"] = b;
  doc["washout_time_constant"] = plant.washout_time_constant;
  doc["sensed_state"] = plant.sensed_state + 1;
  doc["input_row"] = plant.input_row + 1;
  return doc.dump(2);
}

}  // namespace boatune::control
