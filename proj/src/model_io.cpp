#include "gibbslab/model_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>

namespace gibbslab {

namespace {

Vertex parse_vertex_key(const std::string& key) {
  Vertex x = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), x);
  if (ec != std::errc() || ptr != key.data() + key.size()) {
    throw std::invalid_argument("'" + key + "' is not a vertex index");
  }
  return x;
}

std::map<Vertex, double> vertex_map(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("expected a JSON object keyed by vertex index");
  }
  std::map<Vertex, double> m;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) {
      throw std::invalid_argument("value for vertex " + key + " is not a number");
    }
    m.emplace(parse_vertex_key(key), value.get<double>());
  }
  return m;
}

}  // namespace

PairInteraction model_from_json(const nlohmann::json& j) {
  for (const char* key : {"spins", "rho", "J", "beta"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("model file is missing \"") + key + "\"");
    }
  }
  return PairInteraction(SpinSpace(j.at("spins").get<std::vector<double>>()),
                         j.at("rho").get<std::vector<std::vector<double>>>(),
                         j.at("J").get<double>(), j.at("beta").get<double>());
}

nlohmann::json model_to_json(const PairInteraction& interaction) {
  const std::size_t q = interaction.num_spins();
  std::vector<std::vector<double>> rho(q, std::vector<double>(q));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) rho[a][b] = interaction.rho(a, b);
  }
  return {{"spins", interaction.space().values()},
          {"rho", rho},
          {"J", interaction.J()},
          {"beta", interaction.beta()}};
}

bool is_builtin_model(std::string_view name) {
  return name == "ising" || name.starts_with("potts:");
}

PairInteraction builtin_model(std::string_view name, double J, double beta) {
  if (name == "ising") return PairInteraction::ising(J, beta);
  if (name.starts_with("potts:")) {
    const std::string_view tail = name.substr(6);
    int q = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), q);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || q < 2) {
      throw std::invalid_argument("Potts model needs an integer q >= 2, got '" +
                                  std::string(tail) + "'");
    }
    return PairInteraction::potts(q, J, beta);
  }
  throw std::invalid_argument("unknown built-in model '" + std::string(name) + "'");
}

Configuration configuration_from_json(const nlohmann::json& j) {
  return Configuration(vertex_map(j));
}

nlohmann::json configuration_to_json(const Configuration& c) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < c.size(); ++i) {
    j[std::to_string(c.support()[i])] = c.values()[i];
  }
  return j;
}

BoundaryField field_from_json(const nlohmann::json& j) {
  return BoundaryField::per_vertex(vertex_map(j));
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

}  // namespace gibbslab
