#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gibbslab/boundary_field.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/spins.hpp"

namespace gibbslab {

/// {"spins": [...], "rho": [[...]], "J": x, "beta": y}, rho row-major over the
/// spin order.
PairInteraction model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const PairInteraction& interaction);

/// "ising" or "potts:q".
bool is_builtin_model(std::string_view name);
PairInteraction builtin_model(std::string_view name, double J, double beta);

/// {"vertex_index": value, ...}
Configuration configuration_from_json(const nlohmann::json& j);
nlohmann::json configuration_to_json(const Configuration& c);
BoundaryField field_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

/// printf("%.15g").
std::string format_number(double x);
/// x rounded to 15 significant digits, so JSON serialization prints at most 15.
double round15(double x);

}  // namespace gibbslab
