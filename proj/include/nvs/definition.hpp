#pragma once

#include <string>
#include <vector>

#include "nvs/action.hpp"
#include "nvs/scalar_group.hpp"
#include "nvs/space.hpp"

namespace nvs {

/// A parsed space definition file:
///   field = gf(5) | gf(9; modulus=1,0,1) | dickson(3)
///   dim = 2
///   exponents = 1,3
/// '#' starts a comment; unknown keys are rejected.
struct SpaceDefinition {
  ScalarGroupSpec field;
  int dim = 0;
  ActionSpec exponents;
};

SpaceDefinition parse_definition(const std::string& text);
SpaceDefinition load_definition(const std::string& path);

/// Builds the group, validates the action, and materializes the carrier.
SpacePtr build_space(const SpaceDefinition& def);

/// Vector literal "(1,3)" using element labels.
Vector parse_vector_literal(const std::string& text, int order, int dim);

/// One or more vector literals, e.g. "(1,0) (0,1)" or "(1,0);(0,1)".
std::vector<Vector> parse_vector_list(const std::string& text, int order, int dim);

}  // namespace nvs
