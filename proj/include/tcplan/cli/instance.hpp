#pragma once

// JSON file formats of the command-line tool.
//
// Instance:
//   {"d": 2|3, "k": int >= 2, "r": real > 0,
//    "start": {"orientations": [...], "positions": [[...], ...]},
//    "goal":  {...}}
// Orientations are angles in radians for d = 2 and quaternions [w, x, y, z]
// for d = 3 (normalized on load when within 1e-6 of unit length).
//
// Path:
//   {"domain": int, "strata": {name: int, ...},
//    "samples": [[t, {"orientations": [...], "positions": [[...], ...]}], ...]}
// Sampled orientations are written as unit vectors: [cos, sin] for d = 2 and
// [w, x, y, z] for d = 3.

#include <tcplan/core/types.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tcplan::cli {

/// Malformed or inconsistent input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  int d = 2;
  int k = 2;
  double r = 1.0;
  Vector start;  ///< flat rigid state
  Vector goal;
};

Instance parse_instance(const nlohmann::json& j);
Instance load_instance(const std::string& file);
nlohmann::json instance_to_json(const Instance& inst);

/// Flat rigid state -> {"orientations": unit vectors, "positions": [...]}.
nlohmann::json state_to_json(const Vector& state, int d, int k);
Vector state_from_json(const nlohmann::json& j, int d, int k);

struct SampledPath {
  DomainIndex domain;
  std::vector<std::pair<double, Vector>> samples;
};

nlohmann::json path_to_json(const SampledPath& p, int d, int k);
SampledPath parse_path(const nlohmann::json& j, int d, int k);

nlohmann::json read_json_file(const std::string& file);
void write_text_file(const std::string& file, const std::string& text);

}  // namespace tcplan::cli
