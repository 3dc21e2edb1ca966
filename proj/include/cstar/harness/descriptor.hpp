// On-disk system descriptors: UTF-8 JSON with schema
//   {"blocks":[...],
//    "group":{"abelian":[...]} | {"table":[[...],...]},
//    "action":{"<element-index>":{"perm":[...],
//              "unitary":[[[re,im],...],...] per block}}}
// Action entries may list generators only; the closure is computed and the
// resulting action validated.
#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "cstar/action.hpp"

namespace cstar::harness {

using json = nlohmann::json;

struct SystemDescriptor {
  std::vector<int> blocks;
  std::optional<std::vector<int>> abelian_factors;
  std::optional<std::vector<std::vector<int>>> table;

  struct Entry {
    std::vector<int> perm;
    std::vector<Mat> unitary;
  };
  std::map<int, Entry> action;

  static SystemDescriptor from_json(const json& j);
  json to_json() const;
  /// serializes the full element-to-automorphism map of an existing action
  static SystemDescriptor from_action(const GroupAction& action);

  /// builds and validates the group action; throws InputError with the
  /// offending location on malformed input
  GroupAction build(const Tolerance& tol = {}) const;
};

SystemDescriptor load_descriptor(const std::string& path);
void save_descriptor(const SystemDescriptor& d, const std::string& path);

/// complex matrices as rows of [re, im] pairs
json matrix_to_json(const Mat& m, int significant_digits = 0);
Mat matrix_from_json(const json& j, const std::string& where);
json element_to_json(const AlgebraElement& a, int significant_digits = 0);

double round_significant(double x, int digits);

}  // namespace cstar::harness
