#pragma once

// JSON formats for algebras, modules, maps and n-exact sequences.
//
//   algebra:  {"p": 2, "L": 2, "vertices": 3, "arrows": [[id, src, tgt], ...],
//              "relations": [[[coeff, [arrow ids]], ...], ...]}
//   module:   {"dim_vector": [..], "arrows": {"<id>": [[row], ...]}, "label": ".."}
//   sequence: {"n": 2, "modules": [module, ...], "maps": [[matrix per vertex], ...]}
//
// Every loader throws InputError with the file name and a location.

#include <string>

#include "hcot/approx.hpp"
#include "json.hpp"

namespace hcot {

nlohmann::json read_json_file(const std::string& path);

AlgebraPtr algebra_from_json(const nlohmann::json& j, const std::string& where);
AlgebraPtr load_algebra(const std::string& path);

Module module_from_json(const AlgebraPtr& a, const nlohmann::json& j, const std::string& where);
Module load_module(const AlgebraPtr& a, const std::string& path);
nlohmann::json module_to_json(const Module& m);

ModuleMap map_from_json(const Module& source, const Module& target, const nlohmann::json& j,
                        const std::string& where);
nlohmann::json map_to_json(const ModuleMap& f);

NSequence sequence_from_json(const AlgebraPtr& a, const nlohmann::json& j,
                             const std::string& where);
NSequence load_sequence(const AlgebraPtr& a, const std::string& path);
nlohmann::json sequence_to_json(const NSequence& s);

}  // namespace hcot
