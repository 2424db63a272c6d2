#pragma once

#include <string>

#include "gmbqc/proofs.hpp"

#include <nlohmann/json.hpp>

namespace gmbqc {

// Instance schema:
// {
//   "n_qubits": 3,
//   "observables": ["+III", "+XII", ...],        // identity first
//   "measurable": [1, 2, ...],
//   "outputs": [7, ...],
//   "contexts": [{"members": [1,2,3], "target": 7}, ...],
//   "group": {"generators": [{"gates": [["A",1],["A",2]]}
//                            | {"perm": [...], "signs": [...]}]},
//   "reference_context": [1,2,3],                // optional
//   "b_e": 7,                                    // optional
//   "state": {"type": "stabilizer", "generators": ["+XXX", ...]}
//          | {"type": "vector", "amplitudes": [[re, im], ...]},  // optional
//   "symmetry_generators": [...],                // optional, same forms
//   "target_outputs": [0,1,1,1]                  // optional
// }
// Perm/sign generators are carried as explicit actions instead of circuits.
struct InstanceSpec {
  Fixture fixture;  // name = file stem or "instance"
  // Generators given as raw signed permutations (no circuit available).
  std::vector<ElementAction> raw_input_generators;
  std::vector<ElementAction> raw_symmetry_generators;

  ActionGroup input_group() const;
  ActionGroup symmetry_group() const;
};

InstanceSpec parse_instance(const nlohmann::json& j);
InstanceSpec load_instance(const std::string& path);

// Round-trippable JSON for a builtin fixture.
nlohmann::ordered_json emit_instance(const Fixture& fx);

}  // namespace gmbqc
