#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmbqc/bitlinalg.hpp"
#include "gmbqc/hvm.hpp"
#include "gmbqc/obsset.hpp"
#include "gmbqc/quantum.hpp"
#include "gmbqc/symgroup.hpp"

namespace gmbqc {

// b over constraint rows with b^T K = 0 and b^T c = 1: the linear system
// K s = c is inconsistent, Mermin style.
struct ParityCertificate {
  BitVector b;
};

// a over constraint rows and a symmetry element h with
// a^T K (I - P_h) = 0 and a^T K v_h = 1.
struct SymmetryCertificate {
  BitVector a;
  std::size_t h = 0;  // element id in the symmetry ActionGroup
};

// Lemma 3 / Eq. TransVal2 matrix form: s' = P_h s + v_h, i.e.
// s'(a) = s(perm_h(a)) ^ signs_h(a). Acts on extended assignments.
BitVector transform_assignment(const BitVector& s, const ElementAction& h);

bool verify_parity(const ParityCertificate& cert, const ConstraintSystem& cs);
bool verify_symmetry(const SymmetryCertificate& cert,
                     const ConstraintSystem& cs,
                     const ActionGroup& symmetry);

std::optional<ParityCertificate> find_parity_proof(const ConstraintSystem& cs);

// Searches each h in deterministic element order; actions must be extended
// to all constraint columns (extend_action).
std::optional<SymmetryCertificate> find_symmetry_proof(
    const ConstraintSystem& cs, const ActionGroup& symmetry);

// b = (I - P'_h)^T a with P'_h the row permutation induced by h
// (K P_h = P'_h K); re-verifies the parity invariants.
ParityCertificate relate(const SymmetryCertificate& cert,
                         const ConstraintSystem& cs,
                         const ActionGroup& symmetry);

// Lemma 4: true iff every element's signs vanish, in which case no
// symmetry-based state-independent proof exists over this action.
bool check_lemma4(const ObservableSet& set, const ActionGroup& ag);

// Built-in fixtures. Names: ghz-or, bell-identity, mermin-square,
// mermin-star, dressed-star, one-qubit.
struct Fixture {
  std::string name;
  ObservableSet set;
  std::vector<Circuit> input_generators;     // generate the input group G
  std::vector<Circuit> symmetry_generators;  // candidate symmetry group
  std::vector<std::size_t> reference_context;
  std::optional<std::size_t> b_e;
  std::optional<QuantumState> state;
  std::vector<uint8_t> target_outputs;  // intended o over G, element order
};

const std::vector<std::string>& fixture_names();
Fixture builtin(const std::string& name);

// The input group's action (trivial group when there are no generators).
ActionGroup input_group(const Fixture& fx);
// The symmetry group generated by symmetry_generators (may carry signs).
ActionGroup symmetry_group(const Fixture& fx);
// Requires state, b_e and an input group.
MBQCInstance make_instance(const Fixture& fx);

}  // namespace gmbqc
