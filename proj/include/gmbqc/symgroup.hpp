#pragma once

#include <cstddef>
#include <vector>

#include "gmbqc/bitlinalg.hpp"
#include "gmbqc/obsset.hpp"
#include "gmbqc/pauli.hpp"

namespace gmbqc {

// Conjugation action of one group element on the index set:
// u T_a u^dagger = (-1)^signs(a) T_perm(a).
struct ElementAction {
  std::vector<std::size_t> perm;
  BitVector signs;

  std::size_t apply(std::size_t a) const { return perm[a]; }
  // Composition: (this after other), matching u_this u_other conjugation.
  ElementAction compose(const ElementAction& other) const;
  ElementAction inverse() const;
  bool operator==(const ElementAction& o) const {
    return perm == o.perm && signs == o.signs;
  }
};

// Finite group by multiplication table. Element 0 is the identity.
struct FiniteGroup {
  std::size_t order() const { return table.size(); }
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = g*h
  std::vector<std::size_t> inverse;
  // For generated groups: word[g] = generator indices with
  // g = word[0]*word[1]*...*word[k-1] (left-to-right product).
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::size_t> generators;  // element ids of the generators

  std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
  std::size_t inv(std::size_t g) const { return inverse[g]; }
  void validate() const;  // closure, identity, inverses, associativity

  // Elementary abelian Z2^k with BFS element order; for abstract fixtures.
  static FiniteGroup z2_power(std::size_t k);
};

// A finite group together with its signed-permutation action on the index
// set of an observable family.
struct ActionGroup {
  FiniteGroup group;
  std::vector<ElementAction> actions;  // parallel to group elements

  const ElementAction& action(std::size_t g) const { return actions[g]; }
};

// Conjugation action of a circuit on the set; errors if any image escapes
// +-Omega_+.
ElementAction action_from_circuit(const ObservableSet& set,
                                  const Circuit& circuit);

// Closure of the given generator actions under composition. Breadth-first
// over generator words; size cap 4096.
ActionGroup generate(const std::vector<ElementAction>& generator_actions);

// The order-1 group acting trivially on n indices.
ActionGroup trivial_action_group(std::size_t n);

// True iff every element's signs vanish (the group maps Omega_+ to itself,
// not merely +-Omega_+).
bool check_input_group(const ActionGroup& ag);

// v |-> v o g^{-1}; throws if v is not in V.
BitVector module_action(const ActionGroup& ag, std::size_t g,
                        const BitVector& v, const ModuleV& V);

// Extends an element action to the intermediate columns of a constraint
// system by multiplying factor images. Throws if an intermediate's image is
// not itself an extended observable.
ElementAction extend_action(const ConstraintSystem& cs,
                            const ElementAction& base);

}  // namespace gmbqc
