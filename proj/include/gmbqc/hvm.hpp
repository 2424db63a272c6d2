#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gmbqc/bitlinalg.hpp"
#include "gmbqc/obsset.hpp"
#include "gmbqc/phasefn.hpp"
#include "gmbqc/symgroup.hpp"

namespace gmbqc {

// s: A -> Z2 over the base indices, s(0) = 0, consistent with every triple.
struct ValueAssignment {
  BitVector bits;
};

// Full affine solution set of K s = c, projected to the base columns.
struct AssignmentSpace {
  std::optional<BitVector> particular;
  std::vector<BitVector> kernel_basis;  // RREF

  bool empty() const { return !particular.has_value(); }
  std::size_t dim() const { return kernel_basis.size(); }
  bool contains(const BitVector& s) const;
  // All members; guarded.
  std::vector<BitVector> all(std::size_t max_log2 = 20) const;
};

bool check_consistent(const BitVector& s, const ConstraintSystem& cs);

AssignmentSpace enumerate_assignments(const ConstraintSystem& cs);

// Lemma 1: (i) g(s) = s o g^{-1} stays in the space for every s, g;
// (ii) pairwise differences of members lie in V.
bool check_lemma1(const AssignmentSpace& space, const ActionGroup& ag,
                  const ModuleV& V, std::size_t max_log2 = 12);

struct DeltaResult {
  std::size_t delta = 0;
  BitVector argmin;            // a minimizing assignment
  std::size_t classical_max = 0;  // |G| - delta
};

// Eq. (15): exact minimum of wt(o ^ o_s) over the assignment space, where
// o_s(g) = s(g b_e). Exhaustive sweep, guarded at 2^20.
DeltaResult delta(const AssignmentSpace& space, const ActionGroup& ag,
                  const std::vector<uint8_t>& o, std::size_t b_e);

struct ReductionResult {
  std::vector<std::size_t> g_tilde;  // inputs where o differs from o_{s*}
  std::vector<uint8_t> outputs;      // evaluator output per g (equals o)
};

// Prop. 3: table G~ = {g : o(g) != s*(g b_e)}; the evaluator
// s*(g b_e) ^ [g in G~] reproduces o exactly.
ReductionResult classical_reduction(const std::vector<uint8_t>& o,
                                    const ValueAssignment& s_star,
                                    const ActionGroup& ag, std::size_t b_e);

struct CcResult {
  uint8_t output = 0;              // o(g) ^ o(e)
  std::size_t memory_cells = 0;    // distinct cells touched
  std::size_t memory_bound = 0;    // |O_+| * |R|
  std::size_t reads = 0;
};

// Prop. 2: evaluates Phi_g(b_e) for g given as a word in the group's
// generators, using only the restricted memory {Phi_r(a) : r in R, a in O_+},
// the index-permutation maps, and mod-2 addition. Audited cell usage.
// Requires an exact Phi and a context (in set.contexts) with the current
// output observable as target at every step.
CcResult cc_coprocessor(const ObservableSet& set, const ActionGroup& ag,
                        const PhaseFunction& phi,
                        const std::vector<std::size_t>& word, std::size_t b_e);

}  // namespace gmbqc
