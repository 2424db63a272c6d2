#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gmbqc/bitlinalg.hpp"
#include "gmbqc/pauli.hpp"

namespace gmbqc {

// A measurement context: commuting members whose (chained) product is the
// observable at `target`, up to the sign recorded in the constraint system.
struct Context {
  std::vector<std::size_t> members;
  std::size_t target;
};

// The indexed observable family: identity at index 0, then the measurable
// observables, then the output observables.
struct ObservableSet {
  std::vector<PauliObservable> observables;
  std::vector<std::size_t> measurable;
  std::vector<std::size_t> outputs;
  std::vector<Context> contexts;

  std::size_t size() const { return observables.size(); }
  std::size_t n_qubits() const { return observables[0].n_qubits(); }
  bool is_measurable(std::size_t a) const;
  bool is_output(std::size_t a) const;
  // Index of the observable with these letters, ignoring sign; nullopt if
  // absent.
  std::optional<std::size_t> find_letters(const PauliObservable& p) const;
};

ObservableSet build_observable_set(std::vector<PauliObservable> measurable,
                                   std::vector<PauliObservable> outputs,
                                   std::vector<Context> contexts);

// Validates identity placement, distinctness and the no-(+T,-T)-pair rule.
void validate_observable_set(const ObservableSet& set);

struct ConstraintTriple {
  std::size_t a, b, c;  // extended indices; T_c = (-1)^beta T_a T_b
  bool beta;
};

// GF(2) consistency system. Columns 0..n_base-1 are the observable set;
// further columns are chain intermediates introduced for k>2 contexts.
struct ConstraintSystem {
  std::vector<ConstraintTriple> triples;
  BitMatrix K;        // one row per triple, columns over extended indices
  BitVector c_vec;    // beta per row
  std::size_t n_base; // = set.size()
  std::vector<PauliObservable> extended;  // all extended observables, sign 0
  // For each intermediate (index >= n_base): the factor pair that defines it.
  struct Intermediate {
    std::size_t lhs, rhs;  // extended indices
    bool beta;             // T_lhs T_rhs = (-1)^beta * extended[this]
  };
  std::vector<Intermediate> intermediates;
};

// Every commuting pair whose product lands in the set (binary triples), plus
// the chained decomposition of each k>2 context. Deterministic row order.
ConstraintSystem build_constraints(const ObservableSet& set);

// The module V of sign-flip transformations preserving all product
// relations. Basis over the base columns only, in RREF.
struct ModuleV {
  std::vector<BitVector> basis;  // length set.size() each
  std::size_t dim() const { return basis.size(); }
  bool contains(const BitVector& v) const;
  // All 2^dim elements; guarded.
  std::vector<BitVector> enumerate(std::size_t max_log2 = 16) const;
  BitVector combine(const BitVector& coords) const;
};

ModuleV compute_V(const ObservableSet& set, const ConstraintSystem& cs);

// True iff distinct indices are separated by some character of V
// (no two columns of the basis coincide).
bool check_separation(const ObservableSet& set, const ModuleV& V);

}  // namespace gmbqc
