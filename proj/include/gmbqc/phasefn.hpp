#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gmbqc/bitlinalg.hpp"
#include "gmbqc/obsset.hpp"
#include "gmbqc/symgroup.hpp"

namespace gmbqc {

// 1-cochain Phi: G -> V, stored as one phase vector per group element.
struct PhaseFunction {
  std::vector<BitVector> values;  // indexed by group element, length |A| each

  const BitVector& at(std::size_t g) const { return values[g]; }
  bool bit(std::size_t g, std::size_t a) const { return values[g].get(a); }
};

// 2-cochain G x G -> V; entry (g,h) at index g*|G|+h.
struct TwoCochain {
  std::size_t order = 0;
  std::vector<BitVector> values;

  const BitVector& at(std::size_t g, std::size_t h) const {
    return values[g * order + h];
  }
  bool is_zero() const;
};

struct CoboundaryResult {
  TwoCochain d_phi;
  bool exact;  // d_phi == 0
};

// (dPhi)_{g,h}(a) = Phi_g(ha) + Phi_h(a) + Phi_{gh}(a) mod 2.
CoboundaryResult coboundary(const PhaseFunction& phi, const ActionGroup& ag);

// Phi_g(a) = s(ga) + s(a); exact by construction, values in V.
PhaseFunction from_assignment(const BitVector& s, const ActionGroup& ag);

// o(g) = Phi_g(b_e) + o_e.
std::vector<uint8_t> output_function(const PhaseFunction& phi,
                                     const ActionGroup& ag, std::size_t b_e,
                                     bool o_e);

// Affine family of phase functions compatible with a characteristic function
// under Eq.-(6)-style symmetry: per group element, particular V-coordinates
// plus a kernel of free directions.
struct PhaseFunctionFamily {
  PhaseFunction particular;
  // Per group element: basis of free V-coordinate directions.
  std::vector<std::vector<BitVector>> kernel_coords;
  const ModuleV* V = nullptr;
};

// Throws InvariantError("state not G-symmetric") when |Xi(ga)| != |Xi(a)|
// beyond tolerance.
PhaseFunctionFamily symmetry_solutions(const ObservableSet& set,
                                       const ActionGroup& ag, const ModuleV& V,
                                       const std::vector<double>& xi,
                                       double tol = 1e-9);

struct CertifyResult {
  bool contextual;  // infeasibility of {Phi_g in V, output relation, dPhi=0}
  std::optional<PhaseFunction> witness;  // exact Phi when feasible
  // When contextual: rows of the affine system whose GF(2) sum is the
  // contradiction 0 = 1.
  std::vector<std::size_t> infeasibility_rows;
};

CertifyResult certify_contextuality(const ObservableSet& set,
                                    const ActionGroup& ag, const ModuleV& V,
                                    const std::vector<uint8_t>& o,
                                    std::size_t b_e, bool o_e);

}  // namespace gmbqc
