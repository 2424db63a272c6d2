#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "gmbqc/bitlinalg.hpp"
#include "gmbqc/obsset.hpp"
#include "gmbqc/phasefn.hpp"
#include "gmbqc/symgroup.hpp"

namespace gmbqc {

// N = {v in V : v = 0 on Omega_+ \ O_+}, i.e. on the identity and the
// output-only indices.
struct SubgroupN {
  std::vector<BitVector> basis;  // RREF, over the index set
  bool closed_under_action = true;

  std::size_t dim() const { return basis.size(); }
  bool contains(const BitVector& v) const;
};

SubgroupN compute_N(const ObservableSet& set, const ModuleV& V,
                    const ActionGroup* ag = nullptr);

// Coefficient module for cohomology: dimension d with the right action
// n -> n o h given per group element as a d x d coordinate matrix.
struct GModule {
  std::size_t dim = 0;
  std::vector<BitMatrix> right_action;  // per group element

  BitVector act(std::size_t h, const BitVector& coords) const {
    return right_action[h].mul(coords);
  }
  static GModule trivial(std::size_t group_order, std::size_t d);
};

// N with the action n -> n o h, in N-basis coordinates.
GModule module_from_N(const SubgroupN& N, const ActionGroup& ag);

// 2-cochain G x G -> N in N-coordinates; entry (g,h) at g*order+h.
struct LambdaCochain {
  std::size_t order = 0;
  std::vector<BitVector> values;

  const BitVector& at(std::size_t g, std::size_t h) const {
    return values[g * order + h];
  }
  BitVector flat() const;  // concatenation, C^2 coordinates
  bool is_zero() const;
};

// lambda(g,h) = (dPhi)_{g,h}; errors if any value falls outside N.
LambdaCochain lambda_from_phase(const PhaseFunction& phi, const ActionGroup& ag,
                                const SubgroupN& N);

// d^2 lambda (g,h,k) = lambda(g,h)^k + lambda(gh,k) + lambda(g,hk)
// + lambda(h,k); nullopt when the cocycle condition holds, else the first
// violating triple.
std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> cocycle_defect(
    const LambdaCochain& lambda, const FiniteGroup& G, const GModule& M);

// The extension E = G x N with (g,n)(h,n') = (gh, lambda(g,h) + n^h + n').
struct ExtensionGroup {
  FiniteGroup group;  // order |G| * 2^dim; element 0 is the identity
  std::size_t n_dim = 0;
  std::size_t g_order = 0;
  // Element labels were permuted so the identity sits at 0; raw_of maps a
  // group element to its (g, n_mask) encoding g * 2^dim + n_mask.
  std::vector<std::size_t> raw_of;
  std::vector<std::size_t> index_of;  // inverse of raw_of
  std::size_t id(std::size_t g, std::size_t n_mask) const;
  std::pair<std::size_t, std::size_t> parts(std::size_t e) const;
};

// Requires d lambda = 0; verifies associativity, normality of N and the
// quotient table against G. Guarded at order 4096.
ExtensionGroup build_E(const FiniteGroup& G, const GModule& M,
                       const LambdaCochain& lambda);

// Inhomogeneous mod-2 cochain complex C^1 -> C^2 -> C^3 with the right
// action; bases of cocycles and coboundaries plus dim H^2.
struct H2Result {
  std::size_t dim = 0;
  BitMatrix d1, d2;
  std::vector<BitVector> cocycle_basis;     // kernel of d2
  std::vector<BitVector> coboundary_basis;  // RREF image of d1
};

H2Result h2(const FiniteGroup& G, const GModule& M);

// Canonical representative of [lambda] modulo im d^1.
BitVector classify(const LambdaCochain& lambda, const FiniteGroup& G,
                   const GModule& M);

// Xi'(a) = Xi(a) when every n in N vanishes at a, else 0; idempotent.
std::vector<double> n_average(const std::vector<double>& xi,
                              const SubgroupN& N);

}  // namespace gmbqc
