#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmbqc/obsset.hpp"
#include "gmbqc/pauli.hpp"
#include "gmbqc/quantum.hpp"
#include "gmbqc/symgroup.hpp"

namespace gmbqc {

struct PhasePointOperator {
  BitVector v;         // over the index set
  DenseMatrix matrix;  // (1/|V|) sum_a (-1)^{v(a)} T_a
};

// Requires check_separation; refuses otherwise.
PhasePointOperator phase_point(const ObservableSet& set, const ModuleV& V,
                               const BitVector& v);

// Q indexed by V-coordinate mask: values[mask] = Q(combine(mask)).
struct QuasiProbability {
  std::vector<double> values;
  std::size_t dim = 0;  // dim V
};

QuasiProbability quasiprob(const QuantumState& state, const ObservableSet& set,
                           const ModuleV& V, std::size_t max_log2 = 16);

// Xi(a) = sum_v (-1)^{v(a)} Q(v); inverse of quasiprob.
std::vector<double> fourier(const QuasiProbability& q, const ObservableSet& set,
                            const ModuleV& V);

// p_s(a) = sum over the coset {v : v(a) = s} = (1 + (-1)^s Xi(a))/2.
double outcome_prob(const QuasiProbability& q, const ModuleV& V, std::size_t a,
                    bool s_bit);

struct CovarianceReport {
  std::vector<BitMatrix> S;  // per g, dim x dim over V-coordinates
  bool verified = false;
  // First offending (g, v-mask) when dense conjugation disagrees.
  std::optional<std::pair<std::size_t, std::size_t>> mismatch;
};

// Lemma 5/6: u(g) A_v u(g)^dagger = A_{S_g v}, S_g linear and invertible,
// S_g 0 = 0. Dense verification over all of V; circuits provide u per
// generator, composed along group words.
CovarianceReport check_covariance(const ObservableSet& set, const ModuleV& V,
                                  const ActionGroup& ag,
                                  const std::vector<Circuit>& generators,
                                  double tol = 1e-9);

// CSV rows "coords,q" per phase point.
std::string quasiprob_csv(const QuasiProbability& q, const ModuleV& V);

}  // namespace gmbqc
