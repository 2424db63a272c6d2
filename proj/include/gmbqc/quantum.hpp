#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmbqc/obsset.hpp"
#include "gmbqc/pauli.hpp"
#include "gmbqc/phasefn.hpp"
#include "gmbqc/symgroup.hpp"

namespace gmbqc {

// Pure n-qubit state, dense amplitudes. Qubit 0 is the most significant bit
// of the basis index, matching to_matrix.
struct QuantumState {
  std::size_t n_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  static QuantumState computational(std::size_t n_qubits, std::size_t basis);
  static QuantumState from_amplitudes(
      std::size_t n_qubits, std::vector<std::complex<double>> amps);
  // Expands a stabilizer group given by generator strings ("+XXX", "-XYY")
  // into a dense vector; throws if the projector annihilates everything or
  // the generators are inconsistent.
  static QuantumState from_stabilizers(
      const std::vector<PauliObservable>& generators);

  double norm() const;
  void normalize();
};

// |psi> -> P|psi> without forming the 2^n x 2^n matrix.
std::vector<std::complex<double>> apply_pauli(
    const PauliObservable& p, const std::vector<std::complex<double>>& amps,
    std::size_t n_qubits);

double expectation(const QuantumState& state, const PauliObservable& p);

// Xi(a) = <T_a> for every a; Xi(0) = 1.
std::vector<double> characteristic(const QuantumState& state,
                                   const ObservableSet& set);

struct MBQCInstance {
  ObservableSet set;
  ActionGroup action;
  std::vector<std::size_t> reference_context;  // C(e), measurable indices
  std::size_t b_e = 0;                         // output index of T(e)
  QuantumState state;
};

// Validates: input group (no sign flips), commuting measurable reference
// context whose chained product is exactly T_{b_e}, b_e an output index.
MBQCInstance make_mbqc_instance(ObservableSet set, ActionGroup action,
                                std::vector<std::size_t> reference_context,
                                std::size_t b_e, QuantumState state);

// C(g): image of the reference context under the permutation of g,
// in ascending index order.
std::vector<std::size_t> context(const MBQCInstance& instance, std::size_t g);

struct RunResult {
  std::vector<std::size_t> indices;   // measured observables, ascending
  std::vector<uint8_t> outcomes;      // s(a) per index
  uint8_t output = 0;                 // parity
};

// Sequential projective measurement of C(g); deterministic given seed.
RunResult run(const MBQCInstance& instance, std::size_t g, uint64_t seed);

struct IdealOutput {
  uint8_t bit = 0;
  double success_prob = 1.0;  // (1 + |<T(g)>|)/2
  bool degenerate = false;    // <T(g)> = 0 tie, broken toward 0
};

IdealOutput ideal_output(const MBQCInstance& instance, std::size_t g);

// W(o) = sum_g (1 + (-1)^{o(g)} <T(g)>)/2.
double witness(const MBQCInstance& instance, const std::vector<uint8_t>& o);

// Eq.-(6) check: Xi(ga) = (-1)^{Phi_g(a)} Xi(a) at every (g, a).
bool check_symmetry(const MBQCInstance& instance, const PhaseFunction& phi,
                    double tol = 1e-9);

struct Lemma2Report {
  bool stabilizer_state = false;
  std::size_t stabilizer_count = 0;
  bool uniform_success = false;
  bool no_qubit_disentangled = false;  // each qubit carries a Z-restricted
                                       // stabilizer element
  bool symmetry_holds = false;
  std::string note;
};

// Scans the full signed Pauli group for stabilizers (guard n <= 6) and
// reports the Lemma-2 preconditions.
Lemma2Report check_lemma2_preconditions(const MBQCInstance& instance);

// Appendix-B standard-MBQC embedding. G = Z2^m acting by X-tensors fixed by
// the wiring Q; measured observables O_k[q] = cos(phi) X_k + (-1)^q
// sin(phi) Y_k. The Pauli instance is materialized only when the conjugation
// action closes on the set with zero signs (phi = 0); otherwise only the
// dense evaluator is available.
struct EmbeddedMbqc {
  std::size_t m = 0, n = 0;
  BitMatrix wiring;  // n x m
  double phi = 0.0;
  QuantumState resource;
  FiniteGroup group;  // Z2^m
  std::optional<MBQCInstance> instance;

  // q = Q i mod 2 for input element g (bits of g are the input bits).
  std::vector<uint8_t> q_of(std::size_t g) const;
  double ideal_expectation(std::size_t g) const;  // <prod_k O_k[q_k]>
  // Sequential dense measurement of the context; returns (outcomes, parity).
  std::pair<std::vector<uint8_t>, uint8_t> run(std::size_t g,
                                               uint64_t seed) const;
};

EmbeddedMbqc embed_standard_mbqc(std::size_t m, std::size_t n,
                                 const BitMatrix& wiring, double phi,
                                 QuantumState resource);

}  // namespace gmbqc
