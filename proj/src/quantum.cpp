#include "gmbqc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gmbqc/errors.hpp"

namespace gmbqc {

namespace {

constexpr double kTol = 1e-9;

using Amps = std::vector<std::complex<double>>;

double inner_real(const Amps& a, const Amps& b) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  if (std::abs(acc.imag()) > kTol)
    throw InvariantError("expectation has a non-real part");
  return acc.real();
}

double norm2(const Amps& a) {
  double acc = 0.0;
  for (const auto& x : a) acc += std::norm(x);
  return acc;
}

}  // namespace

QuantumState QuantumState::computational(std::size_t n_qubits,
                                         std::size_t basis) {
  QuantumState s;
  s.n_qubits = n_qubits;
  s.amplitudes.assign(std::size_t(1) << n_qubits, 0.0);
  s.amplitudes.at(basis) = 1.0;
  return s;
}

QuantumState QuantumState::from_amplitudes(std::size_t n_qubits, Amps amps) {
  if (amps.size() != (std::size_t(1) << n_qubits))
    throw InvariantError("state: amplitude count != 2^n");
  QuantumState s;
  s.n_qubits = n_qubits;
  s.amplitudes = std::move(amps);
  if (std::abs(s.norm() - 1.0) > kTol)
    throw InvariantError("state: not normalized");
  return s;
}

QuantumState QuantumState::from_stabilizers(
    const std::vector<PauliObservable>& generators) {
  if (generators.empty()) throw InvariantError("stabilizers: empty list");
  std::size_t n = generators[0].n_qubits();
  std::size_t dim = std::size_t(1) << n;
  for (const auto& g : generators) {
    if (g.n_qubits() != n)
      throw InvariantError("stabilizers: mixed qubit counts");
  }
  for (std::size_t trial = 0; trial < dim; ++trial) {
    Amps psi(dim, 0.0);
    psi[trial] = 1.0;
    for (const auto& g : generators) {
      Amps gp = apply_pauli(g, psi, n);
      for (std::size_t i = 0; i < dim; ++i) psi[i] = 0.5 * (psi[i] + gp[i]);
    }
    double nn = norm2(psi);
    if (nn < 1e-10) continue;
    double scale = 1.0 / std::sqrt(nn);
    for (auto& x : psi) x *= scale;
    QuantumState s;
    s.n_qubits = n;
    s.amplitudes = std::move(psi);
    for (const auto& g : generators) {
      if (std::abs(expectation(s, g) - 1.0) > kTol)
        throw InvariantError("stabilizers: inconsistent generator set");
    }
    return s;
  }
  throw InvariantError("stabilizers: projector annihilates every basis state");
}

double QuantumState::norm() const { return std::sqrt(norm2(amplitudes)); }

void QuantumState::normalize() {
  double n = norm();
  if (n < 1e-12) throw InvariantError("state: zero norm");
  for (auto& x : amplitudes) x /= n;
}

Amps apply_pauli(const PauliObservable& p, const Amps& amps,
                 std::size_t n_qubits) {
  if (p.n_qubits() != n_qubits ||
      amps.size() != (std::size_t(1) << n_qubits))
    throw InvariantError("apply_pauli: size mismatch");
  std::size_t dim = amps.size();
  std::size_t flips = 0;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    auto l = p.letter(q);
    if (l == PauliLetter::X || l == PauliLetter::Y)
      flips |= std::size_t(1) << (n_qubits - 1 - q);
  }
  Amps out(dim, 0.0);
  for (std::size_t b = 0; b < dim; ++b) {
    if (amps[b] == std::complex<double>(0.0)) continue;
    std::complex<double> factor = p.sign() ? -1.0 : 1.0;
    for (std::size_t q = 0; q < n_qubits; ++q) {
      bool bit = (b >> (n_qubits - 1 - q)) & 1;
      switch (p.letter(q)) {
        case PauliLetter::I:
        case PauliLetter::X:
          break;
        case PauliLetter::Y:
          factor *= bit ? std::complex<double>(0, -1)
                        : std::complex<double>(0, 1);
          break;
        case PauliLetter::Z:
          if (bit) factor = -factor;
          break;
      }
    }
    out[b ^ flips] += factor * amps[b];
  }
  return out;
}

double expectation(const QuantumState& state, const PauliObservable& p) {
  Amps pp = apply_pauli(p, state.amplitudes, state.n_qubits);
  return inner_real(state.amplitudes, pp);
}

std::vector<double> characteristic(const QuantumState& state,
                                   const ObservableSet& set) {
  std::vector<double> xi(set.size());
  for (std::size_t a = 0; a < set.size(); ++a)
    xi[a] = expectation(state, set.observables[a]);
  if (std::abs(xi[0] - 1.0) > kTol)
    throw InvariantError("characteristic: Xi(0) != 1");
  return xi;
}

MBQCInstance make_mbqc_instance(ObservableSet set, ActionGroup action,
                                std::vector<std::size_t> reference_context,
                                std::size_t b_e, QuantumState state) {
  if (!check_input_group(action))
    throw InvariantError("instance: group action flips signs on Omega_+");
  if (state.n_qubits != set.n_qubits())
    throw InvariantError("instance: state/set qubit mismatch");
  if (!set.is_output(b_e))
    throw InvariantError("instance: b_e is not an output index");
  if (reference_context.empty())
    throw InvariantError("instance: empty reference context");
  for (auto a : reference_context) {
    if (!set.is_measurable(a))
      throw InvariantError("instance: reference context not measurable");
  }
  for (std::size_t i = 0; i < reference_context.size(); ++i)
    for (std::size_t j = i + 1; j < reference_context.size(); ++j)
      if (!commutes(set.observables[reference_context[i]],
                    set.observables[reference_context[j]]))
        throw InvariantError("instance: reference context does not commute");
  // T(e) = chained product of C(e), required to equal T_{b_e} exactly.
  PauliObservable acc = set.observables[reference_context[0]];
  int exponent = acc.sign() ? 2 : 0;
  acc.set_sign(false);
  for (std::size_t i = 1; i < reference_context.size(); ++i) {
    auto prod = multiply(acc, set.observables[reference_context[i]]);
    exponent = (exponent + prod.phase_exponent) % 4;
    acc = prod.result;
  }
  if (exponent % 2 != 0)
    throw InvariantError("instance: non-Hermitian context product");
  bool prod_sign = (exponent == 2);
  if (!acc.same_letters(set.observables[b_e]) ||
      prod_sign != set.observables[b_e].sign())
    throw InvariantError("instance: context product differs from T(e)");
  MBQCInstance inst;
  inst.set = std::move(set);
  inst.action = std::move(action);
  inst.reference_context = std::move(reference_context);
  inst.b_e = b_e;
  inst.state = std::move(state);
  return inst;
}

std::vector<std::size_t> context(const MBQCInstance& instance, std::size_t g) {
  std::vector<std::size_t> out;
  out.reserve(instance.reference_context.size());
  const auto& perm = instance.action.actions[g].perm;
  for (auto a : instance.reference_context) out.push_back(perm[a]);
  std::sort(out.begin(), out.end());
  return out;
}

RunResult run(const MBQCInstance& instance, std::size_t g, uint64_t seed) {
  RunResult res;
  res.indices = context(instance, g);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Amps psi = instance.state.amplitudes;
  for (auto a : res.indices) {
    const auto& obs = instance.set.observables[a];
    Amps pp = apply_pauli(obs, psi, instance.state.n_qubits);
    double e = inner_real(psi, pp) / norm2(psi);
    double p0 = std::clamp(0.5 * (1.0 + e), 0.0, 1.0);
    uint8_t s = unif(rng) < p0 ? 0 : 1;
    double sign = s ? -1.0 : 1.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
      psi[i] = 0.5 * (psi[i] + sign * pp[i]);
    double nn = norm2(psi);
    if (nn < 1e-14)
      throw InvariantError("run: projection annihilated the state");
    double scale = 1.0 / std::sqrt(nn);
    for (auto& x : psi) x *= scale;
    res.outcomes.push_back(s);
    res.output ^= s;
  }
  return res;
}

IdealOutput ideal_output(const MBQCInstance& instance, std::size_t g) {
  std::size_t tg = instance.action.actions[g].perm[instance.b_e];
  double e = expectation(instance.state, instance.set.observables[tg]);
  IdealOutput out;
  out.degenerate = std::abs(e) <= kTol;
  out.bit = (e >= 0.0 || out.degenerate) ? 0 : 1;
  out.success_prob = 0.5 * (1.0 + std::abs(e));
  return out;
}

double witness(const MBQCInstance& instance, const std::vector<uint8_t>& o) {
  if (o.size() != instance.action.group.order())
    throw InvariantError("witness: output length mismatch");
  double w = 0.0;
  for (std::size_t g = 0; g < o.size(); ++g) {
    std::size_t tg = instance.action.actions[g].perm[instance.b_e];
    double e = expectation(instance.state, instance.set.observables[tg]);
    w += 0.5 * (1.0 + (o[g] ? -1.0 : 1.0) * e);
  }
  return w;
}

bool check_symmetry(const MBQCInstance& instance, const PhaseFunction& phi,
                    double tol) {
  auto xi = characteristic(instance.state, instance.set);
  for (std::size_t g = 0; g < instance.action.group.order(); ++g) {
    const auto& perm = instance.action.actions[g].perm;
    for (std::size_t a = 0; a < xi.size(); ++a) {
      double lhs = xi[perm[a]];
      double rhs = (phi.bit(g, a) ? -1.0 : 1.0) * xi[a];
      if (std::abs(lhs - rhs) > tol) return false;
    }
  }
  return true;
}

Lemma2Report check_lemma2_preconditions(const MBQCInstance& instance) {
  Lemma2Report rep;
  std::size_t n = instance.state.n_qubits;
  if (n > 6) throw SizeGuardError("lemma-2 stabilizer scan limited to 6 qubits");
  // Scan the full Pauli group for elements with expectation +-1.
  std::vector<PauliObservable> stabilizers;
  std::size_t strings = 1;
  for (std::size_t q = 0; q < n; ++q) strings *= 4;
  for (std::size_t code = 0; code < strings; ++code) {
    std::vector<PauliLetter> letters(n);
    std::size_t c = code;
    for (std::size_t q = 0; q < n; ++q) {
      letters[q] = static_cast<PauliLetter>(c % 4);
      c /= 4;
    }
    PauliObservable p(letters, false);
    double e = expectation(instance.state, p);
    if (std::abs(e - 1.0) < kTol) {
      stabilizers.push_back(p);
    } else if (std::abs(e + 1.0) < kTol) {
      p.set_sign(true);
      stabilizers.push_back(p);
    }
  }
  rep.stabilizer_count = stabilizers.size();
  rep.stabilizer_state = stabilizers.size() == (std::size_t(1) << n);
  if (!rep.stabilizer_state) {
    rep.note = "precondition check unavailable: not a stabilizer state";
    return rep;
  }
  rep.uniform_success = true;
  double first = ideal_output(instance, 0).success_prob;
  for (std::size_t g = 1; g < instance.action.group.order(); ++g) {
    if (std::abs(ideal_output(instance, g).success_prob - first) > kTol)
      rep.uniform_success = false;
  }
  rep.no_qubit_disentangled = true;
  for (std::size_t q = 0; q < n; ++q) {
    bool found = false;
    for (const auto& s : stabilizers)
      if (s.letter(q) == PauliLetter::Z) found = true;
    if (!found) rep.no_qubit_disentangled = false;
  }
  try {
    auto cs = build_constraints(instance.set);
    auto V = compute_V(instance.set, cs);
    auto xi = characteristic(instance.state, instance.set);
    symmetry_solutions(instance.set, instance.action, V, xi);
    rep.symmetry_holds = true;
  } catch (const InvariantError&) {
    rep.symmetry_holds = false;
  }
  return rep;
}

namespace {

// psi -> O_k[q] psi with O_k[q] = cos(phi) X_k + (-1)^q sin(phi) Y_k.
Amps apply_rotated(const Amps& psi, std::size_t n, std::size_t k, uint8_t q,
                   double phi) {
  std::vector<PauliLetter> lx(n, PauliLetter::I), ly(n, PauliLetter::I);
  lx[k] = PauliLetter::X;
  ly[k] = PauliLetter::Y;
  Amps xs = apply_pauli(PauliObservable(lx, false), psi, n);
  Amps ys = apply_pauli(PauliObservable(ly, false), psi, n);
  double c = std::cos(phi), s = (q ? -1.0 : 1.0) * std::sin(phi);
  Amps out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = c * xs[i] + s * ys[i];
  return out;
}

}  // namespace

std::vector<uint8_t> EmbeddedMbqc::q_of(std::size_t g) const {
  std::vector<uint8_t> q(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    uint8_t bit = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (wiring.get(k, j) && ((g >> j) & 1)) bit ^= 1;
    q[k] = bit;
  }
  return q;
}

double EmbeddedMbqc::ideal_expectation(std::size_t g) const {
  auto q = q_of(g);
  Amps psi = resource.amplitudes;
  for (std::size_t k = 0; k < n; ++k) psi = apply_rotated(psi, n, k, q[k], phi);
  return inner_real(resource.amplitudes, psi);
}

std::pair<std::vector<uint8_t>, uint8_t> EmbeddedMbqc::run(
    std::size_t g, uint64_t seed) const {
  auto q = q_of(g);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Amps psi = resource.amplitudes;
  std::vector<uint8_t> outcomes;
  uint8_t parity = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Amps op = apply_rotated(psi, n, k, q[k], phi);
    double e = inner_real(psi, op) / norm2(psi);
    double p0 = std::clamp(0.5 * (1.0 + e), 0.0, 1.0);
    uint8_t s = unif(rng) < p0 ? 0 : 1;
    double sign = s ? -1.0 : 1.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
      psi[i] = 0.5 * (psi[i] + sign * op[i]);
    double nn = norm2(psi);
    if (nn < 1e-14)
      throw InvariantError("embedded run: projection annihilated the state");
    double scale = 1.0 / std::sqrt(nn);
    for (auto& x : psi) x *= scale;
    outcomes.push_back(s);
    parity ^= s;
  }
  return {outcomes, parity};
}

EmbeddedMbqc embed_standard_mbqc(std::size_t m, std::size_t n,
                                 const BitMatrix& wiring, double phi,
                                 QuantumState resource) {
  if (wiring.rows() != n || wiring.cols() != m)
    throw InvariantError("embed: wiring dimension mismatch");
  if (resource.n_qubits != n)
    throw InvariantError("embed: resource qubit count mismatch");
  EmbeddedMbqc emb;
  emb.m = m;
  emb.n = n;
  emb.wiring = wiring;
  emb.phi = phi;
  emb.resource = resource;
  emb.group = FiniteGroup::z2_power(m);
  if (std::abs(std::sin(phi)) < 1e-12) {
    // Pauli-realizable case: every O_k[q] is X_k and the X-tensor action
    // fixes the whole set, so the instance machinery applies directly.
    std::vector<PauliObservable> measurable;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<PauliLetter> l(n, PauliLetter::I);
      l[k] = PauliLetter::X;
      measurable.emplace_back(l, false);
    }
    std::vector<PauliLetter> all_x(n, PauliLetter::X);
    std::vector<PauliObservable> outputs{PauliObservable(all_x, false)};
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < n; ++k) members.push_back(k + 1);
    auto set = build_observable_set(measurable, outputs,
                                    {Context{members, n + 1}});
    std::vector<ElementAction> gens;
    for (std::size_t j = 0; j < m; ++j) {
      Circuit circ;
      for (std::size_t k = 0; k < n; ++k)
        if (wiring.get(k, j)) circ.push_back({Gate::X, k});
      gens.push_back(action_from_circuit(set, circ));
    }
    ActionGroup ag = gens.empty() ? trivial_action_group(set.size())
                                  : generate(gens);
    emb.instance = make_mbqc_instance(set, ag, members, n + 1, resource);
  }
  return emb;
}

}  // namespace gmbqc
