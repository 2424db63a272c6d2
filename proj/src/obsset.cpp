#include "gmbqc/obsset.hpp"

#include <algorithm>

#include "gmbqc/errors.hpp"

namespace gmbqc {

bool ObservableSet::is_measurable(std::size_t a) const {
  return std::find(measurable.begin(), measurable.end(), a) != measurable.end();
}

bool ObservableSet::is_output(std::size_t a) const {
  return std::find(outputs.begin(), outputs.end(), a) != outputs.end();
}

std::optional<std::size_t> ObservableSet::find_letters(
    const PauliObservable& p) const {
  for (std::size_t i = 0; i < observables.size(); ++i)
    if (observables[i].same_letters(p)) return i;
  return std::nullopt;
}

ObservableSet build_observable_set(std::vector<PauliObservable> measurable,
                                   std::vector<PauliObservable> outputs,
                                   std::vector<Context> contexts) {
  if (measurable.empty() && outputs.empty())
    throw InvariantError("observable set: empty");
  std::size_t n = measurable[0].n_qubits();
  ObservableSet set;
  set.observables.push_back(PauliObservable::identity(n));
  for (auto& p : measurable) {
    set.measurable.push_back(set.observables.size());
    set.observables.push_back(std::move(p));
  }
  for (auto& p : outputs) {
    // An output observable that is also measurable keeps its single index.
    auto existing = set.find_letters(p);
    if (existing && set.observables[*existing] == p) {
      set.outputs.push_back(*existing);
    } else {
      set.outputs.push_back(set.observables.size());
      set.observables.push_back(std::move(p));
    }
  }
  set.contexts = std::move(contexts);
  validate_observable_set(set);
  return set;
}

void validate_observable_set(const ObservableSet& set) {
  if (set.observables.empty() || !set.observables[0].is_identity() ||
      set.observables[0].sign())
    throw InvariantError("observable set: +identity must be at index 0");
  std::size_t n = set.n_qubits();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.observables[i].n_qubits() != n)
      throw InvariantError("observable set: mixed qubit counts");
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set.observables[i] == set.observables[j])
        throw InvariantError("observable set: duplicate entry " +
                             set.observables[i].to_string());
      if (set.observables[i].same_letters(set.observables[j]))
        throw InvariantError("observable set: contains both +T and -T for " +
                             set.observables[j].to_string());
    }
  }
  for (const auto& ctx : set.contexts) {
    if (ctx.members.size() < 2)
      throw InvariantError("context with fewer than 2 members");
    if (ctx.target >= set.size())
      throw InvariantError("context target out of range");
    for (auto m : ctx.members) {
      if (m == 0 || m >= set.size())
        throw InvariantError("context member out of range");
    }
    for (std::size_t i = 0; i < ctx.members.size(); ++i)
      for (std::size_t j = i + 1; j < ctx.members.size(); ++j)
        if (!commutes(set.observables[ctx.members[i]],
                      set.observables[ctx.members[j]]))
          throw InvariantError("context members do not commute");
  }
}

namespace {

std::optional<std::size_t> find_extended(
    const std::vector<PauliObservable>& ext, const PauliObservable& p) {
  for (std::size_t i = 0; i < ext.size(); ++i)
    if (ext[i].same_letters(p)) return i;
  return std::nullopt;
}

}  // namespace

ConstraintSystem build_constraints(const ObservableSet& set) {
  ConstraintSystem cs;
  cs.n_base = set.size();
  cs.extended = set.observables;

  // Binary triples: commuting pairs whose product is in the set (up to sign).
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      const auto& Ta = set.observables[a];
      const auto& Tb = set.observables[b];
      if (!commutes(Ta, Tb)) continue;
      auto prod = multiply(Ta, Tb);
      auto c = set.find_letters(prod.result);
      if (!c) continue;
      // T_a T_b = i^exp * R; for commuting Hermitian factors exp is 0 or 2.
      bool beta = (prod.phase_exponent == 2) ^ set.observables[*c].sign();
      cs.triples.push_back({a, b, *c, beta});
    }
  }

  // Chain each k>2 context through intermediates, left to right.
  for (const auto& ctx : set.contexts) {
    if (ctx.members.size() <= 2) continue;
    std::size_t acc_idx = ctx.members[0];
    for (std::size_t i = 1; i < ctx.members.size(); ++i) {
      std::size_t m = ctx.members[i];
      auto prod = multiply(cs.extended[acc_idx], set.observables[m]);
      bool step_beta = prod.phase_exponent == 2;
      bool last = (i + 1 == ctx.members.size());
      std::size_t next_idx;
      if (last) {
        next_idx = ctx.target;
        if (!set.observables[ctx.target].same_letters(prod.result))
          throw InvariantError("context product does not match its target");
        step_beta ^= set.observables[ctx.target].sign();
      } else {
        auto found = find_extended(cs.extended, prod.result);
        if (found) {
          next_idx = *found;
          step_beta ^= cs.extended[*found].sign();
        } else {
          next_idx = cs.extended.size();
          cs.extended.push_back(prod.result);
          cs.intermediates.push_back({acc_idx, m, step_beta});
        }
      }
      cs.triples.push_back({acc_idx, m, next_idx, step_beta});
      acc_idx = next_idx;
    }
  }

  std::size_t cols = cs.extended.size();
  cs.K = BitMatrix(cs.triples.size(), cols);
  cs.c_vec = BitVector(cs.triples.size());
  for (std::size_t r = 0; r < cs.triples.size(); ++r) {
    const auto& t = cs.triples[r];
    cs.K.row(r).flip(t.a);
    cs.K.row(r).flip(t.b);
    cs.K.row(r).flip(t.c);
    cs.c_vec.set(r, t.beta);
  }
  return cs;
}

ModuleV compute_V(const ObservableSet& set, const ConstraintSystem& cs) {
  auto ext_kernel = cs.K.kernel();
  std::vector<BitVector> projected;
  projected.reserve(ext_kernel.size());
  for (const auto& v : ext_kernel) {
    BitVector p(cs.n_base);
    for (std::size_t i = 0; i < cs.n_base; ++i) p.set(i, v.get(i));
    projected.push_back(std::move(p));
  }
  ModuleV V;
  V.basis = rref_basis(std::move(projected));
  for (const auto& v : V.basis)
    if (v.get(0))
      throw InvariantError("module V: member with v(identity) != 0");
  return V;
}

bool ModuleV::contains(const BitVector& v) const {
  return span_coordinates(basis, v).has_value();
}

BitVector ModuleV::combine(const BitVector& coords) const {
  if (coords.size() != basis.size())
    throw InvariantError("ModuleV::combine: coordinate length mismatch");
  BitVector v(basis.empty() ? 0 : basis[0].size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coords.get(i)) v ^= basis[i];
  return v;
}

std::vector<BitVector> ModuleV::enumerate(std::size_t max_log2) const {
  if (basis.size() > max_log2)
    throw SizeGuardError("module V too large to enumerate: 2^" +
                         std::to_string(basis.size()));
  std::size_t n = basis.empty() ? 0 : basis[0].size();
  std::vector<BitVector> all;
  all.reserve(std::size_t(1) << basis.size());
  for (std::size_t mask = 0; mask < (std::size_t(1) << basis.size()); ++mask) {
    BitVector v(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((mask >> i) & 1) v ^= basis[i];
    all.push_back(std::move(v));
  }
  return all;
}

bool check_separation(const ObservableSet& set, const ModuleV& V) {
  // v(a) = v(b) for all v in V iff columns a and b agree on every basis
  // vector.
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      bool separated = false;
      for (const auto& v : V.basis) {
        if (v.get(a) != v.get(b)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

}  // namespace gmbqc
