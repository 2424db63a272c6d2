#include "gmbqc/hvm.hpp"

#include <set>
#include <string>
#include <utility>

#include "gmbqc/errors.hpp"

namespace gmbqc {

bool AssignmentSpace::contains(const BitVector& s) const {
  if (!particular) return false;
  return span_coordinates(kernel_basis, s ^ *particular).has_value();
}

std::vector<BitVector> AssignmentSpace::all(std::size_t max_log2) const {
  if (!particular) return {};
  if (kernel_basis.size() > max_log2)
    throw SizeGuardError("assignment space too large to sweep: 2^" +
                         std::to_string(kernel_basis.size()));
  std::vector<BitVector> out;
  out.reserve(std::size_t(1) << kernel_basis.size());
  for (std::size_t mask = 0; mask < (std::size_t(1) << kernel_basis.size());
       ++mask) {
    BitVector s = *particular;
    for (std::size_t i = 0; i < kernel_basis.size(); ++i)
      if ((mask >> i) & 1) s ^= kernel_basis[i];
    out.push_back(std::move(s));
  }
  return out;
}

bool check_consistent(const BitVector& s, const ConstraintSystem& cs) {
  if (s.size() != cs.n_base) return false;
  // Intermediates are forced by their defining factor pair.
  BitVector ext(cs.extended.size());
  for (std::size_t a = 0; a < cs.n_base; ++a) ext.set(a, s.get(a));
  for (std::size_t t = 0; t < cs.intermediates.size(); ++t) {
    const auto& im = cs.intermediates[t];
    ext.set(cs.n_base + t,
            ext.get(im.lhs) ^ ext.get(im.rhs) ^ (im.beta ? 1 : 0));
  }
  for (const auto& t : cs.triples)
    if ((ext.get(t.a) ^ ext.get(t.b) ^ ext.get(t.c)) != (t.beta ? 1 : 0))
      return false;
  return true;
}

AssignmentSpace enumerate_assignments(const ConstraintSystem& cs) {
  AssignmentSpace space;
  auto sol = cs.K.solve_affine(cs.c_vec);
  if (!sol) return space;
  // Project to the base columns; intermediates are determined, so the
  // projection is faithful.
  BitVector part(cs.n_base);
  for (std::size_t a = 0; a < cs.n_base; ++a)
    part.set(a, sol->particular.get(a));
  std::vector<BitVector> kern;
  for (const auto& v : sol->kernel_basis) {
    BitVector p(cs.n_base);
    for (std::size_t a = 0; a < cs.n_base; ++a) p.set(a, v.get(a));
    kern.push_back(std::move(p));
  }
  space.particular = std::move(part);
  space.kernel_basis = rref_basis(std::move(kern));
  return space;
}

bool check_lemma1(const AssignmentSpace& space, const ActionGroup& ag,
                  const ModuleV& V, std::size_t max_log2) {
  if (space.empty()) throw InvariantError("lemma 1: empty assignment space");
  auto members = space.all(max_log2);
  for (std::size_t g = 0; g < ag.group.order(); ++g) {
    const auto& perm_ginv = ag.actions[ag.group.inv(g)].perm;
    for (const auto& s : members) {
      BitVector gs(s.size());
      for (std::size_t a = 0; a < s.size(); ++a)
        gs.set(a, s.get(perm_ginv[a]));
      if (!space.contains(gs)) return false;
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!V.contains(members[i] ^ members[j])) return false;
  return true;
}

DeltaResult delta(const AssignmentSpace& space, const ActionGroup& ag,
                  const std::vector<uint8_t>& o, std::size_t b_e) {
  if (space.empty())
    throw InvariantError("delta: no consistent assignment exists");
  if (o.size() != ag.group.order())
    throw InvariantError("delta: output length mismatch");
  DeltaResult res;
  res.delta = o.size() + 1;
  for (const auto& s : space.all()) {
    std::size_t wt = 0;
    for (std::size_t g = 0; g < o.size(); ++g) {
      uint8_t os = s.get(ag.actions[g].perm[b_e]) ? 1 : 0;
      wt += (os != (o[g] & 1)) ? 1 : 0;
    }
    if (wt < res.delta) {
      res.delta = wt;
      res.argmin = s;
    }
  }
  res.classical_max = ag.group.order() - res.delta;
  return res;
}

ReductionResult classical_reduction(const std::vector<uint8_t>& o,
                                    const ValueAssignment& s_star,
                                    const ActionGroup& ag, std::size_t b_e) {
  if (o.size() != ag.group.order())
    throw InvariantError("reduction: output length mismatch");
  ReductionResult res;
  for (std::size_t g = 0; g < o.size(); ++g) {
    uint8_t os = s_star.bits.get(ag.actions[g].perm[b_e]) ? 1 : 0;
    if (os != (o[g] & 1)) res.g_tilde.push_back(g);
    bool in_table = !res.g_tilde.empty() && res.g_tilde.back() == g;
    res.outputs.push_back(os ^ (in_table ? 1 : 0));
  }
  return res;
}

CcResult cc_coprocessor(const ObservableSet& set, const ActionGroup& ag,
                        const PhaseFunction& phi,
                        const std::vector<std::size_t>& word,
                        std::size_t b_e) {
  if (!coboundary(phi, ag).exact)
    throw InvariantError("cc_coprocessor: phase function is not exact");
  // Restricted memory: Phi_r(a) for generator elements r and measurable a.
  std::set<std::size_t> gens(ag.group.generators.begin(),
                             ag.group.generators.end());
  std::set<std::pair<std::size_t, std::size_t>> cells;
  CcResult res;
  res.memory_bound = set.measurable.size() * gens.size();
  auto read = [&](std::size_t r, std::size_t a) -> uint8_t {
    if (gens.find(r) == gens.end())
      throw InvariantError("cc_coprocessor: read outside generator memory");
    if (!set.is_measurable(a))
      throw InvariantError("cc_coprocessor: read at a non-measurable index");
    cells.insert({r, a});
    ++res.reads;
    return phi.bit(r, a) ? 1 : 0;
  };
  // g = word[0] * ... * word[k-1]; the cocycle decomposition
  // Phi_g(b_e) = sum_i Phi_{g_i}(g(i-1) b_e) consumes the rightmost factor
  // first, so walk the word from the right while b_e is dragged along by
  // index maps only.
  std::size_t b_cur = b_e;
  for (std::size_t i = word.size(); i-- > 0;) {
    std::size_t r = ag.group.generators.at(word[i]);
    const Context* ctx = nullptr;
    for (const auto& c : set.contexts)
      if (c.target == b_cur) ctx = &c;
    if (!ctx)
      throw InvariantError(
          "cc_coprocessor: no context with the current output as target");
    for (auto m : ctx->members) res.output ^= read(r, m);
    b_cur = ag.actions[r].perm[b_cur];
  }
  res.memory_cells = cells.size();
  if (res.memory_cells > res.memory_bound)
    throw InvariantError("cc_coprocessor: memory bound violated");
  return res;
}

}  // namespace gmbqc
