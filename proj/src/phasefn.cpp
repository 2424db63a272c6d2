#include "gmbqc/phasefn.hpp"

#include <cmath>

#include "gmbqc/errors.hpp"

namespace gmbqc {

bool TwoCochain::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

CoboundaryResult coboundary(const PhaseFunction& phi, const ActionGroup& ag) {
  std::size_t order = ag.group.order();
  std::size_t n = phi.values.at(0).size();
  TwoCochain d;
  d.order = order;
  d.values.assign(order * order, BitVector(n));
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      std::size_t gh = ag.group.mul(g, h);
      BitVector& entry = d.values[g * order + h];
      const auto& perm_h = ag.actions[h].perm;
      for (std::size_t a = 0; a < n; ++a) {
        bool bit = phi.bit(g, perm_h[a]) ^ phi.bit(h, a) ^ phi.bit(gh, a);
        entry.set(a, bit);
      }
    }
  }
  bool exact = d.is_zero();
  return CoboundaryResult{std::move(d), exact};
}

PhaseFunction from_assignment(const BitVector& s, const ActionGroup& ag) {
  std::size_t order = ag.group.order();
  std::size_t n = s.size();
  PhaseFunction phi;
  phi.values.assign(order, BitVector(n));
  for (std::size_t g = 0; g < order; ++g) {
    const auto& perm = ag.actions[g].perm;
    for (std::size_t a = 0; a < n; ++a)
      phi.values[g].set(a, s.get(perm[a]) ^ s.get(a));
  }
  return phi;
}

std::vector<uint8_t> output_function(const PhaseFunction& phi,
                                     const ActionGroup& ag, std::size_t b_e,
                                     bool o_e) {
  std::vector<uint8_t> o(ag.group.order());
  for (std::size_t g = 0; g < o.size(); ++g)
    o[g] = phi.bit(g, b_e) ^ o_e;
  return o;
}

PhaseFunctionFamily symmetry_solutions(const ObservableSet& set,
                                       const ActionGroup& ag, const ModuleV& V,
                                       const std::vector<double>& xi,
                                       double tol) {
  std::size_t n = set.size();
  if (xi.size() != n)
    throw InvariantError("symmetry_solutions: Xi length mismatch");
  if (!check_input_group(ag))
    throw InvariantError("symmetry_solutions: action has sign flips");
  std::size_t m = V.dim();
  PhaseFunctionFamily fam;
  fam.V = &V;
  fam.particular.values.assign(ag.group.order(), BitVector(n));
  fam.kernel_coords.resize(ag.group.order());

  for (std::size_t g = 0; g < ag.group.order(); ++g) {
    const auto& perm = ag.actions[g].perm;
    BitMatrix M(0, m);
    std::vector<bool> rhs_bits;
    for (std::size_t a = 0; a < n; ++a) {
      double xa = xi[a], xga = xi[perm[a]];
      if (std::abs(std::abs(xga) - std::abs(xa)) > tol)
        throw InvariantError("state not G-symmetric");
      if (std::abs(xa) <= tol) continue;  // unconstrained
      BitVector row(m);
      for (std::size_t j = 0; j < m; ++j) row.set(j, V.basis[j].get(a));
      M.append_row(row);
      rhs_bits.push_back((xga < 0) != (xa < 0));
    }
    BitVector rhs(rhs_bits.size());
    for (std::size_t r = 0; r < rhs_bits.size(); ++r) rhs.set(r, rhs_bits[r]);
    auto sol = M.solve_affine(rhs);
    if (!sol)
      throw InvariantError(
          "state symmetry signs not realizable by a phase vector in V");
    fam.particular.values[g] = V.combine(sol->particular);
    fam.kernel_coords[g] = std::move(sol->kernel_basis);
  }
  return fam;
}

CertifyResult certify_contextuality(const ObservableSet& set,
                                    const ActionGroup& ag, const ModuleV& V,
                                    const std::vector<uint8_t>& o,
                                    std::size_t b_e, bool o_e) {
  std::size_t order = ag.group.order();
  std::size_t n = set.size();
  std::size_t m = V.dim();
  if (o.size() != order)
    throw InvariantError("certify: output function not defined on all of G");
  // Unknowns: V-coordinates of Phi_g, laid out g-major.
  auto var = [m](std::size_t g, std::size_t j) { return g * m + j; };
  BitMatrix M(0, order * m);
  std::vector<bool> rhs_bits;

  // Output relation: Phi_g(b_e) = o(g) + o_e.
  for (std::size_t g = 0; g < order; ++g) {
    BitVector row(order * m);
    for (std::size_t j = 0; j < m; ++j)
      if (V.basis[j].get(b_e)) row.flip(var(g, j));
    M.append_row(row);
    rhs_bits.push_back((o[g] ^ (o_e ? 1 : 0)) != 0);
  }
  // Group compatibility dPhi = 0, entrywise.
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      std::size_t gh = ag.group.mul(g, h);
      const auto& perm_h = ag.actions[h].perm;
      for (std::size_t a = 0; a < n; ++a) {
        BitVector row(order * m);
        for (std::size_t j = 0; j < m; ++j) {
          if (V.basis[j].get(perm_h[a])) row.flip(var(g, j));
          if (V.basis[j].get(a)) row.flip(var(h, j));
          if (V.basis[j].get(a)) row.flip(var(gh, j));
        }
        if (row.is_zero()) continue;
        M.append_row(row);
        rhs_bits.push_back(false);
      }
    }
  }
  BitVector rhs(rhs_bits.size());
  for (std::size_t r = 0; r < rhs_bits.size(); ++r) rhs.set(r, rhs_bits[r]);

  auto sol = M.solve_affine(rhs);
  if (sol) {
    PhaseFunction phi;
    phi.values.reserve(order);
    for (std::size_t g = 0; g < order; ++g) {
      BitVector coords(m);
      for (std::size_t j = 0; j < m; ++j)
        coords.set(j, sol->particular.get(var(g, j)));
      phi.values.push_back(V.combine(coords));
    }
    return CertifyResult{false, std::move(phi), {}};
  }

  // Infeasibility certificate: y with y^T M = 0 and y^T rhs = 1.
  auto Mt = M.transposed();
  Mt.append_row(rhs);
  BitVector target(Mt.rows());
  target.set(Mt.rows() - 1, true);
  auto cert = Mt.solve_affine(target);
  CertifyResult res{true, std::nullopt, {}};
  if (cert) {
    for (std::size_t r = 0; r < M.rows(); ++r)
      if (cert->particular.get(r)) res.infeasibility_rows.push_back(r);
  }
  return res;
}

}  // namespace gmbqc
