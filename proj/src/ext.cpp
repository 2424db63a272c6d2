#include "gmbqc/ext.hpp"

#include <string>

#include "gmbqc/errors.hpp"

namespace gmbqc {

bool SubgroupN::contains(const BitVector& v) const {
  return span_coordinates(basis, v).has_value();
}

SubgroupN compute_N(const ObservableSet& set, const ModuleV& V,
                    const ActionGroup* ag) {
  // Coordinates x over the V-basis with combine(x) vanishing wherever the
  // observable is not measurable.
  BitMatrix M(0, V.dim());
  for (std::size_t a = 0; a < set.size(); ++a) {
    if (set.is_measurable(a)) continue;
    BitVector row(V.dim());
    for (std::size_t j = 0; j < V.dim(); ++j) row.set(j, V.basis[j].get(a));
    M.append_row(row);
  }
  SubgroupN N;
  std::vector<BitVector> vecs;
  for (const auto& coords : M.kernel()) vecs.push_back(V.combine(coords));
  N.basis = rref_basis(std::move(vecs));
  if (ag) {
    for (std::size_t g = 0; g < ag->group.order() && N.closed_under_action;
         ++g) {
      for (const auto& n : N.basis) {
        if (!N.contains(module_action(*ag, g, n, V))) {
          N.closed_under_action = false;
          break;
        }
      }
    }
  }
  return N;
}

GModule GModule::trivial(std::size_t group_order, std::size_t d) {
  GModule m;
  m.dim = d;
  m.right_action.assign(group_order, BitMatrix::identity(d));
  return m;
}

GModule module_from_N(const SubgroupN& N, const ActionGroup& ag) {
  GModule m;
  m.dim = N.dim();
  for (std::size_t h = 0; h < ag.group.order(); ++h) {
    const auto& perm = ag.actions[h].perm;
    BitMatrix R(m.dim, m.dim);
    for (std::size_t j = 0; j < m.dim; ++j) {
      // (n o h)(a) = n(ha).
      BitVector image(N.basis[j].size());
      for (std::size_t a = 0; a < image.size(); ++a)
        image.set(a, N.basis[j].get(perm[a]));
      auto coords = span_coordinates(N.basis, image);
      if (!coords)
        throw InvariantError("N is not closed under the group action");
      for (std::size_t i = 0; i < m.dim; ++i) R.set(i, j, coords->get(i));
    }
    m.right_action.push_back(std::move(R));
  }
  return m;
}

BitVector LambdaCochain::flat() const {
  std::size_t d = values.empty() ? 0 : values[0].size();
  BitVector out(values.size() * d);
  for (std::size_t e = 0; e < values.size(); ++e)
    for (std::size_t i = 0; i < d; ++i)
      if (values[e].get(i)) out.set(e * d + i, true);
  return out;
}

bool LambdaCochain::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

LambdaCochain lambda_from_phase(const PhaseFunction& phi, const ActionGroup& ag,
                                const SubgroupN& N) {
  auto d = coboundary(phi, ag);
  LambdaCochain lam;
  lam.order = ag.group.order();
  for (const auto& value : d.d_phi.values) {
    auto coords = span_coordinates(N.basis, value);
    if (!coords)
      throw InvariantError(
          "lambda value outside N: Phi is not a G-MBQC symmetry over this "
          "observable set");
    lam.values.push_back(std::move(*coords));
  }
  return lam;
}

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> cocycle_defect(
    const LambdaCochain& lambda, const FiniteGroup& G, const GModule& M) {
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      for (std::size_t k = 0; k < G.order(); ++k) {
        BitVector val = M.act(k, lambda.at(g, h));
        val ^= lambda.at(G.mul(g, h), k);
        val ^= lambda.at(g, G.mul(h, k));
        val ^= lambda.at(h, k);
        if (!val.is_zero()) return std::make_tuple(g, h, k);
      }
  return std::nullopt;
}

std::size_t ExtensionGroup::id(std::size_t g, std::size_t n_mask) const {
  return index_of[g * (std::size_t(1) << n_dim) + n_mask];
}

std::pair<std::size_t, std::size_t> ExtensionGroup::parts(std::size_t e) const {
  std::size_t blocks = std::size_t(1) << n_dim;
  std::size_t raw = raw_of[e];
  return {raw / blocks, raw % blocks};
}

ExtensionGroup build_E(const FiniteGroup& G, const GModule& M,
                       const LambdaCochain& lambda) {
  if (auto defect = cocycle_defect(lambda, G, M))
    throw InvariantError("build_E: d lambda != 0 at triple (" +
                         std::to_string(std::get<0>(*defect)) + "," +
                         std::to_string(std::get<1>(*defect)) + "," +
                         std::to_string(std::get<2>(*defect)) + ")");
  std::size_t blocks = std::size_t(1) << M.dim;
  std::size_t order = G.order() * blocks;
  if (order > 4096) throw SizeGuardError("extension group exceeds cap 4096");
  ExtensionGroup E;
  E.n_dim = M.dim;
  E.g_order = G.order();
  auto mask_of = [&](const BitVector& coords) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < M.dim; ++i)
      if (coords.get(i)) mask |= std::size_t(1) << i;
    return mask;
  };
  auto coords_of = [&](std::size_t mask) {
    BitVector c(M.dim);
    for (std::size_t i = 0; i < M.dim; ++i)
      if ((mask >> i) & 1) c.set(i, true);
    return c;
  };
  std::vector<std::vector<std::size_t>> raw(order,
                                            std::vector<std::size_t>(order));
  for (std::size_t x = 0; x < order; ++x) {
    auto [g, n] = std::pair{x / blocks, x % blocks};
    for (std::size_t y = 0; y < order; ++y) {
      auto [h, np] = std::pair{y / blocks, y % blocks};
      BitVector res = lambda.at(g, h);
      res ^= M.act(h, coords_of(n));
      res ^= coords_of(np);
      raw[x][y] = G.mul(g, h) * blocks + mask_of(res);
    }
  }
  // The identity need not sit at raw index 0 (lambda(e,e) may be nonzero);
  // relabel by swapping it into place.
  std::size_t ident = order;
  for (std::size_t x = 0; x < order; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < order && ok; ++y)
      ok = raw[x][y] == y && raw[y][x] == y;
    if (ok) {
      ident = x;
      break;
    }
  }
  if (ident == order) throw InvariantError("build_E: no identity element");
  std::vector<std::size_t> relabel(order);
  for (std::size_t x = 0; x < order; ++x) relabel[x] = x;
  std::swap(relabel[0], relabel[ident]);
  E.group.table.assign(order, std::vector<std::size_t>(order));
  std::vector<std::size_t> inverse_relabel(order);
  for (std::size_t x = 0; x < order; ++x) inverse_relabel[relabel[x]] = x;
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      E.group.table[x][y] = inverse_relabel[raw[relabel[x]][relabel[y]]];
  E.group.inverse.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      if (E.group.table[x][y] == 0) E.group.inverse[x] = y;
  E.group.words.assign(order, {});
  E.raw_of = relabel;
  E.index_of = inverse_relabel;
  E.group.validate();
  // N sits inside E as the kernel of the projection to G; check normality.
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t k = 0; k < order; ++k) {
      if (relabel[k] / blocks != 0) continue;  // kernel elements have g = e
      std::size_t conj = E.group.mul(E.group.mul(x, k), E.group.inv(x));
      if (relabel[conj] / blocks != 0)
        throw InvariantError("build_E: N is not normal");
    }
  }
  // Quotient by the kernel reproduces G's table (projection homomorphism).
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t gx = relabel[x] / blocks, gy = relabel[y] / blocks;
      if (relabel[E.group.table[x][y]] / blocks != G.mul(gx, gy))
        throw InvariantError("build_E: quotient differs from G");
    }
  return E;
}

namespace {

// Index helpers for inhomogeneous cochains with d-dimensional coefficients.
std::size_t c1_index(std::size_t g, std::size_t i, std::size_t d) {
  return g * d + i;
}
std::size_t c2_index(std::size_t g, std::size_t h, std::size_t i,
                     std::size_t q, std::size_t d) {
  return (g * q + h) * d + i;
}
std::size_t c3_index(std::size_t g, std::size_t h, std::size_t k,
                     std::size_t i, std::size_t q, std::size_t d) {
  return ((g * q + h) * q + k) * d + i;
}

}  // namespace

H2Result h2(const FiniteGroup& G, const GModule& M) {
  std::size_t q = G.order(), d = M.dim;
  if (q > 16) throw SizeGuardError("h2: group order exceeds 16");
  if (d > 8) throw SizeGuardError("h2: module dimension exceeds 8");
  H2Result res;
  res.d1 = BitMatrix(q * q * d, q * d);
  for (std::size_t g = 0; g < q; ++g) {
    for (std::size_t h = 0; h < q; ++h) {
      // (d1 n)(g,h) = n(g)^h + n(h) + n(gh).
      const BitMatrix& R = M.right_action[h];
      for (std::size_t i = 0; i < d; ++i) {
        auto& row = res.d1.row(c2_index(g, h, i, q, d));
        for (std::size_t j = 0; j < d; ++j)
          if (R.get(i, j)) row.flip(c1_index(g, j, d));
        row.flip(c1_index(h, i, d));
        row.flip(c1_index(G.mul(g, h), i, d));
      }
    }
  }
  res.d2 = BitMatrix(q * q * q * d, q * q * d);
  for (std::size_t g = 0; g < q; ++g) {
    for (std::size_t h = 0; h < q; ++h) {
      for (std::size_t k = 0; k < q; ++k) {
        // (d2 l)(g,h,k) = l(g,h)^k + l(gh,k) + l(g,hk) + l(h,k).
        const BitMatrix& R = M.right_action[k];
        for (std::size_t i = 0; i < d; ++i) {
          auto& row = res.d2.row(c3_index(g, h, k, i, q, d));
          for (std::size_t j = 0; j < d; ++j)
            if (R.get(i, j)) row.flip(c2_index(g, h, j, q, d));
          row.flip(c2_index(G.mul(g, h), k, i, q, d));
          row.flip(c2_index(g, G.mul(h, k), i, q, d));
          row.flip(c2_index(h, k, i, q, d));
        }
      }
    }
  }
  res.cocycle_basis = res.d2.kernel();
  std::vector<BitVector> images;
  auto d1t = res.d1.transposed();
  for (std::size_t c = 0; c < d1t.rows(); ++c) images.push_back(d1t.row(c));
  res.coboundary_basis = rref_basis(std::move(images));
  res.dim = res.cocycle_basis.size() - res.coboundary_basis.size();
  return res;
}

BitVector classify(const LambdaCochain& lambda, const FiniteGroup& G,
                   const GModule& M) {
  if (cocycle_defect(lambda, G, M))
    throw InvariantError("classify: d lambda != 0");
  auto cohomology = h2(G, M);
  BitVector v = lambda.flat();
  for (const auto& b : cohomology.coboundary_basis) {
    std::size_t pivot = b.first_set();
    if (v.get(pivot)) v ^= b;
  }
  return v;
}

std::vector<double> n_average(const std::vector<double>& xi,
                              const SubgroupN& N) {
  std::vector<double> out = xi;
  for (std::size_t a = 0; a < out.size(); ++a)
    for (const auto& n : N.basis)
      if (n.get(a)) out[a] = 0.0;
  return out;
}

}  // namespace gmbqc
