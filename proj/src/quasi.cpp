#include "gmbqc/quasi.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "gmbqc/errors.hpp"

namespace gmbqc {

namespace {

BitVector from_mask(const ModuleV& V, std::size_t mask) {
  BitVector coords(V.dim());
  for (std::size_t i = 0; i < V.dim(); ++i)
    if ((mask >> i) & 1) coords.set(i, true);
  return V.combine(coords);
}

void require_separation(const ObservableSet& set, const ModuleV& V) {
  if (!check_separation(set, V))
    throw InvariantError(
        "phase space requires V to separate the index set (character "
        "orthogonality fails)");
}

}  // namespace

PhasePointOperator phase_point(const ObservableSet& set, const ModuleV& V,
                               const BitVector& v) {
  require_separation(set, V);
  if (!V.contains(v)) throw InvariantError("phase_point: v not in V");
  std::size_t dim = std::size_t(1) << set.n_qubits();
  PhasePointOperator op;
  op.v = v;
  op.matrix.assign(dim, std::vector<std::complex<double>>(dim, 0.0));
  double scale = 1.0 / double(std::size_t(1) << V.dim());
  for (std::size_t a = 0; a < set.size(); ++a) {
    auto m = to_matrix(set.observables[a]);
    double sgn = v.get(a) ? -scale : scale;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) op.matrix[r][c] += sgn * m[r][c];
  }
  return op;
}

QuasiProbability quasiprob(const QuantumState& state, const ObservableSet& set,
                           const ModuleV& V, std::size_t max_log2) {
  require_separation(set, V);
  if (V.dim() > max_log2)
    throw SizeGuardError("phase space too large: 2^" +
                         std::to_string(V.dim()));
  auto xi = characteristic(state, set);
  QuasiProbability q;
  q.dim = V.dim();
  std::size_t points = std::size_t(1) << V.dim();
  q.values.resize(points);
  double scale = 1.0 / double(points);
  for (std::size_t mask = 0; mask < points; ++mask) {
    BitVector v = from_mask(V, mask);
    double acc = 0.0;
    for (std::size_t a = 0; a < set.size(); ++a)
      acc += (v.get(a) ? -1.0 : 1.0) * xi[a];
    q.values[mask] = scale * acc;
  }
  double total = 0.0;
  for (double x : q.values) total += x;
  if (std::abs(total - 1.0) > 1e-9)
    throw InvariantError("quasiprob: normalization failed");
  return q;
}

std::vector<double> fourier(const QuasiProbability& q, const ObservableSet& set,
                            const ModuleV& V) {
  std::vector<double> xi(set.size(), 0.0);
  for (std::size_t mask = 0; mask < q.values.size(); ++mask) {
    BitVector v = from_mask(V, mask);
    for (std::size_t a = 0; a < set.size(); ++a)
      xi[a] += (v.get(a) ? -1.0 : 1.0) * q.values[mask];
  }
  return xi;
}

double outcome_prob(const QuasiProbability& q, const ModuleV& V, std::size_t a,
                    bool s_bit) {
  double acc = 0.0;
  for (std::size_t mask = 0; mask < q.values.size(); ++mask)
    if (from_mask(V, mask).get(a) == s_bit) acc += q.values[mask];
  return acc;
}

CovarianceReport check_covariance(const ObservableSet& set, const ModuleV& V,
                                  const ActionGroup& ag,
                                  const std::vector<Circuit>& generators,
                                  double tol) {
  if (!check_input_group(ag))
    throw InvariantError("covariance: action is not an input group");
  if (V.dim() > 12)
    throw SizeGuardError("covariance check limited to dim V <= 12");
  require_separation(set, V);
  std::size_t n = set.n_qubits();
  std::vector<DenseMatrix> gen_u;
  for (const auto& c : generators) gen_u.push_back(circuit_unitary(c, n));
  CovarianceReport rep;
  rep.verified = true;
  for (std::size_t g = 0; g < ag.group.order(); ++g) {
    // S_g in V-coordinates.
    BitMatrix S(V.dim(), V.dim());
    for (std::size_t j = 0; j < V.dim(); ++j) {
      BitVector image = module_action(ag, g, V.basis[j], V);
      auto coords = span_coordinates(V.basis, image);
      if (!coords) throw InvariantError("covariance: image left V");
      for (std::size_t i = 0; i < V.dim(); ++i) S.set(i, j, coords->get(i));
    }
    if (S.rank() != V.dim())
      throw InvariantError("covariance: S_g is singular");
    // u(g) from the generator word.
    std::size_t dim = std::size_t(1) << n;
    DenseMatrix u(dim, std::vector<std::complex<double>>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) u[i][i] = 1.0;
    for (auto w : ag.group.words[g]) u = matmul(u, gen_u.at(w));
    DenseMatrix udag = dagger(u);
    for (std::size_t mask = 0;
         mask < (std::size_t(1) << V.dim()) && rep.verified; ++mask) {
      BitVector v = from_mask(V, mask);
      auto av = phase_point(set, V, v);
      BitVector coords(V.dim());
      for (std::size_t i = 0; i < V.dim(); ++i) coords.set(i, (mask >> i) & 1);
      BitVector sv = V.combine(S.mul(coords));
      auto asv = phase_point(set, V, sv);
      DenseMatrix conj = matmul(matmul(u, av.matrix), udag);
      for (std::size_t r = 0; r < dim && rep.verified; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          if (std::abs(conj[r][c] - asv.matrix[r][c]) > tol) {
            rep.verified = false;
            rep.mismatch = {g, mask};
            break;
          }
    }
    rep.S.push_back(std::move(S));
  }
  return rep;
}

std::string quasiprob_csv(const QuasiProbability& q, const ModuleV& V) {
  std::ostringstream out;
  out << "coords,flips,q\n";
  for (std::size_t mask = 0; mask < q.values.size(); ++mask) {
    for (std::size_t i = 0; i < q.dim; ++i) out << ((mask >> i) & 1);
    out << ",\"";
    BitVector v = from_mask(V, mask);
    bool first = true;
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (!v.get(a)) continue;
      if (!first) out << " ";
      out << a;
      first = false;
    }
    out << "\"," << q.values[mask] << "\n";
  }
  return out.str();
}

}  // namespace gmbqc
