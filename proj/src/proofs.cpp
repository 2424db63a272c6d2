#include "gmbqc/proofs.hpp"

#include <algorithm>

#include "gmbqc/errors.hpp"

namespace gmbqc {

BitVector transform_assignment(const BitVector& s, const ElementAction& h) {
  if (s.size() != h.perm.size())
    throw InvariantError("transform_assignment: size mismatch");
  BitVector out(s.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    out.set(a, s.get(h.perm[a]) ^ h.signs.get(a));
  return out;
}

namespace {

BitVector left_combine(const BitVector& sel, const BitMatrix& K) {
  BitVector acc(K.cols());
  for (std::size_t r = 0; r < K.rows(); ++r)
    if (sel.get(r)) acc ^= K.row(r);
  return acc;
}

// K * P_h: entry (r, perm_h(b)) = K(r, b).
BitMatrix permute_columns(const BitMatrix& K,
                          const std::vector<std::size_t>& perm) {
  BitMatrix out(K.rows(), K.cols());
  for (std::size_t r = 0; r < K.rows(); ++r)
    for (std::size_t b = 0; b < K.cols(); ++b)
      if (K.get(r, b)) out.set(r, perm[b], true);
  return out;
}

}  // namespace

bool verify_parity(const ParityCertificate& cert, const ConstraintSystem& cs) {
  if (cert.b.size() != cs.K.rows()) return false;
  return left_combine(cert.b, cs.K).is_zero() && cert.b.dot(cs.c_vec);
}

bool verify_symmetry(const SymmetryCertificate& cert,
                     const ConstraintSystem& cs,
                     const ActionGroup& symmetry) {
  if (cert.a.size() != cs.K.rows()) return false;
  if (cert.h >= symmetry.group.order()) return false;
  auto ext = extend_action(cs, symmetry.actions[cert.h]);
  BitMatrix M = cs.K ^ permute_columns(cs.K, ext.perm);
  if (!left_combine(cert.a, M).is_zero()) return false;
  return cert.a.dot(cs.K.mul(ext.signs));
}

std::optional<ParityCertificate> find_parity_proof(const ConstraintSystem& cs) {
  auto kern = cs.K.transposed().kernel();
  for (const auto& y : kern)
    if (y.dot(cs.c_vec)) return ParityCertificate{y};
  return std::nullopt;
}

std::optional<SymmetryCertificate> find_symmetry_proof(
    const ConstraintSystem& cs, const ActionGroup& symmetry) {
  for (std::size_t h = 1; h < symmetry.group.order(); ++h) {
    auto ext = extend_action(cs, symmetry.actions[h]);
    BitMatrix M = cs.K ^ permute_columns(cs.K, ext.perm);
    BitVector kv = cs.K.mul(ext.signs);
    // a^T M = 0 and a^T (K v_h) = 1, as one affine system in a.
    BitMatrix sys = M.transposed();
    sys.append_row(kv);
    BitVector rhs(sys.rows());
    rhs.set(sys.rows() - 1, true);
    auto sol = sys.solve_affine(rhs);
    if (sol) {
      SymmetryCertificate cert{sol->particular, h};
      if (!verify_symmetry(cert, cs, symmetry))
        throw InvariantError("symmetry proof failed re-verification");
      return cert;
    }
  }
  return std::nullopt;
}

ParityCertificate relate(const SymmetryCertificate& cert,
                         const ConstraintSystem& cs,
                         const ActionGroup& symmetry) {
  auto ext = extend_action(cs, symmetry.actions[cert.h]);
  // Row permutation sigma with K P_h = P'_h K: the image of triple
  // (a, b, c, beta) is the stored triple on (ha, hb, hc).
  std::size_t rows = cs.K.rows();
  std::vector<std::size_t> sigma(rows, rows);
  std::vector<std::size_t> sigma_inv(rows, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& t = cs.triples[r];
    std::size_t ia = ext.perm[t.a], ib = ext.perm[t.b], ic = ext.perm[t.c];
    for (std::size_t s = 0; s < rows; ++s) {
      const auto& u = cs.triples[s];
      bool pair_match = (u.a == ia && u.b == ib) || (u.a == ib && u.b == ia);
      if (pair_match && u.c == ic) {
        sigma[r] = s;
        break;
      }
    }
    if (sigma[r] == rows || sigma_inv[sigma[r]] != rows)
      throw InvariantError(
          "relate: constraint rows are not permuted by the symmetry element");
    sigma_inv[sigma[r]] = r;
  }
  BitVector b(rows);
  for (std::size_t s = 0; s < rows; ++s)
    b.set(s, cert.a.get(s) ^ cert.a.get(sigma_inv[s]));
  ParityCertificate out{b};
  if (!verify_parity(out, cs))
    throw InvariantError("relate: constructed certificate failed to verify");
  return out;
}

bool check_lemma4(const ObservableSet& set, const ActionGroup& ag) {
  (void)set;
  return check_input_group(ag);
}

namespace {

PauliObservable P(const std::string& text) {
  return PauliObservable::parse(text);
}

std::vector<PauliObservable> parse_all(const std::vector<std::string>& texts) {
  std::vector<PauliObservable> out;
  for (const auto& t : texts) out.push_back(P(t));
  return out;
}

QuantumState ghz_state() {
  return QuantumState::from_stabilizers({P("+XXX"), P("+ZZI"), P("+IZZ")});
}

Fixture ghz_like(const std::string& name, bool with_star_line) {
  Fixture fx;
  fx.name = name;
  std::vector<Context> contexts = {
      {{1, 2, 3}, 7}, {{1, 5, 6}, 8}, {{4, 2, 6}, 9}, {{4, 5, 3}, 10}};
  if (with_star_line) contexts.push_back({{7, 8, 9, 10}, 0});
  fx.set = build_observable_set(
      parse_all({"+XII", "+IXI", "+IIX", "+YII", "+IYI", "+IIY"}),
      parse_all({"+XXX", "+XYY", "+YXY", "+YYX"}), contexts);
  fx.input_generators = {{{Gate::A, 1}, {Gate::A, 2}},
                         {{Gate::A, 0}, {Gate::A, 2}}};
  fx.reference_context = {1, 2, 3};
  fx.b_e = 7;
  fx.state = ghz_state();
  if (!with_star_line) fx.target_outputs = {0, 1, 1, 1};
  return fx;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "ghz-or",      "bell-identity", "mermin-square",
      "mermin-star", "dressed-star",  "one-qubit"};
  return names;
}

Fixture builtin(const std::string& name) {
  if (name == "ghz-or") return ghz_like(name, false);
  if (name == "mermin-star") {
    auto fx = ghz_like(name, true);
    fx.b_e.reset();
    fx.reference_context.clear();
    return fx;
  }
  if (name == "bell-identity") {
    Fixture fx;
    fx.name = name;
    fx.set = build_observable_set(parse_all({"+XI", "+IX", "+YI", "+IY"}),
                                  parse_all({"+XX", "+YY"}),
                                  {{{1, 2}, 5}, {{3, 4}, 6}});
    fx.input_generators = {{{Gate::A, 0}, {Gate::A, 1}}};
    fx.reference_context = {1, 2};
    fx.b_e = 5;
    fx.state = QuantumState::from_stabilizers({P("+XX"), P("+ZZ")});
    fx.target_outputs = {0, 1};
    return fx;
  }
  if (name == "mermin-square") {
    Fixture fx;
    fx.name = name;
    // Rows and columns of the square; the third column carries the -I line.
    fx.set = build_observable_set(
        parse_all({"+XI", "+IX", "+XX", "+ZI", "+IZ", "+ZZ", "+XZ", "+ZX",
                   "+YY"}),
        {},
        {{{1, 2}, 3}, {{5, 4}, 6}, {{7, 8}, 9},
         {{1, 5}, 7}, {{2, 4}, 8}, {{3, 6}, 9}});
    fx.symmetry_generators = {{{Gate::H, 0}}};
    return fx;
  }
  if (name == "dressed-star") {
    Fixture fx;
    fx.name = name;
    fx.set = build_observable_set(
        parse_all({"+XII", "+IXI", "+IIX", "+YII", "+IYI", "+IIY", "+XXX",
                   "+XYY", "+YXY", "+YYX", "+ZZI", "+ZIZ", "+IZZ"}),
        {},
        {{{1, 2, 3}, 7}, {{1, 5, 6}, 8}, {{4, 2, 6}, 9}, {{4, 5, 3}, 10}});
    fx.symmetry_generators = {{{Gate::A, 0}, {Gate::A, 1}}};
    fx.state = ghz_state();
    return fx;
  }
  if (name == "one-qubit") {
    Fixture fx;
    fx.name = name;
    fx.set = build_observable_set(parse_all({"+X", "+Y", "+Z"}), {}, {});
    fx.state = QuantumState::computational(1, 0);
    return fx;
  }
  throw InvariantError("unknown fixture: " + name);
}

namespace {

ActionGroup group_from_circuits(const ObservableSet& set,
                                const std::vector<Circuit>& circuits) {
  if (circuits.empty()) return trivial_action_group(set.size());
  std::vector<ElementAction> gens;
  for (const auto& c : circuits) gens.push_back(action_from_circuit(set, c));
  return generate(gens);
}

}  // namespace

ActionGroup input_group(const Fixture& fx) {
  auto ag = group_from_circuits(fx.set, fx.input_generators);
  if (!check_input_group(ag))
    throw InvariantError("fixture input group carries sign flips");
  return ag;
}

ActionGroup symmetry_group(const Fixture& fx) {
  return group_from_circuits(fx.set, fx.symmetry_generators);
}

MBQCInstance make_instance(const Fixture& fx) {
  if (!fx.b_e || !fx.state)
    throw InvariantError("fixture has no runnable instance: " + fx.name);
  return make_mbqc_instance(fx.set, input_group(fx), fx.reference_context,
                            *fx.b_e, *fx.state);
}

}  // namespace gmbqc
