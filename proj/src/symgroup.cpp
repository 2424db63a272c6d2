#include "gmbqc/symgroup.hpp"

#include <algorithm>
#include <deque>

#include "gmbqc/errors.hpp"

namespace gmbqc {

ElementAction ElementAction::compose(const ElementAction& other) const {
  // u_this u_other T_a (u_this u_other)^dagger
  std::size_t n = perm.size();
  ElementAction r;
  r.perm.resize(n);
  r.signs = BitVector(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t mid = other.perm[a];
    r.perm[a] = perm[mid];
    r.signs.set(a, other.signs.get(a) ^ signs.get(mid));
  }
  return r;
}

ElementAction ElementAction::inverse() const {
  std::size_t n = perm.size();
  ElementAction r;
  r.perm.resize(n);
  r.signs = BitVector(n);
  for (std::size_t a = 0; a < n; ++a) {
    r.perm[perm[a]] = a;
    r.signs.set(perm[a], signs.get(a));
  }
  return r;
}

void FiniteGroup::validate() const {
  std::size_t n = order();
  if (n == 0) throw InvariantError("group: empty");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) throw InvariantError("group: ragged table");
    if (mul(0, g) != g || mul(g, 0) != g)
      throw InvariantError("group: element 0 is not the identity");
    if (mul(g, inverse[g]) != 0 || mul(inverse[g], g) != 0)
      throw InvariantError("group: bad inverse");
    for (std::size_t h = 0; h < n; ++h)
      if (mul(g, h) >= n) throw InvariantError("group: not closed");
  }
  if (n <= 64) {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k)
          if (mul(mul(g, h), k) != mul(g, mul(h, k)))
            throw InvariantError("group: not associative");
  }
}

FiniteGroup FiniteGroup::z2_power(std::size_t k) {
  FiniteGroup g;
  std::size_t n = std::size_t(1) << k;
  g.table.assign(n, std::vector<std::size_t>(n));
  g.inverse.resize(n);
  g.words.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    g.inverse[a] = a;
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = a ^ b;
    for (std::size_t j = 0; j < k; ++j)
      if ((a >> j) & 1) g.words[a].push_back(j);
  }
  for (std::size_t j = 0; j < k; ++j)
    g.generators.push_back(std::size_t(1) << j);
  g.validate();
  return g;
}

ElementAction action_from_circuit(const ObservableSet& set,
                                  const Circuit& circuit) {
  std::size_t n = set.size();
  ElementAction act;
  act.perm.resize(n);
  act.signs = BitVector(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto image = conjugate(set.observables[a], circuit);
    auto idx = set.find_letters(image);
    if (!idx)
      throw InvariantError("circuit conjugation leaves +-Omega_+: image of " +
                           set.observables[a].to_string() + " is " +
                           image.to_string());
    act.perm[a] = *idx;
    act.signs.set(a, image.sign() ^ set.observables[*idx].sign());
  }
  if (act.perm[0] != 0 || act.signs.get(0))
    throw InvariantError("circuit action moves the identity observable");
  return act;
}

ActionGroup generate(const std::vector<ElementAction>& generator_actions) {
  constexpr std::size_t kCap = 4096;
  std::size_t n = generator_actions.empty()
                      ? 1
                      : generator_actions[0].perm.size();
  ElementAction e;
  e.perm.resize(n);
  e.signs = BitVector(n);
  for (std::size_t a = 0; a < n; ++a) e.perm[a] = a;

  ActionGroup ag;
  ag.actions.push_back(e);
  ag.group.words.push_back({});
  auto find = [&](const ElementAction& x) -> std::size_t {
    for (std::size_t i = 0; i < ag.actions.size(); ++i)
      if (ag.actions[i] == x) return i;
    return ag.actions.size();
  };

  // Breadth-first closure; element order is discovery order.
  for (std::size_t head = 0; head < ag.actions.size(); ++head) {
    for (std::size_t j = 0; j < generator_actions.size(); ++j) {
      // Product head * gen_j, so words grow on the right.
      auto y = ag.actions[head].compose(generator_actions[j]);
      if (find(y) == ag.actions.size()) {
        if (ag.actions.size() >= kCap)
          throw SizeGuardError("group generation exceeded cap 4096");
        ag.actions.push_back(y);
        auto w = ag.group.words[head];
        w.push_back(j);
        ag.group.words.push_back(std::move(w));
      }
    }
  }

  std::size_t order = ag.actions.size();
  ag.group.table.assign(order, std::vector<std::size_t>(order));
  ag.group.inverse.resize(order);
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      auto prod = ag.actions[g].compose(ag.actions[h]);
      std::size_t id = find(prod);
      if (id == order)
        throw InvariantError("signed actions do not close under composition");
      ag.group.table[g][h] = id;
      if (id == 0) ag.group.inverse[g] = h;
    }
  }
  for (const auto& gen : generator_actions)
    ag.group.generators.push_back(find(gen));
  ag.group.validate();
  return ag;
}

ActionGroup trivial_action_group(std::size_t n) {
  ActionGroup ag;
  ElementAction e;
  e.perm.resize(n);
  e.signs = BitVector(n);
  for (std::size_t a = 0; a < n; ++a) e.perm[a] = a;
  ag.actions.push_back(std::move(e));
  ag.group.table = {{0}};
  ag.group.inverse = {0};
  ag.group.words = {{}};
  return ag;
}

bool check_input_group(const ActionGroup& ag) {
  for (const auto& act : ag.actions)
    if (!act.signs.is_zero()) return false;
  return true;
}

BitVector module_action(const ActionGroup& ag, std::size_t g,
                        const BitVector& v, const ModuleV& V) {
  if (!V.contains(v)) throw InvariantError("module_action: v not in V");
  const auto& inv = ag.actions[ag.group.inv(g)];
  std::size_t n = v.size();
  BitVector r(n);
  for (std::size_t a = 0; a < n; ++a) r.set(a, v.get(inv.perm[a]));
  if (!V.contains(r))
    throw InvariantError("module_action: image left V (set/group mismatch)");
  return r;
}

ElementAction extend_action(const ConstraintSystem& cs,
                            const ElementAction& base) {
  std::size_t n_ext = cs.extended.size();
  ElementAction ext;
  ext.perm.resize(n_ext);
  ext.signs = BitVector(n_ext);
  // Signed image operator per extended index.
  std::vector<PauliObservable> image(n_ext);
  for (std::size_t a = 0; a < cs.n_base; ++a) {
    ext.perm[a] = base.perm[a];
    ext.signs.set(a, base.signs.get(a));
    auto img = cs.extended[base.perm[a]];
    img.set_sign(img.sign() ^ base.signs.get(a));
    image[a] = std::move(img);
  }
  for (std::size_t t = 0; t < cs.intermediates.size(); ++t) {
    std::size_t j = cs.n_base + t;
    const auto& im = cs.intermediates[t];
    // extended[j] = (-1)^beta T_lhs T_rhs, so its image is the signed
    // product of the factor images.
    auto prod = multiply(image[im.lhs], image[im.rhs]);
    if (prod.phase_exponent % 2 != 0)
      throw InvariantError("extend_action: non-real image phase");
    bool sign = (prod.phase_exponent == 2) ^ im.beta;
    std::size_t target = n_ext;
    for (std::size_t p = 0; p < n_ext; ++p) {
      if (cs.extended[p].same_letters(prod.result)) {
        target = p;
        break;
      }
    }
    if (target == n_ext)
      throw InvariantError(
          "extend_action: intermediate image is not an extended observable");
    ext.perm[j] = target;
    ext.signs.set(j, sign ^ cs.extended[target].sign());
    auto img = cs.extended[target];
    img.set_sign(img.sign() ^ ext.signs.get(j));
    image[j] = std::move(img);
  }
  return ext;
}

}  // namespace gmbqc
