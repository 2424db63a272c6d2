#include <algorithm>

#include "doctest.h"
#include "gmbqc/errors.hpp"
#include "gmbqc/proofs.hpp"
#include "gmbqc/symgroup.hpp"

using namespace gmbqc;

TEST_SUITE("symgroup") {

TEST_CASE("z2_power structure") {
  for (std::size_t k : {std::size_t(1), std::size_t(2), std::size_t(3)}) {
    auto G = FiniteGroup::z2_power(k);
    CHECK(G.order() == (std::size_t(1) << k));
    G.validate();
    for (std::size_t g = 0; g < G.order(); ++g) {
      CHECK(G.mul(g, g) == 0);  // every element an involution
      CHECK(G.inv(g) == g);
      for (std::size_t h = 0; h < G.order(); ++h)
        CHECK(G.mul(g, h) == G.mul(h, g));
    }
  }
}

TEST_CASE("validate rejects a broken table") {
  auto G = FiniteGroup::z2_power(1);
  G.table[1][1] = 1;  // 1*1 = 1 breaks inverses
  CHECK_THROWS_AS(G.validate(), InvariantError);
}

TEST_CASE("action_from_circuit on the GHZ set") {
  auto fx = builtin("ghz-or");
  auto a1 = action_from_circuit(fx.set, fx.input_generators[0]);  // A2 A3
  // A on qubits 1,2 swaps X<->Y there: X1X2X3 <-> X1Y2Y3 etc.
  CHECK(a1.perm[0] == 0);
  CHECK(a1.perm[1] == 1);   // X1 fixed
  CHECK(a1.perm[2] == 5);   // X2 -> Y2
  CHECK(a1.perm[3] == 6);   // X3 -> Y3
  CHECK(a1.perm[7] == 8);   // XXX -> XYY
  CHECK(a1.signs.is_zero());
  // Escaping the set is an error.
  CHECK_THROWS_AS(action_from_circuit(fx.set, {{Gate::H, 0}}), InvariantError);
}

TEST_CASE("generate closes the GHZ input group") {
  auto fx = builtin("ghz-or");
  auto ag = input_group(fx);
  CHECK(ag.group.order() == 4);
  ag.group.validate();
  CHECK(check_input_group(ag));
  CHECK(check_lemma4(fx.set, ag));
  // Element order: e, g1, g2, g1 g2 by generator BFS.
  CHECK(ag.group.words[0].empty());
  CHECK(ag.group.words[1] == std::vector<std::size_t>{0});
  CHECK(ag.group.words[2] == std::vector<std::size_t>{1});
  CHECK(ag.group.words[3] == std::vector<std::size_t>{0, 1});
  CHECK(ag.group.mul(1, 2) == 3);
}

TEST_CASE("words multiply out to their element") {
  for (const char* name : {"ghz-or", "bell-identity", "dressed-star"}) {
    auto fx = builtin(name);
    auto ag = fx.symmetry_generators.empty() ? input_group(fx)
                                             : symmetry_group(fx);
    for (std::size_t g = 0; g < ag.group.order(); ++g) {
      std::size_t acc = 0;
      for (auto gen : ag.group.words[g])
        acc = ag.group.mul(acc, ag.group.generators[gen]);
      CHECK(acc == g);
    }
  }
}

TEST_CASE("action table is a homomorphism") {
  auto ag = input_group(builtin("ghz-or"));
  for (std::size_t g = 0; g < ag.group.order(); ++g) {
    for (std::size_t h = 0; h < ag.group.order(); ++h) {
      auto composed = ag.actions[g].compose(ag.actions[h]);
      CHECK(composed == ag.actions[ag.group.mul(g, h)]);
    }
    CHECK(ag.actions[g].inverse() == ag.actions[ag.group.inv(g)]);
  }
}

TEST_CASE("square symmetry group carries signs") {
  auto fx = builtin("mermin-square");
  auto sym = symmetry_group(fx);
  CHECK(sym.group.order() == 2);
  CHECK(!check_input_group(sym));
  // H1 Y1Y2 H1^dagger = -Y1Y2: index 9 is fixed with a sign flip.
  CHECK(sym.actions[1].perm[9] == 9);
  CHECK(sym.actions[1].signs.get(9));
}

TEST_CASE("module_action permutes V") {
  auto fx = builtin("ghz-or");
  auto cs = build_constraints(fx.set);
  auto V = compute_V(fx.set, cs);
  auto ag = input_group(fx);
  for (std::size_t g = 0; g < ag.group.order(); ++g) {
    std::vector<BitVector> images;
    for (const auto& v : V.enumerate()) {
      auto w = module_action(ag, g, v, V);
      CHECK(V.contains(w));
      images.push_back(w);
      // v o g^{-1}: value at a equals v at g^{-1} a.
      const auto& perm_inv = ag.actions[ag.group.inv(g)].perm;
      for (std::size_t a = 0; a < fx.set.size(); ++a)
        CHECK(w.get(a) == v.get(perm_inv[a]));
    }
    std::sort(images.begin(), images.end());
    CHECK(std::unique(images.begin(), images.end()) == images.end());
  }
}

TEST_CASE("module_action is a left action") {
  auto fx = builtin("ghz-or");
  auto cs = build_constraints(fx.set);
  auto V = compute_V(fx.set, cs);
  auto ag = input_group(fx);
  auto v = V.basis[1] ^ V.basis[3];
  for (std::size_t g = 0; g < ag.group.order(); ++g)
    for (std::size_t h = 0; h < ag.group.order(); ++h)
      CHECK(module_action(ag, g, module_action(ag, h, v, V), V) ==
            module_action(ag, ag.group.mul(g, h), v, V));
}

TEST_CASE("extend_action covers intermediates") {
  auto fx = builtin("ghz-or");
  auto cs = build_constraints(fx.set);
  auto ag = input_group(fx);
  for (std::size_t g = 0; g < ag.group.order(); ++g) {
    auto ext = extend_action(cs, ag.actions[g]);
    CHECK(ext.perm.size() == cs.K.cols());
    // Extended action still maps each triple to a triple-consistent image.
    for (const auto& t : cs.triples) {
      auto prod = multiply(cs.extended[ext.perm[t.a]],
                           cs.extended[ext.perm[t.b]]);
      CHECK(prod.result.same_letters(cs.extended[ext.perm[t.c]]));
    }
  }
}

TEST_CASE("trivial action group") {
  auto ag = trivial_action_group(5);
  CHECK(ag.group.order() == 1);
  CHECK(ag.actions[0].perm == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(ag.actions[0].signs.is_zero());
  CHECK(check_input_group(ag));
}

TEST_CASE("generate cap") {
  // A generator of large order would blow the cap; z2^k generators stay small.
  auto ag = input_group(builtin("bell-identity"));
  CHECK(ag.group.order() == 2);
}

}  // TEST_SUITE
