#include "doctest.h"
#include "gmbqc/errors.hpp"
#include "gmbqc/hvm.hpp"
#include "gmbqc/phasefn.hpp"
#include "gmbqc/proofs.hpp"
#include "gmbqc/quantum.hpp"

using namespace gmbqc;

namespace {

struct GhzData {
  Fixture fx;
  ConstraintSystem cs;
  ModuleV V;
  ActionGroup ag;
  std::vector<double> xi;
};

GhzData ghz() {
  GhzData d{builtin("ghz-or"), {}, {}, {}, {}};
  d.cs = build_constraints(d.fx.set);
  d.V = compute_V(d.fx.set, d.cs);
  d.ag = input_group(d.fx);
  d.xi = characteristic(*d.fx.state, d.fx.set);
  return d;
}

}  // namespace

TEST_SUITE("phasefn") {

TEST_CASE("from_assignment is exact and lands in V") {
  auto d = ghz();
  auto space = enumerate_assignments(d.cs);
  REQUIRE(!space.empty());
  for (const auto& s : space.all()) {
    auto phi = from_assignment(s, d.ag);
    CHECK(phi.values[0].is_zero());
    for (const auto& v : phi.values) CHECK(d.V.contains(v));
    CHECK(coboundary(phi, d.ag).exact);
  }
}

TEST_CASE("coboundary identity row vanishes") {
  auto d = ghz();
  auto fam = symmetry_solutions(d.fx.set, d.ag, d.V, d.xi);
  auto res = coboundary(fam.particular, d.ag);
  CHECK(res.d_phi.at(0, 0).is_zero());
  for (std::size_t g = 0; g < 4; ++g) {
    CHECK(res.d_phi.at(0, g).is_zero());
    CHECK(res.d_phi.at(g, 0).is_zero());
  }
}

TEST_CASE("GHZ symmetry family is pinned and non-exact") {
  auto d = ghz();
  auto fam = symmetry_solutions(d.fx.set, d.ag, d.V, d.xi);
  CHECK(fam.particular.values[0].to_string() == "00000000000");
  CHECK(fam.particular.values[1].to_string() == "01000001100");
  CHECK(fam.particular.values[2].to_string() == "00100001010");
  CHECK(fam.particular.values[3].to_string() == "00010001001");
  // Free directions must vanish where Xi does not: they cannot change the
  // constrained bits 0, 7..10.
  for (const auto& kern : fam.kernel_coords)
    for (const auto& coords : kern) {
      auto v = d.V.combine(coords);
      for (std::size_t a : {std::size_t(0), std::size_t(7), std::size_t(8),
                            std::size_t(9), std::size_t(10)})
        CHECK(!v.get(a));
    }
  auto res = coboundary(fam.particular, d.ag);
  CHECK(!res.exact);
  // Hand value: (dPhi)_{g1,g2}(X2) with X2 at index 2.
  CHECK(res.d_phi.at(1, 2).get(2));
}

TEST_CASE("symmetry solutions satisfy Eq. (6) on the state") {
  auto d = ghz();
  auto fam = symmetry_solutions(d.fx.set, d.ag, d.V, d.xi);
  auto inst = make_instance(d.fx);
  CHECK(check_symmetry(inst, fam.particular));
  // Flipping one pinned bit breaks Eq. (6).
  auto broken = fam.particular;
  broken.values[1].flip(7);
  CHECK(!check_symmetry(inst, broken));
}

TEST_CASE("non-symmetric magnitudes are rejected") {
  auto d = ghz();
  auto xi = d.xi;
  xi[1] = 0.5;  // |Xi(X1)| no longer matches its orbit
  CHECK_THROWS_WITH_AS(symmetry_solutions(d.fx.set, d.ag, d.V, xi),
                       "state not G-symmetric", InvariantError);
}

TEST_CASE("output function reads off Phi at b_e") {
  auto d = ghz();
  auto fam = symmetry_solutions(d.fx.set, d.ag, d.V, d.xi);
  auto o = output_function(fam.particular, d.ag, 7, false);
  CHECK(o == std::vector<uint8_t>{0, 1, 1, 1});
  auto flipped = output_function(fam.particular, d.ag, 7, true);
  CHECK(flipped == std::vector<uint8_t>{1, 0, 0, 0});
}

TEST_CASE("GHZ OR is contextual by Prop. 1") {
  auto d = ghz();
  auto res = certify_contextuality(d.fx.set, d.ag, d.V, {0, 1, 1, 1}, 7,
                                   false);
  CHECK(res.contextual);
  CHECK(!res.witness.has_value());
  CHECK(!res.infeasibility_rows.empty());
}

TEST_CASE("Bell identity admits an exact witness") {
  auto fx = builtin("bell-identity");
  auto cs = build_constraints(fx.set);
  auto V = compute_V(fx.set, cs);
  auto ag = input_group(fx);
  auto res = certify_contextuality(fx.set, ag, V, {0, 1}, 5, false);
  CHECK(!res.contextual);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->values[0].to_string() == "0000000");
  CHECK(res.witness->values[1].to_string() == "0101011");
  CHECK(coboundary(*res.witness, ag).exact);
  CHECK(output_function(*res.witness, ag, 5, false) ==
        std::vector<uint8_t>{0, 1});
}

TEST_CASE("constant output is never contextual") {
  auto d = ghz();
  auto res = certify_contextuality(d.fx.set, d.ag, d.V, {0, 0, 0, 0}, 7,
                                   false);
  CHECK(!res.contextual);
  REQUIRE(res.witness.has_value());
  CHECK(coboundary(*res.witness, d.ag).exact);
}

TEST_CASE("certify rejects an output table of the wrong length") {
  auto d = ghz();
  CHECK_THROWS_AS(certify_contextuality(d.fx.set, d.ag, d.V, {0, 1}, 7, false),
                  InvariantError);
}

}  // TEST_SUITE
