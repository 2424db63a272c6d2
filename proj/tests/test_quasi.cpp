#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gmbqc/errors.hpp"
#include "gmbqc/proofs.hpp"
#include "gmbqc/quasi.hpp"

using namespace gmbqc;

TEST_SUITE("quasi") {

TEST_CASE("one-qubit phase points are (1/8)(I +- X +- Y +- Z)") {
  auto fx = builtin("one-qubit");
  auto cs = build_constraints(fx.set);
  auto V = compute_V(fx.set, cs);
  REQUIRE(V.dim() == 3);
  auto points = V.enumerate();
  CHECK(points.size() == 8);
  for (const auto& v : points) {
    auto A = phase_point(fx.set, V, v);
    // Reassemble the 2x2 matrix from the sign pattern directly.
    double sx = v.get(1) ? -1 : 1, sy = v.get(2) ? -1 : 1,
           sz = v.get(3) ? -1 : 1;
    DenseMatrix expect = {
        {{(1 + sz) / 8.0, 0.0}, {sx / 8.0, -sy / 8.0}},
        {{sx / 8.0, sy / 8.0}, {(1 - sz) / 8.0, 0.0}}};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        CHECK(std::abs(A.matrix[r][c] - expect[r][c]) < 1e-12);
  }
}

TEST_CASE("one-qubit Q of |0> is 1/4 on the v(Z)=0 hemisphere") {
  auto fx = builtin("one-qubit");
  auto cs = build_constraints(fx.set);
  auto V = compute_V(fx.set, cs);
  auto q = quasiprob(*fx.state, fx.set, V);
  CHECK(q.values.size() == 8);
  double sum = 0;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    BitVector coords(3);
    for (std::size_t j = 0; j < 3; ++j)
      if ((mask >> j) & 1) coords.set(j, true);
    auto v = V.combine(coords);
    double expect = v.get(3) ? 0.0 : 0.25;
    CHECK(std::abs(q.values[mask] - expect) < 1e-12);
    sum += q.values[mask];
  }
  CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("GHZ Q takes exactly the values -1/64 and 3/64") {
  auto fx = builtin("ghz-or");
  auto cs = build_constraints(fx.set);
  auto V = compute_V(fx.set, cs);
  auto q = quasiprob(*fx.state, fx.set, V);
  CHECK(q.values.size() == 64);
  double sum = 0;
  std::size_t low = 0, high = 0;
  for (double x : q.values) {
    sum += x;
    if (std::abs(x - (-1.0 / 64.0)) < 1e-12)
      ++low;
    else if (std::abs(x - 3.0 / 64.0) < 1e-12)
      ++high;
  }
  CHECK(low + high == 64);
  CHECK(std::abs(sum - 1.0) < 1e-12);
  CHECK(high * 3 - low == 64);  // consistency of the two counts with sum 1
}

TEST_CASE("fourier inverts quasiprob") {
  for (const char* name : {"ghz-or", "bell-identity", "one-qubit"}) {
    auto fx = builtin(name);
    auto cs = build_constraints(fx.set);
    auto V = compute_V(fx.set, cs);
    auto xi = characteristic(*fx.state, fx.set);
    auto q = quasiprob(*fx.state, fx.set, V);
    auto back = fourier(q, fx.set, V);
    REQUIRE(back.size() == xi.size());
    for (std::size_t a = 0; a < xi.size(); ++a)
      CHECK_MESSAGE(std::abs(back[a] - xi[a]) < 1e-9, name);
  }
}

TEST_CASE("outcome probabilities from Q match Born values") {
  auto fx = builtin("ghz-or");
  auto cs = build_constraints(fx.set);
  auto V = compute_V(fx.set, cs);
  auto xi = characteristic(*fx.state, fx.set);
  auto q = quasiprob(*fx.state, fx.set, V);
  for (std::size_t a = 0; a < fx.set.size(); ++a) {
    for (bool s : {false, true}) {
      double expect = (1 + (s ? -1 : 1) * xi[a]) / 2;
      CHECK(std::abs(outcome_prob(q, V, a, s) - expect) < 1e-9);
    }
  }
}

TEST_CASE("character orthogonality under separation") {
  for (const char* name : {"ghz-or", "one-qubit", "bell-identity"}) {
    auto fx = builtin(name);
    auto cs = build_constraints(fx.set);
    auto V = compute_V(fx.set, cs);
    if (!check_separation(fx.set, V)) continue;
    auto all = V.enumerate();
    for (std::size_t a = 0; a < fx.set.size(); ++a) {
      for (std::size_t b = 0; b < fx.set.size(); ++b) {
        int acc = 0;
        for (const auto& v : all)
          acc += ((v.get(a) ^ v.get(b)) ? -1 : 1);
        CHECK(acc == (a == b ? int(all.size()) : 0));
      }
    }
  }
}

TEST_CASE("GHZ covariance under the input group") {
  auto fx = builtin("ghz-or");
  auto cs = build_constraints(fx.set);
  auto V = compute_V(fx.set, cs);
  auto ag = input_group(fx);
  auto cov = check_covariance(fx.set, V, ag, fx.input_generators);
  CHECK(cov.verified);
  CHECK(!cov.mismatch.has_value());
  REQUIRE(cov.S.size() == 4);
  for (std::size_t g = 0; g < 4; ++g) {
    CHECK(cov.S[g].rank() == V.dim());       // invertible
    CHECK(cov.S[g].mul(BitVector(V.dim())).is_zero());  // S_g 0 = 0
  }
  // S is a homomorphic image of the group.
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h) {
      auto prod = cov.S[g].mul(cov.S[h]);
      const auto& expect = cov.S[ag.group.mul(g, h)];
      for (std::size_t r = 0; r < V.dim(); ++r)
        CHECK(prod.row(r) == expect.row(r));
    }
}

TEST_CASE("Q(v) is the dense expectation of the phase-point operator") {
  for (const char* name : {"one-qubit", "bell-identity"}) {
    auto fx = builtin(name);
    auto cs = build_constraints(fx.set);
    auto V = compute_V(fx.set, cs);
    auto q = quasiprob(*fx.state, fx.set, V);
    const auto& amps = fx.state->amplitudes;
    for (std::size_t mask = 0; mask < q.values.size(); ++mask) {
      BitVector coords(V.dim());
      for (std::size_t j = 0; j < V.dim(); ++j)
        if ((mask >> j) & 1) coords.set(j, true);
      auto A = phase_point(fx.set, V, V.combine(coords));
      std::complex<double> acc = 0;
      for (std::size_t r = 0; r < amps.size(); ++r)
        for (std::size_t c = 0; c < amps.size(); ++c)
          acc += std::conj(amps[r]) * A.matrix[r][c] * amps[c];
      CHECK(std::abs(acc.imag()) < 1e-12);
      CHECK_MESSAGE(std::abs(acc.real() - q.values[mask]) < 1e-9, name);
    }
  }
}

TEST_CASE("csv export lists one row per phase point") {
  auto fx = builtin("one-qubit");
  auto cs = build_constraints(fx.set);
  auto V = compute_V(fx.set, cs);
  auto q = quasiprob(*fx.state, fx.set, V);
  auto csv = quasiprob_csv(q, V);
  std::istringstream in(csv);
  std::string line;
  std::size_t rows = 0;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      CHECK(line.rfind("coords", 0) == 0);
      header = false;
      continue;
    }
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 8);
}

}  // TEST_SUITE
