#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latqec/tableau.hpp"

using namespace latqec;

TEST_CASE("measuring X on plus states is deterministic +1") {
  StabilizerState s(3);
  std::mt19937_64 rng(1);
  for (size_t q = 0; q < 3; q++) {
    auto r = s.measure_pauli(pauli_x(3, q), rng);
    CHECK(r.deterministic);
    CHECK(r.outcome == 0);
  }
}

TEST_CASE("repeated Z measurement is deterministic and repeatable") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; trial++) {
    StabilizerState s(2);
    auto first = s.measure_pauli(pauli_z(2, 0), rng);
    CHECK_FALSE(first.deterministic);
    auto second = s.measure_pauli(pauli_z(2, 0), rng);
    CHECK(second.deterministic);
    CHECK(second.outcome == first.outcome);
  }
}

TEST_CASE("product states and expectations") {
  StabilizerState s = StabilizerState::product_state("XZY");
  CHECK(s.expectation(pauli_x(3, 0)) == 1);
  CHECK(s.expectation(pauli_z(3, 1)) == 1);
  PauliOp y(6);
  y.set(2, true);
  y.set(5, true);
  CHECK(s.expectation(y) == 1);
  CHECK(s.expectation(pauli_z(3, 0)) == 0);
  CHECK(s.expectation(pauli_x(3, 2)) == 0);
}

TEST_CASE("pauli errors flip signs") {
  StabilizerState s(1);
  s.apply_pauli(pauli_z(1, 0));
  CHECK(s.expectation(pauli_x(1, 0)) == -1);
  s.apply_pauli(pauli_z(1, 0));
  CHECK(s.expectation(pauli_x(1, 0)) == 1);
}

TEST_CASE("gates produce the expected stabilizers") {
  // Bell pair: H on |00>, then CNOT.
  StabilizerState s = StabilizerState::product_state("ZZ");
  s.apply_h(0);
  s.apply_cnot(0, 1);
  PauliOp xx(4), zz(4);
  xx.set(0, true);
  xx.set(1, true);
  zz.set(2, true);
  zz.set(3, true);
  CHECK(s.expectation(xx) == 1);
  CHECK(s.expectation(zz) == 1);
  PauliOp yy(4);
  for (int i = 0; i < 4; i++) yy.set((size_t)i, true);
  CHECK(s.expectation(yy) == -1);

  // S turns X into Y.
  StabilizerState t(1);
  t.apply_s(0);
  PauliOp y(2);
  y.set(0, true);
  y.set(1, true);
  CHECK(t.expectation(y) == 1);
  CHECK(t.expectation(pauli_x(1, 0)) == 0);

  // CZ maps X1 to X1 Z2.
  StabilizerState c(2);
  c.apply_cz(0, 1);
  PauliOp xz(4);
  xz.set(0, true);
  xz.set(3, true);
  CHECK(c.expectation(xz) == 1);
}

TEST_CASE("plaquette measurements on the 3D torus form trivial flux") {
  // Measure all Z-plaquettes of a 3D toric code on |+>^n: outcomes must
  // multiply to +1 over every closed surface (2-cycle).
  TorusComplex t = torus_complex(LatticeBasis({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  StabilizerCode code = css_from_complex(t.cc, 1);
  StabilizerState s(code.n);
  std::mt19937_64 rng(11);

  std::vector<int> outcome(code.cz.rows());
  for (size_t p = 0; p < code.cz.rows(); p++) {
    PauliOp zp(2 * code.n);
    for (size_t q = 0; q < code.n; q++)
      if (code.cz.get(p, q)) zp.set(code.n + q, true);
    outcome[p] = s.measure_pauli(zp, rng).outcome;
  }
  // 2-cycles: kernel of the boundary map on 2-cells.
  BitMat cycles = kernel(t.cc.boundary[2].transpose());
  for (size_t c = 0; c < cycles.rows(); c++) {
    int parity = 0;
    for (size_t p = 0; p < code.cz.rows(); p++)
      if (cycles.get(c, p)) parity ^= outcome[p];
    CHECK(parity == 0);
  }
}
