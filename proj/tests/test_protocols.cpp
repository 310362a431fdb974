#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latqec/protocols.hpp"

using namespace latqec;

namespace {

std::vector<std::array<ComplexAutomorphism, 2>> table_twists(const IntMat &h,
                                                             const TorusComplex &d2) {
  size_t n_slice = (size_t)h[0][0];
  ComplexAutomorphism id = translation_automorphism(d2, {0, 0});
  ComplexAutomorphism wrap = translation_automorphism(d2, {-h[0][1], -h[0][2]});
  std::vector<std::array<ComplexAutomorphism, 2>> tw(n_slice, {id, id});
  tw[n_slice - 1][1] = wrap;
  return tw;
}

}  // namespace

TEST_CASE("slice structure of the table-2 d=3 lattice") {
  TorusComplex three = torus_complex(LatticeBasis({{2, 0, 4}, {0, 1, 3}, {0, 0, 5}}));
  SliceStructure s = slice_structure(three);
  CHECK(s.n_slice == 2);
  CHECK(s.slice_code.n == 10);
  CHECK(num_logical(s.slice_code) == 2);
  // The two slices and the bulk partition the 30 qubits.
  std::vector<bool> seen(30, false);
  for (size_t q : s.bulk_qubits) seen[q] = true;
  for (const auto &sq : s.slice_qubits)
    for (size_t q : sq) {
      CHECK_FALSE(seen[q]);
      seen[q] = true;
    }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
}

TEST_CASE("slice protocol yields two Bell pairs on the d=3 sliceable code") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 3; trial++) {
    SliceProtocolResult r = slice_protocol(LatticeBasis({{2, 0, 4}, {0, 1, 3}, {0, 0, 5}}), rng);
    REQUIRE(r.structure.n_slice == 2);
    CHECK(r.logical_group.rows() == 4);

    TorusComplex d2 = torus_complex(r.structure.slice_lattice);
    BitMat expected = twisted_slice_logicals(
        2, d2.cc, table_twists({{2, 0, 4}, {0, 1, 3}, {0, 0, 5}}, d2), r.structure.slice_code,
        r.structure.slice_basis);
    CHECK(row_span_equal(r.logical_group, expected));
  }
}

TEST_CASE("slice protocol yields GHZ on a 3-slice lattice") {
  std::mt19937_64 rng(7);
  IntMat h = {{3, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  SliceProtocolResult r = slice_protocol(LatticeBasis(h), rng);
  REQUIRE(r.structure.n_slice == 3);
  CHECK(r.logical_group.rows() == 6);
  TorusComplex d2 = torus_complex(r.structure.slice_lattice);
  BitMat expected = twisted_slice_logicals(3, d2.cc, table_twists(h, d2),
                                           r.structure.slice_code, r.structure.slice_basis);
  CHECK(row_span_equal(r.logical_group, expected));
}

TEST_CASE("single-slice lattice leaves one code with X logical fixed") {
  std::mt19937_64 rng(3);
  SliceProtocolResult r = slice_protocol(LatticeBasis({{1, 0, 4}, {0, 1, 5}, {0, 0, 7}}), rng);
  CHECK(r.structure.n_slice == 1);
  // Logical group: X_1 and X_2 of the single slice.
  CHECK(r.logical_group.rows() == 2);
  BitMat expected(2, 4);
  expected.set(0, 0, true);
  expected.set(1, 1, true);
  CHECK(row_span_equal(r.logical_group, expected));
}

TEST_CASE("twisted_slice_logicals rejects homology-twisting automorphisms") {
  TorusComplex d2 = torus_complex(LatticeBasis({{2, 0}, {0, 2}}));
  StabilizerCode code = css_from_complex(d2.cc, 1);
  LogicalBasis basis = logical_basis(code);
  // A reflection swapping the two directions moves the homology classes.
  ComplexAutomorphism refl;
  refl.perm.resize(3);
  for (size_t k = 0; k <= 2; k++) {
    refl.perm[k].resize(d2.cc.degrees[k]);
    for (size_t i = 0; i < d2.cc.degrees[k]; i++) {
      auto [p, dirs] = d2.cell_of(k, i);
      std::vector<Int> q = {p[1], p[0]};
      std::vector<int> nd;
      for (int x : dirs) nd.push_back(1 - x);
      std::sort(nd.begin(), nd.end());
      refl.perm[k][i] = d2.cell_index(k, q, nd);
    }
  }
  REQUIRE(is_complex_automorphism(d2.cc, refl));
  ComplexAutomorphism id = translation_automorphism(d2, {0, 0});
  std::vector<std::array<ComplexAutomorphism, 2>> tw = {{id, id}, {id, refl}};
  CHECK_THROWS(twisted_slice_logicals(2, d2.cc, tw, code, basis));
}

TEST_CASE("effective distance of the d=3 sliceable instance") {
  EffectiveDistanceReport rep =
      effective_distance_bell(LatticeBasis({{2, 0, 4}, {0, 1, 3}, {0, 0, 5}}), 6);
  // No undetectable logical failure below e_f/2 + e_X = 3; one at 3.
  CHECK(rep.min_cost2 == 6);
  // The sharp flux-only configuration uses e_f = 2d.
  CHECK(rep.sharp.flux.size() == 6);
  CHECK(rep.sharp.x_errors.empty());
}

TEST_CASE("zero faults produce no logical error") {
  EffectiveDistanceReport rep =
      effective_distance_bell(LatticeBasis({{2, 0, 4}, {0, 1, 3}, {0, 0, 5}}), 2);
  CHECK(rep.min_cost2 == -1);
}

TEST_CASE("starfish circuit structure") {
  TorusComplex three = torus_complex(LatticeBasis({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
  Circuit c = starfish_circuit(three);
  CHECK(c.n_data == 81);
  CHECK(c.n_ancilla == 81);
  // Every ancilla participates in exactly four of the six rounds.
  for (const auto &order : c.cz_order) CHECK(order.size() == 4);

  // Ancilla fault after two CZ gates: weight-2 residual, four vertex
  // violations.
  StabilizerCode code = css_from_complex(three.cc, 1);
  for (size_t a : {size_t(0), size_t(40), size_t(80)}) {
    BitVec e2 = ancilla_fault_effect(c, a, 2);
    CHECK(e2.popcount() == 2);
    BitVec synd(code.cx.rows());
    for (size_t r = 0; r < code.cx.rows(); r++)
      synd.set(r, code.cx.row(r).dot(e2));
    CHECK(synd.popcount() == 4);

    // After one gate: weight 3, a stabilizer away from weight 1.
    BitVec e3 = ancilla_fault_effect(c, a, 1);
    CHECK(e3.popcount() == 3);
    auto [p, dirs] = three.cell_of(2, a);
    BitVec plaq(code.n);
    for (size_t q = 0; q < code.n; q++)
      if (three.cc.boundary[2].get(a, q)) plaq.set(q, true);
    BitVec reduced = e3;
    reduced ^= plaq;
    CHECK(reduced.popcount() == 1);

    // After three gates: weight 1. After all four: nothing.
    CHECK(ancilla_fault_effect(c, a, 3).popcount() == 1);
    CHECK(ancilla_fault_effect(c, a, 4).popcount() == 0);
  }
}

TEST_CASE("starfish order preserves the distance, a bad order does not") {
  TorusComplex three = torus_complex(LatticeBasis({{1, 0, 4}, {0, 1, 5}, {0, 0, 7}}));
  StabilizerCode code = css_from_complex(three.cc, 1);

  DistanceReport starfish = circuit_distance(starfish_circuit(three), three, code, 3);
  CHECK(starfish.weight == 3);

  // Interleaving the directions creates corner hooks that shortcut the
  // cycle distance.
  Circuit bad = ordered_circuit(three, {{0, 1}, {1, 1}, {2, 1}, {0, -1}, {1, -1}, {2, -1}});
  DistanceReport hooked = circuit_distance(bad, three, code, 3);
  CHECK(hooked.weight < 3);

  // With no faults allowed there is no logical error.
  DistanceReport none = circuit_distance(starfish_circuit(three), three, code, 0);
  CHECK(none.weight == -1);
}

TEST_CASE("surgery on small 4D blocks") {
  HermiteForm h = hnf(LatticeBasis({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  for (size_t row = 0; row < 4; row++) {
    SurgeryReport rep = surgery_measure(h, row);
    CHECK(rep.measured_products == 6);
    CHECK(rep.diagonal_products_survive);
    CHECK(rep.merged_k == 6);
    CHECK(rep.two_block_k == 12);
  }
}

TEST_CASE("boundary distance of the standard torus is 2L") {
  for (Int l : {2, 3, 4}) {
    IntMat m = mat_identity(4);
    for (auto &r : m)
      for (auto &x : r) x *= l;
    HermiteForm h = hnf(LatticeBasis(m));
    for (size_t row = 0; row < 4; row++) CHECK(boundary_distance(h, row) == 2 * l);
  }
  // Hadamard lattice: cross-check against the hyperplane systole.
  HermiteForm had = hnf(hadamard_lattice(2));
  HermiteForm merged = merge_for_surgery(had, 3);
  CHECK(boundary_distance(had, 3) == 2 * hyperplane_systole(merged.basis(), 3));
}
