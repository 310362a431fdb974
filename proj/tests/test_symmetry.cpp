#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latqec/symmetry.hpp"

#include <set>

using namespace latqec;

namespace {

struct Rotated2D {
  TorusComplex geom;
  StabilizerCode code;
  Crystal crystal;
  LogicalBasis geo;  // straight-line cycles and cocycles

  explicit Rotated2D(Int n) : geom(torus_complex(LatticeBasis({{n, 0}, {0, n}}))) {
    code = css_from_complex(geom.cc, 1);
    crystal = cell_coordinates(geom, 1);
    geo.k = 2;
    geo.rows = BitMat(4, 2 * code.n);
    for (Int t = 0; t < n; t++) {
      geo.rows.set(0, geom.cell_index(1, {0, t}, {0}), true);            // X tilde 1
      geo.rows.set(1, geom.cell_index(1, {t, 0}, {1}), true);            // X tilde 2
      geo.rows.set(2, code.n + geom.cell_index(1, {t, 0}, {0}), true);   // Z tilde 1
      geo.rows.set(3, code.n + geom.cell_index(1, {0, t}, {1}), true);   // Z tilde 2
    }
  }
};

BitMat sp4(const std::vector<std::vector<int>> &rows) { return BitMat::from_ints(rows); }

}  // namespace

TEST_CASE("space group of the plain 2D torus contains translations") {
  Rotated2D inst(3);
  auto autos = lattice_automorphisms(LatticeBasis({{3, 0}, {0, 3}}));
  CHECK(autos.size() == 8);
  auto sg = find_space_group(inst.crystal, inst.geom.lat, LatticeBasis({{3, 0}, {0, 3}}),
                             autos, inst.code, MappingRule::SameType);
  // Identity element present; all 9 translations for each of 8 rotations.
  IntMat id2 = mat_identity(2);
  for (auto &r : id2)
    for (auto &x : r) x *= 2;
  SpaceGroupElement id{id2, {0, 0}};
  CHECK(std::find(sg.begin(), sg.end(), id) != sg.end());
  CHECK(sg.size() == 72);

  // Closure under composition, with shifts reduced modulo the lattice.
  std::set<SpaceGroupElement> members(sg.begin(), sg.end());
  for (size_t i = 0; i < 8; i++)
    for (size_t j = 0; j < 8; j++) {
      SpaceGroupElement c = compose(sg[i], sg[j]);
      // reduce the shift by re-running the qubit permutation path
      auto perm = qubit_permutation(inst.crystal, inst.geom.lat, c);
      bool found = false;
      for (const auto &g : sg)
        found |= qubit_permutation(inst.crystal, inst.geom.lat, g) == perm;
      CHECK(found);
    }
}

TEST_CASE("translation induces a cyclic permutation symmetry") {
  Rotated2D inst(3);
  IntMat id2 = mat_identity(2);
  for (auto &r : id2)
    for (auto &x : r) x *= 2;
  SpaceGroupElement tr{id2, {2, 0}};  // shift by one lattice unit
  auto perm = qubit_permutation(inst.crystal, inst.geom.lat, tr);
  BitMat u = permutation_symmetry_matrix(perm);
  CHECK(is_symmetry(inst.code, u));
  // Order 3 cyclic.
  BitMat u3 = u * u * u;
  CHECK(u3 == BitMat::identity(2 * inst.code.n));
}

TEST_CASE("half-integer rotations act on the Hadamard code qubits") {
  LatticeBasis basis = hadamard_lattice(2);
  TorusComplex geom = torus_complex(basis);
  StabilizerCode code = css_from_complex(geom.cc, 2);
  Crystal crystal = cell_coordinates(geom, 2);
  auto autos = lattice_automorphisms(basis);
  size_t half = 0;
  for (const auto &a : autos) {
    auto m2 = ambient_matrix2(basis, a);
    REQUIRE(m2.has_value());
    bool is_half = false;
    for (const auto &row : *m2)
      for (Int x : row) is_half |= (x % 2) != 0;
    half += is_half;
  }
  // Half the Gram group acts with half-integer ambient matrices.
  CHECK(half == 192);
}

TEST_CASE("half-shift duality of the rotated 2D code gives the Hadamard-type gate") {
  Rotated2D inst(3);
  LatticeBasis basis({{3, 0}, {0, 3}});
  auto autos = lattice_automorphisms(basis);
  auto duals = find_space_group(inst.crystal, inst.geom.lat, basis, autos, inst.code,
                                MappingRule::SwapXZ);
  CHECK(!duals.empty());
  // The (1/2,1/2) shift with identity rotation is among them.
  IntMat id2 = mat_identity(2);
  for (auto &r : id2)
    for (auto &x : r) x *= 2;
  SpaceGroupElement half{id2, {1, 1}};
  CHECK(std::find(duals.begin(), duals.end(), half) != duals.end());

  ZXDuality d = zx_duality(inst.code, qubit_permutation(inst.crystal, inst.geom.lat, half));
  BitMat h = hadamard_type(d);
  CHECK(is_symplectic(h, inst.code.form()));
  CHECK(is_symmetry(inst.code, h));
  // In the geometric basis the action is (H (x) H) SWAP: the antidiagonal.
  BitMat action = logical_action(inst.code, inst.geo, h);
  CHECK(action == sp4({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));

  // Applying the gate twice is a pure qubit permutation (D squared).
  BitMat hh = h * h;
  for (size_t q = 0; q < inst.code.n; q++) {
    CHECK(hh.row(q).popcount() == 1);
    CHECK(hh.get(q, d.perm[d.perm[q]]));
  }
}

TEST_CASE("reflection duality gives the Phase-type gate and the expected group") {
  Rotated2D inst(3);
  LatticeBasis basis({{3, 0}, {0, 3}});
  auto autos = lattice_automorphisms(basis);
  auto duals = find_space_group(inst.crystal, inst.geom.lat, basis, autos, inst.code,
                                MappingRule::SwapXZ);

  // Reflection across alpha(1/2,1/2) + (1/2,0): swap coordinates with
  // shift (1/2,-1/2); doubled and reduced, the shift reads (1,5) mod 6.
  std::vector<BitMat> actions;
  BitMat htype;
  for (const auto &g : duals) {
    auto perm = qubit_permutation(inst.crystal, inst.geom.lat, g);
    ZXDuality d = zx_duality(inst.code, perm);
    BitMat u = hadamard_type(d);
    CHECK(is_symmetry(inst.code, u));
    actions.push_back(logical_action(inst.code, inst.geo, u));
    if (d.involutive) {
      BitMat s = phase_type(d);
      REQUIRE(is_symplectic(s, inst.code.form()));
      CHECK(is_symmetry(inst.code, s));
      actions.push_back(logical_action(inst.code, inst.geo, s));
    }
  }
  // Also the pure permutation symmetries.
  auto sg = find_space_group(inst.crystal, inst.geom.lat, basis, autos, inst.code,
                             MappingRule::SameType);
  for (const auto &g : sg) {
    BitMat u = permutation_symmetry_matrix(qubit_permutation(inst.crystal, inst.geom.lat, g));
    CHECK(is_symmetry(inst.code, u));
    actions.push_back(logical_action(inst.code, inst.geo, u));
  }

  // The generated logical group is exactly < H(x)H SWAP, SWAP, S(x)S, CZ >.
  MatrixGroup ours(actions);
  std::vector<BitMat> expected = {
      sp4({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}),  // (HxH) SWAP
      sp4({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),  // SWAP12
      sp4({{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}),  // S x S
      sp4({{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),  // CZ12
  };
  MatrixGroup ref(expected);
  CHECK(ours.order() == ref.order());
  for (const auto &m : expected) CHECK(ours.contains(m));
}

TEST_CASE("group order basics") {
  CHECK(group_order({}) == 1);
  CHECK(group_order({BitMat::identity(4)}) == 1);
  // S x S squares to the identity (mod Pauli).
  BitMat ss = sp4({{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(group_order({ss}) == 2);
  // Sp(2, F2) has order 6.
  CHECK(group_order({BitMat::from_ints({{1, 1}, {0, 1}}),
                     BitMat::from_ints({{0, 1}, {1, 0}})}) == 6);
  // Sp(4, F2) has order 720: transvection generators.
  std::vector<BitMat> sp4gens;
  SymplecticForm j2(2);
  for (int bits = 1; bits < 16; bits++) {
    BitVec h(4);
    for (int i = 0; i < 4; i++) h.set((size_t)i, (bits >> i) & 1);
    BitMat t = BitMat::identity(4);
    for (size_t r = 0; r < 4; r++)
      if (symplectic_product(t.row(r), h, j2)) t.row(r) ^= h;
    sp4gens.push_back(t);
  }
  CHECK(group_order(sp4gens) == 720);
}

TEST_CASE("group order matches BFS closure on a random small group") {
  std::vector<BitMat> gens = {
      sp4({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}}),
      sp4({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
  };
  std::set<std::string> closure;
  std::vector<BitMat> frontier = {BitMat::identity(4)};
  closure.insert(frontier[0].str());
  while (!frontier.empty()) {
    std::vector<BitMat> next;
    for (const auto &m : frontier)
      for (const auto &g : gens) {
        BitMat p = m * g;
        if (closure.insert(p.str()).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  CHECK(group_order(gens) == closure.size());
}

TEST_CASE("signed gate tracking on a free qubit") {
  StabilizerCode free1 = make_code(1, BitMat(0, 2));
  LogicalBasis l = logical_basis(free1);
  ZXDuality d;
  d.perm = {0};
  d.involutive = true;
  SignedGate h = signed_action_hadamard(free1, l, d);
  SignedGate s = signed_action_phase(free1, l, d);
  // S squares to Z, H to the identity; together they give the
  // single-qubit Clifford group modulo phase.
  CHECK(signed_group_order({h}) == 2);
  CHECK(signed_group_order({s}) == 4);
  CHECK(signed_group_order({h, s}) == 24);
  // The Pauli kernel of <H,S> is the whole single-qubit Pauli group.
  BitMat kernel = signed_pauli_kernel({h, s}, 24 / group_order({h.m, s.m}));
  CHECK(kernel.rows() == 2);

  // Composition and inverse are consistent with the group structure.
  SignedGate hs = signed_compose(h, s);
  SignedGate back = signed_compose(hs, signed_inverse(s));
  CHECK(back.m == h.m);
  CHECK(back.sigma == h.sigma);
}

TEST_CASE("signed permutation gates of the rotated 2D code") {
  Rotated2D inst(3);
  // A pure qubit permutation never flips Hermitian Paulis physically,
  // but its logical action can carry a Pauli frame; translations do not.
  TorusComplex t = torus_complex(LatticeBasis({{3, 0}, {0, 3}}));
  ComplexAutomorphism tr = translation_automorphism(t, {1, 0});
  SignedGate g = signed_action_permutation(inst.code, inst.geo, tr.perm[1]);
  CHECK(g.m == BitMat::identity(4));
  CHECK_FALSE(g.sigma.any());
}

TEST_CASE("Hadamard lattice dualities and crystalline Clifford group") {
  LatticeBasis basis = hadamard_lattice(2);
  TorusComplex geom = torus_complex(basis);
  StabilizerCode code = css_from_complex(geom.cc, 2);
  Crystal crystal = cell_coordinates(geom, 2);
  auto autos = lattice_automorphisms(basis);
  REQUIRE(autos.size() == 384);

  auto duals = find_space_group(crystal, geom.lat, basis, autos, code, MappingRule::SwapXZ);
  CHECK(!duals.empty());
  // The Poincare duality element printed with shift (1/2,1/2,1/2,1/2).
  SpaceGroupElement poincare{
      {{0, 0, 2, 0}, {-2, 0, 0, 0}, {0, 0, 0, -2}, {0, 2, 0, 0}}, {1, 1, 1, 1}};
  CHECK(std::find(duals.begin(), duals.end(), poincare) != duals.end());

  LogicalBasis l = logical_basis(code);
  ZXDuality pd = zx_duality(code, qubit_permutation(crystal, geom.lat, poincare));
  BitMat h = hadamard_type(pd);
  CHECK(is_symmetry(code, h));
  BitMat act = logical_action(code, l, h);
  // Order-2 action exchanging the X and Z sectors.
  CHECK((act * act) == BitMat::identity(12));
  for (size_t i = 0; i < 6; i++)
    for (size_t j = 0; j < 6; j++) {
      CHECK_FALSE(act.get(i, j));           // X rows land entirely in the Z sector
      CHECK_FALSE(act.get(6 + i, 6 + j));   // and vice versa
    }
}
