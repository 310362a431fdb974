#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latqec/code.hpp"
#include "latqec/serialize.hpp"

#include <random>

using namespace latqec;

namespace {

StabilizerCode toric_2d(Int d) {
  return css_from_complex(torus_complex(LatticeBasis({{d, 0}, {0, d}})).cc, 1);
}

// Random symplectic matrix: a product of transvections applied to the identity.
BitMat random_symplectic(size_t n, std::mt19937_64 &rng) {
  SymplecticForm j(n);
  BitMat u = BitMat::identity(2 * n);
  for (int t = 0; t < 40; t++) {
    BitVec h(2 * n);
    for (size_t i = 0; i < 2 * n; i++) h.set(i, rng() & 1);
    if (!h.any()) continue;
    // Transvection v -> v + <v,h> h preserves the form.
    for (size_t r = 0; r < 2 * n; r++)
      if (symplectic_product(u.row(r), h, j)) u.row(r) ^= h;
  }
  return u;
}

}  // namespace

TEST_CASE("css_from_complex parameters") {
  StabilizerCode c22 = toric_2d(2);
  CHECK(c22.n == 8);
  CHECK(num_logical(c22) == 2);

  StabilizerCode had = css_from_complex(torus_complex(hadamard_lattice(2)).cc, 2);
  CHECK(had.n == 96);
  CHECK(had.cx.rows() == 64);
  CHECK(had.cz.rows() == 64);
  CHECK(num_logical(had) == 6);

  StabilizerCode c3 = css_from_complex(
      torus_complex(LatticeBasis({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})).cc, 1);
  CHECK(c3.n == 24);
  // Independent oracle for k: n - rank(Cx) - rank(Cz).
  CHECK(num_logical(c3) == c3.n - c3.cx.rank() - c3.cz.rank());
  CHECK(num_logical(c3) == 3);
}

TEST_CASE("num_logical trivial cases") {
  StabilizerCode free3 = make_code(3, BitMat(0, 6));
  CHECK(num_logical(free3) == 3);
  for (const IntMat &m : {IntMat{{2, 1, 1}, {0, 3, 0}, {0, 0, 3}},
                          IntMat{{2, 1, 1}, {0, 5, 0}, {0, 0, 5}}}) {
    StabilizerCode c = css_from_complex(torus_complex(LatticeBasis(m)).cc, 1);
    CHECK(num_logical(c) == 3);
  }
}

TEST_CASE("logical basis invariants") {
  SUBCASE("single free qubit") {
    StabilizerCode c = make_code(1, BitMat(0, 2));
    LogicalBasis l = logical_basis(c);
    REQUIRE(l.k == 1);
    CHECK(l.rows == BitMat::from_ints({{1, 0}, {0, 1}}));
  }
  SUBCASE("2D toric code") {
    StabilizerCode c = toric_2d(3);
    LogicalBasis l = logical_basis(c);
    REQUIRE(l.k == 2);
    SymplecticForm j(c.n);
    // X rows pure X, Z rows pure Z, symplectic pairing J.
    for (size_t i = 0; i < 2; i++) {
      for (size_t q = 0; q < c.n; q++) {
        CHECK_FALSE(l.x_row(i).get(c.n + q));
        CHECK_FALSE(l.z_row(i).get(q));
      }
      for (size_t b = 0; b < 2; b++)
        CHECK(symplectic_product(l.x_row(i), l.z_row(b), j) == (i == b));
    }
    for (size_t r = 0; r < c.checks.rows(); r++)
      for (size_t a = 0; a < 4; a++)
        CHECK_FALSE(symplectic_product(c.checks.row(r), l.rows.row(a), j));
  }
  SUBCASE("non-CSS five qubit code") {
    // XZZXI and cyclic shifts.
    BitMat checks(4, 10);
    for (size_t r = 0; r < 4; r++) {
      checks.set(r, r % 5, true);                // X
      checks.set(r, 5 + (r + 1) % 5, true);      // Z
      checks.set(r, 5 + (r + 2) % 5, true);      // Z
      checks.set(r, (r + 3) % 5, true);          // X
    }
    StabilizerCode c = make_code(5, checks);
    CHECK(num_logical(c) == 1);
    LogicalBasis l = logical_basis(c);
    CHECK(l.k == 1);
  }
}

TEST_CASE("is_symmetry") {
  StabilizerCode c = toric_2d(2);
  CHECK(is_symmetry(c, BitMat::identity(2 * c.n)));
  BitMat bad = BitMat::identity(2 * c.n);
  bad.set(0, 1, true);
  bad.set(c.n + 1, c.n, true);  // still symplectic? check before relying
  CHECK_THROWS(is_symmetry(c, BitMat(2 * c.n, 2 * c.n)));

  // A random symplectic matrix is overwhelmingly unlikely to fix the code.
  std::mt19937_64 rng(5);
  int hits = 0;
  for (int t = 0; t < 5; t++) hits += is_symmetry(c, random_symplectic(c.n, rng));
  CHECK(hits == 0);
}

TEST_CASE("logical action of identity and homomorphism property") {
  StabilizerCode c = toric_2d(2);
  LogicalBasis l = logical_basis(c);
  BitMat id = BitMat::identity(2 * c.n);
  CHECK(logical_action(c, l, id) == BitMat::identity(2 * l.k));

  // Transversal-Hadamard-plus-shift symmetry of the rotated 2D code is
  // exercised in the symmetry module tests; here use a qubit permutation
  // from translation invariance.
  TorusComplex t = torus_complex(LatticeBasis({{2, 0}, {0, 2}}));
  ComplexAutomorphism tr = translation_automorphism(t, {1, 0});
  BitMat u(2 * c.n, 2 * c.n);
  for (size_t q = 0; q < c.n; q++) {
    u.set(q, tr.perm[1][q], true);
    u.set(c.n + q, c.n + tr.perm[1][q], true);
  }
  REQUIRE(is_symmetry(c, u));
  BitMat m = logical_action(c, l, u);
  SymplecticForm jk(l.k);
  CHECK(is_symplectic(m, jk));
  // Homomorphism up to ordering: action(u)^2 = action(u^2).
  CHECK((m * m) == logical_action(c, l, u * u));
}

TEST_CASE("direct sum and embed") {
  StabilizerCode c = toric_2d(2);
  StabilizerCode two = direct_sum(c, c);
  CHECK(two.n == 2 * c.n);
  CHECK(num_logical(two) == 4);
  CHECK(two.css);

  PauliOp p = pauli_x(c.n, 3);
  PauliOp e = embed_pauli(p, c.n, two.n, c.n);
  CHECK(e.get(c.n + 3));
  CHECK(pauli_weight(e) == 1);
}

TEST_CASE("check matrices round trip through alist and json") {
  StabilizerCode c = toric_2d(2);
  BitMat back = bitmat_from_alist(bitmat_to_alist(c.cx));
  CHECK(back == c.cx);
  CHECK(bitmat_from_json(bitmat_to_json(c.cz)) == c.cz);

  LatticeBasis b({{2, 0, 4}, {0, 1, 3}, {0, 0, 5}});
  LatticeBasis round = lattice_from_json(lattice_to_json(b));
  CHECK(round.rows == b.rows);
  CHECK(lattice_from_string("2,0,4;0,1,3;0,0,5").rows == b.rows);
}

TEST_CASE("transversal CNOT between CSS blocks is a symmetry") {
  StabilizerCode c = toric_2d(2);
  StabilizerCode two = direct_sum(c, c);
  size_t n = two.n, half = c.n;
  // CNOT from block 1 to block 2 on each pair: X_i -> X_i X_{i+half},
  // Z_{i+half} -> Z_i Z_{i+half}.
  BitMat u = BitMat::identity(2 * n);
  for (size_t q = 0; q < half; q++) {
    u.set(q, half + q, true);
    u.set(n + half + q, n + q, true);
  }
  REQUIRE(is_symplectic(u, two.form()));
  CHECK(is_symmetry(two, u));
}
