#ifndef LATQEC_CHAIN_HPP
#define LATQEC_CHAIN_HPP

#include "latqec/bitmat.hpp"
#include "latqec/lattice.hpp"

#include <array>
#include <vector>

namespace latqec {

/*
 * A chain complex over F2: cell counts per degree and boundary maps.
 * boundary[k] maps degree-k chains to degree-(k-1) chains; with the row
 * vector convention a chain c of degree k has boundary c * boundary[k],
 * so boundary[k] has one row per k-cell. boundary[0] is unused.
 */
struct ChainComplex {
  std::vector<size_t> degrees;
  std::vector<BitMat> boundary;

  size_t top() const { return degrees.size() - 1; }
  // Throws unless boundary[k] * boundary[k-1] = 0 for all k.
  void verify_boundary() const;
  // Reverse the grading and transpose the boundaries.
  ChainComplex dual() const;
  // Betti number over F2 at degree k.
  size_t betti(size_t k) const;
};

/*
 * The cubic cellulation of Z^D modulo an integral lattice. A k-cell is a
 * pair (p, S) of a canonical coset representative p and a sorted set S of
 * k directions. Cells are indexed subset-major: within degree k,
 * index = subset_rank * det + vertex_rank, so translates of a cell sit in
 * one contiguous det-sized block.
 */
struct TorusComplex {
  ChainComplex cc;
  HermiteForm lat;
  size_t dim = 0;
  Int det = 0;
  // Direction subsets per degree, each sorted, listed lexicographically.
  std::vector<std::vector<std::vector<int>>> subsets;

  // Canonical representative of z modulo the lattice: greedy reduction by
  // HNF rows leaves 0 <= p_i < H_ii.
  std::vector<Int> reduce(std::vector<Int> z) const;
  size_t vertex_index(const std::vector<Int> &canonical) const;
  std::vector<Int> vertex_of(size_t index) const;
  size_t cell_index(size_t degree, const std::vector<Int> &p,
                    const std::vector<int> &dirs) const;
  // (p, dirs) of a cell.
  std::pair<std::vector<Int>, std::vector<int>> cell_of(size_t degree, size_t index) const;
  // Index of the cell translated by integer vector t.
  size_t translate_cell(size_t degree, size_t index, const std::vector<Int> &t) const;
};

TorusComplex torus_complex(const LatticeBasis &basis);

/*
 * Crystal coordinates: one midpoint per qubit and per check, doubled so
 * that all entries are integers (every midpoint is half-integral).
 */
struct Crystal {
  size_t dim = 0;
  std::vector<std::vector<Int>> qubit2;
  std::vector<std::vector<Int>> xcheck2;
  std::vector<std::vector<Int>> zcheck2;
};

// Midpoint coordinates for the CSS code with qubits on q-cells.
Crystal cell_coordinates(const TorusComplex &c, size_t qubit_degree);

/*
 * An automorphism of a chain complex: one permutation per degree, jointly
 * commuting with every boundary map. perm[k][i] is the image of cell i.
 */
struct ComplexAutomorphism {
  std::vector<std::vector<size_t>> perm;
};

bool is_complex_automorphism(const ChainComplex &c, const ComplexAutomorphism &a);

// The translation action of t on a torus complex, as a complex automorphism.
ComplexAutomorphism translation_automorphism(const TorusComplex &c, const std::vector<Int> &t);

/*
 * Twisted product of a circle complex (degrees 0,1; edge i runs from
 * vertex i to vertex i+1 mod n) with an arbitrary complex D. The boundary
 * of (edge_i x d) picks up twist automorphisms on the two endpoint terms:
 *   d(c1 x d) = c1 x dd + sum_{a0 in dc1} a0 x phi(c1, a0) d.
 * twists[i][0] acts on the term at vertex i, twists[i][1] at vertex i+1.
 * Cells of degree k are indexed with the j=0 block (vertex x k-cells)
 * first, then the j=1 block (edge x (k-1)-cells).
 */
ChainComplex twisted_product(size_t circle_len, const ChainComplex &d,
                             const std::vector<std::array<ComplexAutomorphism, 2>> &twists);

// Untwisted homological product with a circle.
ChainComplex circle_product(size_t circle_len, const ChainComplex &d);

/*
 * The 24-cell honeycomb (Voronoi cellulation of the D4 lattice, in the
 * scaling with basis (2,0,0,0),(0,2,0,0),(0,0,2,0),(1,1,1,1)) modulo a
 * sublattice. Cells are keyed by their reduced vertex sets.
 */
struct HoneycombComplex {
  ChainComplex cc;
  HermiteForm sublattice;
  // Per degree, per cell, the canonical translation-orbit key
  // (sorted vertex offsets from an anchor, then the reduced anchor).
  std::vector<std::vector<std::vector<std::vector<Int>>>> cells;
  // Per octahedron, its three antipodal vertex pairs in one
  // representative frame; consumed by the subdivision.
  std::vector<std::array<std::array<std::vector<Int>, 2>, 3>> oct_axes;
};

HoneycombComplex honeycomb_24cell(const LatticeBasis &sublattice);

// Split each octahedron into two pyramids through the axis chosen per
// octahedron (0..2, indexing the three pairs of opposite vertices); a new
// square 2-cell appears per octahedron and every pyramid has boundary
// weight 5. apex_choice may be empty, meaning axis 0 everywhere.
HoneycombComplex subdivide_octahedra(const HoneycombComplex &c,
                                     const std::vector<int> &apex_choice = {});

}  // namespace latqec

#endif
