#ifndef LATQEC_LATTICE_HPP
#define LATQEC_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace latqec {

using Int = long long;
using IntMat = std::vector<std::vector<Int>>;

/*
 * An integral lattice given by the rows of a nonsingular D x D integer
 * matrix. Row vectors are lattice vectors throughout.
 */
struct LatticeBasis {
  size_t dim = 0;
  IntMat rows;

  LatticeBasis() = default;
  LatticeBasis(IntMat r);

  Int determinant() const;
};

/*
 * Hermite normal form: upper triangular, positive diagonal, and for i < j
 * the above-diagonal entries satisfy 0 <= M_ij < M_jj. Unique per lattice.
 */
struct HermiteForm {
  IntMat matrix;
  Int det = 0;

  size_t dim() const { return matrix.size(); }
  LatticeBasis basis() const { return LatticeBasis(matrix); }
  bool operator==(const HermiteForm &o) const { return matrix == o.matrix; }
  bool operator<(const HermiteForm &o) const { return matrix < o.matrix; }
};

/*
 * A lattice automorphism in basis coordinates: a unimodular U with
 * U G U^T = G for the Gram matrix G = W W^T. The corresponding ambient
 * rotation is M = W^{-1} U W, orthogonal but not always integer; it
 * satisfies hnf(W M) = hnf(W) by construction. When G is a multiple of
 * the identity, U itself is an integer orthogonal (signed permutation)
 * matrix.
 */
struct LatticeAutomorphism {
  IntMat matrix;
};

// Left-multiply by a unimodular matrix to reach the normal form.
// Throws on singular input.
HermiteForm hnf(const LatticeBasis &basis);

// Minimum l1 norm of a nonzero lattice vector. `bound` limits the
// enumeration radius; it defaults to the smallest row norm of the HNF,
// which is always achieved by a lattice vector.
Int l1_systole(const LatticeBasis &basis, std::optional<Int> bound = std::nullopt);

// Exhaustive: all lattice vectors v != 0 with |v|_1 <= bound.
std::vector<std::vector<Int>> enumerate_l1_ball(const HermiteForm &h, Int bound);

// Number of 2D slices a 3D code admits: the top-left HNF entry.
Int n_slice(const HermiteForm &h);

struct SearchResult {
  Int det = 0;
  std::vector<HermiteForm> witnesses;
  uint64_t nodes = 0;
};

struct SearchBudget {
  uint64_t max_nodes = 400000000ULL;
  int threads = 0;  // 0 = hardware concurrency
};

// Thrown when a configured search budget is exhausted; never a silent
// wrong answer.
struct BudgetExceeded : std::exception {
  const char *what() const noexcept override { return "search budget exceeded"; }
};

/*
 * Minimum determinant over all D-dimensional HNF lattices with l1 systole
 * exactly `target_systole` and top-left entry >= min_slices, together with
 * every witness achieving it. Exhaustive by enumeration over diagonal
 * tuples and above-diagonal entries, pruned as in the tables' search:
 * the diagonal product must not exceed the incumbent and every row needs
 * l1 norm at least the target.
 */
SearchResult search_min_det(size_t dim, Int target_systole, Int min_slices,
                            SearchBudget budget = {});

/*
 * The full automorphism group of the lattice. Candidate images of each
 * basis vector are the lattice vectors of equal squared length inside an
 * l1 ball; Gram-matrix equality prunes the depth-first assembly.
 */
std::vector<LatticeAutomorphism> lattice_automorphisms(const LatticeBasis &basis);

// Gram matrix W W^T.
IntMat gram_matrix(const LatticeBasis &basis);

// H^{tensor t}: 2^t-dimensional lattice with determinant 2^(t 2^(t-1)) and
// l1 systole 2^t.
LatticeBasis hadamard_lattice(int t);

// Double one row of the HNF and renormalize; the merged torus for surgery.
HermiteForm merge_for_surgery(const HermiteForm &h, size_t row);

// Minimum l1 norm over nonzero lattice vectors with zero coordinate in
// `cut_direction` (0-based).
Int hyperplane_systole(const LatticeBasis &basis, size_t cut_direction);

// The optimal 2D rotated lattices: distance d with d^2/2 (even d) or
// (d^2+1)/2 (odd d) vertices.
LatticeBasis rotated_2d(Int d);

IntMat mat_mul(const IntMat &a, const IntMat &b);
IntMat mat_identity(size_t n);
Int mat_det(IntMat m);

}  // namespace latqec

#endif
