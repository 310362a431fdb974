#ifndef LATQEC_SYMMETRY_HPP
#define LATQEC_SYMMETRY_HPP

#include "latqec/code.hpp"
#include "latqec/distance.hpp"

namespace latqec {

/*
 * A space group element (M, b) acting on crystal coordinates as
 * r -> r M + b. Both the rotation and the shift are stored doubled:
 * every rotation acting on cubic cell midpoints has denominator at most
 * two, and shifts can be half-integral. m2 = 2M, shift2 = 2b.
 */
struct SpaceGroupElement {
  IntMat m2;
  std::vector<Int> shift2;

  bool operator==(const SpaceGroupElement &o) const {
    return m2 == o.m2 && shift2 == o.shift2;
  }
  bool operator<(const SpaceGroupElement &o) const {
    return m2 != o.m2 ? m2 < o.m2 : shift2 < o.shift2;
  }
};

// Group law (M',b') after (M,b): r -> (rM + b)M' + b'.
SpaceGroupElement compose(const SpaceGroupElement &second, const SpaceGroupElement &first);

/*
 * The doubled ambient rotation 2 W^{-1} U W of a basis-frame
 * automorphism; empty when the rotation has denominator above two, in
 * which case it cannot act on the crystal at all.
 */
std::optional<IntMat> ambient_matrix2(const LatticeBasis &basis, const LatticeAutomorphism &a);

enum class MappingRule { SameType, SwapXZ };

/*
 * All space group elements built from the given automorphisms that
 * permute the qubit coordinates and preserve the stabilizer group:
 * SameType elements fix the X and Z check row spans, SwapXZ elements
 * exchange them (a crystalline ZX duality). Shift candidates come from
 * qubit coordinate pairs, b = r_k - r_1 M; shifts are reported modulo
 * the lattice. Integer rotations map check cells to check cells, but
 * half-integer rotations can preserve the spans while moving check
 * midpoints off the cell grid, so the classification tests row spans.
 */
std::vector<SpaceGroupElement> find_space_group(const Crystal &crystal,
                                                const HermiteForm &lat,
                                                const LatticeBasis &basis,
                                                const std::vector<LatticeAutomorphism> &autos,
                                                const StabilizerCode &code, MappingRule rule);

// The permutation a valid space group element induces on the qubits.
std::vector<size_t> qubit_permutation(const Crystal &crystal, const HermiteForm &lat,
                                      const SpaceGroupElement &g);

// U(P) = P (+) P for a qubit permutation; a symplectic matrix.
BitMat permutation_symmetry_matrix(const std::vector<size_t> &perm);

/*
 * A ZX duality: a qubit permutation mapping RowSpan(C_X) onto
 * RowSpan(C_Z) and back.
 */
struct ZXDuality {
  std::vector<size_t> perm;
  bool involutive = false;
};

// Validates the row span exchange; throws if it fails.
ZXDuality zx_duality(const StabilizerCode &code, const std::vector<size_t> &perm);

// Hadamard-type gate [[0,D],[D,0]] of a duality.
BitMat hadamard_type(const ZXDuality &d);

// Phase-type gate [[id,D],[0,id]]; requires an involutive duality so that
// D is symmetric, else the matrix is not symplectic.
BitMat phase_type(const ZXDuality &d);

/*
 * Exact order of the subgroup of Sp(2k, F2) generated by the given
 * matrices, via a stabilizer chain for the permutation action on the
 * nonzero vectors of F2^{2k}. Feasible for 2k <= 24.
 */
uint64_t group_order(const std::vector<BitMat> &generators);

/*
 * A logical Clifford with its Pauli frame: the image of Hermitian
 * generator i is (-1)^{sigma_i} times the Hermitian Pauli labelled by
 * row i of m. Together these determine the sign of every Pauli image.
 */
struct SignedGate {
  BitMat m;
  BitVec sigma;
};

// Sign of the image of Herm(v): image = (-1)^f Herm(v m).
bool signed_image_flip(const SignedGate &g, const BitVec &v);
SignedGate signed_compose(const SignedGate &a, const SignedGate &b);  // apply a then b
SignedGate signed_inverse(const SignedGate &g);

// Order of the generated group of signed logical Cliffords (the gate
// group modulo phases but not modulo logical Paulis), via the action on
// signed Hermitian Paulis.
uint64_t signed_group_order(const std::vector<SignedGate> &generators);

/*
 * Conjugation of Hermitian Paulis through the physical circuits of the
 * crystalline gates, yielding the sign-tracked logical action.
 */
SignedGate signed_action_permutation(const StabilizerCode &code, const LogicalBasis &l,
                                     const std::vector<size_t> &perm);
SignedGate signed_action_hadamard(const StabilizerCode &code, const LogicalBasis &l,
                                  const ZXDuality &d);
SignedGate signed_action_phase(const StabilizerCode &code, const LogicalBasis &l,
                               const ZXDuality &d);

/*
 * The logical Pauli kernel of the generated signed group: the subspace
 * of sign vectors whose gates act trivially modulo Pauli. expected_size
 * = signed order / unsigned order bounds the search, which walks
 * products until the span is complete.
 */
BitMat signed_pauli_kernel(const std::vector<SignedGate> &generators, uint64_t expected_size);

// Membership test against the same stabilizer chain.
class MatrixGroup {
 public:
  explicit MatrixGroup(const std::vector<BitMat> &generators);
  ~MatrixGroup();
  MatrixGroup(MatrixGroup &&) noexcept;
  uint64_t order() const { return order_; }
  bool contains(const BitMat &m) const;

 private:
  struct Level;
  std::vector<Level> chain_;
  size_t dim_ = 0;
  uint64_t order_ = 1;
};

}  // namespace latqec

#endif
