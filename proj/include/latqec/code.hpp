#ifndef LATQEC_CODE_HPP
#define LATQEC_CODE_HPP

#include "latqec/bitmat.hpp"
#include "latqec/chain.hpp"

namespace latqec {

/*
 * A Pauli operator modulo phase: a 2n-bit row vector (X half | Z half).
 * Signs are tracked only by the tableau simulator.
 */
using PauliOp = BitVec;

PauliOp pauli_x(size_t n, size_t qubit);
PauliOp pauli_z(size_t n, size_t qubit);
// X(a) Z(b) from supports.
PauliOp pauli_from_halves(const BitVec &a, const BitVec &b);
size_t pauli_weight(const PauliOp &p);

/*
 * A stabilizer code given by an m x 2n check matrix C with C J C^T = 0.
 * CSS codes also carry the (C_X | 0), (0 | C_Z) block structure.
 */
struct StabilizerCode {
  size_t n = 0;
  BitMat checks;
  bool css = false;
  BitMat cx, cz;  // n-column blocks, valid when css

  SymplecticForm form() const { return SymplecticForm(n); }
};

// Validates the isotropy invariant.
StabilizerCode make_code(size_t n, BitMat checks);
StabilizerCode make_css_code(BitMat cx, BitMat cz);

// Qubits on q-cells, X-checks on (q-1)-cells, Z-checks on (q+1)-cells.
StabilizerCode css_from_complex(const ChainComplex &c, size_t qubit_degree);

// k = n - rank(C).
size_t num_logical(const StabilizerCode &code);

/*
 * A 2k x 2n matrix L with L J L^T = J_k and C J L^T = 0; k X-type rows
 * then k Z-type rows. Construction is deterministic for a fixed check
 * matrix: CSS codes get pure-type rows from the kernels of C_Z and C_X,
 * anything else goes through symplectic Gram-Schmidt.
 */
struct LogicalBasis {
  size_t k = 0;
  BitMat rows;

  const BitVec &x_row(size_t i) const { return rows.row(i); }
  const BitVec &z_row(size_t i) const { return rows.row(k + i); }
};

LogicalBasis logical_basis(const StabilizerCode &code);

// RowSpan(C U) = RowSpan(C); throws if u is not symplectic.
bool is_symmetry(const StabilizerCode &code, const BitMat &u);

// Logical action M = L U J L^T J of a symmetry; M is symplectic and
// satisfies L U = M L modulo the check row span. Throws if u is not a
// symmetry of the code.
BitMat logical_action(const StabilizerCode &code, const LogicalBasis &l, const BitMat &u);

// Block-diagonal code on two registers.
StabilizerCode direct_sum(const StabilizerCode &a, const StabilizerCode &b);

// Embed a Pauli on block qubits into a larger register at offset.
PauliOp embed_pauli(const PauliOp &p, size_t n_from, size_t n_to, size_t offset);

}  // namespace latqec

#endif
