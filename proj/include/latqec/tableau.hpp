#ifndef LATQEC_TABLEAU_HPP
#define LATQEC_TABLEAU_HPP

#include "latqec/code.hpp"

#include <random>

namespace latqec {

/*
 * Stabilizer state as a tableau of n signed stabilizer generators plus
 * the paired destabilizers, giving O(n^2) Pauli measurement. Rows encode
 * Hermitian Paulis (-1)^r prod_j P_j with P_j read from the (x, z) bit
 * pair; a PauliOp passed in is interpreted the same way with r = 0.
 */
class StabilizerState {
 public:
  // All qubits in X = +1.
  explicit StabilizerState(size_t n);
  // Product state with chosen bases: 'X', 'Y' or 'Z' per qubit, +1 signs.
  static StabilizerState product_state(const std::string &bases);

  size_t num_qubits() const { return n_; }

  struct MeasureResult {
    int outcome = 0;  // 0 -> +1, 1 -> -1
    bool deterministic = false;
  };

  // Measure a Hermitian Pauli, collapsing the state if the outcome is
  // random.
  MeasureResult measure_pauli(const PauliOp &p, std::mt19937_64 &rng);
  // +1, -1 or 0 (indeterminate); no collapse.
  int expectation(const PauliOp &p) const;
  // Conjugate by a Pauli error.
  void apply_pauli(const PauliOp &p);

  void apply_h(size_t q);
  void apply_s(size_t q);
  void apply_cnot(size_t control, size_t target);
  void apply_cz(size_t a, size_t b);

  // The stabilizer generators as 2n-bit vectors (signs dropped).
  BitMat stabilizer_matrix() const;
  // Sign bit of stabilizer row i.
  bool stabilizer_sign(size_t i) const { return phase_[n_ + i]; }

 private:
  size_t n_ = 0;
  // Rows 0..n-1 destabilizers, n..2n-1 stabilizers.
  std::vector<BitVec> x_, z_;
  std::vector<uint8_t> phase_;

  bool anticommutes(size_t row, const BitVec &px, const BitVec &pz) const;
  void rowsum(size_t h, size_t i);
  // Multiply Hermitian Pauli (px,pz,r) into row-accumulator form.
  void accumulate(BitVec &ax, BitVec &az, int &ar, size_t row) const;
};

// Split a 2n-bit PauliOp into halves.
void split_pauli(const PauliOp &p, size_t n, BitVec &x, BitVec &z);

}  // namespace latqec

#endif
