#ifndef LATQEC_BITMAT_HPP
#define LATQEC_BITMAT_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace latqec {

/*
 * Dense F2 vectors and matrices, bit-packed into 64-bit words.
 * Row vectors act on matrices from the right throughout: a subspace is
 * always the span of the rows of some BitMat.
 */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  void operator^=(const BitVec &o) {
    for (size_t k = 0; k < w_.size(); k++) w_[k] ^= o.w_[k];
  }
  bool operator==(const BitVec &o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const BitVec &o) const { return w_ < o.w_; }

  size_t popcount() const;
  bool any() const;
  // F2 inner product sum_i a_i b_i.
  bool dot(const BitVec &o) const;

  const std::vector<uint64_t> &words() const { return w_; }
  std::vector<uint64_t> &words() { return w_; }

  std::string str() const;

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

struct RrefResult;

class BitMat {
 public:
  BitMat() = default;
  BitMat(size_t rows, size_t cols)
      : r_(rows), c_(cols), rows_(rows, BitVec(cols)) {}

  static BitMat identity(size_t n);
  static BitMat from_rows(const std::vector<BitVec> &rows);
  // Rows given as 0/1 integer lists, mostly for tests and small fixtures.
  static BitMat from_ints(const std::vector<std::vector<int>> &rows);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool get(size_t i, size_t j) const { return rows_[i].get(j); }
  void set(size_t i, size_t j, bool v) { rows_[i].set(j, v); }
  const BitVec &row(size_t i) const { return rows_[i]; }
  BitVec &row(size_t i) { return rows_[i]; }

  void append_row(const BitVec &v);
  void xor_row(size_t dst, size_t src) { rows_[dst] ^= rows_[src]; }
  void swap_rows(size_t i, size_t j) { std::swap(rows_[i], rows_[j]); }

  BitMat transpose() const;
  // Matrix product over F2; (a*b)[i][j] = sum_k a[i][k] b[k][j].
  friend BitMat operator*(const BitMat &a, const BitMat &b);
  friend BitMat operator+(const BitMat &a, const BitMat &b);
  bool operator==(const BitMat &o) const;

  BitMat submatrix_cols(const std::vector<size_t> &cols) const;
  BitMat vstack(const BitMat &below) const;

  size_t rank() const;
  std::string str() const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<BitVec> rows_;
};

/*
 * Reduced row echelon form together with the transform that produced it:
 * transform * input = reduced, transform invertible.
 */
struct RrefResult {
  BitMat reduced;
  BitMat transform;
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
};

RrefResult rref(const BitMat &m);

// Basis of {x : m x^T = 0}, returned as rows. Row count = cols - rank.
BitMat kernel(const BitMat &m);

// True iff v is in the row span of m.
bool in_row_span(const BitMat &m, const BitVec &v);
// True iff the two row spans coincide. Throws on column mismatch.
bool row_span_equal(const BitMat &a, const BitMat &b);
// Coefficients lambda with lambda * m = v, if any.
bool solve_row_combination(const BitMat &m, const BitVec &v, BitVec *coeffs);

/*
 * The symplectic form J_n on 2n-bit vectors (X half | Z half), stored
 * implicitly: applying J swaps the halves, and u J v^T pairs the X half of
 * one vector with the Z half of the other.
 */
struct SymplecticForm {
  size_t n;
  explicit SymplecticForm(size_t qubits) : n(qubits) {}
};

// u J v^T: 1 iff the corresponding Pauli operators anticommute.
bool symplectic_product(const BitVec &u, const BitVec &v, SymplecticForm j);
// v J: swap the X and Z halves.
BitVec apply_J(const BitVec &v, SymplecticForm j);
BitMat apply_J(const BitMat &m, SymplecticForm j);
// u J u^T = 0 always over F2, so a matrix is symplectic iff m J m^T = J.
bool is_symplectic(const BitMat &m, SymplecticForm j);

}  // namespace latqec

#endif
