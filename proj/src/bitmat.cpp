#include "latqec/bitmat.hpp"

#include <bit>
#include <stdexcept>

namespace latqec {

size_t BitVec::popcount() const {
  size_t c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool BitVec::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

bool BitVec::dot(const BitVec &o) const {
  uint64_t acc = 0;
  for (size_t k = 0; k < w_.size(); k++) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1;
}

std::string BitVec::str() const {
  std::string s(n_, '0');
  for (size_t i = 0; i < n_; i++)
    if (get(i)) s[i] = '1';
  return s;
}

BitMat BitMat::identity(size_t n) {
  BitMat m(n, n);
  for (size_t i = 0; i < n; i++) m.set(i, i, true);
  return m;
}

BitMat BitMat::from_rows(const std::vector<BitVec> &rows) {
  BitMat m;
  m.r_ = rows.size();
  m.c_ = rows.empty() ? 0 : rows[0].size();
  m.rows_ = rows;
  return m;
}

BitMat BitMat::from_ints(const std::vector<std::vector<int>> &rows) {
  size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  BitMat m(r, c);
  for (size_t i = 0; i < r; i++)
    for (size_t j = 0; j < c; j++)
      if (rows[i][j] & 1) m.set(i, j, true);
  return m;
}

void BitMat::append_row(const BitVec &v) {
  if (r_ == 0 && c_ == 0) c_ = v.size();
  rows_.push_back(v);
  r_++;
}

BitMat BitMat::transpose() const {
  BitMat t(c_, r_);
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < c_; j++)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

BitMat operator*(const BitMat &a, const BitMat &b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("BitMat product shape mismatch");
  BitMat out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); i++)
    for (size_t k = 0; k < a.cols(); k++)
      if (a.get(i, k)) out.rows_[i] ^= b.rows_[k];
  return out;
}

BitMat operator+(const BitMat &a, const BitMat &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("BitMat sum shape mismatch");
  BitMat out = a;
  for (size_t i = 0; i < a.rows(); i++) out.rows_[i] ^= b.rows_[i];
  return out;
}

bool BitMat::operator==(const BitMat &o) const {
  return r_ == o.r_ && c_ == o.c_ && rows_ == o.rows_;
}

BitMat BitMat::submatrix_cols(const std::vector<size_t> &cols) const {
  BitMat out(r_, cols.size());
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < cols.size(); j++)
      if (get(i, cols[j])) out.set(i, j, true);
  return out;
}

BitMat BitMat::vstack(const BitMat &below) const {
  if (r_ > 0 && below.rows() > 0 && c_ != below.cols())
    throw std::invalid_argument("vstack column mismatch");
  BitMat out = *this;
  for (size_t i = 0; i < below.rows(); i++) out.append_row(below.row(i));
  return out;
}

size_t BitMat::rank() const { return rref(*this).rank; }

std::string BitMat::str() const {
  std::string s;
  for (size_t i = 0; i < r_; i++) {
    s += rows_[i].str();
    s += '\n';
  }
  return s;
}

RrefResult rref(const BitMat &m) {
  RrefResult res;
  res.reduced = m;
  res.transform = BitMat::identity(m.rows());
  size_t pivot_row = 0;
  for (size_t col = 0; col < m.cols() && pivot_row < m.rows(); col++) {
    size_t sel = pivot_row;
    while (sel < m.rows() && !res.reduced.get(sel, col)) sel++;
    if (sel == m.rows()) continue;
    res.reduced.swap_rows(pivot_row, sel);
    res.transform.swap_rows(pivot_row, sel);
    for (size_t i = 0; i < m.rows(); i++) {
      if (i != pivot_row && res.reduced.get(i, col)) {
        res.reduced.xor_row(i, pivot_row);
        res.transform.xor_row(i, pivot_row);
      }
    }
    res.pivot_cols.push_back(col);
    pivot_row++;
  }
  res.rank = pivot_row;
  return res;
}

BitMat kernel(const BitMat &m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;

  BitMat basis(0, m.cols());
  for (size_t free_col = 0; free_col < m.cols(); free_col++) {
    if (is_pivot[free_col]) continue;
    BitVec v(m.cols());
    v.set(free_col, true);
    // Back-substitute: pivot variable i must cancel the free column entry.
    for (size_t i = 0; i < rr.pivot_cols.size(); i++) {
      if (rr.reduced.get(i, free_col)) v.set(rr.pivot_cols[i], true);
    }
    basis.append_row(v);
  }
  return basis;
}

bool solve_row_combination(const BitMat &m, const BitVec &v, BitVec *coeffs) {
  if (v.size() != m.cols()) throw std::invalid_argument("solve: length mismatch");
  RrefResult rr = rref(m);
  BitVec residual = v;
  BitVec lam(m.rows());
  for (size_t i = 0; i < rr.pivot_cols.size(); i++) {
    if (residual.get(rr.pivot_cols[i])) {
      residual ^= rr.reduced.row(i);
      // transform row i tells which original rows sum to reduced row i.
      lam ^= rr.transform.row(i);
    }
  }
  if (residual.any()) return false;
  if (coeffs) *coeffs = lam;
  return true;
}

bool in_row_span(const BitMat &m, const BitVec &v) {
  return solve_row_combination(m, v, nullptr);
}

bool row_span_equal(const BitMat &a, const BitMat &b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("row_span_equal: column mismatch");
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (size_t i = 0; i < ra.rank; i++)
    if (!in_row_span(b, ra.reduced.row(i))) return false;
  return true;
}

bool symplectic_product(const BitVec &u, const BitVec &v, SymplecticForm j) {
  if (u.size() != 2 * j.n || v.size() != 2 * j.n)
    throw std::invalid_argument("symplectic_product: length mismatch");
  bool acc = false;
  for (size_t i = 0; i < j.n; i++) {
    acc ^= u.get(i) && v.get(i + j.n);
    acc ^= u.get(i + j.n) && v.get(i);
  }
  return acc;
}

BitVec apply_J(const BitVec &v, SymplecticForm j) {
  BitVec out(v.size());
  for (size_t i = 0; i < j.n; i++) {
    if (v.get(i)) out.set(i + j.n, true);
    if (v.get(i + j.n)) out.set(i, true);
  }
  return out;
}

BitMat apply_J(const BitMat &m, SymplecticForm j) {
  BitMat out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); i++) out.row(i) = apply_J(m.row(i), j);
  return out;
}

bool is_symplectic(const BitMat &m, SymplecticForm j) {
  if (m.rows() != 2 * j.n || m.cols() != 2 * j.n) return false;
  for (size_t a = 0; a < m.rows(); a++) {
    for (size_t b = a; b < m.rows(); b++) {
      bool want = (b == a + j.n && a < j.n);
      if (symplectic_product(m.row(a), m.row(b), j) != want) return false;
    }
  }
  return true;
}

}  // namespace latqec
