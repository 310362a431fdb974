#include "latqec/code.hpp"

#include <stdexcept>

namespace latqec {

PauliOp pauli_x(size_t n, size_t qubit) {
  PauliOp p(2 * n);
  p.set(qubit, true);
  return p;
}

PauliOp pauli_z(size_t n, size_t qubit) {
  PauliOp p(2 * n);
  p.set(n + qubit, true);
  return p;
}

PauliOp pauli_from_halves(const BitVec &a, const BitVec &b) {
  size_t n = a.size();
  PauliOp p(2 * n);
  for (size_t i = 0; i < n; i++) {
    if (a.get(i)) p.set(i, true);
    if (b.get(i)) p.set(n + i, true);
  }
  return p;
}

size_t pauli_weight(const PauliOp &p) {
  size_t n = p.size() / 2, w = 0;
  for (size_t i = 0; i < n; i++) w += p.get(i) || p.get(n + i);
  return w;
}

StabilizerCode make_code(size_t n, BitMat checks) {
  if (checks.cols() != 2 * n) throw std::invalid_argument("make_code: check width != 2n");
  StabilizerCode code;
  code.n = n;
  code.checks = std::move(checks);
  SymplecticForm j(n);
  for (size_t a = 0; a < code.checks.rows(); a++)
    for (size_t b = a; b < code.checks.rows(); b++)
      if (symplectic_product(code.checks.row(a), code.checks.row(b), j))
        throw std::invalid_argument("make_code: checks do not commute");
  return code;
}

StabilizerCode make_css_code(BitMat cx, BitMat cz) {
  if (cx.cols() != cz.cols()) throw std::invalid_argument("css: qubit count mismatch");
  size_t n = cx.cols();
  BitMat checks(cx.rows() + cz.rows(), 2 * n);
  for (size_t i = 0; i < cx.rows(); i++)
    for (size_t q = 0; q < n; q++)
      if (cx.get(i, q)) checks.set(i, q, true);
  for (size_t i = 0; i < cz.rows(); i++)
    for (size_t q = 0; q < n; q++)
      if (cz.get(i, q)) checks.set(cx.rows() + i, n + q, true);
  StabilizerCode code = make_code(n, std::move(checks));
  code.css = true;
  code.cx = std::move(cx);
  code.cz = std::move(cz);
  return code;
}

StabilizerCode css_from_complex(const ChainComplex &c, size_t qubit_degree) {
  if (qubit_degree == 0 || qubit_degree >= c.top())
    throw std::invalid_argument("css_from_complex: qubit degree out of range");
  // X-check of a (q-1)-cell touches the q-cells it bounds; Z-check of a
  // (q+1)-cell touches its boundary. They commute because d^2 = 0.
  return make_css_code(c.boundary[qubit_degree].transpose(), c.boundary[qubit_degree + 1]);
}

size_t num_logical(const StabilizerCode &code) { return code.n - code.checks.rank(); }

namespace {

// Greedily choose rows of `candidates` independent modulo span(context);
// stop after `want` picks.
std::vector<BitVec> independent_mod(const BitMat &candidates, const BitMat &context,
                                    size_t want) {
  BitMat pool = context;
  std::vector<BitVec> picked;
  for (size_t i = 0; i < candidates.rows() && picked.size() < want; i++) {
    if (in_row_span(pool, candidates.row(i))) continue;
    picked.push_back(candidates.row(i));
    pool.append_row(candidates.row(i));
  }
  return picked;
}

LogicalBasis css_logical_basis(const StabilizerCode &code) {
  size_t n = code.n;
  size_t k = num_logical(code);
  std::vector<BitVec> xs = independent_mod(kernel(code.cz), code.cx, k);
  std::vector<BitVec> zs = independent_mod(kernel(code.cx), code.cz, k);
  if (xs.size() != k || zs.size() != k)
    throw std::logic_error("css_logical_basis: rank deficiency");

  // Normalize the pairing to the identity: P[i][j] = <x_i, z_j>.
  BitMat p(k, k);
  for (size_t i = 0; i < k; i++)
    for (size_t j = 0; j < k; j++)
      if (xs[i].dot(zs[j])) p.set(i, j, true);
  RrefResult rr = rref(p);
  if (rr.rank != k) throw std::logic_error("css_logical_basis: degenerate pairing");
  BitMat pinv = rr.transform;  // transform * p = id at full rank

  LogicalBasis l;
  l.k = k;
  l.rows = BitMat(2 * k, 2 * n);
  for (size_t i = 0; i < k; i++)
    for (size_t q = 0; q < n; q++)
      if (xs[i].get(q)) l.rows.set(i, q, true);
  // z'_i = sum_j pinv[i][j] z_j has <x_a, z'_i> = delta_ai... with the
  // convention below the pairing check in logical_basis() is the arbiter.
  for (size_t i = 0; i < k; i++) {
    BitVec zi(n);
    for (size_t j = 0; j < k; j++)
      if (pinv.get(j, i)) zi ^= zs[j];
    for (size_t q = 0; q < n; q++)
      if (zi.get(q)) l.rows.set(k + i, n + q, true);
  }
  return l;
}

LogicalBasis symplectic_gram_schmidt(const StabilizerCode &code) {
  size_t k = num_logical(code);
  SymplecticForm j(code.n);
  BitMat commutant = kernel(apply_J(code.checks, j));
  std::vector<BitVec> reps = independent_mod(commutant, code.checks, 2 * k);
  if (reps.size() != 2 * k) throw std::logic_error("logical_basis: rank deficiency");

  std::vector<BitVec> xs, zs;
  std::vector<BitVec> rest = reps;
  while (!rest.empty()) {
    BitVec u = rest.front();
    rest.erase(rest.begin());
    size_t partner = rest.size();
    for (size_t i = 0; i < rest.size(); i++)
      if (symplectic_product(u, rest[i], j)) {
        partner = i;
        break;
      }
    if (partner == rest.size()) throw std::logic_error("logical_basis: unpaired vector");
    BitVec v = rest[partner];
    rest.erase(rest.begin() + (long)partner);
    for (auto &w : rest) {
      if (symplectic_product(w, v, j)) w ^= u;
      if (symplectic_product(w, u, j)) w ^= v;
    }
    xs.push_back(u);
    zs.push_back(v);
  }

  LogicalBasis l;
  l.k = k;
  l.rows = BitMat(0, 2 * code.n);
  for (const auto &u : xs) l.rows.append_row(u);
  for (const auto &v : zs) l.rows.append_row(v);
  return l;
}

}  // namespace

LogicalBasis logical_basis(const StabilizerCode &code) {
  LogicalBasis l = code.css ? css_logical_basis(code) : symplectic_gram_schmidt(code);
  SymplecticForm j(code.n);
  for (size_t a = 0; a < 2 * l.k; a++) {
    for (size_t b = a; b < 2 * l.k; b++) {
      bool want = (b == a + l.k && a < l.k);
      if (symplectic_product(l.rows.row(a), l.rows.row(b), j) != want)
        throw std::logic_error("logical_basis: pairing violated");
    }
    for (size_t c = 0; c < code.checks.rows(); c++)
      if (symplectic_product(code.checks.row(c), l.rows.row(a), j))
        throw std::logic_error("logical_basis: anticommutes with a check");
  }
  return l;
}

bool is_symmetry(const StabilizerCode &code, const BitMat &u) {
  if (!is_symplectic(u, code.form()))
    throw std::invalid_argument("is_symmetry: matrix is not symplectic");
  return row_span_equal(code.checks * u, code.checks);
}

BitMat logical_action(const StabilizerCode &code, const LogicalBasis &l, const BitMat &u) {
  if (!is_symmetry(code, u)) throw std::invalid_argument("logical_action: not a symmetry");
  SymplecticForm jn(code.n), jk(l.k);
  BitMat lu = l.rows * u;
  BitMat m = apply_J(apply_J(lu, jn) * l.rows.transpose(), jk);
  if (!is_symplectic(m, jk)) throw std::logic_error("logical_action: result not symplectic");
  // L U = M L modulo the stabilizer span.
  BitMat ml = m * l.rows;
  for (size_t i = 0; i < lu.rows(); i++) {
    BitVec diff = lu.row(i);
    diff ^= ml.row(i);
    if (!in_row_span(code.checks, diff))
      throw std::logic_error("logical_action: L U != M L modulo checks");
  }
  return m;
}

StabilizerCode direct_sum(const StabilizerCode &a, const StabilizerCode &b) {
  size_t n = a.n + b.n;
  BitMat checks(a.checks.rows() + b.checks.rows(), 2 * n);
  for (size_t i = 0; i < a.checks.rows(); i++) {
    for (size_t q = 0; q < a.n; q++) {
      if (a.checks.get(i, q)) checks.set(i, q, true);
      if (a.checks.get(i, a.n + q)) checks.set(i, n + q, true);
    }
  }
  for (size_t i = 0; i < b.checks.rows(); i++) {
    for (size_t q = 0; q < b.n; q++) {
      if (b.checks.get(i, q)) checks.set(a.checks.rows() + i, a.n + q, true);
      if (b.checks.get(i, b.n + q)) checks.set(a.checks.rows() + i, n + a.n + q, true);
    }
  }
  StabilizerCode out = make_code(n, std::move(checks));
  if (a.css && b.css) {
    out.css = true;
    out.cx = BitMat(a.cx.rows() + b.cx.rows(), n);
    out.cz = BitMat(a.cz.rows() + b.cz.rows(), n);
    for (size_t i = 0; i < a.cx.rows(); i++)
      for (size_t q = 0; q < a.n; q++)
        if (a.cx.get(i, q)) out.cx.set(i, q, true);
    for (size_t i = 0; i < b.cx.rows(); i++)
      for (size_t q = 0; q < b.n; q++)
        if (b.cx.get(i, q)) out.cx.set(a.cx.rows() + i, a.n + q, true);
    for (size_t i = 0; i < a.cz.rows(); i++)
      for (size_t q = 0; q < a.n; q++)
        if (a.cz.get(i, q)) out.cz.set(i, q, true);
    for (size_t i = 0; i < b.cz.rows(); i++)
      for (size_t q = 0; q < b.n; q++)
        if (b.cz.get(i, q)) out.cz.set(a.cz.rows() + i, a.n + q, true);
  }
  return out;
}

PauliOp embed_pauli(const PauliOp &p, size_t n_from, size_t n_to, size_t offset) {
  PauliOp out(2 * n_to);
  for (size_t q = 0; q < n_from; q++) {
    if (p.get(q)) out.set(offset + q, true);
    if (p.get(n_from + q)) out.set(n_to + offset + q, true);
  }
  return out;
}

}  // namespace latqec
