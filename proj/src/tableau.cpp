#include "latqec/tableau.hpp"

#include <stdexcept>

namespace latqec {

void split_pauli(const PauliOp &p, size_t n, BitVec &x, BitVec &z) {
  x = BitVec(n);
  z = BitVec(n);
  for (size_t q = 0; q < n; q++) {
    if (p.get(q)) x.set(q, true);
    if (p.get(n + q)) z.set(q, true);
  }
}

StabilizerState::StabilizerState(size_t n) : n_(n) {
  x_.assign(2 * n, BitVec(n));
  z_.assign(2 * n, BitVec(n));
  phase_.assign(2 * n, 0);
  for (size_t q = 0; q < n; q++) {
    z_[q].set(q, true);        // destabilizer Z_q
    x_[n + q].set(q, true);    // stabilizer X_q
  }
}

StabilizerState StabilizerState::product_state(const std::string &bases) {
  StabilizerState s(bases.size());
  for (size_t q = 0; q < bases.size(); q++) {
    switch (bases[q]) {
      case 'X':
        break;  // already X
      case 'Z':
        s.x_[s.n_ + q].set(q, false);
        s.z_[s.n_ + q].set(q, true);
        s.z_[q].set(q, false);
        s.x_[q].set(q, true);  // destabilizer X_q
        break;
      case 'Y':
        s.z_[s.n_ + q].set(q, true);  // stabilizer Y_q, destabilizer stays Z_q
        break;
      default:
        throw std::invalid_argument("product_state: basis must be X, Y or Z");
    }
  }
  return s;
}

bool StabilizerState::anticommutes(size_t row, const BitVec &px, const BitVec &pz) const {
  return x_[row].dot(pz) ^ z_[row].dot(px);
}

namespace {

// Exponent-of-i contribution when multiplying single-qubit Paulis
// (x1,z1) * (x2,z2), as in the CHP tableau update.
int g_phase(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return (z2 ? 1 : 0) - (x2 ? 1 : 0);
  if (x1 && !z1) return z2 ? ((x2 ? 1 : 0) * 2 - 1) : 0;
  return x2 ? (1 - (z2 ? 1 : 0) * 2) : 0;
}

}  // namespace

void StabilizerState::rowsum(size_t h, size_t i) {
  int acc = 2 * (int)phase_[h] + 2 * (int)phase_[i];
  for (size_t q = 0; q < n_; q++)
    acc += g_phase(x_[i].get(q), z_[i].get(q), x_[h].get(q), z_[h].get(q));
  acc = ((acc % 4) + 4) % 4;
  // An odd exponent only occurs when h is a destabilizer row, whose phase
  // carries no meaning.
  phase_[h] = (uint8_t)(acc / 2);
  x_[h] ^= x_[i];
  z_[h] ^= z_[i];
}

void StabilizerState::accumulate(BitVec &ax, BitVec &az, int &ar, size_t row) const {
  int acc = 2 * ar + 2 * (int)phase_[row];
  for (size_t q = 0; q < n_; q++)
    acc += g_phase(x_[row].get(q), z_[row].get(q), ax.get(q), az.get(q));
  acc %= 4;
  if (acc < 0) acc += 4;
  if (acc % 2) throw std::logic_error("accumulate: non-Hermitian product");
  ar = acc / 2;
  ax ^= x_[row];
  az ^= z_[row];
}

StabilizerState::MeasureResult StabilizerState::measure_pauli(const PauliOp &p,
                                                              std::mt19937_64 &rng) {
  if (p.size() != 2 * n_) throw std::invalid_argument("measure_pauli: size mismatch");
  BitVec px, pz;
  split_pauli(p, n_, px, pz);

  size_t pivot = 2 * n_;
  for (size_t i = n_; i < 2 * n_; i++)
    if (anticommutes(i, px, pz)) {
      pivot = i;
      break;
    }

  MeasureResult res;
  if (pivot < 2 * n_) {
    // Random outcome: update every other anticommuting row.
    for (size_t i = 0; i < 2 * n_; i++)
      if (i != pivot && anticommutes(i, px, pz)) rowsum(i, pivot);
    size_t d = pivot - n_;
    x_[d] = x_[pivot];
    z_[d] = z_[pivot];
    phase_[d] = phase_[pivot];
    res.outcome = (int)(rng() & 1);
    x_[pivot] = px;
    z_[pivot] = pz;
    phase_[pivot] = (uint8_t)res.outcome;
    res.deterministic = false;
    return res;
  }

  // Deterministic: express p as a product of stabilizers via the
  // destabilizer pairing.
  BitVec ax(n_), az(n_);
  int ar = 0;
  for (size_t i = 0; i < n_; i++)
    if (anticommutes(i, px, pz)) accumulate(ax, az, ar, n_ + i);
  if (!(ax == px) || !(az == pz))
    throw std::logic_error("measure_pauli: operator not in the stabilizer group");
  res.outcome = ar;
  res.deterministic = true;
  return res;
}

int StabilizerState::expectation(const PauliOp &p) const {
  BitVec px, pz;
  split_pauli(p, n_, px, pz);
  for (size_t i = n_; i < 2 * n_; i++)
    if (anticommutes(i, px, pz)) return 0;
  BitVec ax(n_), az(n_);
  int ar = 0;
  for (size_t i = 0; i < n_; i++)
    if (anticommutes(i, px, pz)) accumulate(ax, az, ar, n_ + i);
  if (!(ax == px) || !(az == pz))
    throw std::logic_error("expectation: operator not in the stabilizer group");
  return ar ? -1 : 1;
}

void StabilizerState::apply_pauli(const PauliOp &p) {
  BitVec px, pz;
  split_pauli(p, n_, px, pz);
  for (size_t i = 0; i < 2 * n_; i++)
    if (anticommutes(i, px, pz)) phase_[i] ^= 1;
}

void StabilizerState::apply_h(size_t q) {
  for (size_t i = 0; i < 2 * n_; i++) {
    if (x_[i].get(q) && z_[i].get(q)) phase_[i] ^= 1;
    bool t = x_[i].get(q);
    x_[i].set(q, z_[i].get(q));
    z_[i].set(q, t);
  }
}

void StabilizerState::apply_s(size_t q) {
  for (size_t i = 0; i < 2 * n_; i++) {
    if (x_[i].get(q) && z_[i].get(q)) phase_[i] ^= 1;
    z_[i].set(q, z_[i].get(q) ^ x_[i].get(q));
  }
}

void StabilizerState::apply_cnot(size_t c, size_t t) {
  for (size_t i = 0; i < 2 * n_; i++) {
    if (x_[i].get(c) && z_[i].get(t) && (x_[i].get(t) == z_[i].get(c))) phase_[i] ^= 1;
    x_[i].set(t, x_[i].get(t) ^ x_[i].get(c));
    z_[i].set(c, z_[i].get(c) ^ z_[i].get(t));
  }
}

void StabilizerState::apply_cz(size_t a, size_t b) {
  apply_h(b);
  apply_cnot(a, b);
  apply_h(b);
}

BitMat StabilizerState::stabilizer_matrix() const {
  BitMat m(n_, 2 * n_);
  for (size_t i = 0; i < n_; i++) {
    for (size_t q = 0; q < n_; q++) {
      if (x_[n_ + i].get(q)) m.set(i, q, true);
      if (z_[n_ + i].get(q)) m.set(i, n_ + q, true);
    }
  }
  return m;
}

}  // namespace latqec
