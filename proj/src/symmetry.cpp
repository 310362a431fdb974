#include "latqec/symmetry.hpp"

#include <bit>
#include <random>
#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace latqec {

namespace {

Int floordiv(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Reduce a doubled coordinate modulo the doubled lattice.
std::vector<Int> reduce2(const HermiteForm &lat, std::vector<Int> x2) {
  size_t n = lat.dim();
  for (size_t i = 0; i < n; i++) {
    Int q = floordiv(x2[i], 2 * lat.matrix[i][i]);
    if (q != 0)
      for (size_t j = i; j < n; j++) x2[j] -= 2 * q * lat.matrix[i][j];
  }
  return x2;
}

// Doubled image 2(r M + b) of a doubled coordinate; empty when r M has
// quarter-integral entries.
std::optional<std::vector<Int>> apply2(const SpaceGroupElement &g, const std::vector<Int> &r2) {
  size_t n = r2.size();
  std::vector<Int> t(n, 0);
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) t[j] += r2[i] * g.m2[i][j];
  for (size_t j = 0; j < n; j++) {
    if (t[j] % 2 != 0) return std::nullopt;
    t[j] = t[j] / 2 + g.shift2[j];
  }
  return t;
}

// Adjugate of a small integer matrix (n <= 4).
IntMat adjugate(const IntMat &m) {
  size_t n = m.size();
  IntMat adj(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) {
      IntMat minor;
      for (size_t r = 0; r < n; r++) {
        if (r == j) continue;
        std::vector<Int> row;
        for (size_t c = 0; c < n; c++)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      Int cof = mat_det(minor);
      if ((i + j) % 2) cof = -cof;
      adj[i][j] = cof;
    }
  return adj;
}

}  // namespace

SpaceGroupElement compose(const SpaceGroupElement &second, const SpaceGroupElement &first) {
  SpaceGroupElement out;
  IntMat prod = mat_mul(first.m2, second.m2);
  size_t n = first.shift2.size();
  out.m2.assign(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) {
      if (prod[i][j] % 2 != 0) throw std::invalid_argument("compose: rotation leaves den-2");
      out.m2[i][j] = prod[i][j] / 2;
    }
  out.shift2.assign(n, 0);
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) out.shift2[j] += first.shift2[i] * second.m2[i][j];
  for (size_t j = 0; j < n; j++) {
    if (out.shift2[j] % 2 != 0) throw std::invalid_argument("compose: shift leaves den-2");
    out.shift2[j] = out.shift2[j] / 2 + second.shift2[j];
  }
  return out;
}

std::optional<IntMat> ambient_matrix2(const LatticeBasis &basis, const LatticeAutomorphism &a) {
  Int det = mat_det(basis.rows);
  IntMat num = mat_mul(adjugate(basis.rows), mat_mul(a.matrix, basis.rows));
  size_t n = basis.dim;
  IntMat out(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) {
      if ((2 * num[i][j]) % det != 0) return std::nullopt;
      out[i][j] = 2 * num[i][j] / det;
    }
  return out;
}

std::vector<SpaceGroupElement> find_space_group(const Crystal &crystal,
                                                const HermiteForm &lat,
                                                const LatticeBasis &basis,
                                                const std::vector<LatticeAutomorphism> &autos,
                                                const StabilizerCode &code, MappingRule rule) {
  if (crystal.qubit2.empty()) throw std::invalid_argument("find_space_group: empty crystal");
  size_t n = crystal.dim;

  std::map<std::vector<Int>, size_t> qubit_at;
  for (size_t i = 0; i < crystal.qubit2.size(); i++)
    qubit_at[reduce2(lat, crystal.qubit2[i])] = i;

  // Span classification is the arbiter: half-integer rotations can fix
  // the check group without mapping check midpoints to check midpoints.
  auto classify = [&](const std::vector<size_t> &perm) -> std::optional<MappingRule> {
    BitMat p(code.n, code.n);
    for (size_t q = 0; q < code.n; q++) p.set(q, perm[q], true);
    BitMat cxp = code.cx * p, czp = code.cz * p;
    if (row_span_equal(cxp, code.cx) && row_span_equal(czp, code.cz))
      return MappingRule::SameType;
    if (row_span_equal(cxp, code.cz) && row_span_equal(czp, code.cx))
      return MappingRule::SwapXZ;
    return std::nullopt;
  };

  std::set<SpaceGroupElement> found;
  for (const auto &a : autos) {
    std::optional<IntMat> m2 = ambient_matrix2(basis, a);
    if (!m2) continue;
    // Candidate shifts send qubit 0 somewhere in the qubit set.
    SpaceGroupElement rot{*m2, std::vector<Int>(n, 0)};
    auto image0 = apply2(rot, crystal.qubit2[0]);
    if (!image0) continue;
    std::set<std::vector<Int>> shifts;
    for (const auto &rk : crystal.qubit2) {
      std::vector<Int> b2(n);
      for (size_t i = 0; i < n; i++) b2[i] = rk[i] - (*image0)[i];
      shifts.insert(reduce2(lat, b2));
    }
    for (const auto &b2 : shifts) {
      SpaceGroupElement g{*m2, b2};
      // Full qubit permutation, if the multiset is preserved.
      std::vector<size_t> perm(crystal.qubit2.size());
      std::vector<bool> hit(crystal.qubit2.size(), false);
      bool ok = true;
      for (size_t q = 0; q < crystal.qubit2.size() && ok; q++) {
        auto img = apply2(g, crystal.qubit2[q]);
        if (!img) {
          ok = false;
          break;
        }
        auto it = qubit_at.find(reduce2(lat, *img));
        ok = it != qubit_at.end() && !hit[it->second];
        if (ok) {
          perm[q] = it->second;
          hit[it->second] = true;
        }
      }
      if (!ok) continue;
      if (classify(perm) == rule) found.insert(g);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<size_t> qubit_permutation(const Crystal &crystal, const HermiteForm &lat,
                                      const SpaceGroupElement &g) {
  std::map<std::vector<Int>, size_t> qubit_at;
  for (size_t i = 0; i < crystal.qubit2.size(); i++)
    qubit_at[reduce2(lat, crystal.qubit2[i])] = i;
  std::vector<size_t> perm(crystal.qubit2.size());
  for (size_t q = 0; q < crystal.qubit2.size(); q++) {
    auto img = apply2(g, crystal.qubit2[q]);
    if (!img) throw std::invalid_argument("qubit_permutation: image off the half grid");
    auto it = qubit_at.find(reduce2(lat, *img));
    if (it == qubit_at.end())
      throw std::invalid_argument("qubit_permutation: image misses the qubit set");
    perm[q] = it->second;
  }
  return perm;
}

BitMat permutation_symmetry_matrix(const std::vector<size_t> &perm) {
  size_t n = perm.size();
  BitMat u(2 * n, 2 * n);
  for (size_t q = 0; q < n; q++) {
    u.set(q, perm[q], true);
    u.set(n + q, n + perm[q], true);
  }
  return u;
}

ZXDuality zx_duality(const StabilizerCode &code, const std::vector<size_t> &perm) {
  if (!code.css) throw std::invalid_argument("zx_duality: CSS codes only");
  size_t n = code.n;
  BitMat p(n, n);
  for (size_t q = 0; q < n; q++) p.set(q, perm[q], true);
  if (!row_span_equal(code.cx * p, code.cz) || !row_span_equal(code.cz * p, code.cx))
    throw std::invalid_argument("zx_duality: row spans are not exchanged");
  ZXDuality d;
  d.perm = perm;
  d.involutive = true;
  for (size_t q = 0; q < n; q++) d.involutive &= perm[perm[q]] == q;
  return d;
}

BitMat hadamard_type(const ZXDuality &d) {
  size_t n = d.perm.size();
  BitMat u(2 * n, 2 * n);
  for (size_t q = 0; q < n; q++) {
    u.set(q, n + d.perm[q], true);  // X_q -> Z on the image
    u.set(n + q, d.perm[q], true);  // Z_q -> X on the image
  }
  return u;
}

BitMat phase_type(const ZXDuality &d) {
  if (!d.involutive)
    throw std::invalid_argument("phase_type: duality must square to the identity");
  size_t n = d.perm.size();
  BitMat u = BitMat::identity(2 * n);
  for (size_t q = 0; q < n; q++) u.set(q, n + d.perm[q], true);  // X_q -> X_q Z_{D(q)}
  return u;
}

/*
 * Stabilizer chain for a matrix group acting on the nonzero vectors of
 * F2^d by right multiplication. Points are bit-encoded vectors; one group
 * element is stored per orbit point.
 */
struct MatrixGroup::Level {
  uint32_t base = 0;
  std::vector<BitMat> gens;
  std::vector<uint32_t> orbit;
  std::vector<BitMat> rep;
  std::vector<char> in_orbit;
};

namespace {

uint32_t encode_row(const BitVec &v) {
  uint32_t x = 0;
  for (size_t i = 0; i < v.size(); i++)
    if (v.get(i)) x |= uint32_t(1) << i;
  return x;
}

uint32_t act(uint32_t point, const BitMat &m) {
  uint32_t out = 0;
  for (size_t i = 0; (point >> i) != 0; i++)
    if ((point >> i) & 1) out ^= encode_row(m.row(i));
  return out;
}

BitMat invert(const BitMat &m) {
  RrefResult rr = rref(m);
  if (rr.rank != m.rows()) throw std::invalid_argument("invert: singular");
  return rr.transform;
}

}  // namespace

MatrixGroup::~MatrixGroup() = default;
MatrixGroup::MatrixGroup(MatrixGroup &&) noexcept = default;

MatrixGroup::MatrixGroup(const std::vector<BitMat> &generators) {
  if (generators.empty()) return;
  dim_ = generators[0].rows();
  if (dim_ > 24) throw std::invalid_argument("group_order: dimension too large");
  for (const auto &g : generators)
    if (g.rows() != dim_ || g.cols() != dim_)
      throw std::invalid_argument("group_order: mixed dimensions");

  size_t npoints = size_t(1) << dim_;
  BitMat id = BitMat::identity(dim_);

  std::function<void(BitMat, size_t)> add_gen = [&](BitMat g, size_t level) {
    // Strip through the existing chain.
    size_t l = level;
    for (; l < chain_.size(); l++) {
      uint32_t x = act(chain_[l].base, g);
      if (!chain_[l].in_orbit[x]) break;
      g = g * invert(chain_[l].rep[x]);
    }
    if (g == id) return;
    if (l == chain_.size()) {
      Level lev;
      for (uint32_t v = 1; v < npoints; v++)
        if (act(v, g) != v) {
          lev.base = v;
          break;
        }
      if (lev.base == 0) throw std::logic_error("group_order: non-identity fixes all points");
      lev.in_orbit.assign(npoints, 0);
      lev.rep.assign(npoints, BitMat());
      lev.orbit = {lev.base};
      lev.in_orbit[lev.base] = 1;
      lev.rep[lev.base] = id;
      chain_.push_back(std::move(lev));
    }
    chain_[l].gens.push_back(g);
    size_t gi = chain_[l].gens.size() - 1;
    // Process each (orbit point, generator) pair once: the new generator
    // against the existing orbit, then every generator against points it
    // discovers. Schreier generators sift one level down. Access the
    // level by index: recursive calls may grow the chain vector.
    std::vector<std::pair<uint32_t, size_t>> todo;
    for (uint32_t p : chain_[l].orbit) todo.emplace_back(p, gi);
    while (!todo.empty()) {
      auto [p, si] = todo.back();
      todo.pop_back();
      BitMat s = chain_[l].gens[si];
      uint32_t q = act(p, s);
      if (!chain_[l].in_orbit[q]) {
        chain_[l].in_orbit[q] = 1;
        chain_[l].rep[q] = chain_[l].rep[p] * s;
        chain_[l].orbit.push_back(q);
        for (size_t sj = 0; sj < chain_[l].gens.size(); sj++) todo.emplace_back(q, sj);
      } else {
        BitMat schreier = chain_[l].rep[p] * s * invert(chain_[l].rep[q]);
        if (!(schreier == id)) add_gen(std::move(schreier), l + 1);
      }
    }
  };

  for (const auto &g : generators) add_gen(g, 0);

  for (const auto &lev : chain_) order_ *= lev.orbit.size();
}

bool MatrixGroup::contains(const BitMat &m) const {
  if (chain_.empty()) return m == BitMat::identity(m.rows());
  if (m.rows() != dim_ || m.cols() != dim_) return false;
  BitMat cur = m;
  for (const auto &lev : chain_) {
    uint32_t x = act(lev.base, cur);
    if (!lev.in_orbit[x]) return false;
    cur = cur * invert(lev.rep[x]);
  }
  return cur == BitMat::identity(dim_);
}

uint64_t group_order(const std::vector<BitMat> &generators) {
  return MatrixGroup(generators).order();
}

namespace {

/*
 * Exact Pauli bookkeeping: operators i^p X(x) Z(z) with p mod 4.
 * Herm(v) = i^{|x and z|} X(x) Z(z) is the Hermitian representative.
 */
struct PauliPhase {
  BitVec x, z;
  int p = 0;

  static PauliPhase herm(const BitVec &v) {
    size_t n = v.size() / 2;
    PauliPhase out;
    split(v, n, out.x, out.z);
    uint64_t acc = 0;
    for (size_t k = 0; k < out.x.words().size(); k++)
      acc += (uint64_t)std::popcount(out.x.words()[k] & out.z.words()[k]);
    out.p = (int)(acc % 4);
    return out;
  }

  static void split(const BitVec &v, size_t n, BitVec &x, BitVec &z) {
    x = BitVec(n);
    z = BitVec(n);
    for (size_t q = 0; q < n; q++) {
      if (v.get(q)) x.set(q, true);
      if (v.get(n + q)) z.set(q, true);
    }
  }

  BitVec vec() const {
    size_t n = x.size();
    BitVec v(2 * n);
    for (size_t q = 0; q < n; q++) {
      if (x.get(q)) v.set(q, true);
      if (z.get(q)) v.set(n + q, true);
    }
    return v;
  }

  // this <- this * other.
  void mul(const PauliPhase &o) {
    // Z(z) X(x') = (-1)^{|z and x'|} X(x') Z(z).
    size_t cross = 0;
    for (size_t k = 0; k < z.words().size(); k++)
      cross += (size_t)std::popcount(z.words()[k] & o.x.words()[k]);
    p = (p + o.p + 2 * (int)cross) % 4;
    x ^= o.x;
    z ^= o.z;
  }

  // Sign relative to the Hermitian representative; throws on an
  // anti-Hermitian leftover.
  bool herm_sign() const {
    uint64_t acc = 0;
    for (size_t k = 0; k < x.words().size(); k++)
      acc += (uint64_t)std::popcount(x.words()[k] & z.words()[k]);
    int diff = (p - (int)(acc % 4)) % 4;
    if (diff < 0) diff += 4;
    if (diff % 2) throw std::logic_error("herm_sign: anti-Hermitian operator");
    return diff == 2;
  }
};

// i-phase of the ordered product prod_j Herm(rows[j])^{v_j} relative to
// Herm of the total, i.e. prod = i^theta Herm(sum).
int ordered_product_theta(const std::vector<BitVec> &rows, const BitVec &v) {
  if (rows.empty()) return 0;
  size_t n2 = rows[0].size();
  PauliPhase acc = PauliPhase::herm(BitVec(n2));
  for (size_t j = 0; j < rows.size(); j++)
    if (v.get(j)) acc.mul(PauliPhase::herm(rows[j]));
  PauliPhase target = PauliPhase::herm(acc.vec());
  int theta = (acc.p - target.p) % 4;
  return theta < 0 ? theta + 4 : theta;
}

}  // namespace

bool signed_image_flip(const SignedGate &g, const BitVec &v) {
  size_t k2 = g.m.rows();
  // Unit generators and their images as Hermitian labels.
  std::vector<BitVec> gens(k2), images(k2);
  for (size_t j = 0; j < k2; j++) {
    gens[j] = BitVec(k2);
    gens[j].set(j, true);
    images[j] = g.m.row(j);
  }
  int theta_v = ordered_product_theta(gens, v);
  int theta_img = ordered_product_theta(images, v);
  bool flip = false;
  for (size_t j = 0; j < k2; j++)
    if (v.get(j)) flip ^= g.sigma.get(j);
  int diff = (theta_img - theta_v) % 4;
  if (diff < 0) diff += 4;
  if (diff % 2) throw std::logic_error("signed_image_flip: odd phase");
  return flip ^ (diff == 2);
}

SignedGate signed_compose(const SignedGate &a, const SignedGate &b) {
  SignedGate out;
  out.m = a.m * b.m;
  size_t k2 = a.m.rows();
  out.sigma = BitVec(k2);
  for (size_t j = 0; j < k2; j++)
    out.sigma.set(j, a.sigma.get(j) ^ signed_image_flip(b, a.m.row(j)));
  return out;
}

SignedGate signed_inverse(const SignedGate &g) {
  SignedGate out;
  out.m = invert(g.m);
  size_t k2 = g.m.rows();
  out.sigma = BitVec(k2);
  for (size_t j = 0; j < k2; j++) out.sigma.set(j, signed_image_flip(g, out.m.row(j)));
  return out;
}

namespace {

/*
 * Stabilizer chain for signed logical Cliffords acting on signed
 * Hermitian Paulis: points encode (v, sign) as 2 * code(v) + sign.
 */
struct SignedChainLevel {
  uint32_t base = 0;
  std::vector<SignedGate> gens;
  std::vector<uint32_t> orbit;
  std::vector<SignedGate> rep;
  std::vector<char> in_orbit;
};

uint32_t signed_act(uint32_t point, const SignedGate &g) {
  uint32_t vcode = point >> 1, sign = point & 1;
  size_t k2 = g.m.rows();
  BitVec v(k2), w(k2);
  for (size_t i = 0; i < k2; i++)
    if ((vcode >> i) & 1) {
      v.set(i, true);
      w ^= g.m.row(i);
    }
  uint32_t wcode = 0;
  for (size_t i = 0; i < k2; i++)
    if (w.get(i)) wcode |= uint32_t(1) << i;
  bool flip = signed_image_flip(g, v);
  return (wcode << 1) | (sign ^ (flip ? 1 : 0));
}

}  // namespace

uint64_t signed_group_order(const std::vector<SignedGate> &generators) {
  if (generators.empty()) return 1;
  size_t k2 = generators[0].m.rows();
  size_t npoints = (size_t(1) << (k2 + 1));
  SignedGate id{BitMat::identity(k2), BitVec(k2)};
  auto is_id = [&](const SignedGate &g) { return g.m == id.m && g.sigma == id.sigma; };

  std::vector<SignedChainLevel> chain;
  std::function<void(SignedGate, size_t)> add_gen = [&](SignedGate g, size_t level) {
    size_t l = level;
    for (; l < chain.size(); l++) {
      uint32_t x = signed_act(chain[l].base, g);
      if (!chain[l].in_orbit[x]) break;
      g = signed_compose(g, signed_inverse(chain[l].rep[x]));
    }
    if (is_id(g)) return;
    if (l == chain.size()) {
      SignedChainLevel lev;
      bool found = false;
      for (uint32_t v = 2; v < npoints && !found; v++)
        if (signed_act(v, g) != v) {
          lev.base = v;
          found = true;
        }
      if (!found) throw std::logic_error("signed_group_order: non-identity fixes all");
      lev.in_orbit.assign(npoints, 0);
      lev.rep.assign(npoints, SignedGate());
      lev.orbit = {lev.base};
      lev.in_orbit[lev.base] = 1;
      lev.rep[lev.base] = id;
      chain.push_back(std::move(lev));
    }
    chain[l].gens.push_back(g);
    size_t gi = chain[l].gens.size() - 1;
    std::vector<std::pair<uint32_t, size_t>> todo;
    for (uint32_t p : chain[l].orbit) todo.emplace_back(p, gi);
    while (!todo.empty()) {
      auto [p, si] = todo.back();
      todo.pop_back();
      SignedGate s = chain[l].gens[si];
      uint32_t q = signed_act(p, s);
      if (!chain[l].in_orbit[q]) {
        chain[l].in_orbit[q] = 1;
        chain[l].rep[q] = signed_compose(chain[l].rep[p], s);
        chain[l].orbit.push_back(q);
        for (size_t sj = 0; sj < chain[l].gens.size(); sj++) todo.emplace_back(q, sj);
      } else {
        SignedGate schreier =
            signed_compose(signed_compose(chain[l].rep[p], s), signed_inverse(chain[l].rep[q]));
        if (!is_id(schreier)) add_gen(std::move(schreier), l + 1);
      }
    }
  };
  for (const auto &g : generators) add_gen(g, 0);
  uint64_t order = 1;
  for (const auto &lev : chain) order *= lev.orbit.size();
  return order;
}

namespace {

/*
 * Conjugation of i^p X(x) Z(z) through the physical circuit pieces used
 * by the crystalline gates.
 */
struct PauliConj {
  PauliPhase op;

  void permute(const std::vector<size_t> &perm) {
    size_t n = op.x.size();
    BitVec nx(n), nz(n);
    for (size_t q = 0; q < n; q++) {
      if (op.x.get(q)) nx.set(perm[q], true);
      if (op.z.get(q)) nz.set(perm[q], true);
    }
    op.x = std::move(nx);
    op.z = std::move(nz);
  }

  void h_all() {
    size_t cross = 0;
    for (size_t k = 0; k < op.x.words().size(); k++)
      cross += (size_t)std::popcount(op.x.words()[k] & op.z.words()[k]);
    op.p = (op.p + 2 * (int)cross) % 4;
    std::swap(op.x, op.z);
  }

  void s_gate(size_t q) {
    if (op.x.get(q)) {
      op.p = (op.p + 1) % 4;
      op.z.flip(q);
    }
  }

  void cz(size_t a, size_t b) {
    if (op.x.get(a) && op.x.get(b)) op.p = (op.p + 2) % 4;
    if (op.x.get(a)) op.z.flip(b);
    if (op.x.get(b)) op.z.flip(a);
  }
};

/*
 * Sign-tracked logical action of a physical Clifford given by its
 * conjugation function. The image of each logical generator is reduced
 * to (checks, logicals) coordinates with exact phase bookkeeping and
 * the canonical ordered-product conventions on both sides.
 */
template <typename ConjFn>
SignedGate signed_action_impl(const StabilizerCode &code, const LogicalBasis &l,
                              ConjFn &&conj) {
  size_t k2 = 2 * l.k;
  BitMat stacked = code.checks.vstack(l.rows);
  std::vector<BitVec> phys_rows;
  for (size_t r = 0; r < stacked.rows(); r++) phys_rows.push_back(stacked.row(r));

  SignedGate g;
  g.m = BitMat(k2, k2);
  g.sigma = BitVec(k2);
  for (size_t i = 0; i < k2; i++) {
    PauliConj pc{PauliPhase::herm(l.rows.row(i))};
    conj(pc);
    bool herm_flip = pc.op.herm_sign();
    BitVec w = pc.op.vec();
    BitVec coeff;
    if (!solve_row_combination(stacked, w, &coeff))
      throw std::logic_error("signed_action: image outside checks + logicals");
    BitVec mu(k2);
    for (size_t j = 0; j < k2; j++) mu.set(j, coeff.get(code.checks.rows() + j));
    g.m.row(i) = mu;

    int theta_phys = ordered_product_theta(phys_rows, coeff);
    // Abstract side: checks contribute +1 on the code space, so only the
    // logical tail matters; reuse the same ordered-product convention.
    std::vector<BitVec> gens(k2);
    for (size_t j = 0; j < k2; j++) {
      gens[j] = BitVec(k2);
      gens[j].set(j, true);
    }
    int theta_abs = ordered_product_theta(gens, mu);
    int diff = (theta_abs - theta_phys) % 4;
    if (diff < 0) diff += 4;
    if (diff % 2) throw std::logic_error("signed_action: odd phase bookkeeping");
    g.sigma.set(i, herm_flip ^ (diff == 2));
  }
  // Consistency: the symplectic part must match the unsigned action.
  return g;
}

}  // namespace

SignedGate signed_action_permutation(const StabilizerCode &code, const LogicalBasis &l,
                                     const std::vector<size_t> &perm) {
  return signed_action_impl(code, l, [&](PauliConj &pc) { pc.permute(perm); });
}

SignedGate signed_action_hadamard(const StabilizerCode &code, const LogicalBasis &l,
                                  const ZXDuality &d) {
  return signed_action_impl(code, l, [&](PauliConj &pc) {
    pc.permute(d.perm);
    pc.h_all();
  });
}

SignedGate signed_action_phase(const StabilizerCode &code, const LogicalBasis &l,
                               const ZXDuality &d) {
  return signed_action_impl(code, l, [&](PauliConj &pc) {
    std::vector<bool> done(d.perm.size(), false);
    for (size_t q = 0; q < d.perm.size(); q++) {
      if (done[q]) continue;
      if (d.perm[q] == q) {
        pc.s_gate(q);
      } else {
        pc.cz(q, d.perm[q]);
        done[d.perm[q]] = true;
      }
      done[q] = true;
    }
  });
}

BitMat signed_pauli_kernel(const std::vector<SignedGate> &generators, uint64_t expected_size) {
  if (generators.empty() || expected_size <= 1)
    return BitMat(0, generators.empty() ? 0 : generators[0].m.rows());
  size_t k2 = generators[0].m.rows();
  BitMat id = BitMat::identity(k2);
  BitMat span(0, k2);
  auto try_add = [&](const BitVec &sigma) {
    if (sigma.any() && !in_row_span(span, sigma)) span.append_row(sigma);
  };
  // Kernel sign vectors form a subspace; walk products collecting
  // same-rotation quotients until the span reaches the known size.
  std::map<std::string, SignedGate> rep_by_m;
  std::mt19937_64 rng(0x5eed);
  SignedGate cur{id, BitVec(k2)};
  rep_by_m.emplace(cur.m.str(), cur);
  for (uint64_t step = 0; step < 2000000; step++) {
    cur = signed_compose(cur, generators[rng() % generators.size()]);
    auto [it, fresh] = rep_by_m.emplace(cur.m.str(), cur);
    if (!fresh) {
      SignedGate q = signed_compose(cur, signed_inverse(it->second));
      if (q.m == id) try_add(q.sigma);
    }
    if ((uint64_t(1) << span.rows()) == expected_size) return span;
  }
  throw std::logic_error("signed_pauli_kernel: span did not close");
}

}  // namespace latqec
