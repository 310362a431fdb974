#include "latqec/lattice.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace latqec {

namespace {

Int floordiv(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Int ceildiv(Int a, Int b) { return -floordiv(-a, b); }

Int row_l1(const std::vector<Int> &r) {
  Int s = 0;
  for (Int x : r) s += std::llabs(x);
  return s;
}

}  // namespace

LatticeBasis::LatticeBasis(IntMat r) : dim(r.size()), rows(std::move(r)) {
  for (const auto &row : rows)
    if (row.size() != dim) throw std::invalid_argument("LatticeBasis: not square");
}

Int LatticeBasis::determinant() const { return mat_det(rows); }

IntMat mat_identity(size_t n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; i++) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat &a, const IntMat &b) {
  size_t n = a.size(), p = b.empty() ? 0 : b[0].size(), m = b.size();
  IntMat out(n, std::vector<Int>(p, 0));
  for (size_t i = 0; i < n; i++)
    for (size_t k = 0; k < m; k++)
      if (a[i][k])
        for (size_t j = 0; j < p; j++) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Fraction-free (Bareiss) determinant; exact for the small integer
// matrices used here.
Int mat_det(IntMat m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; k++) {
    if (m[k][k] == 0) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) swap++;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j < n; j++)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

HermiteForm hnf(const LatticeBasis &basis) {
  size_t n = basis.dim;
  IntMat m = basis.rows;

  // Column by column: gcd-reduce the entries below the pivot to zero,
  // make the pivot positive, then reduce the entries above it.
  for (size_t col = 0; col < n; col++) {
    for (size_t i = col + 1; i < n; i++) {
      while (m[i][col] != 0) {
        Int q = m[col][col] == 0 ? 0 : floordiv(m[col][col], m[i][col]);
        for (size_t j = 0; j < n; j++) std::swap(m[col][j], m[i][j]);
        if (q != 0)
          for (size_t j = 0; j < n; j++) m[i][j] -= q * m[col][j];
      }
    }
    if (m[col][col] == 0) throw std::invalid_argument("hnf: singular basis");
    if (m[col][col] < 0)
      for (size_t j = 0; j < n; j++) m[col][j] = -m[col][j];
    for (size_t i = 0; i < col; i++) {
      Int q = floordiv(m[i][col], m[col][col]);
      if (q != 0)
        for (size_t j = 0; j < n; j++) m[i][j] -= q * m[col][j];
    }
  }

  HermiteForm h;
  h.matrix = std::move(m);
  h.det = 1;
  for (size_t i = 0; i < n; i++) h.det *= h.matrix[i][i];
  return h;
}

namespace {

/*
 * Depth-first enumeration of lattice vectors v = u M (M in HNF) with
 * |v|_1 <= bound. Coordinate v_k depends only on u_1..u_k, so each level
 * fixes one coordinate and the residual norm budget prunes the
 * coefficient interval.
 */
struct BallEnum {
  static constexpr size_t kMaxDim = 8;
  const IntMat &m;
  size_t n;
  Int bound;
  // Optional: require v[constrain_zero] == 0.
  int constrain_zero = -1;
  // Early exit: stop as soon as a nonzero vector with norm < abort_below
  // is seen.
  Int abort_below = 0;

  std::array<Int, kMaxDim> v{};
  Int best;
  bool aborted = false;
  std::vector<std::vector<Int>> *collect = nullptr;

  explicit BallEnum(const HermiteForm &h, Int b)
      : m(h.matrix), n(h.matrix.size()), bound(b), best(-1) {
    if (n > kMaxDim) throw std::invalid_argument("lattice dimension too large");
  }

  void descend(size_t k, Int used, std::array<Int, kMaxDim> partial) {
    if (aborted) return;
    if (k == n) {
      bool zero = true;
      for (size_t i = 0; i < n; i++) zero &= v[i] == 0;
      if (zero) return;
      if (best < 0 || used < best) best = used;
      if (collect) collect->emplace_back(v.begin(), v.begin() + n);
      if (abort_below > 0 && used < abort_below) aborted = true;
      return;
    }
    Int c = partial[k];          // contribution of u_1..u_k to v_{k+1}
    Int d = m[k][k];             // positive diagonal
    Int rem = bound - used;
    Int lo = ceildiv(-rem - c, d), hi = floordiv(rem - c, d);
    if (constrain_zero == (int)k) {
      // v_k = c + u d must vanish.
      if (c % d != 0) return;
      Int forced = -c / d;
      if (forced < lo || forced > hi) return;
      lo = hi = forced;
    }
    for (Int u = lo; u <= hi && !aborted; u++) {
      Int vk = c + u * d;
      v[k] = vk;
      std::array<Int, kMaxDim> next = partial;
      if (u != 0)
        for (size_t j = k + 1; j < n; j++) next[j] += u * m[k][j];
      descend(k + 1, used + std::llabs(vk), next);
    }
    v[k] = 0;
  }

  Int run() {
    descend(0, 0, std::array<Int, kMaxDim>{});
    return best;
  }
};

Int min_row_norm(const HermiteForm &h) {
  Int best = 0;
  for (size_t i = 0; i < h.matrix.size(); i++) {
    Int s = row_l1(h.matrix[i]);
    if (i == 0 || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<std::vector<Int>> enumerate_l1_ball(const HermiteForm &h, Int bound) {
  std::vector<std::vector<Int>> out;
  BallEnum e(h, bound);
  e.collect = &out;
  e.run();
  return out;
}

Int l1_systole(const LatticeBasis &basis, std::optional<Int> bound) {
  HermiteForm h = hnf(basis);
  Int b = bound.value_or(min_row_norm(h));
  BallEnum e(h, b);
  Int best = e.run();
  if (best < 0) throw std::invalid_argument("l1_systole: no nonzero vector within bound");
  return best;
}

Int n_slice(const HermiteForm &h) { return h.matrix[0][0]; }

namespace {

// True iff min |v|_1 over nonzero lattice vectors equals s exactly.
bool systole_equals(const HermiteForm &h, Int s) {
  BallEnum e(h, s);
  e.abort_below = s;
  Int best = e.run();
  return best == s;
}

struct SearchShared {
  std::atomic<Int> incumbent;
  std::atomic<uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  uint64_t max_nodes;
  std::mutex witness_mutex;
  std::vector<std::pair<Int, IntMat>> found;
};

/*
 * Fill the above-diagonal entries of one diagonal tuple. Entries of row i
 * live in columns j > i with 0 <= M_ij < M_jj; a completed row must have
 * l1 norm >= s because each row is itself a lattice vector.
 */
void fill_offdiag(IntMat &m, size_t row, size_t col, Int s, Int det,
                  SearchShared &sh) {
  size_t n = m.size();
  if (sh.out_of_budget.load(std::memory_order_relaxed)) return;
  if (row + 1 >= n) {
    if (++sh.nodes % 1024 == 0 && sh.nodes.load() > sh.max_nodes) {
      sh.out_of_budget.store(true);
      return;
    }
    HermiteForm h;
    h.matrix = m;
    h.det = det;
    if (systole_equals(h, s)) {
      Int cur = sh.incumbent.load();
      while (det < cur && !sh.incumbent.compare_exchange_weak(cur, det)) {
      }
      if (det <= sh.incumbent.load()) {
        std::lock_guard<std::mutex> lock(sh.witness_mutex);
        sh.found.emplace_back(det, m);
      }
    }
    return;
  }
  if (col == n) {
    if (row_l1(m[row]) < s) return;
    fill_offdiag(m, row + 1, row + 2, s, det, sh);
    return;
  }
  // Remaining entries of this row can add at most sum (M_jj - 1).
  Int partial = m[row][row];
  for (size_t j = row + 1; j < col; j++) partial += m[row][j];
  Int max_rest = 0;
  for (size_t j = col; j < n; j++) max_rest += m[j][j] - 1;
  if (partial + max_rest < s) return;

  for (Int e = 0; e < m[col][col]; e++) {
    m[row][col] = e;
    fill_offdiag(m, row, col + 1, s, det, sh);
  }
  m[row][col] = 0;
}

void diag_tuples(size_t n, size_t pos, Int prod, Int limit, Int min_first,
                 Int min_last, std::vector<Int> &cur,
                 std::vector<std::vector<Int>> &out) {
  if (pos == n) {
    if (cur.back() >= min_last) out.push_back(cur);
    return;
  }
  Int lo = (pos == 0) ? min_first : 1;
  for (Int d = lo; d * prod <= limit; d++) {
    cur[pos] = d;
    diag_tuples(n, pos + 1, prod * d, limit, min_first, min_last, cur, out);
  }
}

}  // namespace

SearchResult search_min_det(size_t dim, Int target_systole, Int min_slices,
                            SearchBudget budget) {
  if (dim < 2 || dim > 4) throw std::invalid_argument("search_min_det: dim must be 2..4");
  if (target_systole < 2) throw std::invalid_argument("search_min_det: systole must be >= 2");
  if (min_slices < 1 || min_slices > target_systole)
    throw std::invalid_argument("search_min_det: bad min_slices");

  Int s = target_systole;
  // s*I is a valid incumbent: systole exactly s and first diagonal s.
  Int seed = 1;
  for (size_t i = 0; i < dim; i++) seed *= s;

  SearchShared sh;
  sh.incumbent.store(seed);
  sh.max_nodes = budget.max_nodes;

  // The last row is the lattice vector (0,..,0,d_n), so d_n >= s.
  std::vector<Int> cur(dim, 1);
  std::vector<std::vector<Int>> tuples;
  diag_tuples(dim, 0, 1, seed, min_slices, s, cur, tuples);
  std::sort(tuples.begin(), tuples.end(),
            [](const std::vector<Int> &a, const std::vector<Int> &b) {
              Int pa = std::accumulate(a.begin(), a.end(), Int(1), std::multiplies<>());
              Int pb = std::accumulate(b.begin(), b.end(), Int(1), std::multiplies<>());
              return pa != pb ? pa < pb : a < b;
            });

  unsigned nthreads = budget.threads > 0 ? budget.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t t = next.fetch_add(1);
      if (t >= tuples.size() || sh.out_of_budget.load()) return;
      const auto &diag = tuples[t];
      Int det = std::accumulate(diag.begin(), diag.end(), Int(1), std::multiplies<>());
      if (det > sh.incumbent.load()) continue;
      IntMat m(dim, std::vector<Int>(dim, 0));
      for (size_t i = 0; i < dim; i++) m[i][i] = diag[i];
      fill_offdiag(m, 0, 1, s, det, sh);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned i = 0; i + 1 < nthreads; i++) pool.emplace_back(worker);
  worker();
  for (auto &th : pool) th.join();

  if (sh.out_of_budget.load()) throw BudgetExceeded{};

  SearchResult res;
  res.det = sh.incumbent.load();
  res.nodes = sh.nodes.load();
  std::vector<IntMat> mats;
  for (auto &[d, m] : sh.found)
    if (d == res.det) mats.push_back(m);
  if (res.det == seed) {
    IntMat m(dim, std::vector<Int>(dim, 0));
    for (size_t i = 0; i < dim; i++) m[i][i] = s;
    mats.push_back(m);
  }
  std::sort(mats.begin(), mats.end());
  mats.erase(std::unique(mats.begin(), mats.end()), mats.end());
  for (auto &m : mats) {
    HermiteForm h;
    h.matrix = m;
    h.det = res.det;
    res.witnesses.push_back(std::move(h));
  }
  if (res.witnesses.empty()) throw std::logic_error("search_min_det: no witness");
  return res;
}

IntMat gram_matrix(const LatticeBasis &basis) {
  size_t n = basis.dim;
  IntMat g(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++)
      for (size_t k = 0; k < n; k++) g[i][j] += basis.rows[i][k] * basis.rows[j][k];
  return g;
}

namespace {

Int dot(const std::vector<Int> &a, const std::vector<Int> &b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
  return s;
}

// Assign an image lattice vector to each basis row so that all pairwise
// inner products match the Gram matrix.
void assemble_autos(const std::vector<std::vector<std::vector<Int>>> &candidates,
                    const IntMat &gram, size_t row,
                    std::vector<std::vector<Int>> &images,
                    std::vector<std::vector<std::vector<Int>>> &out) {
  size_t n = gram.size();
  if (row == n) {
    out.push_back(images);
    return;
  }
  for (const auto &cand : candidates[row]) {
    bool ok = true;
    for (size_t j = 0; j < row && ok; j++) ok = dot(cand, images[j]) == gram[row][j];
    if (!ok) continue;
    images[row] = cand;
    assemble_autos(candidates, gram, row + 1, images, out);
  }
}

// Integer solve c M = v for upper-triangular-able M; returns false when
// the solution is not integral.
bool integer_coords(const IntMat &w, const std::vector<Int> &v, std::vector<Int> &coeff) {
  size_t n = w.size();
  // Solve by fraction-free elimination on the transposed system.
  // Sizes here are tiny, so run a rational-free Gaussian solve by
  // Cramer with Bareiss determinants.
  Int d = mat_det(w);
  coeff.assign(n, 0);
  for (size_t i = 0; i < n; i++) {
    IntMat m = w;
    for (size_t j = 0; j < n; j++) m[i][j] = v[j];
    Int num = mat_det(m);
    if (num % d != 0) return false;
    coeff[i] = num / d;
  }
  return true;
}

}  // namespace

std::vector<LatticeAutomorphism> lattice_automorphisms(const LatticeBasis &basis) {
  size_t n = basis.dim;
  if (n > 6) throw std::invalid_argument("lattice_automorphisms: dimension too large");
  IntMat gram = gram_matrix(basis);
  HermiteForm h = hnf(basis);

  // Candidates for the image of row i: lattice vectors of the same
  // squared length. |v|_2^2 = s bounds |v|_1 by sqrt(n s).
  std::vector<std::vector<std::vector<Int>>> candidates(n);
  for (size_t i = 0; i < n; i++) {
    Int normsq = gram[i][i];
    Int l1cap = (Int)std::sqrt((double)(n * normsq)) + 1;
    for (auto &v : enumerate_l1_ball(h, l1cap))
      if (dot(v, v) == normsq) candidates[i].push_back(v);
  }

  std::vector<std::vector<std::vector<Int>>> image_sets;
  std::vector<std::vector<Int>> images(n);
  assemble_autos(candidates, gram, 0, images, image_sets);

  std::vector<LatticeAutomorphism> out;
  for (const auto &img : image_sets) {
    // U W = V: the rows of V are lattice vectors, so U is integral, and
    // matching Gram matrices force it unimodular.
    IntMat u(n);
    bool ok = true;
    for (size_t i = 0; i < n && ok; i++) ok = integer_coords(basis.rows, img[i], u[i]);
    if (ok) out.push_back({u});
  }
  return out;
}

LatticeBasis hadamard_lattice(int t) {
  if (t < 1) throw std::invalid_argument("hadamard_lattice: t >= 1");
  IntMat h = {{1, 1}, {1, -1}};
  for (int i = 1; i < t; i++) {
    size_t n = h.size();
    IntMat big(2 * n, std::vector<Int>(2 * n, 0));
    for (size_t r = 0; r < n; r++)
      for (size_t c = 0; c < n; c++) {
        big[r][c] = h[r][c];
        big[r][c + n] = h[r][c];
        big[r + n][c] = h[r][c];
        big[r + n][c + n] = -h[r][c];
      }
    h = std::move(big);
  }
  return LatticeBasis(h);
}

HermiteForm merge_for_surgery(const HermiteForm &h, size_t row) {
  if (row >= h.dim()) throw std::invalid_argument("merge_for_surgery: bad row");
  IntMat m = h.matrix;
  for (auto &x : m[row]) x *= 2;
  return hnf(LatticeBasis(m));
}

Int hyperplane_systole(const LatticeBasis &basis, size_t cut_direction) {
  HermiteForm h = hnf(basis);
  if (cut_direction >= h.dim())
    throw std::invalid_argument("hyperplane_systole: bad direction");
  for (Int bound = min_row_norm(h);; bound *= 2) {
    BallEnum e(h, bound);
    e.constrain_zero = (int)cut_direction;
    Int best = e.run();
    if (best >= 0) return best;
    if (bound > (Int(1) << 40)) throw std::logic_error("hyperplane_systole: runaway bound");
  }
}

LatticeBasis rotated_2d(Int d) {
  if (d < 2) throw std::invalid_argument("rotated_2d: d >= 2");
  if (d % 2 == 0) return LatticeBasis({{d / 2, d / 2}, {-d / 2, d / 2}});
  return LatticeBasis({{(d + 1) / 2, (d - 1) / 2}, {-(d - 1) / 2, (d + 1) / 2}});
}

}  // namespace latqec
