#include "latqec/protocols.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace latqec {

namespace {

// Solve A x^T = b^T over F2: x with x * A^T = b.
std::optional<BitVec> solve_columns(const BitMat &a, const BitVec &b) {
  BitVec lambda;
  if (!solve_row_combination(a.transpose(), b, &lambda)) return std::nullopt;
  return lambda;
}

// Rows spanning span(a) intersect span(b).
BitMat intersect_spans(const BitMat &a, const BitMat &b) {
  BitMat stacked = a.vstack(b);
  BitMat k = kernel(stacked.transpose());
  BitMat out(0, a.cols());
  for (size_t i = 0; i < k.rows(); i++) {
    BitVec v(a.cols());
    for (size_t r = 0; r < a.rows(); r++)
      if (k.get(i, r)) v ^= a.row(r);
    if (v.any()) out.append_row(v);
  }
  RrefResult rr = rref(out);
  BitMat basis(0, a.cols());
  for (size_t i = 0; i < rr.rank; i++) basis.append_row(rr.reduced.row(i));
  return basis;
}

}  // namespace

SliceStructure slice_structure(const TorusComplex &three) {
  if (three.dim != 3) throw std::invalid_argument("slice_structure: need a 3D torus");
  const IntMat &h = three.lat.matrix;
  SliceStructure s;
  s.n_slice = (size_t)h[0][0];
  s.slice_lattice = LatticeBasis({{h[1][1], h[1][2]}, {0, h[2][2]}});
  TorusComplex d2 = torus_complex(s.slice_lattice);
  s.slice_code = css_from_complex(d2.cc, 1);
  s.slice_basis = logical_basis(s.slice_code);

  size_t n2 = s.slice_code.n;
  for (size_t c = 0; c < s.n_slice; c++) {
    std::vector<size_t> qubits(n2);
    for (size_t i = 0; i < n2; i++) {
      auto [p, dirs] = d2.cell_of(1, i);
      qubits[i] = three.cell_index(1, {(Int)c, p[0], p[1]}, {dirs[0] + 1});
    }
    s.slice_qubits.push_back(std::move(qubits));
  }
  for (size_t v = 0; v < (size_t)three.det; v++) s.bulk_qubits.push_back(v);

  // The sliced checks must be exactly the 2D toric code checks.
  StabilizerCode code3 = css_from_complex(three.cc, 1);
  size_t n3 = code3.n;
  for (size_t c = 0; c < s.n_slice; c++) {
    for (size_t r = 0; r < s.slice_code.cx.rows(); r++) {
      auto [v2, none] = d2.cell_of(0, r);
      (void)none;
      size_t v3 = three.cell_index(0, {(Int)c, v2[0], v2[1]}, {});
      for (size_t i = 0; i < n2; i++)
        if (s.slice_code.cx.get(r, i) != code3.cx.get(v3, s.slice_qubits[c][i]))
          throw std::logic_error("slice_structure: X checks do not restrict to the 2D code");
    }
    for (size_t r = 0; r < s.slice_code.cz.rows(); r++) {
      auto [p2, dirs2] = d2.cell_of(2, r);
      size_t p3 = three.cell_index(2, {(Int)c, p2[0], p2[1]}, {1, 2});
      for (size_t i = 0; i < n2; i++)
        if (s.slice_code.cz.get(r, i) != code3.cz.get(p3, s.slice_qubits[c][i]))
          throw std::logic_error("slice_structure: Z checks do not restrict to the 2D code");
    }
  }

  for (size_t c = 0; c < s.n_slice; c++) {
    std::vector<PauliOp> gens;
    for (size_t g = 0; g < 4; g++) {
      const BitVec &row = s.slice_basis.rows.row(g);
      PauliOp p(2 * n3);
      for (size_t i = 0; i < n2; i++) {
        if (row.get(i)) p.set(s.slice_qubits[c][i], true);
        if (row.get(n2 + i)) p.set(n3 + s.slice_qubits[c][i], true);
      }
      gens.push_back(std::move(p));
    }
    s.generators_3d.push_back(std::move(gens));
  }
  return s;
}

SliceProtocolResult slice_protocol(const LatticeBasis &lattice3, std::mt19937_64 &rng) {
  TorusComplex three = torus_complex(lattice3);
  StabilizerCode code = css_from_complex(three.cc, 1);
  SliceProtocolResult res;
  res.structure = slice_structure(three);
  size_t n = code.n;

  // 1. all qubits in X=+1.
  StabilizerState state(n);

  // 2. measure every Z-plaquette once.
  res.plaquette_outcomes.resize(code.cz.rows());
  for (size_t p = 0; p < code.cz.rows(); p++) {
    PauliOp zp(2 * n);
    for (size_t q = 0; q < n; q++)
      if (code.cz.get(p, q)) zp.set(n + q, true);
    res.plaquette_outcomes[p] = state.measure_pauli(zp, rng).outcome;
  }

  // 3. X correction returning every plaquette to +1.
  BitVec b(code.cz.rows());
  for (size_t p = 0; p < code.cz.rows(); p++) b.set(p, res.plaquette_outcomes[p]);
  std::optional<BitVec> corr = solve_columns(code.cz, b);
  if (!corr) throw std::logic_error("slice_protocol: inconsistent flux record");
  PauliOp fix(2 * n);
  for (size_t q = 0; q < n; q++)
    if (corr->get(q)) fix.set(q, true);
  state.apply_pauli(fix);
  for (size_t p = 0; p < code.cz.rows(); p++) {
    PauliOp zp(2 * n);
    for (size_t q = 0; q < n; q++)
      if (code.cz.get(p, q)) zp.set(n + q, true);
    if (state.expectation(zp) != 1)
      throw std::logic_error("slice_protocol: correction failed");
  }

  // 5. measure out the direction-0 edges in X.
  for (size_t q : res.structure.bulk_qubits) state.measure_pauli(pauli_x(n, q), rng);

  // 6. logical group: which generator combinations stabilize the state.
  std::vector<PauliOp> gens;
  for (const auto &per_slice : res.structure.generators_3d)
    for (const auto &g : per_slice) gens.push_back(g);
  BitMat gmat(0, 2 * n);
  for (const auto &g : gens) gmat.append_row(g);
  BitMat t = state.stabilizer_matrix();
  BitMat stacked = gmat.vstack(t);
  BitMat null_left = kernel(stacked.transpose());
  BitMat lambdas(0, gens.size());
  for (size_t i = 0; i < null_left.rows(); i++) {
    BitVec lam(gens.size());
    for (size_t j = 0; j < gens.size(); j++) lam.set(j, null_left.get(i, j));
    if (lam.any()) lambdas.append_row(lam);
  }
  RrefResult rr = rref(lambdas);
  res.logical_group = BitMat(0, gens.size());
  for (size_t i = 0; i < rr.rank; i++) res.logical_group.append_row(rr.reduced.row(i));

  for (size_t i = 0; i < res.logical_group.rows(); i++) {
    PauliOp p(2 * n);
    for (size_t j = 0; j < gens.size(); j++)
      if (res.logical_group.get(i, j)) p ^= gens[j];
    int e = state.expectation(p);
    if (e == 0) throw std::logic_error("slice_protocol: logical combination not stabilized");
    res.signs.push_back(e);
  }
  return res;
}

BitMat twisted_slice_logicals(size_t circle_len, const ChainComplex &d,
                              const std::vector<std::array<ComplexAutomorphism, 2>> &twists,
                              const StabilizerCode &d_code, const LogicalBasis &d_basis) {
  size_t n2 = d_code.n;
  // Twists must act trivially on homology and cohomology: a permuted
  // representative stays in its class.
  for (const auto &tw : twists) {
    for (const auto &a : tw) {
      if (!is_complex_automorphism(d, a))
        throw std::invalid_argument("twisted_slice_logicals: not an automorphism");
      for (size_t i = 0; i < d_basis.k; i++) {
        BitVec z(n2), x(n2);
        for (size_t q = 0; q < n2; q++) {
          if (d_basis.z_row(i).get(n2 + q)) z.set(q, true);
          if (d_basis.x_row(i).get(q)) x.set(q, true);
        }
        BitVec pz(n2), px(n2);
        for (size_t q = 0; q < n2; q++) {
          if (z.get(q)) pz.set(a.perm[1][q], true);
          if (x.get(q)) px.set(a.perm[1][q], true);
        }
        pz ^= z;
        px ^= x;
        if (!in_row_span(d_code.cz, pz) || !in_row_span(d_code.cx, px))
          throw std::invalid_argument(
              "twisted_slice_logicals: twist acts nontrivially on homology");
      }
    }
  }

  // Lambda layout: generator 4c + {0,1: X_1, X_2; 2,3: Z_1, Z_2} on slice c.
  size_t k = d_basis.k;  // 2 for a torus slice
  BitMat group(0, 4 * circle_len);
  for (size_t a = 0; a < k; a++) {
    for (size_t i = 0; i + 1 < circle_len; i++) {
      BitVec lam(4 * circle_len);
      lam.set(4 * i + 2 + a, true);
      lam.set(4 * (i + 1) + 2 + a, true);
      group.append_row(lam);
    }
    BitVec all(4 * circle_len);
    for (size_t i = 0; i < circle_len; i++) all.set(4 * i + a, true);
    group.append_row(all);
  }
  return group;
}

namespace {

struct BellSearch {
  size_t n_flux = 0;
  // Detector words split into the cycle segment (only flux faults touch
  // it, with sparse masks) and the readout segment.
  size_t cyc_words = 0, read_words = 0;
  std::vector<uint64_t> flux_cyc, flux_read, x_read;
  std::vector<uint64_t> flux_log, x_log;
  std::vector<uint32_t> x_qubit;  // 3D qubit id per x species
  size_t max_flux_cyc_w = 0, max_x_w = 0;
  uint64_t nodes = 0, max_nodes = 0;

  std::vector<uint32_t> cur_flux, cur_x;
  bool found = false;
  FaultConfig result;

  static size_t weight(const uint64_t *w, size_t n) {
    size_t s = 0;
    for (size_t k = 0; k < n; k++) s += (size_t)std::popcount(w[k]);
    return s;
  }

  static bool zero(const uint64_t *w, size_t n) {
    for (size_t k = 0; k < n; k++)
      if (w[k]) return false;
    return true;
  }

  void search_x(size_t start, size_t left, std::vector<uint64_t> read, uint64_t logical) {
    if (found) return;
    if (left == 0) {
      if (zero(read.data(), read_words) && logical != 0) {
        found = true;
        result.flux = cur_flux;
        result.x_errors = cur_x;
      }
      return;
    }
    for (size_t sp = start; sp < x_qubit.size() && !found; sp++) {
      if (++nodes > max_nodes) throw BudgetExceeded{};
      std::vector<uint64_t> next = read;
      for (size_t k = 0; k < read_words; k++) next[k] ^= x_read[sp * read_words + k];
      if (weight(next.data(), read_words) > max_x_w * (left - 1)) continue;
      cur_x.push_back(x_qubit[sp]);
      search_x(sp + 1, left - 1, next, logical ^ x_log[sp]);
      cur_x.pop_back();
    }
  }

  void search_flux(size_t start, size_t left, size_t ex, std::vector<uint64_t> cyc,
                   std::vector<uint64_t> read, uint64_t logical) {
    if (found) return;
    if (left == 0) {
      if (zero(cyc.data(), cyc_words)) search_x(0, ex, read, logical);
      return;
    }
    for (size_t p = start; p < n_flux && !found; p++) {
      if (++nodes > max_nodes) throw BudgetExceeded{};
      std::vector<uint64_t> next_cyc = cyc;
      for (size_t k = 0; k < cyc_words; k++) next_cyc[k] ^= flux_cyc[p * cyc_words + k];
      // Only flux faults can clear cycle detectors.
      if (weight(next_cyc.data(), cyc_words) > max_flux_cyc_w * (left - 1)) continue;
      std::vector<uint64_t> next_read = read;
      for (size_t k = 0; k < read_words; k++) next_read[k] ^= flux_read[p * read_words + k];
      cur_flux.push_back((uint32_t)p);
      search_flux(p + 1, left - 1, ex, next_cyc, next_read, logical ^ flux_log[p]);
      cur_flux.pop_back();
    }
  }
};

}  // namespace

EffectiveDistanceReport effective_distance_bell(const LatticeBasis &lattice3, Int max_cost2,
                                                uint64_t max_nodes) {
  TorusComplex three = torus_complex(lattice3);
  StabilizerCode code = css_from_complex(three.cc, 1);
  SliceStructure sl = slice_structure(three);
  size_t n = code.n;
  size_t n_plaq = code.cz.rows();

  /*
   * Flux detectors: a flux pattern is undetectable iff it pairs to zero
   * with every closed surface. A sparse spanning set keeps the pruning
   * sharp: cube boundaries hit each plaquette twice, and the three
   * coordinate-plane orbit cycles add the nontrivial homology classes.
   */
  BitMat detectors = three.cc.boundary[3];  // rows = cubes
  for (int i = 0; i < 3 && three.dim == 3; i++) {
    int j = (i + 1) % 3, dircols = 0;
    (void)dircols;
    // Orbit of the origin under unit steps in directions i and j.
    std::set<size_t> verts;
    std::vector<std::vector<Int>> frontier = {{0, 0, 0}};
    verts.insert(three.vertex_index(three.reduce({0, 0, 0})));
    while (!frontier.empty()) {
      std::vector<std::vector<Int>> next;
      for (auto &p : frontier)
        for (int d : {i, j}) {
          std::vector<Int> q = p;
          q[(size_t)d] += 1;
          q = three.reduce(q);
          if (verts.insert(three.vertex_index(q)).second) next.push_back(q);
        }
      frontier = std::move(next);
    }
    BitVec cyc(n_plaq);
    std::vector<int> dirs = {std::min(i, j), std::max(i, j)};
    for (size_t v : verts) cyc.set(three.cell_index(2, three.vertex_of(v), dirs), true);
    detectors.append_row(cyc);
  }
  {
    // The sparse set must span the full cycle space, else fall back.
    BitMat full = kernel(three.cc.boundary[2].transpose());
    if (detectors.rank() != full.rank()) detectors = full;
  }
  size_t n_cyc = detectors.rows();
  bool even_flux_only = in_row_span(detectors, [&] {
    BitVec ones(n_plaq);
    for (size_t p = 0; p < n_plaq; p++) ones.set(p, true);
    return ones;
  }());

  // Linear section of the coboundary: delta(g0(f)) = f on the image. The
  // detector masks below are independent of this gauge choice.
  BitMat cob = three.cc.boundary[2].transpose();  // rows = edges
  RrefResult rr = rref(cob);
  auto g0 = [&](const BitVec &f) {
    BitVec residual = f, lam(n);
    for (size_t i = 0; i < rr.pivot_cols.size(); i++) {
      if (residual.get(rr.pivot_cols[i])) {
        residual ^= rr.reduced.row(i);
        lam ^= rr.transform.row(i);
      }
    }
    return lam;  // edge set
  };

  // Readout detectors: in-slice plaquettes, i.e. {1,2}-type 2-cells.
  std::vector<size_t> readout;
  for (size_t p = 2 * (size_t)three.det; p < 3 * (size_t)three.det; p++) readout.push_back(p);

  // Logical observables: Z pair supports between slice 0 and slice j.
  std::vector<BitVec> pair_support;  // edge sets
  for (size_t j = 1; j < sl.n_slice; j++)
    for (size_t a = 0; a < 2; a++) {
      BitVec sup(n);
      for (size_t q = 0; q < n; q++) {
        if (sl.generators_3d[0][2 + a].get(n + q)) sup.flip(q);
        if (sl.generators_3d[j][2 + a].get(n + q)) sup.flip(q);
      }
      pair_support.push_back(sup);
    }

  BellSearch bs;
  bs.cyc_words = (n_cyc + 63) / 64;
  bs.read_words = (readout.size() + 63) / 64;
  bs.n_flux = n_plaq;
  bs.max_nodes = max_nodes;

  std::vector<BitVec> readout_rows;
  for (size_t r = 0; r < readout.size(); r++) {
    BitVec zrow(n);
    for (size_t q = 0; q < n; q++)
      if (code.cz.get(readout[r], q)) zrow.set(q, true);
    readout_rows.push_back(zrow);
  }
  auto readout_bits = [&](const BitVec &edges, std::vector<uint64_t> &out) {
    for (size_t r = 0; r < readout_rows.size(); r++)
      if (readout_rows[r].dot(edges)) out[r / 64] ^= uint64_t(1) << (r % 64);
  };
  auto logical_bits = [&](const BitVec &edges) {
    uint64_t out = 0;
    for (size_t j = 0; j < pair_support.size(); j++)
      if (edges.dot(pair_support[j])) out |= uint64_t(1) << j;
    return out;
  };

  bs.flux_cyc.assign(n_plaq * bs.cyc_words, 0);
  bs.flux_read.assign(n_plaq * bs.read_words, 0);
  bs.flux_log.assign(n_plaq, 0);
  for (size_t p = 0; p < n_plaq; p++) {
    std::vector<uint64_t> cyc(bs.cyc_words, 0), read(bs.read_words, 0);
    for (size_t c = 0; c < n_cyc; c++)
      if (detectors.get(c, p)) cyc[c / 64] |= uint64_t(1) << (c % 64);
    BitVec f(n_plaq);
    f.set(p, true);
    BitVec g = g0(f);
    readout_bits(g, read);
    for (size_t k = 0; k < bs.cyc_words; k++) bs.flux_cyc[p * bs.cyc_words + k] = cyc[k];
    for (size_t k = 0; k < bs.read_words; k++) bs.flux_read[p * bs.read_words + k] = read[k];
    bs.flux_log[p] = logical_bits(g);
    bs.max_flux_cyc_w = std::max(bs.max_flux_cyc_w, BellSearch::weight(cyc.data(), bs.cyc_words));
  }
  // X faults on slice qubits; bulk X errors touch nothing observable.
  for (size_t c = 0; c < sl.n_slice; c++)
    for (size_t q : sl.slice_qubits[c]) {
      BitVec e(n);
      e.set(q, true);
      std::vector<uint64_t> read(bs.read_words, 0);
      readout_bits(e, read);
      for (uint64_t w : read) bs.x_read.push_back(w);
      bs.x_log.push_back(logical_bits(e));
      bs.x_qubit.push_back((uint32_t)q);
      bs.max_x_w = std::max(bs.max_x_w, BellSearch::weight(read.data(), bs.read_words));
    }

  EffectiveDistanceReport rep;
  for (Int cost2 = 1; cost2 <= max_cost2 && !bs.found; cost2++) {
    for (Int ef = cost2 % 2; ef <= cost2 && !bs.found; ef += 2) {
      if (even_flux_only && ef % 2) continue;
      Int ex = (cost2 - ef) / 2;
      bs.search_flux(0, (size_t)ef, (size_t)ex, std::vector<uint64_t>(bs.cyc_words, 0),
                     std::vector<uint64_t>(bs.read_words, 0), 0);
    }
    if (bs.found) rep.min_cost2 = cost2;
  }
  rep.nodes = bs.nodes;
  if (bs.found) rep.witness = bs.result;

  // Sharp flux-only configuration: the coboundary of a minimal 2D
  // X-cocycle on slice 0 costs e_f = 2d and nothing else.
  DistanceOptions dopt;
  dopt.w_max = (int)(max_cost2 / 2) + 2;
  DistanceReport dx = min_weight_logical(sl.slice_code, PauliSide::X, dopt);
  if (dx.weight > 0) {
    BitVec g(n);
    for (uint32_t q2 : dx.witnesses[0].qubits) g.set(sl.slice_qubits[0][q2], true);
    std::vector<uint64_t> cyc(bs.cyc_words, 0), read(bs.read_words, 0);
    uint64_t logical = 0;
    for (size_t p = 0; p < n_plaq; p++) {
      BitVec zrow(n);
      for (size_t q = 0; q < n; q++)
        if (three.cc.boundary[2].get(p, q)) zrow.set(q, true);
      if (zrow.dot(g)) {
        rep.sharp.flux.push_back((uint32_t)p);
        for (size_t k = 0; k < bs.cyc_words; k++) cyc[k] ^= bs.flux_cyc[p * bs.cyc_words + k];
        for (size_t k = 0; k < bs.read_words; k++)
          read[k] ^= bs.flux_read[p * bs.read_words + k];
        logical ^= bs.flux_log[p];
      }
    }
    if (!BellSearch::zero(cyc.data(), bs.cyc_words) ||
        !BellSearch::zero(read.data(), bs.read_words) || logical == 0)
      throw std::logic_error("effective_distance_bell: sharp configuration rejected");
  }
  return rep;
}

Circuit ordered_circuit(const TorusComplex &three,
                        const std::vector<std::pair<int, int>> &rounds) {
  if (three.dim != 3) throw std::invalid_argument("circuit: need a 3D torus");
  Circuit c;
  c.n_data = three.cc.degrees[1];
  c.n_ancilla = three.cc.degrees[2];
  c.cz_order.resize(c.n_ancilla);
  for (size_t a = 0; a < c.n_ancilla; a++)
    c.ops.push_back({CircuitOp::PreparePlus, a, 0, -1});

  int round_no = 0;
  for (auto [dir, sign] : rounds) {
    for (size_t a = 0; a < c.n_ancilla; a++) {
      auto [p, dirs] = three.cell_of(2, a);
      if (std::find(dirs.begin(), dirs.end(), dir) == dirs.end()) continue;
      // Ancilla at p + (e_i + e_j)/2; the data qubit displaced by
      // -sign * e_dir/2 is the edge in the other direction.
      int other = dirs[0] == dir ? dirs[1] : dirs[0];
      std::vector<Int> q(p);
      if (sign < 0) q[(size_t)dir] += 1;
      size_t data = three.cell_index(1, q, {other});
      c.ops.push_back({CircuitOp::CZ, a, data, round_no});
      c.cz_order[a].push_back(data);
    }
    round_no++;
  }
  for (size_t a = 0; a < c.n_ancilla; a++)
    c.ops.push_back({CircuitOp::MeasureX, a, 0, -1});
  return c;
}

Circuit starfish_circuit(const TorusComplex &three) {
  return ordered_circuit(three, {{0, 1}, {0, -1}, {1, 1}, {1, -1}, {2, 1}, {2, -1}});
}

BitVec ancilla_fault_effect(const Circuit &c, size_t ancilla, size_t after) {
  BitVec e(c.n_data);
  for (size_t i = after; i < c.cz_order[ancilla].size(); i++) e.flip(c.cz_order[ancilla][i]);
  return e;
}

DistanceReport circuit_distance(const Circuit &circuit, const TorusComplex &three,
                                const StabilizerCode &code, int w_max, uint64_t max_nodes) {
  std::vector<BitVec> reps = default_representatives(code, PauliSide::Z);
  SyndromeTable base = syndrome_table(code, PauliSide::Z, reps);

  SyndromeTable t;
  t.n_checks = base.n_checks;
  t.words = base.words;
  t.n_reps = base.n_reps;

  auto add_species = [&](const BitVec &effect) {
    std::vector<uint64_t> mask(t.words, 0);
    uint64_t log = 0;
    for (size_t q = 0; q < code.n; q++)
      if (effect.get(q)) {
        for (size_t k = 0; k < t.words; k++) mask[k] ^= base.patterns[q * t.words + k];
        log ^= base.logical_mask[q];
      }
    for (uint64_t w : mask) t.patterns.push_back(w);
    t.logical_mask.push_back(log);
    size_t wgt = 0;
    for (uint64_t w : mask) wgt += (size_t)std::popcount(w);
    t.max_flip = std::max(t.max_flip, wgt);
  };

  // Data Z faults at any circuit location have the same residual.
  for (size_t q = 0; q < code.n; q++) {
    BitVec e(code.n);
    e.set(q, true);
    add_species(e);
  }
  // Ancilla X faults between CZ layers; before the first CZ the residual
  // is the full plaquette (a stabilizer) and after the last there is
  // none, so neither can enter a minimal configuration.
  for (size_t a = 0; a < circuit.n_ancilla; a++)
    for (size_t after = 1; after < circuit.cz_order[a].size(); after++)
      add_species(ancilla_fault_effect(circuit, a, after));

  t.n_qubits = t.logical_mask.size();

  DistanceOptions opt;
  opt.w_max = w_max;
  opt.max_nodes = max_nodes;
  return search_table(t, opt);
}

SurgeryReport surgery_measure(const HermiteForm &lattice4, size_t row) {
  if (lattice4.dim() != 4) throw std::invalid_argument("surgery: need a 4D lattice");
  if (row >= 4) throw std::invalid_argument("surgery: bad row");

  TorusComplex small = torus_complex(lattice4.basis());
  HermiteForm merged_h = merge_for_surgery(lattice4, row);
  TorusComplex merged = torus_complex(merged_h.basis());
  StabilizerCode small_code = css_from_complex(small.cc, 2);
  StabilizerCode merged_code = css_from_complex(merged.cc, 2);
  StabilizerCode two = direct_sum(small_code, small_code);
  size_t n = small_code.n, n2 = two.n;
  if (merged_code.n != n2) throw std::logic_error("surgery: qubit count mismatch");

  // Vertex correspondence: block 0 embeds as-is, block 1 shifted by the
  // chosen HNF row.
  const std::vector<Int> &v = lattice4.matrix[row];
  std::vector<size_t> to_merged(n2);
  std::vector<bool> hit(n2, false);
  for (size_t b = 0; b < 2; b++) {
    for (size_t i = 0; i < n; i++) {
      auto [x, dirs] = small.cell_of(2, i);
      if (b == 1)
        for (size_t j = 0; j < 4; j++) x[j] += v[j];
      size_t m = merged.cell_index(2, x, dirs);
      to_merged[b * n + i] = m;
      if (hit[m]) throw std::logic_error("surgery: vertex correspondence not injective");
      hit[m] = true;
    }
  }
  std::vector<size_t> from_merged(n2);
  for (size_t i = 0; i < n2; i++) from_merged[to_merged[i]] = i;

  // Merged checks pulled back to the two-block register.
  BitMat merged_pulled(0, 2 * n2);
  for (size_t r = 0; r < merged_code.checks.rows(); r++) {
    BitVec row_p(2 * n2);
    for (size_t q = 0; q < n2; q++) {
      if (merged_code.checks.row(r).get(q)) row_p.set(from_merged[q], true);
      if (merged_code.checks.row(r).get(n2 + q)) row_p.set(n2 + from_merged[q], true);
    }
    merged_pulled.append_row(row_p);
  }

  SurgeryReport rep;
  rep.two_block_k = num_logical(two);
  rep.merged_k = num_logical(merged_code);

  // Logical products measured by the merge: merged stabilizers that are
  // logical for the two-block code, counted modulo its stabilizers.
  SymplecticForm j(n2);
  BitMat commutant = kernel(apply_J(two.checks, j));
  BitMat measured = intersect_spans(merged_pulled, commutant);
  rep.measured_products = measured.vstack(two.checks).rank() - two.checks.rank();

  // gamma (x) gamma survives: it commutes with every merged check.
  LogicalBasis l = logical_basis(small_code);
  rep.diagonal_products_survive = true;
  for (size_t i = 0; i < 2 * l.k; i++) {
    PauliOp p(2 * n2);
    for (size_t q = 0; q < n; q++) {
      if (l.rows.get(i, q)) {
        p.set(q, true);
        p.set(n + q, true);
      }
      if (l.rows.get(i, n + q)) {
        p.set(n2 + q, true);
        p.set(n2 + n + q, true);
      }
    }
    for (size_t r = 0; r < merged_pulled.rows(); r++)
      if (symplectic_product(merged_pulled.row(r), p, j))
        rep.diagonal_products_survive = false;
  }
  return rep;
}

Int boundary_distance(const HermiteForm &lattice4, size_t row) {
  HermiteForm merged = merge_for_surgery(lattice4, row);
  return 2 * hyperplane_systole(merged.basis(), row);
}

}  // namespace latqec
