#include "latqec/injection.hpp"

#include <algorithm>
#include <stdexcept>

namespace latqec {

namespace {

std::vector<size_t> complement(size_t n, const std::vector<size_t> &subset) {
  std::vector<bool> in(n, false);
  for (size_t q : subset) in[q] = true;
  std::vector<size_t> out;
  for (size_t q = 0; q < n; q++)
    if (!in[q]) out.push_back(q);
  return out;
}

// dim of rowspan(m) intersected with the coordinate subspace on `cols`.
size_t span_dim_within(const BitMat &m, const std::vector<size_t> &other_cols) {
  return m.rank() - m.submatrix_cols(other_cols).rank();
}

// Assigned single-qubit Pauli of a qubit in S.
PauliOp assigned_pauli(size_t n, size_t q, const InjectionSets &sets) {
  bool x = std::find(sets.s_x.begin(), sets.s_x.end(), q) != sets.s_x.end() ||
           std::find(sets.s_y.begin(), sets.s_y.end(), q) != sets.s_y.end();
  bool z = std::find(sets.s_z.begin(), sets.s_z.end(), q) != sets.s_z.end() ||
           std::find(sets.s_y.begin(), sets.s_y.end(), q) != sets.s_y.end();
  PauliOp p(2 * n);
  if (x) p.set(q, true);
  if (z) p.set(n + q, true);
  return p;
}

}  // namespace

bool cleaning_test(const StabilizerCode &code, const std::vector<size_t> &subset,
                   CleanType type, const InjectionSets *sets) {
  size_t n = code.n;
  std::vector<size_t> rest = complement(n, subset);

  if (type == CleanType::X || type == CleanType::Z) {
    if (!code.css) throw std::invalid_argument("cleaning_test: X/Z types need a CSS code");
    const BitMat &commute_against = type == CleanType::X ? code.cz : code.cx;
    const BitMat &stabs = type == CleanType::X ? code.cx : code.cz;
    // Pure-type operators on the subset commuting with the opposite
    // checks, versus stabilizers supported there.
    size_t closed = subset.size() - commute_against.submatrix_cols(subset).rank();
    size_t trivial = span_dim_within(stabs, rest);
    return closed == trivial;
  }

  if (!sets) throw std::invalid_argument("cleaning_test: standard type needs the sets");
  // Standard operators: one fixed Pauli per subset qubit. b -> v(b).
  BitMat w(0, 2 * n);
  for (size_t q : subset) w.append_row(assigned_pauli(n, q, *sets));
  // dim{b : v(b) in the commutant}.
  SymplecticForm j(n);
  BitMat a1 = apply_J(code.checks, j) * w.transpose();  // m x |subset|
  size_t closed = kernel(a1).rows();
  // dim{b : v(b) in the stabilizer span} via rank bookkeeping.
  size_t trivial = w.rows() + code.checks.rank() - w.vstack(code.checks).rank();
  return closed == trivial;
}

InjectionSets css_injection_sets(const StabilizerCode &code) {
  if (!code.css) throw std::invalid_argument("css_injection_sets: CSS code required");
  size_t k = num_logical(code);
  InjectionSets sets;
  for (size_t q = 0; q < code.n; q++) sets.u.push_back(q);

  bool progress = true;
  while (sets.u.size() > k && progress) {
    progress = false;
    for (size_t idx = 0; idx < sets.u.size() && sets.u.size() > k; idx++) {
      size_t q = sets.u[idx];
      std::vector<size_t> sz = sets.s_z;
      sz.push_back(q);
      if (cleaning_test(code, sz, CleanType::Z)) {
        sets.s_z = std::move(sz);
        sets.u.erase(sets.u.begin() + (long)idx--);
        progress = true;
        continue;
      }
      std::vector<size_t> sx = sets.s_x;
      sx.push_back(q);
      if (cleaning_test(code, sx, CleanType::X)) {
        sets.s_x = std::move(sx);
        sets.u.erase(sets.u.begin() + (long)idx--);
        progress = true;
      }
    }
  }
  if (sets.u.size() != k) throw std::logic_error("css_injection_sets: greedy stalled");
  std::sort(sets.s_z.begin(), sets.s_z.end());
  std::sort(sets.s_x.begin(), sets.s_x.end());
  return sets;
}

InjectionSets noncss_injection_sets(const StabilizerCode &code) {
  size_t k = num_logical(code);
  InjectionSets sets;
  for (size_t q = 0; q < code.n; q++) sets.u.push_back(q);

  auto movable = [&](size_t q, std::vector<size_t> InjectionSets::*member) {
    InjectionSets trial = sets;
    (trial.*member).push_back(q);
    std::vector<size_t> s;
    for (auto v : {&trial.s_x, &trial.s_y, &trial.s_z})
      s.insert(s.end(), v->begin(), v->end());
    std::sort(s.begin(), s.end());
    if (!cleaning_test(code, s, CleanType::Standard, &trial)) return false;
    sets = std::move(trial);
    return true;
  };

  bool progress = true;
  while (sets.u.size() > k && progress) {
    progress = false;
    for (size_t idx = 0; idx < sets.u.size() && sets.u.size() > k; idx++) {
      size_t q = sets.u[idx];
      if (movable(q, &InjectionSets::s_z) || movable(q, &InjectionSets::s_x) ||
          movable(q, &InjectionSets::s_y)) {
        sets.u.erase(sets.u.begin() + (long)idx--);
        progress = true;
      }
    }
  }
  if (sets.u.size() != k) throw std::logic_error("noncss_injection_sets: greedy stalled");
  for (auto v : {&sets.s_x, &sets.s_y, &sets.s_z}) std::sort(v->begin(), v->end());
  return sets;
}

namespace {

/*
 * Pure-type logicals on region R = side_set U u_set with U-restriction a
 * unit vector per qubit of U: rref with the U columns leading makes
 * every U column a pivot, so each pivot row restricts to exactly one
 * X_q / Z_q.
 */
std::vector<std::pair<size_t, BitVec>> per_qubit_logicals(const BitMat &opposite_checks,
                                                          const std::vector<size_t> &side_set,
                                                          const std::vector<size_t> &u_set,
                                                          size_t n) {
  std::vector<size_t> region = u_set;
  region.insert(region.end(), side_set.begin(), side_set.end());
  BitMat restricted = opposite_checks.submatrix_cols(region);
  BitMat closed = kernel(restricted);  // supports within the region
  RrefResult rr = rref(closed);

  std::vector<std::pair<size_t, BitVec>> out;
  for (size_t i = 0; i < rr.rank; i++) {
    if (rr.pivot_cols[i] >= u_set.size()) continue;
    // Check the U block is a single unit vector.
    size_t hits = 0;
    for (size_t c = 0; c < u_set.size(); c++) hits += rr.reduced.get(i, c);
    if (hits != 1) throw std::logic_error("injected_logical_pairs: U block not diagonal");
    BitVec support(n);
    for (size_t c = 0; c < region.size(); c++)
      if (rr.reduced.get(i, c)) support.set(region[c], true);
    out.emplace_back(u_set[rr.pivot_cols[i]], support);
  }
  if (out.size() != u_set.size())
    throw std::logic_error("injected_logical_pairs: missing per-qubit logical");
  return out;
}

}  // namespace

std::vector<InjectedLogicalPair> injected_logical_pairs(const StabilizerCode &code,
                                                        const InjectionSets &sets) {
  size_t n = code.n;
  std::vector<InjectedLogicalPair> pairs;

  if (code.css && sets.s_y.empty()) {
    auto xs = per_qubit_logicals(code.cz, sets.s_x, sets.u, n);
    auto zs = per_qubit_logicals(code.cx, sets.s_z, sets.u, n);
    for (size_t i = 0; i < sets.u.size(); i++) {
      InjectedLogicalPair p;
      p.qubit = xs[i].first;
      p.x_logical = pauli_from_halves(xs[i].second, BitVec(n));
      auto zit = std::find_if(zs.begin(), zs.end(),
                              [&](const auto &z) { return z.first == p.qubit; });
      if (zit == zs.end()) throw std::logic_error("injected_logical_pairs: unmatched pair");
      p.z_logical = pauli_from_halves(BitVec(n), zit->second);
      pairs.push_back(std::move(p));
    }
  } else {
    // Standard operators: solve for the S factor making X_q (or Z_q)
    // commute with every check.
    std::vector<size_t> s;
    for (auto v : {&sets.s_x, &sets.s_y, &sets.s_z})
      s.insert(s.end(), v->begin(), v->end());
    BitMat w(0, 2 * n);
    for (size_t q : s) w.append_row(assigned_pauli(n, q, sets));
    SymplecticForm j(n);
    BitMat a1 = (apply_J(code.checks, j) * w.transpose()).transpose();  // |S| x m
    for (size_t q : sets.u) {
      InjectedLogicalPair p;
      p.qubit = q;
      for (int which = 0; which < 2; which++) {
        PauliOp base = which == 0 ? pauli_x(n, q) : pauli_z(n, q);
        BitVec rhs(code.checks.rows());
        for (size_t r = 0; r < code.checks.rows(); r++)
          rhs.set(r, symplectic_product(code.checks.row(r), base, j));
        BitVec b;
        if (!solve_row_combination(a1, rhs, &b))
          throw std::logic_error("injected_logical_pairs: no standard completion");
        PauliOp full = base;
        for (size_t i = 0; i < s.size(); i++)
          if (b.get(i)) full ^= w.row(i);
        (which == 0 ? p.x_logical : p.z_logical) = full;
      }
      pairs.push_back(std::move(p));
    }
  }

  // Pair invariants: commute with checks, anticommute exactly on-pair.
  SymplecticForm j(n);
  for (const auto &p : pairs) {
    for (size_t r = 0; r < code.checks.rows(); r++) {
      if (symplectic_product(code.checks.row(r), p.x_logical, j) ||
          symplectic_product(code.checks.row(r), p.z_logical, j))
        throw std::logic_error("injected_logical_pairs: logical hits a check");
    }
    for (const auto &o : pairs) {
      bool same = o.qubit == p.qubit;
      if (symplectic_product(p.x_logical, o.z_logical, j) != same)
        throw std::logic_error("injected_logical_pairs: pairing violated");
      if (symplectic_product(p.x_logical, o.x_logical, j) ||
          symplectic_product(p.z_logical, o.z_logical, j))
        throw std::logic_error("injected_logical_pairs: same-type anticommutation");
    }
  }
  return pairs;
}

std::string unencoding_bases(const StabilizerCode &code, const InjectionSets &sets) {
  std::string bases(code.n, 'U');
  for (size_t q : sets.s_x) bases[q] = 'X';
  for (size_t q : sets.s_y) bases[q] = 'Y';
  for (size_t q : sets.s_z) bases[q] = 'Z';
  return bases;
}

size_t injection_round_trip(const StabilizerCode &code, const InjectionSets &sets,
                            std::mt19937_64 &rng) {
  size_t n = code.n;
  size_t k = sets.u.size();
  auto pairs = injected_logical_pairs(code, sets);

  // A random Clifford sequence on U defines the input state.
  struct Gate {
    int kind;  // 0 H, 1 S, 2 CNOT, 3 CZ
    size_t a, b;
  };
  std::vector<Gate> gates;
  for (size_t t = 0; t < 4 * k * k + 8; t++) {
    Gate g;
    g.kind = (int)(rng() % 4);
    g.a = rng() % std::max<size_t>(k, 1);
    g.b = rng() % std::max<size_t>(k, 1);
    if (k < 2 && g.kind >= 2) g.kind = (int)(rng() % 2);
    if (g.kind >= 2 && g.a == g.b) g.kind = 0;
    gates.push_back(g);
  }
  auto apply_gates = [&](StabilizerState &st, const std::vector<size_t> &map) {
    for (const auto &g : gates) {
      switch (g.kind) {
        case 0: st.apply_h(map[g.a]); break;
        case 1: st.apply_s(map[g.a]); break;
        case 2: st.apply_cnot(map[g.a], map[g.b]); break;
        default: st.apply_cz(map[g.a], map[g.b]); break;
      }
    }
  };

  if (k == 0) return 0;

  // Reference state on k qubits.
  StabilizerState ref(StabilizerState::product_state(std::string(k, 'Z')));
  std::vector<size_t> idmap(k);
  for (size_t i = 0; i < k; i++) idmap[i] = i;
  apply_gates(ref, idmap);
  BitMat ref_stabs = ref.stabilizer_matrix();

  // Encoded register: S qubits in their bases, U starting in |0> and then
  // carrying the input through the same gate sequence.
  std::string bases = unencoding_bases(code, sets);
  for (auto &c : bases)
    if (c == 'U') c = 'Z';
  StabilizerState enc(StabilizerState::product_state(bases));
  apply_gates(enc, sets.u);

  // Measure every check once.
  for (size_t r = 0; r < code.checks.rows(); r++) {
    PauliOp chk(2 * n);
    for (size_t i = 0; i < 2 * n; i++) chk.set(i, code.checks.get(r, i));
    enc.measure_pauli(chk, rng);
  }

  // Logical images must carry the input expectations already.
  std::vector<PauliOp> images;
  std::vector<int> encoded_expect;
  for (size_t g = 0; g < k; g++) {
    PauliOp v(2 * n);
    for (size_t i = 0; i < k; i++) {
      if (ref_stabs.get(g, i)) v ^= pairs[i].x_logical;
      if (ref_stabs.get(g, k + i)) v ^= pairs[i].z_logical;
    }
    images.push_back(v);
    int sign = ref.stabilizer_sign(g) ? -1 : 1;
    int e = enc.expectation(v);
    if (e != sign) throw std::logic_error("injection_round_trip: encoding sign mismatch");
    encoded_expect.push_back(e);
  }

  // Unencode: single-qubit measurements on S.
  std::vector<int> outcome(n, 0);
  auto measure_basis = [&](size_t q, char basis) {
    PauliOp p(2 * n);
    if (basis == 'X' || basis == 'Y') p.set(q, true);
    if (basis == 'Z' || basis == 'Y') p.set(n + q, true);
    outcome[q] = enc.measure_pauli(p, rng).outcome;
  };
  for (size_t q : sets.s_x) measure_basis(q, 'X');
  for (size_t q : sets.s_y) measure_basis(q, 'Y');
  for (size_t q : sets.s_z) measure_basis(q, 'Z');

  // U now holds the input state up to the frame given by the outcomes on
  // each image's S support.
  size_t verified = 0;
  for (size_t g = 0; g < k; g++) {
    PauliOp on_u(2 * n);
    int frame = 1;
    for (size_t q = 0; q < n; q++) {
      bool in_u = std::find(sets.u.begin(), sets.u.end(), q) != sets.u.end();
      bool xs = images[g].get(q), zs = images[g].get(n + q);
      if (in_u) {
        if (xs) on_u.set(q, true);
        if (zs) on_u.set(n + q, true);
      } else if (xs || zs) {
        frame *= outcome[q] ? -1 : 1;
      }
    }
    int e = enc.expectation(on_u);
    if (e == 0) throw std::logic_error("injection_round_trip: logical not deterministic");
    if (e != encoded_expect[g] * frame)
      throw std::logic_error("injection_round_trip: frame mismatch");
    verified++;
  }
  return verified;
}

}  // namespace latqec
