#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latqec/distance.hpp"

#include <random>

using namespace latqec;

namespace {

/*
 * Independent oracle: enumerate every error pattern up to weight w_max by
 * plain nested combinations and test the syndrome and logical pairing
 * directly against the check matrices.
 */
int brute_force_min_logical(const StabilizerCode &code, PauliSide side, int w_max) {
  const BitMat &checks = side == PauliSide::Z ? code.cx : code.cz;
  std::vector<BitVec> reps = default_representatives(code, side);
  size_t n = code.n;
  std::vector<uint32_t> idx;
  int best = -1;

  auto is_logical = [&](const std::vector<uint32_t> &qs) {
    BitVec e(n);
    for (uint32_t q : qs) e.set(q, true);
    for (size_t r = 0; r < checks.rows(); r++)
      if (checks.row(r).dot(e)) return false;
    for (const auto &rep : reps)
      if (e.dot(rep)) return true;
    return false;
  };

  std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t left) {
    if (left == 0) return is_logical(idx);
    for (size_t q = start; q + left <= n + 1 && q < n; q++) {
      idx.push_back((uint32_t)q);
      if (rec(q + 1, left - 1)) {
        idx.pop_back();
        return true;
      }
      idx.pop_back();
    }
    return false;
  };

  for (int w = 1; w <= w_max && best < 0; w++)
    if (rec(0, (size_t)w)) best = w;
  return best;
}

StabilizerCode code_1d(const IntMat &m, size_t q = 1) {
  return css_from_complex(torus_complex(LatticeBasis(m)).cc, q);
}

}  // namespace

TEST_CASE("distances of the 3D table lattices equal the l1 systole") {
  struct Row {
    IntMat m;
    int d;
  };
  for (const Row &row : {Row{{{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}, 2},
                         Row{{{1, 0, 4}, {0, 1, 5}, {0, 0, 7}}, 3},
                         Row{{{2, 0, 4}, {0, 1, 3}, {0, 0, 5}}, 3}}) {
    StabilizerCode c = code_1d(row.m);
    CHECK(l1_systole(LatticeBasis(row.m)) == row.d);
    DistanceOptions opt;
    opt.w_max = row.d;
    DistanceReport rep = min_weight_logical(c, PauliSide::Z, opt);
    CHECK(rep.weight == row.d);
  }
}

TEST_CASE("2D toric code diag(2,2) has Z-distance 2") {
  StabilizerCode c = code_1d({{2, 0}, {0, 2}});
  DistanceOptions opt;
  opt.w_max = 3;
  CHECK(min_weight_logical(c, PauliSide::Z, opt).weight == 2);
}

TEST_CASE("w_max below the distance reports no witness") {
  StabilizerCode c = code_1d({{3, 0}, {0, 3}});
  DistanceOptions opt;
  opt.w_max = 1;
  DistanceReport rep = min_weight_logical(c, PauliSide::Z, opt);
  CHECK(rep.weight == -1);
  CHECK(rep.exhaustive_up_to == 1);
}

TEST_CASE("search agrees with naive brute force on small codes") {
  std::vector<IntMat> lattices2 = {{{2, 0}, {0, 2}}, {{3, 0}, {0, 3}},
                                   {{2, 1}, {0, 3}}, {{1, 1}, {-1, 1}},
                                   {{2, 2}, {-2, 2}}};
  for (const auto &m : lattices2) {
    StabilizerCode c = code_1d(m);
    if (c.n > 24) continue;
    for (PauliSide side : {PauliSide::X, PauliSide::Z}) {
      DistanceOptions opt;
      opt.w_max = 4;
      CHECK(min_weight_logical(c, side, opt).weight ==
            brute_force_min_logical(c, side, 4));
    }
  }
  // One 3D instance and one (2,2) 4D instance under 24 qubits.
  StabilizerCode c3 = code_1d({{1, 0, 1}, {0, 1, 1}, {0, 0, 2}});
  for (PauliSide side : {PauliSide::X, PauliSide::Z}) {
    DistanceOptions opt;
    opt.w_max = 4;
    CHECK(min_weight_logical(c3, side, opt).weight ==
          brute_force_min_logical(c3, side, 4));
  }
  StabilizerCode c4 =
      css_from_complex(torus_complex(LatticeBasis({{1, 0, 0, 1}, {0, 1, 0, 1},
                                                   {0, 0, 1, 1}, {0, 0, 0, 2}}))
                           .cc,
                       2);
  CHECK(c4.n == 12);
  DistanceOptions opt4;
  opt4.w_max = 4;
  CHECK(min_weight_logical(c4, PauliSide::Z, opt4).weight ==
        brute_force_min_logical(c4, PauliSide::Z, 4));
}

TEST_CASE("translation trick gives the same minimum") {
  TorusComplex geom = torus_complex(LatticeBasis({{1, 0, 4}, {0, 1, 5}, {0, 0, 7}}));
  StabilizerCode c = css_from_complex(geom.cc, 1);
  DistanceOptions plain;
  plain.w_max = 3;
  DistanceOptions trans = plain;
  trans.use_translation = true;
  trans.orbit_det = geom.det;
  DistanceReport a = min_weight_logical(c, PauliSide::Z, plain);
  DistanceReport b = min_weight_logical(c, PauliSide::Z, trans);
  CHECK(a.weight == b.weight);
  CHECK(b.nodes <= a.nodes);
  // Orbit expansion of the translated witnesses covers all plain witnesses.
  std::vector<BitVec> all = expand_translations(b.witnesses, geom, 1, PauliSide::Z, c.n);
  for (const auto &w : a.witnesses) {
    BitVec pat(c.n);
    for (uint32_t q : w.qubits) pat.set(q, true);
    CHECK(std::find(all.begin(), all.end(), pat) != all.end());
  }
}

TEST_CASE("budget exhaustion is reported") {
  StabilizerCode c = code_1d({{3, 0}, {0, 3}});
  DistanceOptions opt;
  opt.w_max = 3;
  opt.max_nodes = 5;
  CHECK_THROWS_AS(min_weight_logical(c, PauliSide::Z, opt), BudgetExceeded);
}

TEST_CASE("plaquette-sum representatives for odd determinant") {
  TorusComplex geom = torus_complex(
      LatticeBasis({{1, 0, 0, 5}, {0, 1, 0, 6}, {0, 0, 1, 7}, {0, 0, 0, 9}}));
  StabilizerCode c = css_from_complex(geom.cc, 2);
  std::vector<BitVec> reps = logical_representatives_22(c, geom);
  CHECK(reps.size() == 6);

  TorusComplex even = torus_complex(hadamard_lattice(2));
  StabilizerCode had = css_from_complex(even.cc, 2);
  CHECK_THROWS(logical_representatives_22(had, even));
}

TEST_CASE("monotonicity of the report in w_max") {
  StabilizerCode c = code_1d({{2, 1}, {0, 3}});
  DistanceOptions o2, o3;
  o2.w_max = 2;
  o3.w_max = 3;
  DistanceReport r2 = min_weight_logical(c, PauliSide::Z, o2);
  DistanceReport r3 = min_weight_logical(c, PauliSide::Z, o3);
  if (r2.weight > 0) {
    CHECK(r2.weight == r3.weight);
    CHECK(r2.witnesses.size() == r3.witnesses.size());
  }
}

TEST_CASE("subsystem probe on the det-16 code") {
  // HNF diag(1,1,1,16), last column (7,5,3,16): stabilizer distance 8 but
  // the minimal X and Z logicals commute and are each unique up to
  // translation, with an orbit of size 8.
  TorusComplex geom = torus_complex(
      LatticeBasis({{1, 0, 0, 7}, {0, 1, 0, 5}, {0, 0, 1, 3}, {0, 0, 0, 16}}));
  StabilizerCode c = css_from_complex(geom.cc, 2);
  CHECK(num_logical(c) == 6);

  SubsystemReport rep = subsystem_probe(c, geom, 2, 8);
  CHECK(rep.z_count == 8);
  CHECK(rep.z_classes == 1);
  CHECK(rep.x_count == 8);
  CHECK(rep.x_classes == 1);
  CHECK(rep.all_commute);
  CHECK(rep.subsystem_distance_exceeds);
  CHECK(rep.gauge_logical_qubits == 4);
}
