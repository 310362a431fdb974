#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latqec/injection.hpp"

using namespace latqec;

namespace {

StabilizerCode toric(const IntMat &m, size_t q = 1) {
  return css_from_complex(torus_complex(LatticeBasis(m)).cc, q);
}

StabilizerCode five_qubit_code() {
  BitMat checks(4, 10);
  for (size_t r = 0; r < 4; r++) {
    checks.set(r, r % 5, true);
    checks.set(r, 5 + (r + 1) % 5, true);
    checks.set(r, 5 + (r + 2) % 5, true);
    checks.set(r, (r + 3) % 5, true);
  }
  return make_code(5, checks);
}

/*
 * Independent oracle for the movability test, following the punctured
 * group construction: the X-stabilizers supported on U cup S_X,
 * punctured to U, must leave Z_q logical for G_U iff q cannot move.
 * Here we verify the contract instead: every returned partition passes
 * the cleaning tests and |U| = k.
 */
void check_partition(const StabilizerCode &code, const InjectionSets &sets) {
  CHECK(sets.u.size() == num_logical(code));
  std::vector<bool> seen(code.n, false);
  size_t total = 0;
  for (auto v : {&sets.u, &sets.s_x, &sets.s_y, &sets.s_z})
    for (size_t q : *v) {
      CHECK_FALSE(seen[q]);
      seen[q] = true;
      total++;
    }
  CHECK(total == code.n);
  if (code.css && sets.s_y.empty()) {
    CHECK(cleaning_test(code, sets.s_x, CleanType::X));
    CHECK(cleaning_test(code, sets.s_z, CleanType::Z));
  }
  std::vector<size_t> s;
  for (auto v : {&sets.s_x, &sets.s_y, &sets.s_z}) s.insert(s.end(), v->begin(), v->end());
  CHECK(cleaning_test(code, s, CleanType::Standard, &sets));
}

}  // namespace

TEST_CASE("cleaning test basics") {
  StabilizerCode c = toric({{3, 0}, {0, 3}});
  CHECK(cleaning_test(c, {}, CleanType::X));
  CHECK(cleaning_test(c, {}, CleanType::Z));
  // Single qubits are always clean at distance >= 2.
  CHECK(cleaning_test(c, {0}, CleanType::X));
  CHECK(cleaning_test(c, {0}, CleanType::Z));
  // The full qubit set supports logicals.
  std::vector<size_t> all;
  for (size_t q = 0; q < c.n; q++) all.push_back(q);
  CHECK_FALSE(cleaning_test(c, all, CleanType::X));
  CHECK_FALSE(cleaning_test(c, all, CleanType::Z));
}

TEST_CASE("css injection sets on toric codes") {
  StabilizerCode c = toric({{3, 0}, {0, 3}});
  InjectionSets sets = css_injection_sets(c);
  check_partition(c, sets);
  CHECK(sets.u.size() == 2);
  CHECK(sets.s_x.size() + sets.s_z.size() == 16);
  // Singleton: d - 1 <= min(|S_Z|, |S_X|).
  CHECK(std::min(sets.s_x.size(), sets.s_z.size()) >= 2);
}

TEST_CASE("free qubits stay in U") {
  StabilizerCode c = make_css_code(BitMat(0, 3), BitMat(0, 3));
  InjectionSets sets = css_injection_sets(c);
  CHECK(sets.u.size() == 3);
  CHECK(sets.s_x.empty());
  CHECK(sets.s_z.empty());
}

TEST_CASE("non-CSS construction on the five qubit code") {
  StabilizerCode c = five_qubit_code();
  CHECK(num_logical(c) == 1);
  InjectionSets sets = noncss_injection_sets(c);
  check_partition(c, sets);
  CHECK(sets.u.size() == 1);
}

TEST_CASE("non-CSS construction specializes to CSS inputs") {
  StabilizerCode c = toric({{2, 0}, {0, 2}});
  InjectionSets sets = noncss_injection_sets(c);
  check_partition(c, sets);
}

TEST_CASE("injected logical pairs") {
  StabilizerCode c = toric({{3, 0}, {0, 3}});
  InjectionSets sets = css_injection_sets(c);
  auto pairs = injected_logical_pairs(c, sets);
  REQUIRE(pairs.size() == 2);
  SymplecticForm j(c.n);
  for (const auto &p : pairs) {
    // X part supported on S_X plus the qubit, restricted to U exactly X_q.
    for (size_t q : sets.u) {
      CHECK(p.x_logical.get(q) == (q == p.qubit));
      CHECK_FALSE(p.x_logical.get(c.n + q));
      CHECK(p.z_logical.get(c.n + q) == (q == p.qubit));
    }
    for (size_t q : sets.s_z) CHECK_FALSE(p.x_logical.get(q));
  }
  StabilizerCode empty = make_css_code(BitMat(0, 2), BitMat(0, 2));
  InjectionSets esets = css_injection_sets(empty);
  CHECK(injected_logical_pairs(empty, esets).size() == 2);
}

TEST_CASE("unencoding bases") {
  StabilizerCode c = toric({{2, 0}, {0, 2}});
  InjectionSets sets = css_injection_sets(c);
  std::string bases = unencoding_bases(c, sets);
  for (size_t q : sets.s_x) CHECK(bases[q] == 'X');
  for (size_t q : sets.s_z) CHECK(bases[q] == 'Z');
  for (size_t q : sets.u) CHECK(bases[q] == 'U');
  CHECK(bases.find('Y') == std::string::npos);
}

TEST_CASE("encode-unencode round trips are exact") {
  std::mt19937_64 rng(2024);
  StabilizerCode codes[] = {toric({{2, 0}, {0, 2}}), toric({{3, 0}, {0, 3}}),
                            toric({{2, 1}, {0, 3}}), five_qubit_code()};
  for (const auto &c : codes) {
    InjectionSets sets = c.css ? css_injection_sets(c) : noncss_injection_sets(c);
    for (int trial = 0; trial < 25; trial++)
      CHECK(injection_round_trip(c, sets, rng) == num_logical(c));
  }
}

TEST_CASE("greedy order invariance of |U|") {
  // Random qubit relabelings of the same code terminate with |U| = k.
  std::mt19937_64 rng(5);
  StabilizerCode base = toric({{2, 1}, {0, 3}});
  for (int trial = 0; trial < 10; trial++) {
    std::vector<size_t> perm(base.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    BitMat cx(base.cx.rows(), base.n), cz(base.cz.rows(), base.n);
    for (size_t r = 0; r < base.cx.rows(); r++)
      for (size_t q = 0; q < base.n; q++)
        if (base.cx.get(r, q)) cx.set(r, perm[q], true);
    for (size_t r = 0; r < base.cz.rows(); r++)
      for (size_t q = 0; q < base.n; q++)
        if (base.cz.get(r, q)) cz.set(r, perm[q], true);
    StabilizerCode c = make_css_code(std::move(cx), std::move(cz));
    InjectionSets sets = css_injection_sets(c);
    CHECK(sets.u.size() == num_logical(c));
  }
}
