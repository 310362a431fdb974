#ifndef LATQEC_INJECTION_HPP
#define LATQEC_INJECTION_HPP

#include "latqec/code.hpp"
#include "latqec/tableau.hpp"

namespace latqec {

/*
 * State-injection partition of the qubits: |U| = k holds the input
 * state, S_Z is prepared in |0>, S_X in |+>, S_Y in |i> (empty for CSS
 * codes). No nontrivial X-logical lives on S_X, no nontrivial Z-logical
 * on S_Z; for non-CSS codes, no nontrivial standard logical on S.
 */
struct InjectionSets {
  std::vector<size_t> u, s_x, s_y, s_z;
};

enum class CleanType { X, Z, Standard };

/*
 * True when no nontrivial logical of the given type is supported on the
 * subset. For Standard, the subset carries the fixed per-qubit Paulis of
 * the sets (X on S_X, Y on S_Y, Z on S_Z) and the test asks for a
 * product of those factors that is a nontrivial logical.
 */
bool cleaning_test(const StabilizerCode &code, const std::vector<size_t> &subset,
                   CleanType type, const InjectionSets *sets = nullptr);

// Greedy construction for CSS codes: move qubits out of U, trying S_Z
// then S_X in ascending qubit order, until |U| = k.
InjectionSets css_injection_sets(const StabilizerCode &code);

// Greedy construction for arbitrary stabilizer codes, trying S_Z, S_X,
// then S_Y.
InjectionSets noncss_injection_sets(const StabilizerCode &code);

/*
 * One anticommuting logical pair per qubit of U: the X-type logical is
 * X_q times an operator on S_X (or a standard operator on S), the Z-type
 * logical is Z_q times an operator on S_Z (or S).
 */
struct InjectedLogicalPair {
  size_t qubit = 0;
  PauliOp x_logical;
  PauliOp z_logical;
};

std::vector<InjectedLogicalPair> injected_logical_pairs(const StabilizerCode &code,
                                                        const InjectionSets &sets);

// Per-qubit measurement basis for unencoding ('X','Y','Z' on S, 'U' on U).
std::string unencoding_bases(const StabilizerCode &code, const InjectionSets &sets);

/*
 * Tableau round trip: encode a random stabilizer state on U by the
 * injection protocol, unencode by single-qubit measurements, and verify
 * the state on U is recovered exactly after the computed Pauli frame.
 * Returns the number of verified stabilizer generators.
 */
size_t injection_round_trip(const StabilizerCode &code, const InjectionSets &sets,
                            std::mt19937_64 &rng);

}  // namespace latqec

#endif
