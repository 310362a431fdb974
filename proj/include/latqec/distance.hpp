#ifndef LATQEC_DISTANCE_HPP
#define LATQEC_DISTANCE_HPP

#include "latqec/code.hpp"

#include <cstdint>

namespace latqec {

enum class PauliSide { X, Z };

/*
 * Per-qubit syndrome patterns for one error type, packed into words: for
 * side Z the pattern of qubit q is the set of X-checks containing q, and
 * symmetrically for side X. logical_mask[q] collects the inner products
 * of a single error on q with up to 64 opposite-type logical
 * representatives. max_flip is the largest pattern weight; it is the
 * pruning constant of the search.
 */
struct SyndromeTable {
  size_t n_qubits = 0;
  size_t n_checks = 0;
  size_t words = 0;
  size_t n_reps = 0;
  size_t max_flip = 0;
  std::vector<uint64_t> patterns;  // n_qubits x words
  std::vector<uint64_t> logical_mask;

  const uint64_t *pattern(size_t q) const { return &patterns[q * words]; }
};

SyndromeTable syndrome_table(const StabilizerCode &code, PauliSide side,
                             const std::vector<BitVec> &reps);

// Opposite-type logical representatives used for logical-class tracking:
// the X rows (side Z) or Z rows (side X) of the deterministic logical
// basis, as n-bit supports.
std::vector<BitVec> default_representatives(const StabilizerCode &code, PauliSide side);

struct Witness {
  std::vector<uint32_t> qubits;
  uint64_t logical_class = 0;
};

struct DistanceReport {
  int weight = -1;  // -1 when no logical of weight <= w_max exists
  std::vector<Witness> witnesses;
  int exhaustive_up_to = 0;
  uint64_t nodes = 0;
  bool used_translation = false;
};

struct DistanceOptions {
  int w_max = 4;
  bool use_translation = false;
  // det of the torus; with the subset-major layout, translates of a qubit
  // occupy one det-sized block and anchors are 0, det, 2 det, ...
  Int orbit_det = 0;
  uint64_t max_nodes = 2000000000ULL;
  bool collect_witnesses = true;
  // Override the logical representatives (e.g. the six plaquette sums).
  std::vector<BitVec> reps;
};

/*
 * Exact minimum weight of a logical operator of pure type `side`, by the
 * pruned recursive enumeration: maintain the syndrome of the partial
 * error pattern as packed words, recurse in increasing qubit order, and
 * abandon a branch once the syndrome weight exceeds max_flip times the
 * remaining error budget. With use_translation, the first error is
 * anchored on the qubits of one fixed vertex and witnesses are
 * representatives up to lattice translation.
 */
DistanceReport min_weight_logical(const StabilizerCode &code, PauliSide side,
                                  const DistanceOptions &opt);

/*
 * The same search over an arbitrary fault table: any set of fault species
 * with packed syndrome patterns and logical-pairing masks. Used for
 * circuit-level fault enumeration, where a species is a circuit fault
 * location rather than a single qubit.
 */
DistanceReport search_table(const SyndromeTable &table, const DistanceOptions &opt);

// The six X-type representatives of a 4D (2,2) code with odd determinant:
// for each pair of directions, the sum of all plaquettes of that type.
std::vector<BitVec> logical_representatives_22(const StabilizerCode &code,
                                               const TorusComplex &geom);

// All distinct translates of the found witnesses.
std::vector<BitVec> expand_translations(const std::vector<Witness> &witnesses,
                                        const TorusComplex &geom, size_t qubit_degree,
                                        PauliSide side, size_t n);

struct SubsystemReport {
  int weight = 0;
  size_t x_count = 0, z_count = 0;    // minimal-weight logicals of each type
  size_t x_classes = 0, z_classes = 0;  // homology classes among them
  bool all_commute = false;           // every minimal X vs Z pair commutes
  size_t gauge_logical_qubits = 0;    // k after demoting the minimal classes
  bool subsystem_distance_exceeds = false;  // no dressed logical at weight <= w
};

/*
 * Demote every minimal-weight logical class to a gauge operator and
 * report what survives. Assumes min_weight_logical at w is exhaustive,
 * so the subsystem distance exceeds w iff all weight-w logicals land in
 * the gauge group.
 */
SubsystemReport subsystem_probe(const StabilizerCode &code, const TorusComplex &geom,
                                size_t qubit_degree, int w, uint64_t max_nodes = 2000000000ULL);

}  // namespace latqec

#endif
