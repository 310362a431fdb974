#ifndef LATQEC_PROTOCOLS_HPP
#define LATQEC_PROTOCOLS_HPP

#include "latqec/distance.hpp"
#include "latqec/tableau.hpp"

#include <random>

namespace latqec {

/*
 * The slice decomposition of a 3D torus with n_slice = H_00 > 0: bulk
 * qubits are the direction-0 edges, and the remaining edges split into
 * n_slice 2D toric codes on the lattice spanned by the trailing 2x2 HNF
 * block. slice_qubits[c][i] is the 3D qubit carrying 2D qubit i of
 * slice c.
 */
struct SliceStructure {
  size_t n_slice = 0;
  LatticeBasis slice_lattice;
  StabilizerCode slice_code;
  LogicalBasis slice_basis;  // one shared 2D basis, k = 2
  std::vector<std::vector<size_t>> slice_qubits;
  std::vector<size_t> bulk_qubits;
  // Per slice, the 4 generators X1, X2, Z1, Z2 embedded in the 3D
  // register, in that order.
  std::vector<std::vector<PauliOp>> generators_3d;
};

SliceStructure slice_structure(const TorusComplex &three);

/*
 * Outcome of the Bell / GHZ preparation protocol: the logical state of
 * the slices, given as the span of generator combinations (lambda
 * vectors over the 4 n_slice slice-logical generators) that stabilize the
 * final state, with their signs.
 */
struct SliceProtocolResult {
  SliceStructure structure;
  BitMat logical_group;  // rows: lambda vectors of length 4 n_slice
  std::vector<int> signs;
  std::vector<int> plaquette_outcomes;
};

SliceProtocolResult slice_protocol(const LatticeBasis &lattice3, std::mt19937_64 &rng);

// The expected lambda span: Z^a_i Z^a_j for adjacent slices and
// prod_i X^a_i, from the Kunneth structure of the twisted product.
// Validates that every twist acts trivially on homology and cohomology.
BitMat twisted_slice_logicals(size_t circle_len, const ChainComplex &d,
                              const std::vector<std::array<ComplexAutomorphism, 2>> &twists,
                              const StabilizerCode &d_code, const LogicalBasis &d_basis);

/*
 * Fault configuration for the logical-Z readout of the Bell protocol:
 * flux errors flip recorded plaquette outcomes at half cost, qubit X
 * errors flip the final single-qubit Z readout at unit cost.
 */
struct FaultConfig {
  std::vector<uint32_t> flux;      // plaquette indices
  std::vector<uint32_t> x_errors;  // qubit indices
  // doubled cost e_f + 2 e_X
  Int cost2() const { return (Int)flux.size() + 2 * (Int)x_errors.size(); }
};

struct EffectiveDistanceReport {
  Int min_cost2 = -1;          // doubled: e_f + 2 e_X of the cheapest failure
  FaultConfig witness;
  FaultConfig sharp;           // flux-only failure with e_f = 2d
  uint64_t nodes = 0;
};

/*
 * Exhaustive search for the cheapest undetectable logical failure of the
 * slicing protocol, in increasing e_f/2 + e_X order. A configuration is
 * undetectable when the flux flips pair trivially with every closed
 * surface and the residual readout error has zero slice syndrome; it is
 * a logical failure when some Bell pair observable Z_i Z_j flips.
 */
EffectiveDistanceReport effective_distance_bell(const LatticeBasis &lattice3, Int max_cost2,
                                                uint64_t max_nodes = 400000000ULL);

/*
 * Syndrome extraction circuit measuring every Z-plaquette with one
 * ancilla, CZ rounds ordered by displacement direction.
 */
struct CircuitOp {
  enum Kind { PreparePlus, CZ, MeasureX } kind;
  size_t ancilla = 0;
  size_t data = 0;
  int round = -1;
};

struct Circuit {
  size_t n_data = 0;
  size_t n_ancilla = 0;
  std::vector<CircuitOp> ops;
  // Per ancilla, its CZ data partners in circuit order.
  std::vector<std::vector<size_t>> cz_order;
};

// The starfish order (+1,-1,+2,-2,+3,-3).
Circuit starfish_circuit(const TorusComplex &three);
// Arbitrary round order, each round a (direction, sign) pair.
Circuit ordered_circuit(const TorusComplex &three,
                        const std::vector<std::pair<int, int>> &rounds);

// Residual data-Z error of an ancilla X fault after the first `after`
// CZ gates of that ancilla.
BitVec ancilla_fault_effect(const Circuit &c, size_t ancilla, size_t after);

/*
 * Minimal number of circuit faults (data Z anywhere, ancilla X between
 * CZ layers) whose residual data error is an undetected logical, i.e. a
 * homologically nontrivial cycle. Measurement flips only touch the flux
 * record and never contribute to the residual, so they cannot appear in
 * a minimal configuration.
 */
DistanceReport circuit_distance(const Circuit &circuit, const TorusComplex &three,
                                const StabilizerCode &code, int w_max,
                                uint64_t max_nodes = 2000000000ULL);

/*
 * Surgery merge of two (2,2) code blocks along one HNF row, analyzed by
 * F2 linear algebra on the check matrices.
 */
struct SurgeryReport {
  size_t measured_products = 0;   // independent two-block logicals in the merged span
  bool diagonal_products_survive = false;  // gamma (x) gamma stays logical when merged
  size_t merged_k = 0;
  size_t two_block_k = 0;
};

SurgeryReport surgery_measure(const HermiteForm &lattice4, size_t row);

// Twice the hyperplane systole of the merged lattice across the cut.
Int boundary_distance(const HermiteForm &lattice4, size_t row);

}  // namespace latqec

#endif
