#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latqec/injection.hpp"
#include "latqec/protocols.hpp"
#include "latqec/symmetry.hpp"

#include <random>

namespace py = pybind11;
using namespace latqec;

namespace {

std::vector<std::vector<int>> bitmat_rows(const BitMat &m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
  for (size_t i = 0; i < m.rows(); i++)
    for (size_t j = 0; j < m.cols(); j++) out[i][j] = m.get(i, j);
  return out;
}

StabilizerCode code_from_lattice(const IntMat &rows, size_t degree) {
  return css_from_complex(torus_complex(LatticeBasis(rows)).cc, degree);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "lattice toric code toolkit";

  m.def(
      "hnf",
      [](const IntMat &rows) {
        HermiteForm h = hnf(LatticeBasis(rows));
        return py::make_tuple(h.matrix, h.det);
      },
      py::arg("rows"), "Hermite normal form and determinant of an integral basis");

  m.def(
      "l1_systole",
      [](const IntMat &rows) { return l1_systole(LatticeBasis(rows)); }, py::arg("rows"),
      "Minimum l1 norm of a nonzero lattice vector");

  m.def(
      "n_slice", [](const IntMat &rows) { return n_slice(hnf(LatticeBasis(rows))); },
      py::arg("rows"));

  m.def(
      "search_min_det",
      [](size_t dim, Int systole, Int min_slices) {
        SearchResult r = search_min_det(dim, systole, min_slices);
        std::vector<IntMat> wit;
        for (const auto &h : r.witnesses) wit.push_back(h.matrix);
        return py::make_tuple(r.det, wit);
      },
      py::arg("dim"), py::arg("systole"), py::arg("min_slices") = 1,
      "Minimum determinant with the target l1 systole, with every witness HNF");

  m.def("hadamard_lattice", [](int t) { return hadamard_lattice(t).rows; }, py::arg("t"));

  m.def(
      "lattice_automorphism_count",
      [](const IntMat &rows) { return lattice_automorphisms(LatticeBasis(rows)).size(); },
      py::arg("rows"));

  m.def(
      "code_parameters",
      [](const IntMat &rows, size_t degree) {
        StabilizerCode c = code_from_lattice(rows, degree);
        return py::make_tuple(c.n, num_logical(c));
      },
      py::arg("rows"), py::arg("degree") = 1, "(n, k) of the toric code on the lattice");

  m.def(
      "check_matrices",
      [](const IntMat &rows, size_t degree) {
        StabilizerCode c = code_from_lattice(rows, degree);
        return py::make_tuple(bitmat_rows(c.cx), bitmat_rows(c.cz));
      },
      py::arg("rows"), py::arg("degree") = 1);

  m.def(
      "min_weight_logical",
      [](const IntMat &rows, size_t degree, const std::string &side, int w_max,
         bool translate) {
        TorusComplex geom = torus_complex(LatticeBasis(rows));
        StabilizerCode c = css_from_complex(geom.cc, degree);
        DistanceOptions opt;
        opt.w_max = w_max;
        opt.use_translation = translate;
        opt.orbit_det = geom.det;
        DistanceReport rep =
            min_weight_logical(c, side == "z" ? PauliSide::Z : PauliSide::X, opt);
        std::vector<std::vector<uint32_t>> wits;
        for (const auto &w : rep.witnesses) wits.push_back(w.qubits);
        return py::make_tuple(rep.weight, wits);
      },
      py::arg("rows"), py::arg("degree"), py::arg("side"), py::arg("w_max"),
      py::arg("translate") = false,
      "Exact minimum logical weight, -1 if above w_max; witnesses as qubit lists");

  m.def(
      "slice_logical_group",
      [](const IntMat &rows, uint64_t seed) {
        std::mt19937_64 rng(seed);
        SliceProtocolResult r = slice_protocol(LatticeBasis(rows), rng);
        return py::make_tuple(r.structure.n_slice, bitmat_rows(r.logical_group), r.signs);
      },
      py::arg("rows"), py::arg("seed") = 1,
      "Simulate the slicing protocol; lambda vectors over the slice generators");

  m.def(
      "effective_distance_bell",
      [](const IntMat &rows, Int max_cost2) {
        EffectiveDistanceReport r = effective_distance_bell(LatticeBasis(rows), max_cost2);
        return py::make_tuple(r.min_cost2, r.sharp.flux.size());
      },
      py::arg("rows"), py::arg("max_cost2"));

  m.def(
      "starfish_distance",
      [](const IntMat &rows, int w_max) {
        TorusComplex geom = torus_complex(LatticeBasis(rows));
        StabilizerCode code = css_from_complex(geom.cc, 1);
        return circuit_distance(starfish_circuit(geom), geom, code, w_max).weight;
      },
      py::arg("rows"), py::arg("w_max"));

  m.def(
      "surgery_measured_products",
      [](const IntMat &rows, size_t row) {
        SurgeryReport r = surgery_measure(hnf(LatticeBasis(rows)), row);
        return py::make_tuple(r.measured_products, r.merged_k, r.two_block_k);
      },
      py::arg("rows"), py::arg("row"));

  m.def(
      "boundary_distance",
      [](const IntMat &rows, size_t row) {
        return boundary_distance(hnf(LatticeBasis(rows)), row);
      },
      py::arg("rows"), py::arg("row"));

  m.def(
      "injection_sets",
      [](const IntMat &rows, size_t degree) {
        StabilizerCode c = code_from_lattice(rows, degree);
        InjectionSets s = css_injection_sets(c);
        return py::make_tuple(s.u, s.s_x, s.s_z);
      },
      py::arg("rows"), py::arg("degree") = 1, "(U, S_X, S_Z) for a CSS toric code");

  m.def(
      "injection_round_trips",
      [](const IntMat &rows, size_t degree, size_t trials, uint64_t seed) {
        StabilizerCode c = code_from_lattice(rows, degree);
        InjectionSets s = css_injection_sets(c);
        std::mt19937_64 rng(seed);
        size_t ok = 0;
        for (size_t t = 0; t < trials; t++)
          ok += injection_round_trip(c, s, rng) == s.u.size();
        return ok;
      },
      py::arg("rows"), py::arg("degree"), py::arg("trials"), py::arg("seed") = 1);

  m.def(
      "crystalline_group_order",
      [](const IntMat &rows, size_t degree, bool signed_order) {
        LatticeBasis basis(rows);
        TorusComplex geom = torus_complex(basis);
        StabilizerCode code = css_from_complex(geom.cc, degree);
        Crystal crystal = cell_coordinates(geom, degree);
        auto autos = lattice_automorphisms(basis);
        LogicalBasis l = logical_basis(code);
        auto same =
            find_space_group(crystal, geom.lat, basis, autos, code, MappingRule::SameType);
        auto duals =
            find_space_group(crystal, geom.lat, basis, autos, code, MappingRule::SwapXZ);
        std::vector<SignedGate> gens;
        for (const auto &g : same)
          gens.push_back(
              signed_action_permutation(code, l, qubit_permutation(crystal, geom.lat, g)));
        for (const auto &g : duals) {
          ZXDuality d = zx_duality(code, qubit_permutation(crystal, geom.lat, g));
          gens.push_back(signed_action_hadamard(code, l, d));
          if (d.involutive) gens.push_back(signed_action_phase(code, l, d));
        }
        if (signed_order) return signed_group_order(gens);
        std::vector<BitMat> ms;
        for (const auto &g : gens) ms.push_back(g.m);
        return group_order(ms);
      },
      py::arg("rows"), py::arg("degree") = 2, py::arg("signed") = false);

  m.def(
      "honeycomb_cell_counts",
      [](const IntMat &rows) {
        HoneycombComplex h = honeycomb_24cell(LatticeBasis(rows));
        return h.cc.degrees;
      },
      py::arg("rows"), "per-degree cell counts of the 24-cell honeycomb quotient");
}
