#include "latqec/injection.hpp"
#include "latqec/protocols.hpp"
#include "latqec/serialize.hpp"
#include "latqec/symmetry.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>

using namespace latqec;

namespace {

constexpr int kExitBudget = 2;
constexpr int kExitMismatch = 3;

LatticeBasis load_lattice(const std::string &inline_rows, const std::string &file) {
  if (!inline_rows.empty()) return lattice_from_string(inline_rows);
  if (file.empty()) throw CLI::ValidationError("--lattice or --lattice-file is required");
  std::ifstream in(file);
  if (!in) throw CLI::ValidationError("cannot open " + file);
  Json j;
  in >> j;
  return lattice_from_json(j);
}

void emit(const Json &j, const std::string &format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

int run_search(size_t dim, Int systole, Int slices, uint64_t budget, int threads,
               const std::string &format) {
  SearchBudget sb;
  sb.max_nodes = budget;
  sb.threads = threads;
  SearchResult res = search_min_det(dim, systole, slices, sb);
  double ratio = (double)res.det;
  for (size_t i = 0; i < dim; i++) ratio /= (double)systole;

  if (format == "csv") {
    std::cout << "systole,det,ratio\n" << systole << "," << res.det << "," << ratio << "\n";
    return 0;
  }
  Json witnesses = Json::array();
  for (size_t i = 0; i < res.witnesses.size() && i < 16; i++)
    witnesses.push_back(hnf_to_json(res.witnesses[i]));
  Json out{{"schema", "latqec.search.v1"},
           {"dim", dim},
           {"systole", systole},
           {"min_slices", slices},
           {"det", res.det},
           {"ratio", ratio},
           {"witness_count", res.witnesses.size()},
           {"witnesses", witnesses},
           {"nodes", res.nodes}};
  if (format == "text") {
    std::cout << "sys_1,1 = " << systole << "  det = " << res.det << "  ratio = " << ratio
              << "  (" << res.witnesses.size() << " witnesses)\n";
    for (size_t i = 0; i < res.witnesses.size() && i < 4; i++) {
      for (const auto &row : res.witnesses[i].matrix) {
        for (Int x : row) std::cout << x << " ";
        std::cout << "\n";
      }
      std::cout << "\n";
    }
  } else {
    emit(out, format);
  }
  return 0;
}

int run_tables(const std::string &which, bool long_run, uint64_t budget, int threads) {
  struct Row {
    size_t dim;
    Int systole, slices, expect;
    bool gated;
  };
  std::vector<Row> rows;
  bool shallow = which == "shallow";
  if (which == "1")
    rows = {{3, 2, 1, 2, false},  {3, 3, 1, 7, false},  {3, 4, 1, 12, false},
            {3, 5, 1, 27, false}, {3, 6, 1, 38, false}, {3, 7, 1, 70, true}};
  else if (which == "2")
    rows = {{3, 2, 2, 4, false},  {3, 3, 2, 10, false}, {3, 4, 2, 16, false},
            {3, 5, 2, 30, false}, {3, 6, 2, 44, false}, {3, 7, 2, 72, true}};
  else if (which == "3")
    rows = {{4, 2, 1, 2, false}, {4, 3, 1, 9, false}, {4, 4, 1, 16, false}, {4, 5, 1, 45, true}};
  else if (which == "4")
    rows = {{4, 3, 2, 14, false}, {4, 4, 2, 24, false}, {4, 5, 2, 54, true}};
  else if (!shallow)
    throw CLI::ValidationError("tables: which must be 1, 2, 3, 4 or shallow");

  bool all_ok = true;
  if (!shallow) {
    std::cout << "sys  det  expected  status\n";
    for (const Row &r : rows) {
      if (r.gated && !long_run) {
        std::cout << r.systole << "    -    " << r.expect << "        skipped (--long)\n";
        continue;
      }
      SearchBudget sb;
      sb.max_nodes = budget;
      sb.threads = threads;
      SearchResult res = search_min_det(r.dim, r.systole, r.slices, sb);
      bool ok = res.det == r.expect;
      all_ok &= ok;
      std::cout << r.systole << "    " << res.det << "    " << r.expect << "        "
                << (ok ? "ok" : "MISMATCH") << "\n";
    }
  } else {
    // Effective Bell distances of the shallow sliceable instances.
    struct SRow {
      IntMat m;
      Int d;
      bool gated;
    };
    std::vector<SRow> srows = {{{{2, 0, 4}, {0, 1, 3}, {0, 0, 5}}, 3, false},
                               {{{2, 0, 12}, {0, 1, 8}, {0, 0, 13}}, 5, true}};
    std::cout << "effective_d  found  status\n";
    for (const SRow &r : srows) {
      if (r.gated && !long_run) {
        std::cout << r.d << "            -      skipped (--long)\n";
        continue;
      }
      EffectiveDistanceReport rep = effective_distance_bell(LatticeBasis(r.m), 2 * r.d, budget);
      bool ok = rep.min_cost2 == 2 * r.d && (Int)rep.sharp.flux.size() == 2 * r.d;
      all_ok &= ok;
      std::cout << r.d << "            " << rep.min_cost2 / 2.0 << "    "
                << (ok ? "ok" : "MISMATCH") << "\n";
    }
  }
  return all_ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"lattice toric code toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string lattice_arg, lattice_file, format = "text";
  uint64_t budget = 400000000ULL;
  int threads = 0;
  uint64_t seed = 1;
  bool long_run = false;

  app.add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--budget", budget, "node budget for searches");
  app.add_option("--threads", threads, "0 = all cores");
  app.add_option("--seed", seed, "rng seed for simulations");
  app.add_flag("--long", long_run, "run the long gated computations");

  auto add_lattice_opts = [&](CLI::App *cmd) {
    cmd->add_option("--lattice", lattice_arg, "inline rows, e.g. \"1,0,4;0,1,5;0,0,7\"");
    cmd->add_option("--lattice-file", lattice_file, "json file {dim, rows}");
  };

  auto *search = app.add_subcommand("search", "minimum determinant for a target systole");
  size_t dim = 3;
  Int systole = 3, slices = 1;
  search->add_option("--dim", dim)->check(CLI::Range(2, 4));
  search->add_option("--systole", systole)->required();
  search->add_option("--slices", slices, "minimum n_slice");

  auto *distance = app.add_subcommand("distance", "minimum logical operator weight");
  size_t qdeg = 1;
  int w_max = 4;
  std::string side = "z";
  bool translate = false, reps22 = false;
  add_lattice_opts(distance);
  distance->add_option("--degree", qdeg, "qubit cell dimension");
  distance->add_option("--side", side)->check(CLI::IsMember({"x", "z"}));
  distance->add_option("--w-max", w_max);
  distance->add_flag("--translate", translate, "anchor the first error on one vertex");
  distance->add_flag("--reps-22", reps22, "plaquette-sum representatives (odd det 4D)");

  auto *slice = app.add_subcommand("slice", "simulate the Bell/GHZ slicing protocol");
  add_lattice_opts(slice);

  auto *inject = app.add_subcommand("inject", "state injection sets for a toric code");
  add_lattice_opts(inject);
  size_t inj_deg = 1;
  size_t trials = 0;
  inject->add_option("--degree", inj_deg);
  inject->add_option("--trials", trials, "verification round trips");

  auto *surgery = app.add_subcommand("surgery", "merge two (2,2) blocks along an HNF row");
  add_lattice_opts(surgery);
  size_t row = 3;
  surgery->add_option("--row", row)->check(CLI::Range(0, 3));

  auto *symmetry = app.add_subcommand("symmetry", "crystalline gates and their logical group");
  add_lattice_opts(symmetry);
  size_t sym_deg = 2;
  symmetry->add_option("--degree", sym_deg);

  auto *starfish = app.add_subcommand("starfish", "syndrome circuit fault distance");
  add_lattice_opts(starfish);
  int sf_wmax = 3;
  std::string order = "starfish";
  starfish->add_option("--w-max", sf_wmax);
  starfish->add_option("--order", order)->check(CLI::IsMember({"starfish", "interleaved"}));

  auto *tables = app.add_subcommand("tables", "reproduce a published table with a pass/fail diff");
  std::string which;
  tables->add_option("which", which)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (search->parsed()) return run_search(dim, systole, slices, budget, threads, format);

    if (distance->parsed()) {
      TorusComplex geom = torus_complex(load_lattice(lattice_arg, lattice_file));
      StabilizerCode code = css_from_complex(geom.cc, qdeg);
      DistanceOptions opt;
      opt.w_max = w_max;
      opt.max_nodes = budget;
      opt.use_translation = translate;
      opt.orbit_det = geom.det;
      if (reps22) opt.reps = logical_representatives_22(code, geom);
      auto t0 = std::chrono::steady_clock::now();
      DistanceReport rep =
          min_weight_logical(code, side == "z" ? PauliSide::Z : PauliSide::X, opt);
      auto t1 = std::chrono::steady_clock::now();
      Json out = distance_report_to_json(rep);
      out["schema"] = "latqec.distance.v1";
      out["n"] = code.n;
      out["k"] = num_logical(code);
      out["seconds"] = std::chrono::duration<double>(t1 - t0).count();
      emit(out, format == "text" ? "json" : format);
      return 0;
    }

    if (slice->parsed()) {
      std::mt19937_64 rng(seed);
      SliceProtocolResult res = slice_protocol(load_lattice(lattice_arg, lattice_file), rng);
      Json gens = Json::array();
      for (size_t i = 0; i < res.logical_group.rows(); i++) {
        std::string lam;
        for (size_t j = 0; j < res.logical_group.cols(); j++)
          lam += res.logical_group.get(i, j) ? '1' : '0';
        gens.push_back({{"lambda", lam}, {"sign", res.signs[i]}});
      }
      Json out{{"schema", "latqec.slice.v1"},
               {"n_slice", res.structure.n_slice},
               {"slice_qubits", res.structure.slice_code.n},
               {"logical_group", gens},
               {"plaquette_outcomes", res.plaquette_outcomes}};
      emit(out, format == "text" ? "json" : format);
      return 0;
    }

    if (inject->parsed()) {
      StabilizerCode code =
          css_from_complex(torus_complex(load_lattice(lattice_arg, lattice_file)).cc, inj_deg);
      InjectionSets sets = css_injection_sets(code);
      std::string bases = unencoding_bases(code, sets);
      std::mt19937_64 rng(seed);
      size_t ok = 0;
      for (size_t t = 0; t < trials; t++)
        ok += injection_round_trip(code, sets, rng) == sets.u.size();
      Json out = injection_sets_to_json(sets);
      out["schema"] = "latqec.inject.v1";
      out["preparation"] = bases;
      if (trials) out["round_trips_ok"] = ok;
      emit(out, format == "text" ? "json" : format);
      if (format == "text")
        std::cout << "prepare: " << bases << "  (U holds the input state)\n";
      return 0;
    }

    if (surgery->parsed()) {
      HermiteForm h = hnf(load_lattice(lattice_arg, lattice_file));
      SurgeryReport rep = surgery_measure(h, row);
      Json out{{"schema", "latqec.surgery.v1"},
               {"row", row},
               {"measured_products", rep.measured_products},
               {"diagonal_products_survive", rep.diagonal_products_survive},
               {"merged_k", rep.merged_k},
               {"two_block_k", rep.two_block_k},
               {"boundary_distance", boundary_distance(h, row)}};
      emit(out, format == "text" ? "json" : format);
      return 0;
    }

    if (symmetry->parsed()) {
      LatticeBasis basis = load_lattice(lattice_arg, lattice_file);
      TorusComplex geom = torus_complex(basis);
      StabilizerCode code = css_from_complex(geom.cc, sym_deg);
      Crystal crystal = cell_coordinates(geom, sym_deg);
      auto autos = lattice_automorphisms(basis);
      LogicalBasis l = logical_basis(code);
      auto same =
          find_space_group(crystal, geom.lat, basis, autos, code, MappingRule::SameType);
      auto duals =
          find_space_group(crystal, geom.lat, basis, autos, code, MappingRule::SwapXZ);

      std::set<std::string> perm_actions;
      std::vector<SignedGate> gens;
      std::set<std::string> seen;
      auto add = [&](const SignedGate &g) {
        if (seen.insert(g.m.str() + g.sigma.str()).second) gens.push_back(g);
      };
      for (const auto &g : same) {
        SignedGate sg =
            signed_action_permutation(code, l, qubit_permutation(crystal, geom.lat, g));
        perm_actions.insert(sg.m.str() + sg.sigma.str());
        add(sg);
      }
      size_t n_s = 0;
      for (const auto &g : duals) {
        ZXDuality d = zx_duality(code, qubit_permutation(crystal, geom.lat, g));
        add(signed_action_hadamard(code, l, d));
        if (d.involutive) {
          add(signed_action_phase(code, l, d));
          n_s++;
        }
      }
      std::vector<BitMat> unsigned_gens;
      std::set<std::string> useen;
      for (const auto &g : gens)
        if (useen.insert(g.m.str()).second) unsigned_gens.push_back(g.m);
      uint64_t sympl = group_order(unsigned_gens);
      Json out{{"schema", "latqec.symmetry.v1"},
               {"automorphisms", autos.size()},
               {"space_group_same_type", same.size()},
               {"space_group_dualities", duals.size()},
               {"phase_type_gates", n_s},
               {"distinct_permutation_actions", perm_actions.size()},
               {"logical_group_order_mod_pauli", sympl}};
      if (long_run) {
        uint64_t signed_order = signed_group_order(gens);
        uint64_t kernel = signed_order / sympl;
        BitMat kspan = signed_pauli_kernel(gens, kernel);
        size_t k = l.k;
        size_t pure_x = 0;
        for (uint32_t mask = 0; mask < (1u << kspan.rows()); mask++) {
          BitVec v(2 * k);
          for (size_t i = 0; i < kspan.rows(); i++)
            if ((mask >> i) & 1) v ^= kspan.row(i);
          bool zpart = false;
          for (size_t i = 0; i < k; i++) zpart |= v.get(k + i);
          pure_x += !zpart;
        }
        out["logical_group_order_signed"] = signed_order;
        out["logical_group_order_mod_x_frame"] = signed_order / pure_x;
      }
      emit(out, format == "text" ? "json" : format);
      return 0;
    }

    if (starfish->parsed()) {
      TorusComplex geom = torus_complex(load_lattice(lattice_arg, lattice_file));
      StabilizerCode code = css_from_complex(geom.cc, 1);
      Circuit c = order == "starfish"
                      ? starfish_circuit(geom)
                      : ordered_circuit(geom,
                                        {{0, 1}, {1, 1}, {2, 1}, {0, -1}, {1, -1}, {2, -1}});
      DistanceReport rep = circuit_distance(c, geom, code, sf_wmax, budget);
      Json out{{"schema", "latqec.starfish.v1"},
               {"order", order},
               {"fault_distance", rep.weight},
               {"exhaustive_up_to", rep.exhaustive_up_to},
               {"nodes", rep.nodes}};
      emit(out, format == "text" ? "json" : format);
      return 0;
    }

    if (tables->parsed()) return run_tables(which, long_run, budget, threads);
  } catch (const BudgetExceeded &) {
    std::cerr << "error: search budget exceeded (incomplete)\n";
    return kExitBudget;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
