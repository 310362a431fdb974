#include "latqec/serialize.hpp"

#include <sstream>

namespace latqec {

Json lattice_to_json(const LatticeBasis &b) {
  return Json{{"dim", b.dim}, {"rows", b.rows}};
}

LatticeBasis lattice_from_json(const Json &j) {
  IntMat rows = j.at("rows").get<IntMat>();
  return LatticeBasis(rows);
}

LatticeBasis lattice_from_string(const std::string &s) {
  IntMat rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Int> r;
    std::stringstream rs(row);
    std::string tok;
    while (std::getline(rs, tok, ',')) r.push_back(std::stoll(tok));
    rows.push_back(std::move(r));
  }
  return LatticeBasis(rows);
}

Json hnf_to_json(const HermiteForm &h) {
  return Json{{"matrix", h.matrix}, {"det", h.det}};
}

Json complex_to_json(const ChainComplex &c) {
  Json boundaries = Json::array();
  for (size_t k = 1; k <= c.top(); k++) {
    Json entries = Json::array();
    for (size_t i = 0; i < c.degrees[k]; i++)
      for (size_t j = 0; j < c.degrees[k - 1]; j++)
        if (c.boundary[k].get(i, j)) entries.push_back({i, j});
    boundaries.push_back({{"degree", k}, {"entries", entries}});
  }
  return Json{{"degrees", c.degrees}, {"boundaries", boundaries}};
}

Json bitmat_to_json(const BitMat &m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); i++) {
    Json cols = Json::array();
    for (size_t j = 0; j < m.cols(); j++)
      if (m.get(i, j)) cols.push_back(j);
    rows.push_back(cols);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"support", rows}};
}

BitMat bitmat_from_json(const Json &j) {
  BitMat m(j.at("rows").get<size_t>(), j.at("cols").get<size_t>());
  const Json &sup = j.at("support");
  for (size_t i = 0; i < sup.size(); i++)
    for (const auto &c : sup[i]) m.set(i, c.get<size_t>(), true);
  return m;
}

Json code_to_json(const StabilizerCode &code) {
  Json j{{"n", code.n}, {"k", num_logical(code)}, {"checks", bitmat_to_json(code.checks)}};
  if (code.css) {
    j["cx"] = bitmat_to_json(code.cx);
    j["cz"] = bitmat_to_json(code.cz);
  }
  return j;
}

Json distance_report_to_json(const DistanceReport &r) {
  Json witnesses = Json::array();
  for (const auto &w : r.witnesses)
    witnesses.push_back({{"qubits", w.qubits}, {"logical_class", w.logical_class}});
  return Json{{"weight", r.weight},
              {"exhaustive_up_to", r.exhaustive_up_to},
              {"nodes", r.nodes},
              {"used_translation", r.used_translation},
              {"witnesses", witnesses}};
}

Json injection_sets_to_json(const InjectionSets &s) {
  return Json{{"u", s.u}, {"s_x", s.s_x}, {"s_y", s.s_y}, {"s_z", s.s_z}};
}

Json space_group_to_json(const SpaceGroupElement &g) {
  return Json{{"m2", g.m2}, {"shift2", g.shift2}};
}

std::string bitmat_to_alist(const BitMat &m) {
  size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<size_t>> row_sup(rows), col_sup(cols);
  for (size_t i = 0; i < rows; i++)
    for (size_t j = 0; j < cols; j++)
      if (m.get(i, j)) {
        row_sup[i].push_back(j + 1);
        col_sup[j].push_back(i + 1);
      }
  size_t maxr = 0, maxc = 0;
  for (const auto &r : row_sup) maxr = std::max(maxr, r.size());
  for (const auto &c : col_sup) maxc = std::max(maxc, c.size());

  std::ostringstream out;
  out << cols << " " << rows << "\n" << maxc << " " << maxr << "\n";
  for (size_t j = 0; j < cols; j++) out << col_sup[j].size() << (j + 1 < cols ? " " : "\n");
  for (size_t i = 0; i < rows; i++) out << row_sup[i].size() << (i + 1 < rows ? " " : "\n");
  for (size_t j = 0; j < cols; j++) {
    for (size_t t = 0; t < col_sup[j].size(); t++)
      out << col_sup[j][t] << (t + 1 < col_sup[j].size() ? " " : "");
    out << "\n";
  }
  for (size_t i = 0; i < rows; i++) {
    for (size_t t = 0; t < row_sup[i].size(); t++)
      out << row_sup[i][t] << (t + 1 < row_sup[i].size() ? " " : "");
    out << "\n";
  }
  return out.str();
}

BitMat bitmat_from_alist(const std::string &text) {
  std::istringstream in(text);
  size_t cols, rows, maxc, maxr;
  in >> cols >> rows >> maxc >> maxr;
  std::vector<size_t> colw(cols), roww(rows);
  for (auto &w : colw) in >> w;
  for (auto &w : roww) in >> w;
  BitMat m(rows, cols);
  for (size_t j = 0; j < cols; j++)
    for (size_t t = 0; t < colw[j]; t++) {
      size_t r;
      in >> r;
      m.set(r - 1, j, true);
    }
  return m;
}

}  // namespace latqec
