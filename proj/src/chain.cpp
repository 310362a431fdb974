#include "latqec/chain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace latqec {

void ChainComplex::verify_boundary() const {
  for (size_t k = 2; k < boundary.size(); k++) {
    BitMat prod = boundary[k] * boundary[k - 1];
    for (size_t i = 0; i < prod.rows(); i++)
      if (prod.row(i).any()) throw std::logic_error("chain complex: boundary^2 != 0");
  }
}

ChainComplex ChainComplex::dual() const {
  size_t t = top();
  ChainComplex d;
  d.degrees.resize(t + 1);
  d.boundary.resize(t + 1);
  for (size_t k = 0; k <= t; k++) d.degrees[k] = degrees[t - k];
  for (size_t k = 1; k <= t; k++) d.boundary[k] = boundary[t - k + 1].transpose();
  return d;
}

size_t ChainComplex::betti(size_t k) const {
  size_t rank_k = (k >= 1) ? boundary[k].rank() : 0;
  size_t rank_k1 = (k + 1 <= top()) ? boundary[k + 1].rank() : 0;
  return degrees[k] - rank_k - rank_k1;
}

namespace {

Int floordiv(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::vector<std::vector<std::vector<int>>> direction_subsets(size_t dim) {
  std::vector<std::vector<std::vector<int>>> by_deg(dim + 1);
  for (uint32_t mask = 0; mask < (1u << dim); mask++) {
    std::vector<int> s;
    for (size_t i = 0; i < dim; i++)
      if ((mask >> i) & 1) s.push_back((int)i);
    by_deg[s.size()].push_back(s);
  }
  for (auto &lst : by_deg) std::sort(lst.begin(), lst.end());
  return by_deg;
}

}  // namespace

std::vector<Int> TorusComplex::reduce(std::vector<Int> z) const {
  const IntMat &h = lat.matrix;
  for (size_t i = 0; i < dim; i++) {
    Int q = floordiv(z[i], h[i][i]);
    if (q != 0)
      for (size_t j = i; j < dim; j++) z[j] -= q * h[i][j];
  }
  return z;
}

size_t TorusComplex::vertex_index(const std::vector<Int> &p) const {
  size_t idx = 0;
  for (size_t i = 0; i < dim; i++) idx = idx * (size_t)lat.matrix[i][i] + (size_t)p[i];
  return idx;
}

std::vector<Int> TorusComplex::vertex_of(size_t index) const {
  std::vector<Int> p(dim);
  for (size_t i = dim; i-- > 0;) {
    p[i] = (Int)(index % (size_t)lat.matrix[i][i]);
    index /= (size_t)lat.matrix[i][i];
  }
  return p;
}

size_t TorusComplex::cell_index(size_t degree, const std::vector<Int> &p,
                                const std::vector<int> &dirs) const {
  const auto &lst = subsets[degree];
  size_t rank = std::lower_bound(lst.begin(), lst.end(), dirs) - lst.begin();
  return rank * (size_t)det + vertex_index(reduce(p));
}

std::pair<std::vector<Int>, std::vector<int>> TorusComplex::cell_of(size_t degree,
                                                                    size_t index) const {
  size_t rank = index / (size_t)det;
  return {vertex_of(index % (size_t)det), subsets[degree][rank]};
}

size_t TorusComplex::translate_cell(size_t degree, size_t index,
                                    const std::vector<Int> &t) const {
  auto [p, dirs] = cell_of(degree, index);
  for (size_t i = 0; i < dim; i++) p[i] += t[i];
  return cell_index(degree, p, dirs);
}

TorusComplex torus_complex(const LatticeBasis &basis) {
  TorusComplex tc;
  tc.lat = hnf(basis);
  tc.dim = basis.dim;
  tc.det = tc.lat.det;
  tc.subsets = direction_subsets(tc.dim);

  size_t d = tc.dim;
  tc.cc.degrees.resize(d + 1);
  tc.cc.boundary.resize(d + 1);
  for (size_t k = 0; k <= d; k++) tc.cc.degrees[k] = tc.subsets[k].size() * (size_t)tc.det;

  for (size_t k = 1; k <= d; k++) {
    BitMat b(tc.cc.degrees[k], tc.cc.degrees[k - 1]);
    for (size_t srank = 0; srank < tc.subsets[k].size(); srank++) {
      const auto &dirs = tc.subsets[k][srank];
      for (size_t v = 0; v < (size_t)tc.det; v++) {
        size_t row = srank * (size_t)tc.det + v;
        std::vector<Int> p = tc.vertex_of(v);
        for (int drop : dirs) {
          std::vector<int> sub;
          for (int x : dirs)
            if (x != drop) sub.push_back(x);
          // flip so coincident faces cancel over F2 (e.g. a length-1 circle)
          b.row(row).flip(tc.cell_index(k - 1, p, sub));
          std::vector<Int> q = p;
          q[(size_t)drop] += 1;
          b.row(row).flip(tc.cell_index(k - 1, q, sub));
        }
      }
    }
    tc.cc.boundary[k] = std::move(b);
  }
  tc.cc.verify_boundary();
  return tc;
}

Crystal cell_coordinates(const TorusComplex &c, size_t qubit_degree) {
  if (qubit_degree == 0 || qubit_degree >= c.dim)
    throw std::invalid_argument("cell_coordinates: qubit degree out of range");
  Crystal cr;
  cr.dim = c.dim;
  auto coords_for = [&](size_t deg) {
    std::vector<std::vector<Int>> out(c.cc.degrees[deg]);
    for (size_t i = 0; i < c.cc.degrees[deg]; i++) {
      auto [p, dirs] = c.cell_of(deg, i);
      std::vector<Int> x(c.dim);
      for (size_t j = 0; j < c.dim; j++) x[j] = 2 * p[j];
      for (int dir : dirs) x[(size_t)dir] += 1;
      out[i] = std::move(x);
    }
    return out;
  };
  cr.qubit2 = coords_for(qubit_degree);
  cr.xcheck2 = coords_for(qubit_degree - 1);
  cr.zcheck2 = coords_for(qubit_degree + 1);
  return cr;
}

bool is_complex_automorphism(const ChainComplex &c, const ComplexAutomorphism &a) {
  if (a.perm.size() != c.degrees.size()) return false;
  for (size_t k = 0; k < c.degrees.size(); k++) {
    if (a.perm[k].size() != c.degrees[k]) return false;
    std::vector<bool> seen(c.degrees[k], false);
    for (size_t i : a.perm[k]) {
      if (i >= c.degrees[k] || seen[i]) return false;
      seen[i] = true;
    }
  }
  for (size_t k = 1; k <= c.top(); k++)
    for (size_t i = 0; i < c.degrees[k]; i++)
      for (size_t j = 0; j < c.degrees[k - 1]; j++)
        if (c.boundary[k].get(i, j) != c.boundary[k].get(a.perm[k][i], a.perm[k - 1][j]))
          return false;
  return true;
}

ComplexAutomorphism translation_automorphism(const TorusComplex &c,
                                             const std::vector<Int> &t) {
  ComplexAutomorphism a;
  a.perm.resize(c.dim + 1);
  for (size_t k = 0; k <= c.dim; k++) {
    a.perm[k].resize(c.cc.degrees[k]);
    for (size_t i = 0; i < c.cc.degrees[k]; i++) a.perm[k][i] = c.translate_cell(k, i, t);
  }
  return a;
}

ChainComplex twisted_product(size_t circle_len, const ChainComplex &d,
                             const std::vector<std::array<ComplexAutomorphism, 2>> &twists) {
  size_t n = circle_len;
  if (n == 0) throw std::invalid_argument("twisted_product: empty circle");
  if (twists.size() != n)
    throw std::invalid_argument("twisted_product: need one twist pair per edge");
  for (const auto &tw : twists)
    for (const auto &a : tw)
      if (!is_complex_automorphism(d, a))
        throw std::invalid_argument("twisted_product: twist is not an automorphism");

  size_t t = d.top();
  ChainComplex out;
  out.degrees.resize(t + 2);
  out.boundary.resize(t + 2);
  // Degree k holds the (vertex x D_k) block, then the (edge x D_{k-1}) block.
  auto block0 = [&](size_t k, size_t i, size_t cell) { return i * d.degrees[k] + cell; };
  auto block1 = [&](size_t k, size_t i, size_t cell) {
    size_t off = (k <= t) ? n * d.degrees[k] : 0;
    return off + i * d.degrees[k - 1] + cell;
  };
  for (size_t k = 0; k <= t + 1; k++) {
    size_t c0 = (k <= t) ? n * d.degrees[k] : 0;
    size_t c1 = (k >= 1) ? n * d.degrees[k - 1] : 0;
    out.degrees[k] = c0 + c1;
  }

  for (size_t k = 1; k <= t + 1; k++) {
    BitMat b(out.degrees[k], out.degrees[k - 1]);
    if (k <= t) {
      for (size_t i = 0; i < n; i++)
        for (size_t cell = 0; cell < d.degrees[k]; cell++)
          for (size_t j = 0; j < d.degrees[k - 1]; j++)
            if (d.boundary[k].get(cell, j))
              b.row(block0(k, i, cell)).flip(block0(k - 1, i, j));
    }
    for (size_t i = 0; i < n; i++) {
      for (size_t cell = 0; cell < d.degrees[k - 1]; cell++) {
        size_t row = block1(k, i, cell);
        if (k >= 2)
          for (size_t j = 0; j < d.degrees[k - 2]; j++)
            if (d.boundary[k - 1].get(cell, j)) b.row(row).flip(block1(k - 1, i, j));
        // Endpoint terms, twisted.
        b.row(row).flip(block0(k - 1, i, twists[i][0].perm[k - 1][cell]));
        b.row(row).flip(block0(k - 1, (i + 1) % n, twists[i][1].perm[k - 1][cell]));
      }
    }
    out.boundary[k] = std::move(b);
  }
  out.verify_boundary();
  return out;
}

ChainComplex circle_product(size_t circle_len, const ChainComplex &d) {
  ComplexAutomorphism id;
  id.perm.resize(d.degrees.size());
  for (size_t k = 0; k < d.degrees.size(); k++) {
    id.perm[k].resize(d.degrees[k]);
    for (size_t i = 0; i < d.degrees[k]; i++) id.perm[k][i] = i;
  }
  std::vector<std::array<ComplexAutomorphism, 2>> twists(circle_len, {id, id});
  return twisted_product(circle_len, d, twists);
}

namespace {

using Coord = std::vector<Int>;
using CellKey = std::vector<Coord>;  // sorted reduced vertex list

const IntMat kD4Basis = {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {1, 1, 1, 1}};

/*
 * The 24-cell at the origin: vertices are the permutations of
 * (+-1,+-1,0,0); 96 edges between vertices sharing one signed coordinate;
 * 64+32 triangles; 8+16 octahedra given by three antipodal vertex pairs.
 */
struct Cell24 {
  std::vector<Coord> vertices;
  std::vector<std::array<Coord, 2>> edges;
  std::vector<std::array<Coord, 3>> triangles;
  std::vector<std::array<std::array<Coord, 2>, 3>> octahedra;
};

Coord axis4(size_t i, Int s) {
  Coord v(4, 0);
  v[i] = s;
  return v;
}

Coord add(const Coord &a, const Coord &b) {
  Coord c(a.size());
  for (size_t i = 0; i < a.size(); i++) c[i] = a[i] + b[i];
  return c;
}

const Cell24 &reference_cell24() {
  static const Cell24 cell = [] {
    Cell24 c;
    for (size_t i = 0; i < 4; i++)
      for (size_t j = i + 1; j < 4; j++)
        for (Int si : {1, -1})
          for (Int sj : {1, -1}) c.vertices.push_back(add(axis4(i, si), axis4(j, sj)));

    for (size_t a = 0; a < c.vertices.size(); a++)
      for (size_t b = a + 1; b < c.vertices.size(); b++) {
        int shared = 0, diff = 0;
        for (size_t i = 0; i < 4; i++) {
          if (c.vertices[a][i] && c.vertices[a][i] == c.vertices[b][i]) shared++;
          if (c.vertices[a][i] != c.vertices[b][i]) diff++;
        }
        if (shared == 1 && diff == 2) c.edges.push_back({c.vertices[a], c.vertices[b]});
      }

    // Triangles, first kind: coordinate i nonzero in all three vertices.
    for (size_t i = 0; i < 4; i++)
      for (Int s : {1, -1}) {
        std::vector<size_t> rest;
        for (size_t j = 0; j < 4; j++)
          if (j != i) rest.push_back(j);
        for (Int s0 : {1, -1})
          for (Int s1 : {1, -1})
            for (Int s2 : {1, -1})
              c.triangles.push_back({add(axis4(i, s), axis4(rest[0], s0)),
                                     add(axis4(i, s), axis4(rest[1], s1)),
                                     add(axis4(i, s), axis4(rest[2], s2))});
      }
    // Second kind: coordinate m zero in all three vertices.
    for (size_t m = 0; m < 4; m++) {
      std::vector<size_t> rest;
      for (size_t j = 0; j < 4; j++)
        if (j != m) rest.push_back(j);
      for (Int s0 : {1, -1})
        for (Int s1 : {1, -1})
          for (Int s2 : {1, -1})
            c.triangles.push_back({add(axis4(rest[0], s0), axis4(rest[1], s1)),
                                   add(axis4(rest[0], s0), axis4(rest[2], s2)),
                                   add(axis4(rest[1], s1), axis4(rest[2], s2))});
    }

    // Octahedra, first kind: coordinate i pinned to sign s.
    for (size_t i = 0; i < 4; i++)
      for (Int s : {1, -1}) {
        std::array<std::array<Coord, 2>, 3> pairs;
        size_t t = 0;
        for (size_t j = 0; j < 4; j++) {
          if (j == i) continue;
          pairs[t++] = {add(axis4(i, s), axis4(j, 1)), add(axis4(i, s), axis4(j, -1))};
        }
        c.octahedra.push_back(pairs);
      }
    // Second kind: one sign per coordinate; antipodal pairs sit on
    // complementary index pairs.
    for (Int s0 : {1, -1})
      for (Int s1 : {1, -1})
        for (Int s2 : {1, -1})
          for (Int s3 : {1, -1}) {
            std::array<Int, 4> s = {s0, s1, s2, s3};
            auto vert = [&](size_t i, size_t j) {
              return add(axis4(i, s[i]), axis4(j, s[j]));
            };
            c.octahedra.push_back({{
                {vert(0, 1), vert(2, 3)},
                {vert(0, 2), vert(1, 3)},
                {vert(0, 3), vert(1, 2)},
            }});
          }
    return c;
  }();
  return cell;
}

Coord hc_reduce(const HermiteForm &sub, Coord z) {
  for (size_t i = 0; i < 4; i++) {
    Int q = floordiv(z[i], sub.matrix[i][i]);
    if (q != 0)
      for (size_t j = i; j < 4; j++) z[j] -= q * sub.matrix[i][j];
  }
  return z;
}

/*
 * Canonical key of a cell's translation orbit. Reducing vertices
 * individually would merge distinct parallel cells in small quotients, so
 * the key is the lexicographically smallest (offset shape, reduced anchor)
 * over all anchor choices.
 */
CellKey hc_key(const HermiteForm &sub, const std::vector<Coord> &verts) {
  CellKey best;
  for (const Coord &anchor : verts) {
    CellKey cand;
    for (const Coord &v : verts) {
      Coord off(4);
      for (size_t i = 0; i < 4; i++) off[i] = v[i] - anchor[i];
      cand.push_back(off);
    }
    std::sort(cand.begin(), cand.end());
    cand.push_back(hc_reduce(sub, anchor));
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

struct HoneycombBuilder {
  HermiteForm sub;
  std::array<std::map<CellKey, size_t>, 4> index;
  std::array<std::vector<CellKey>, 4> cells;
  std::vector<std::vector<CellKey>> bnd1, bnd2, bnd3;

  CellKey key(const std::vector<Coord> &verts) const { return hc_key(sub, verts); }

  size_t intern(size_t deg, const CellKey &k) {
    auto [it, inserted] = index[deg].emplace(k, cells[deg].size());
    if (inserted) cells[deg].push_back(k);
    return it->second;
  }
};

bool in_d4(const Coord &v) {
  // Same-parity coordinates, i.e. integer combinations of the D4 basis.
  return (((v[0] ^ v[1]) | (v[0] ^ v[2]) | (v[0] ^ v[3])) & 1) == 0;
}

}  // namespace

HoneycombComplex honeycomb_24cell(const LatticeBasis &sublattice) {
  if (sublattice.dim != 4) throw std::invalid_argument("honeycomb: need a 4D sublattice");
  for (const auto &row : sublattice.rows)
    if (!in_d4(row)) throw std::invalid_argument("honeycomb: sublattice not contained in D4");

  HoneycombBuilder hb;
  hb.sub = hnf(sublattice);

  // Coset representatives of the D4 lattice inside the sublattice box.
  std::vector<Coord> centers;
  {
    std::set<Coord> seen;
    const IntMat &h = hb.sub.matrix;
    for (Int a = 0; a < h[0][0]; a++)
      for (Int b = 0; b < h[1][1]; b++)
        for (Int c = 0; c < h[2][2]; c++)
          for (Int d = 0; d < h[3][3]; d++) {
            Coord p = {a, b, c, d};
            if (!in_d4(p)) continue;
            Coord r = hc_reduce(hb.sub, p);
            if (seen.insert(r).second) centers.push_back(r);
          }
  }

  const Cell24 &ref = reference_cell24();
  HoneycombComplex out;
  out.sublattice = hb.sub;
  out.cc.degrees.assign(4, 0);
  out.cc.boundary.resize(4);

  for (const Coord &c : centers) {
    for (const auto &v : ref.vertices) hb.intern(0, hb.key({add(c, v)}));
    for (const auto &e : ref.edges) {
      CellKey k = hb.key({add(c, e[0]), add(c, e[1])});
      if (hb.intern(1, k) == hb.bnd1.size())
        hb.bnd1.push_back({hb.key({add(c, e[0])}), hb.key({add(c, e[1])})});
    }
    for (const auto &t : ref.triangles) {
      CellKey k = hb.key({add(c, t[0]), add(c, t[1]), add(c, t[2])});
      if (hb.intern(2, k) == hb.bnd2.size())
        hb.bnd2.push_back({hb.key({add(c, t[0]), add(c, t[1])}),
                           hb.key({add(c, t[0]), add(c, t[2])}),
                           hb.key({add(c, t[1]), add(c, t[2])})});
    }
    for (const auto &o : ref.octahedra) {
      std::vector<Coord> verts;
      for (const auto &pr : o)
        for (const auto &v : pr) verts.push_back(add(c, v));
      CellKey k = hb.key(verts);
      if (hb.intern(3, k) == hb.bnd3.size()) {
        // One face per choice of vertex from each antipodal pair.
        std::vector<CellKey> faces;
        for (int m = 0; m < 8; m++)
          faces.push_back(hb.key({add(c, o[0][m & 1]), add(c, o[1][(m >> 1) & 1]),
                                  add(c, o[2][(m >> 2) & 1])}));
        hb.bnd3.push_back(faces);
        std::array<std::array<Coord, 2>, 3> pr;
        for (size_t ax = 0; ax < 3; ax++) pr[ax] = {add(c, o[ax][0]), add(c, o[ax][1])};
        out.oct_axes.push_back(pr);
      }
    }
  }

  out.cells.resize(4);
  for (size_t deg = 0; deg < 4; deg++) {
    out.cc.degrees[deg] = hb.cells[deg].size();
    out.cells[deg] = hb.cells[deg];
  }
  auto fill = [&](size_t deg, const std::vector<std::vector<CellKey>> &bnd) {
    BitMat b(out.cc.degrees[deg], out.cc.degrees[deg - 1]);
    for (size_t i = 0; i < bnd.size(); i++)
      for (const auto &k : bnd[i]) b.row(i).flip(hb.index[deg - 1].at(k));
    out.cc.boundary[deg] = std::move(b);
  };
  fill(1, hb.bnd1);
  fill(2, hb.bnd2);
  fill(3, hb.bnd3);
  out.cc.verify_boundary();
  return out;
}

HoneycombComplex subdivide_octahedra(const HoneycombComplex &c,
                                     const std::vector<int> &apex_choice) {
  size_t n_oct = c.cc.degrees[3];
  std::vector<int> apex = apex_choice;
  if (apex.empty()) apex.assign(n_oct, 0);
  if (apex.size() != n_oct) throw std::invalid_argument("subdivide: one axis per octahedron");

  HoneycombComplex out;
  out.sublattice = c.sublattice;
  out.cc.degrees = c.cc.degrees;
  out.cc.boundary = c.cc.boundary;
  out.cells = c.cells;
  out.cells[3].clear();

  std::map<CellKey, size_t> tri_index, edge_index;
  for (size_t i = 0; i < c.cells[2].size(); i++) tri_index[c.cells[2][i]] = i;
  for (size_t i = 0; i < c.cells[1].size(); i++) edge_index[c.cells[1][i]] = i;

  size_t n_tri = c.cc.degrees[2];
  BitMat b2 = c.cc.boundary[2];
  BitMat b3(2 * n_oct, n_tri + n_oct);

  for (size_t o = 0; o < n_oct; o++) {
    if (apex[o] < 0 || apex[o] > 2) throw std::invalid_argument("subdivide: axis must be 0..2");
    const auto &pairs = c.oct_axes[o];
    size_t ax = (size_t)apex[o];
    std::array<Coord, 2> apexes = pairs[ax];
    // The base square alternates between the two remaining antipodal pairs.
    std::array<Coord, 4> base = {pairs[(ax + 1) % 3][0], pairs[(ax + 2) % 3][0],
                                 pairs[(ax + 1) % 3][1], pairs[(ax + 2) % 3][1]};
    size_t square = n_tri + o;
    out.cells[2].push_back(hc_key(c.sublattice, {base[0], base[1], base[2], base[3]}));
    BitVec sq_row(c.cc.degrees[1]);
    for (int e = 0; e < 4; e++)
      sq_row.flip(edge_index.at(hc_key(c.sublattice, {base[e], base[(e + 1) % 4]})));
    b2.append_row(sq_row);

    for (size_t side = 0; side < 2; side++) {
      size_t row = 2 * o + side;
      for (int e = 0; e < 4; e++)
        b3.row(row).flip(tri_index.at(
            hc_key(c.sublattice, {apexes[side], base[e], base[(e + 1) % 4]})));
      b3.row(row).flip(square);
      out.cells[3].push_back(
          hc_key(c.sublattice, {apexes[side], base[0], base[1], base[2], base[3]}));
    }
  }

  out.cc.degrees[2] = n_tri + n_oct;
  out.cc.degrees[3] = 2 * n_oct;
  out.cc.boundary[2] = std::move(b2);
  out.cc.boundary[3] = std::move(b3);
  out.cc.verify_boundary();
  return out;
}

}  // namespace latqec
