#include "gkm/faces.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gkm {

namespace {

Face face_from_darts(const GkmGraph& g, int rank, const std::set<int>& darts) {
  Face f;
  f.rank = rank;
  std::set<int> verts, edges;
  for (int d : darts) {
    verts.insert(g.dart_origin[d]);
    edges.insert(g.edge_of_dart(d));
  }
  f.vertices.assign(verts.begin(), verts.end());
  f.edges.assign(edges.begin(), edges.end());
  f.darts.assign(darts.begin(), darts.end());
  return f;
}

Face vertex_face(const GkmGraph&, int v) {
  Face f;
  f.rank = 0;
  f.vertices = {v};
  return f;
}

/// Closes a seed dart set under the connection; returns nullopt when some
/// vertex accumulates more than `i` darts.
std::optional<std::set<int>> close_seed(const GkmGraph& g, int i, std::vector<int> seed) {
  std::set<int> darts;
  std::vector<std::set<int>> at_vertex(g.num_vertices());
  auto add = [&](int d) {
    if (darts.count(d)) return true;
    darts.insert(d);
    darts.insert(g.dart_opp[d]);
    at_vertex[g.dart_origin[d]].insert(d);
    at_vertex[g.head(d)].insert(g.dart_opp[d]);
    return at_vertex[g.dart_origin[d]].size() <= static_cast<std::size_t>(i) &&
           at_vertex[g.head(d)].size() <= static_cast<std::size_t>(i);
  };
  for (int d : seed)
    if (!add(d)) return std::nullopt;
  bool changed = true;
  while (changed) {
    changed = false;
    // transport every in-face dart along every in-face dart at its origin
    std::vector<int> snapshot(darts.begin(), darts.end());
    for (int along : snapshot)
      for (int s : std::vector<int>(at_vertex[g.dart_origin[along]].begin(),
                                    at_vertex[g.dart_origin[along]].end())) {
        int img = g.transport(along, s);
        if (!darts.count(img)) {
          if (!add(img)) return std::nullopt;
          changed = true;
        }
      }
  }
  return darts;
}

}  // namespace

std::vector<Face> enumerate_faces(const GkmGraph& g, int i) {
  if (i < 0 || i > g.valence) throw std::invalid_argument("enumerate_faces: rank out of range");
  std::vector<Face> out;
  if (i == 0) {
    for (int v = 0; v < g.num_vertices(); ++v) out.push_back(vertex_face(g, v));
    return out;
  }
  std::set<Face> seen;
  for (int v = 0; v < g.num_vertices(); ++v) {
    // all i-subsets of the star at v
    std::vector<int> pick(i);
    auto recurse = [&](auto&& self, int from, int depth) -> void {
      if (depth == i) {
        auto closed = close_seed(g, i, pick);
        if (closed) seen.insert(face_from_darts(g, i, *closed));
        return;
      }
      for (std::size_t j = from; j < g.star[v].size(); ++j) {
        pick[depth] = g.star[v][j];
        self(self, j + 1, depth + 1);
      }
    };
    recurse(recurse, 0, 0);
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

bool FacePoset::leq(int f, int h) const {
  const Face& a = faces[f];
  const Face& b = faces[h];
  return std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(),
                       a.vertices.end()) &&
         std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end());
}

int FacePoset::index_of(const Face& f) const {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i] == f) return static_cast<int>(i);
  return -1;
}

std::vector<int> FacePoset::rank_profile() const {
  std::vector<int> out;
  for (const auto& grp : by_rank) out.push_back(static_cast<int>(grp.size()));
  return out;
}

int FacePoset::top() const { return by_rank.back().empty() ? -1 : by_rank.back().front(); }

FacePoset face_poset(const GkmGraph& g) {
  FacePoset poset;
  poset.g = &g;
  poset.by_rank.resize(g.valence + 1);
  for (int i = 0; i <= g.valence; ++i) {
    for (Face& f : enumerate_faces(g, i)) {
      poset.by_rank[i].push_back(static_cast<int>(poset.faces.size()));
      poset.faces.push_back(std::move(f));
    }
  }
  for (int i = 0; i + 1 <= g.valence; ++i)
    for (int lo : poset.by_rank[i])
      for (int hi : poset.by_rank[i + 1])
        if (poset.leq(lo, hi)) poset.covers.emplace_back(lo, hi);
  return poset;
}

namespace {

/// Edges strictly between a vertex face and a 2-face, with multiplicity taken
/// from the covering list (a corrupted list with doubled pairs is detectable).
std::vector<int> middle_edges(const FacePoset& poset, int v_face, int two_face) {
  std::vector<int> out;
  for (const auto& a : poset.covers) {
    if (a.first != v_face) continue;
    for (const auto& b : poset.covers)
      if (b.first == a.second && b.second == two_face) out.push_back(a.second);
  }
  return out;
}

}  // namespace

bool check_regular_cw(const FacePoset& poset) {
  if (poset.by_rank.size() < 3) return true;
  for (int f2 : poset.by_rank[2]) {
    const Face& f = poset.faces[f2];
    // boundary is a simple cycle: connected (by construction) and 2-regular,
    // so vertex and edge counts must agree
    if (f.vertices.size() != f.edges.size()) return false;
    for (int f0 : poset.by_rank[0])
      if (poset.leq(f0, f2) && middle_edges(poset, f0, f2).size() != 2) return false;
  }
  return true;
}

SignAssignment solve_signs(const FacePoset& poset, bool alternate) {
  int max_rank = std::min<int>(2, static_cast<int>(poset.by_rank.size()) - 1);
  // one variable per distinct covering pair within ranks <= 2; a pair listed
  // twice reuses its variable, so doubled pairs cancel mod 2
  std::map<std::pair<int, int>, int> var_of;
  std::vector<std::pair<int, int>> vars;
  for (const auto& c : poset.covers) {
    int rank_hi = poset.faces[c.second].rank;
    if (rank_hi > max_rank || var_of.count(c)) continue;
    var_of[c] = static_cast<int>(vars.size());
    vars.push_back(c);
  }
  const int n = static_cast<int>(vars.size());
  std::vector<std::vector<uint8_t>> rows;  // each row: n coefficients + rhs
  auto new_row = [&]() -> std::vector<uint8_t>& {
    rows.emplace_back(n + 1, 0);
    return rows.back();
  };
  // endpoints of every edge face get opposite signs
  if (max_rank >= 1)
    for (int f1 : poset.by_rank[1]) {
      auto& row = new_row();
      for (const auto& c : poset.covers)
        if (c.second == f1 && var_of.count(c)) row[var_of[c]] ^= 1;
      row[n] = 1;
    }
  // diamond condition per vertex-under-2-face interval
  if (max_rank >= 2)
    for (int f2 : poset.by_rank[2])
      for (int f0 : poset.by_rank[0]) {
        if (!poset.leq(f0, f2)) continue;
        auto middles = middle_edges(poset, f0, f2);
        if (middles.empty()) continue;
        auto& row = new_row();
        for (int e_face : middles) {
          row[var_of.at({f0, e_face})] ^= 1;
          row[var_of.at({e_face, f2})] ^= 1;
        }
        row[n] = 1;
      }
  // GF(2) elimination
  std::vector<int> pivot_col(rows.size(), -1);
  int r = 0;
  for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != r && rows[i][col])
        for (int j = col; j <= n; ++j) rows[i][j] ^= rows[r][j];
    pivot_col[r] = col;
    ++r;
  }
  for (int i = r; i < static_cast<int>(rows.size()); ++i)
    if (rows[i][n]) throw std::runtime_error("no sign assignment exists");

  std::vector<uint8_t> x(n, 0);
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;
  if (alternate) {
    // flip the first free variable; a kernel vector keeps the system satisfied
    for (int col = 0; col < n; ++col)
      if (!is_pivot[col]) {
        x[col] = 1;
        break;
      }
  }
  for (int i = r - 1; i >= 0; --i) {
    uint8_t val = rows[i][n];
    for (int j = pivot_col[i] + 1; j < n; ++j) val ^= rows[i][j] & x[j];
    x[pivot_col[i]] = val;
  }
  SignAssignment sa;
  for (int vi = 0; vi < n; ++vi) sa.sign[vars[vi]] = x[vi] ? -1 : 1;
  return sa;
}

FaceAnnihilator face_ideal(const GkmGraph& g, const Face& f, CoeffMode mode) {
  FaceAnnihilator out;
  std::vector<IntVec> rows;
  for (int e : f.edges) {
    IntVec lab = normalized_sign_rep(g.label[g.canonical_dart(e)]);
    out.generators.push_back(lab);
    rows.push_back(lab);
  }
  if (rows.empty()) {
    // a vertex: annihilator is the full lattice
    IntMatrix id = IntMatrix::identity(g.rank);
    for (int i = 0; i < g.rank; ++i) out.annihilator.push_back(id.row(i));
    return out;
  }
  IntMatrix m = from_rows(rows, g.rank);
  IntMatrix ker = kernel_lattice_basis(m);
  for (std::size_t i = 0; i < ker.rows; ++i) out.annihilator.push_back(ker.row(i));
  out.saturated = span_is_saturated(m);
  if (mode == CoeffMode::integer && !out.saturated)
    throw std::runtime_error("face label span is not saturated");
  return out;
}

}  // namespace gkm
