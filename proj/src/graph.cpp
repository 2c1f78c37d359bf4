#include "gkm/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gkm {

int GkmGraph::star_index(int v, int d) const {
  const auto& s = star[v];
  auto it = std::find(s.begin(), s.end(), d);
  if (it == s.end()) throw std::logic_error("star_index: dart not at vertex");
  return static_cast<int>(it - s.begin());
}

int GkmGraph::transport(int along, int d) const {
  if (!has_connection()) throw std::logic_error("transport: no connection");
  return conn[along][star_index(dart_origin[along], d)];
}

GkmGraph make_graph(int rank, bool is_signed, std::vector<std::string> vertices,
                    std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("make_graph: duplicate vertex name");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);

  // canonical edge order: (min end, max end, label of the canonical dart)
  struct CanonEdge {
    int u, v;        // u < v
    IntVec lab;      // label on dart u -> v (unsigned: normalized)
  };
  std::vector<CanonEdge> ce;
  for (auto& e : edges) {
    auto iu = index.find(e.u), iv = index.find(e.v);
    if (iu == index.end() || iv == index.end())
      throw std::invalid_argument("make_graph: edge references unknown vertex '" +
                                  (iu == index.end() ? e.u : e.v) + "'");
    if (static_cast<int>(e.label.size()) != rank)
      throw std::invalid_argument("make_graph: label rank mismatch on edge " + e.u + "-" + e.v);
    int u = iu->second, v = iv->second;
    IntVec lab = e.label;
    if (u > v) {
      std::swap(u, v);
      if (is_signed) lab = negate(lab);
    }
    if (!is_signed) lab = normalized_sign_rep(lab);
    ce.push_back({u, v, std::move(lab)});
  }
  std::sort(ce.begin(), ce.end(), [](const CanonEdge& a, const CanonEdge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return std::lexicographical_compare(a.lab.begin(), a.lab.end(), b.lab.begin(), b.lab.end());
  });

  GkmGraph g;
  g.rank = rank;
  g.is_signed = is_signed;
  g.vertex_names = std::move(vertices);
  int m = static_cast<int>(ce.size());
  g.dart_origin.resize(2 * m);
  g.dart_opp.resize(2 * m);
  g.label.resize(2 * m);
  g.star.resize(g.vertex_names.size());
  for (int e = 0; e < m; ++e) {
    g.dart_origin[2 * e] = ce[e].u;
    g.dart_origin[2 * e + 1] = ce[e].v;
    g.dart_opp[2 * e] = 2 * e + 1;
    g.dart_opp[2 * e + 1] = 2 * e;
    g.label[2 * e] = ce[e].lab;
    g.label[2 * e + 1] = is_signed ? negate(ce[e].lab) : ce[e].lab;
    g.star[ce[e].u].push_back(2 * e);
    g.star[ce[e].v].push_back(2 * e + 1);
  }
  g.valence = g.star.empty() ? 0 : static_cast<int>(g.star[0].size());
  return g;
}

ValidationReport validate_graph(const GkmGraph& g) {
  ValidationReport rep;
  auto fail = [&](const std::string& s) { rep.violations.push_back(s); };

  int nd = g.num_darts();
  for (int d = 0; d < nd; ++d) {
    int o = g.dart_opp[d];
    if (o < 0 || o >= nd || g.dart_opp[o] != d)
      fail("opposition is not an involution at dart " + std::to_string(d));
    else if (o == d)
      fail("dart " + std::to_string(d) + " is its own opposite");
    else if (g.dart_origin[d] == g.dart_origin[o])
      fail("loop at vertex " + g.vertex_names[g.dart_origin[d]]);
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (static_cast<int>(g.star[v].size()) != g.valence)
      fail("vertex " + g.vertex_names[v] + " has valence " + std::to_string(g.star[v].size()) +
           " != " + std::to_string(g.valence));
  for (int d = 0; d < nd; ++d) {
    if (static_cast<int>(g.label[d].size()) != g.rank)
      fail("label rank mismatch at dart " + std::to_string(d));
    else if (is_zero(g.label[d]))
      fail("zero label at dart " + std::to_string(d));
    else if (!g.is_signed) {
      if (g.label[d] != normalized_sign_rep(g.label[d]))
        fail("unsigned label not in normal form at dart " + std::to_string(d));
      if (g.label[d] != g.label[g.dart_opp[d]])
        fail("unsigned label differs on opposite darts at dart " + std::to_string(d));
    } else if (g.label[g.dart_opp[d]] != negate(g.label[d])) {
      fail("signed label not negated on opposite dart at dart " + std::to_string(d));
    }
  }

  // connectedness
  if (g.num_vertices() > 0) {
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : g.star[v]) {
        int w = g.head(d);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      fail("graph is not connected");
  }

  if (g.has_connection()) {
    if (static_cast<int>(g.conn.size()) != nd) {
      fail("connection has wrong dart count");
      return rep;
    }
    for (int d = 0; d < nd; ++d) {
      int v = g.dart_origin[d], w = g.head(d);
      if (g.conn[d].size() != g.star[v].size()) {
        fail("connection map at dart " + std::to_string(d) + " has wrong size");
        continue;
      }
      std::set<int> image(g.conn[d].begin(), g.conn[d].end());
      std::set<int> target(g.star[w].begin(), g.star[w].end());
      if (image != target) fail("connection at dart " + std::to_string(d) + " is not a bijection onto the target star");
      // ∇_e(e) = ē
      int self_idx = g.star_index(v, d);
      if (g.conn[d][self_idx] != g.dart_opp[d])
        fail("connection fixes e ↦ ē violated at dart " + std::to_string(d));
      // ∇_ē = (∇_e)^{-1}
      int o = g.dart_opp[d];
      for (std::size_t j = 0; j < g.star[v].size(); ++j) {
        int img = g.conn[d][j];
        int back = g.conn[o][g.star_index(w, img)];
        if (back != g.star[v][j]) {
          fail("connection at dart " + std::to_string(d) + " is not inverse to its opposite");
          break;
        }
      }
    }
  }
  return rep;
}

namespace {

// unsigned congruence: exists s in {±1}, c in Z with r1 = s*r2 + c*r0
bool unsigned_congruent(const IntVec& r1, const IntVec& r2, const IntVec& r0) {
  for (int s : {1, -1}) {
    IntVec diff(r1.size());
    for (std::size_t i = 0; i < r1.size(); ++i) diff[i] = r1[i] - Int(s) * r2[i];
    if (is_zero(diff) || integer_multiple_of(diff, r0)) return true;
  }
  return false;
}

bool signed_congruent(const IntVec& r1, const IntVec& r2, const IntVec& r0) {
  IntVec diff(r1.size());
  for (std::size_t i = 0; i < r1.size(); ++i) diff[i] = r1[i] - r2[i];
  return is_zero(diff) || integer_multiple_of(diff, r0);
}

}  // namespace

ValidationReport check_congruence(const GkmGraph& g) {
  ValidationReport rep;
  if (!g.has_connection()) {
    rep.violations.push_back("no connection present");
    return rep;
  }
  for (int e = 0; e < g.num_darts(); ++e) {
    int v = g.dart_origin[e];
    for (int ep : g.star[v]) {
      int img = g.transport(e, ep);
      bool ok = g.is_signed ? signed_congruent(g.label[img], g.label[ep], g.label[e])
                            : unsigned_congruent(g.label[img], g.label[ep], g.label[e]);
      if (!ok)
        rep.violations.push_back("congruence fails at darts (" + std::to_string(e) + "," +
                                 std::to_string(ep) + ")");
    }
  }
  return rep;
}

bool check_effectivity(const GkmGraph& g, CoeffMode mode) {
  std::vector<IntVec> rows;
  for (int e = 0; e < g.num_edges(); ++e) rows.push_back(g.label[g.canonical_dart(e)]);
  IntMatrix m = from_rows(rows, g.rank);
  if (mode == CoeffMode::rational) return rank_rational(m) == static_cast<std::size_t>(g.rank);
  SmithForm f = smith_normal_form(m);
  if (f.rank() != static_cast<std::size_t>(g.rank)) return false;
  for (std::size_t i = 0; i < f.rank(); ++i)
    if (f.s.at(i, i) != 1) return false;
  return true;
}

int gkm_independence_level(const GkmGraph& g) {
  int best = g.valence;
  for (int v = 0; v < g.num_vertices(); ++v) {
    // distinct label classes at v
    std::vector<IntVec> classes;
    for (int d : g.star[v]) {
      IntVec c = normalized_sign_rep(g.label[d]);
      if (std::find(classes.begin(), classes.end(), c) == classes.end())
        classes.push_back(std::move(c));
    }
    int nc = static_cast<int>(classes.size());
    // largest j with all i<=j subsets independent; scan subset sizes
    for (int j = 2; j <= best; ++j) {
      if (j > nc) break;
      // check all j-subsets for independence
      std::vector<int> idx(j);
      std::iota(idx.begin(), idx.end(), 0);
      bool all_indep = true;
      while (true) {
        std::vector<IntVec> sub;
        for (int i : idx) sub.push_back(classes[i]);
        if (rank_rational(from_rows(sub, g.rank)) != static_cast<std::size_t>(j)) {
          all_indep = false;
          break;
        }
        // next combination
        int i = j - 1;
        while (i >= 0 && idx[i] == nc - j + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int l = i + 1; l < j; ++l) idx[l] = idx[l - 1] + 1;
      }
      if (!all_indep) {
        best = std::min(best, j - 1);
        break;
      }
    }
  }
  return best;
}

namespace {

// all label-compatible bijections star(v)\{e} -> star(w)\{ē} for one dart e
std::vector<std::vector<int>> edge_bijections(const GkmGraph& g, int e) {
  int v = g.dart_origin[e], w = g.head(e);
  std::vector<int> src, dst;
  for (int d : g.star[v])
    if (d != e) src.push_back(d);
  for (int d : g.star[w])
    if (d != g.dart_opp[e]) dst.push_back(d);

  std::vector<std::vector<int>> results;  // full maps aligned with star[v]
  std::vector<int> assign(src.size(), -1);
  std::vector<bool> used(dst.size(), false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == src.size()) {
      std::vector<int> full(g.star[v].size());
      for (std::size_t j = 0; j < g.star[v].size(); ++j) {
        int d = g.star[v][j];
        if (d == e)
          full[j] = g.dart_opp[e];
        else {
          auto it = std::find(src.begin(), src.end(), d);
          full[j] = assign[it - src.begin()];
        }
      }
      results.push_back(std::move(full));
      return;
    }
    for (std::size_t t = 0; t < dst.size(); ++t) {
      if (used[t]) continue;
      bool ok = g.is_signed
                    ? signed_congruent(g.label[dst[t]], g.label[src[i]], g.label[e])
                    : unsigned_congruent(g.label[dst[t]], g.label[src[i]], g.label[e]);
      if (!ok) continue;
      used[t] = true;
      assign[i] = dst[t];
      self(self, i + 1);
      used[t] = false;
    }
  };
  rec(rec, 0);
  return results;
}

}  // namespace

std::vector<std::vector<int>> compatible_connection(const GkmGraph& g, bool* unique) {
  std::vector<std::vector<int>> conn(g.num_darts());
  bool uniq = true;
  for (int e = 0; e < g.num_edges(); ++e) {
    int d = g.canonical_dart(e);
    auto options = edge_bijections(g, d);
    if (options.empty())
      throw std::runtime_error("no compatible connection at edge " + std::to_string(e));
    if (options.size() > 1) uniq = false;
    conn[d] = options.front();
    // opposite dart gets the inverse map
    int o = g.dart_opp[d];
    int w = g.head(d), v = g.dart_origin[d];
    conn[o].resize(g.star[w].size());
    for (std::size_t j = 0; j < g.star[v].size(); ++j) {
      int img = conn[d][j];
      conn[o][std::find(g.star[w].begin(), g.star[w].end(), img) - g.star[w].begin()] =
          g.star[v][j];
    }
  }
  if (unique) *unique = uniq;
  return conn;
}

std::vector<std::vector<int>> unique_compatible_connection(const GkmGraph& g) {
  bool uniq = false;
  auto conn = compatible_connection(g, &uniq);
  if (!uniq) throw std::runtime_error("connection not unique");
  return conn;
}

ValidationReport validate_tgraph(const TGraph& t) {
  ValidationReport rep;
  const GkmGraph& g = t.base;
  auto fail = [&](const std::string& s) { rep.violations.push_back(s); };
  if (static_cast<int>(t.beta.size()) != g.num_darts()) {
    fail("beta has wrong dart count");
    return rep;
  }
  if (g.rank != g.valence) fail("rank != valence: not a torus graph skeleton");

  // (i) beta(ē) = -δ(e) beta(e), δ ∈ {±1}
  for (int d = 0; d < g.num_darts(); ++d) {
    const IntVec& b = t.beta[d];
    const IntVec& bo = t.beta[g.dart_opp[d]];
    if (bo != negate(b) && bo != b)
      fail("beta on opposite dart is not ±beta at dart " + std::to_string(d));
  }
  // (ii) vertex stars are bases of Z^n
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<IntVec> rows;
    for (int d : g.star[v]) rows.push_back(t.beta[d]);
    Int dv = det(from_rows(rows, g.rank));
    if (dv != 1 && dv != -1)
      fail("labels at vertex " + g.vertex_names[v] + " are not a Z-basis (det " + dv.get_str() +
           ")");
  }
  // (iii) integral congruences along the connection
  if (!g.has_connection()) {
    fail("no connection present");
    return rep;
  }
  for (int e = 0; e < g.num_darts(); ++e) {
    int v = g.dart_origin[e];
    for (int ep : g.star[v]) {
      if (ep == e) continue;
      int img = g.transport(e, ep);
      if (!signed_congruent(t.beta[img], t.beta[ep], t.beta[e]))
        fail("integral congruence fails at darts (" + std::to_string(e) + "," +
             std::to_string(ep) + ")");
    }
  }
  return rep;
}

GkmGraph unsigned_reduction(const TGraph& t) {
  GkmGraph g = t.base;
  g.is_signed = false;
  for (int d = 0; d < g.num_darts(); ++d) g.label[d] = normalized_sign_rep(t.beta[d]);
  return g;
}

GkmGraph to_unsigned(const GkmGraph& g) {
  if (!g.is_signed) return g;
  GkmGraph u = g;
  u.is_signed = false;
  for (auto& l : u.label) l = normalized_sign_rep(l);
  return u;
}

}  // namespace gkm
