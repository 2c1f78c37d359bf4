#include "gkm/extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

namespace {

bool same_skeleton(const GkmGraph& a, const GkmGraph& b) {
  return a.vertex_names == b.vertex_names && a.dart_origin == b.dart_origin &&
         a.dart_opp == b.dart_opp && a.star == b.star && a.conn == b.conn;
}

}  // namespace

ValidationReport check_extension(const GkmGraph& gK, const GkmGraph& gT, const IntMatrix& p) {
  ValidationReport rep;
  if (p.rows != static_cast<std::size_t>(gK.rank) || p.cols != static_cast<std::size_t>(gT.rank)) {
    rep.violations.push_back("epimorphism shape mismatch");
    return rep;
  }
  if (gT.rank < gK.rank) rep.violations.push_back("target rank below source rank");
  SmithForm snf = smith_normal_form(p);
  for (const Int& x : snf.diagonal())
    if (x != 1) {
      rep.violations.push_back("p is not surjective onto the source lattice");
      break;
    }
  if (!same_skeleton(gK, gT)) {
    rep.violations.push_back("underlying graphs or connections differ");
    return rep;
  }
  for (int d = 0; d < gT.num_darts(); ++d) {
    IntVec img = mat_vec(p, gT.label[d]);
    bool ok = gK.is_signed ? img == gK.label[d]
                           : normalized_sign_rep(img) == gK.label[d];
    if (!ok) {
      rep.violations.push_back("label mismatch at dart " + std::to_string(d) + " (" +
                               gT.vertex_names[gT.dart_origin[d]] + " -> " +
                               gT.vertex_names[gT.head(d)] + ")");
      return rep;
    }
  }
  return rep;
}

namespace {

/// exists eps in {+-1}, c in Z with a = eps b + c l (sign-class congruence)
bool congruent_triple(const IntVec& a, const IntVec& b, const IntVec& l) {
  for (int eps : {1, -1}) {
    IntVec diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - eps * b[i];
    if (is_zero(diff) || integer_multiple_of(diff, l)) return true;
  }
  return false;
}

struct LiftSearch {
  const GkmGraph& gK;
  int n;
  Int bound;
  std::vector<IntVec> assigned;  // per edge; empty = unassigned
  std::vector<GkmGraph> found;

  bool prune_ok(int edge_just_set) const {
    // check every connection triple whose three edges are all assigned and
    // involve the new edge
    for (int dart = 0; dart < gK.num_darts(); ++dart) {
      int e = gK.edge_of_dart(dart);
      if (assigned[e].empty()) continue;
      int v = gK.dart_origin[dart];
      for (std::size_t j = 0; j < gK.star[v].size(); ++j) {
        int s = gK.star[v][j];
        int s2 = gK.conn[dart][j];
        int es = gK.edge_of_dart(s), es2 = gK.edge_of_dart(s2);
        if (assigned[es].empty() || assigned[es2].empty()) continue;
        if (e != edge_just_set && es != edge_just_set && es2 != edge_just_set) continue;
        if (!congruent_triple(assigned[es2], assigned[es], assigned[e])) return false;
      }
    }
    return true;
  }

  void emit() {
    std::vector<EdgeSpec> edges;
    for (int e = 0; e < gK.num_edges(); ++e) {
      int d = gK.canonical_dart(e);
      edges.push_back({gK.vertex_names[gK.dart_origin[d]], gK.vertex_names[gK.head(d)],
                       assigned[e]});
    }
    GkmGraph gT = make_graph(n, false, gK.vertex_names, std::move(edges));
    if (gT.dart_origin != gK.dart_origin) return;  // edge order shifted (parallel edges)
    gT.conn = gK.conn;
    if (check_congruence(gT).ok()) found.push_back(std::move(gT));
  }

  void step(int e) {
    if (e == gK.num_edges()) {
      emit();
      return;
    }
    IntVec base = gK.label[gK.canonical_dart(e)];
    IntVec lift(n, 0);
    std::copy(base.begin(), base.end(), lift.begin());
    int extra = n - gK.rank;
    std::vector<Int> w(extra, -bound);
    while (true) {
      for (int i = 0; i < extra; ++i) lift[gK.rank + i] = w[i];
      assigned[e] = lift;
      if (prune_ok(e)) step(e + 1);
      assigned[e].clear();
      // next tuple in [-bound, bound]^extra
      int i = 0;
      for (; i < extra; ++i) {
        if (w[i] < bound) {
          ++w[i];
          break;
        }
        w[i] = -bound;
      }
      if (i == extra) break;
    }
  }
};

}  // namespace

std::vector<GkmGraph> search_extension(const GkmGraph& gK, int n, const Int& bound) {
  if (n < gK.rank) throw std::invalid_argument("search_extension: target rank too small");
  if (!gK.has_connection()) throw std::invalid_argument("search_extension: connection required");
  LiftSearch search{gK, n, bound, std::vector<IntVec>(gK.num_edges()), {}};
  search.step(0);
  return search.found;
}

std::vector<GkmGraph> search_extension(const GkmGraph& gK, const IntMatrix& p, const Int& bound) {
  int k = gK.rank, n = static_cast<int>(p.cols);
  if (p.rows != static_cast<std::size_t>(k)) throw std::invalid_argument("epimorphism shape");
  SmithForm snf = smith_normal_form(p);
  for (const Int& x : snf.diagonal())
    if (x != 1) throw std::invalid_argument("p is not surjective");
  // W = V . blockdiag(U, I) satisfies p W = [I | 0]
  IntMatrix block = IntMatrix::identity(n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) block.at(r, c) = snf.u.at(r, c);
  IntMatrix w = mat_mul(snf.v, block);
  std::vector<GkmGraph> out;
  for (GkmGraph& g0 : search_extension(gK, n, bound)) {
    std::vector<EdgeSpec> edges;
    for (int e = 0; e < g0.num_edges(); ++e) {
      int d = g0.canonical_dart(e);
      edges.push_back({g0.vertex_names[g0.dart_origin[d]], g0.vertex_names[g0.head(d)],
                       mat_vec(w, g0.label[d])});
    }
    GkmGraph gT = make_graph(n, false, g0.vertex_names, std::move(edges));
    if (gT.dart_origin != g0.dart_origin) continue;
    gT.conn = g0.conn;
    out.push_back(std::move(gT));
  }
  return out;
}

namespace {

/// Dual-basis vector to the signed label of `dart` within the vertex star.
IntVec dual_vector(const GkmGraph& g, const std::vector<IntVec>& beta, int v, int dart) {
  std::vector<IntVec> rows;
  for (int d : g.star[v]) rows.push_back(beta[d]);
  IntMatrix b = from_rows(rows, g.rank);
  IntMatrix inv = inverse_unimodular(b);
  return inv.col(g.star_index(v, dart));
}

int transversal_dart(const GkmGraph& g, const Face& f, int v) {
  int found = -1;
  for (int d : g.star[v])
    if (!std::binary_search(f.edges.begin(), f.edges.end(), g.edge_of_dart(d))) {
      if (found >= 0) return -1;  // more than one: not a facet vertex star
      found = d;
    }
  return found;
}

}  // namespace

CharacteristicFunction facet_normals(const TGraph& t) {
  const GkmGraph& g = t.base;
  CharacteristicFunction chi;
  chi.graph = g;
  chi.facets = enumerate_faces(g, g.valence - 1);
  for (const Face& f : chi.facets) {
    IntVec lambda;
    for (int v : f.vertices) {
      int dart = transversal_dart(g, f, v);
      if (dart < 0) throw std::runtime_error("facet structure inconsistent");
      IntVec lv = dual_vector(g, t.beta, v, dart);
      if (lambda.empty())
        lambda = lv;
      else if (lv != lambda)
        throw std::runtime_error("facet normal inconsistent across vertices");
    }
    chi.lambda.push_back(std::move(lambda));
  }
  return chi;
}

TGraph tgraph_from_characteristic(const CharacteristicFunction& chi) {
  const GkmGraph& g = chi.graph;
  TGraph t;
  t.base = g;
  t.beta.assign(g.num_darts(), {});
  for (int v = 0; v < g.num_vertices(); ++v) {
    // facet through v transversal to each star dart
    std::vector<IntVec> rows;
    for (int dart : g.star[v]) {
      int which = -1;
      for (std::size_t fi = 0; fi < chi.facets.size(); ++fi) {
        const Face& f = chi.facets[fi];
        if (!std::binary_search(f.vertices.begin(), f.vertices.end(), v)) continue;
        if (std::binary_search(f.edges.begin(), f.edges.end(), g.edge_of_dart(dart))) continue;
        if (which >= 0) throw std::runtime_error("facet structure inconsistent");
        which = static_cast<int>(fi);
      }
      if (which < 0) throw std::runtime_error("facet structure inconsistent");
      rows.push_back(chi.lambda[which]);
    }
    IntMatrix l = from_rows(rows, g.rank);
    Int dl = det(l);
    if (dl != 1 && dl != -1)
      throw std::runtime_error("characteristic function not unimodular at vertex " +
                               g.vertex_names[v]);
    IntMatrix inv = inverse_unimodular(l);
    for (std::size_t j = 0; j < g.star[v].size(); ++j) t.beta[g.star[v][j]] = inv.col(j);
  }
  return t;
}

TGraph lift_to_tgraph(const GkmGraph& g) {
  if (g.is_signed) throw std::invalid_argument("lift_to_tgraph: expected an unsigned graph");
  if (g.rank != g.valence) throw std::invalid_argument("lift_to_tgraph: not a torus graph");
  // arbitrary sign lift: + on canonical darts, - on their opposites
  std::vector<IntVec> tilde(g.num_darts());
  for (int e = 0; e < g.num_edges(); ++e) {
    tilde[2 * e] = g.label[2 * e];
    tilde[2 * e + 1] = negate(g.label[2 * e]);
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<IntVec> rows;
    for (int d : g.star[v]) rows.push_back(tilde[d]);
    Int dv = det(from_rows(rows, g.rank));
    if (dv != 1 && dv != -1) throw std::invalid_argument("lift_to_tgraph: not a torus graph");
  }
  CharacteristicFunction chi;
  chi.graph = g;
  chi.facets = enumerate_faces(g, g.valence - 1);
  for (const Face& f : chi.facets) {
    // sign fixed at the least vertex; other vertices must agree up to sign
    IntVec lambda;
    for (int v : f.vertices) {
      int dart = transversal_dart(g, f, v);
      if (dart < 0) throw std::runtime_error("facet structure inconsistent");
      IntVec lv = dual_vector(g, tilde, v, dart);
      if (lambda.empty())
        lambda = normalized_sign_rep(lv);
      else if (lv != lambda && negate(lv) != lambda)
        throw std::runtime_error("facet structure inconsistent");
    }
    chi.lambda.push_back(std::move(lambda));
  }
  TGraph t = tgraph_from_characteristic(chi);
  if (unsigned_reduction(t) != g) throw std::runtime_error("facet structure inconsistent");
  return t;
}

}  // namespace gkm
