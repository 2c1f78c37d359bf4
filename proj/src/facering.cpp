#include "gkm/facering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gkm {

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

int corank(const FacePoset& poset, int f) {
  return poset.g->valence - poset.faces[f].rank;
}

}  // namespace

SimplicialCheck check_simplicial_opposite(const FacePoset& poset) {
  SimplicialCheck out;
  int n = poset.g->valence;
  const auto& facets = poset.by_rank[n - 1];
  for (int f = 0; f < static_cast<int>(poset.faces.size()); ++f) {
    int m = n - poset.faces[f].rank;
    // collect the up-set; level counts and facet fingerprints of its members
    std::vector<long> level_counts(m + 1, 0);
    std::set<std::vector<int>> fingerprints;
    long total = 0;
    for (int g = 0; g < static_cast<int>(poset.faces.size()); ++g) {
      if (!poset.leq(f, g)) continue;
      ++total;
      ++level_counts[poset.faces[g].rank - poset.faces[f].rank];
      std::vector<int> above;
      for (int fc : facets)
        if (poset.leq(g, fc)) above.push_back(fc);
      fingerprints.insert(above);
    }
    // Boolean interval of rank m: 2^m members, C(m, j) at relative rank j,
    // and each member meets a different set of facets
    bool ok = total == (1L << m) && fingerprints.size() == static_cast<std::size_t>(total);
    for (int j = 0; ok && j <= m; ++j)
      if (level_counts[j] != binom(m, j)) ok = false;
    if (!ok) out.failing_faces.push_back(f);
  }
  out.simplicial = out.failing_faces.empty();
  return out;
}

int monomial_degree2(const FacePoset& poset, const FaceMonomial& m) {
  int d2 = 0;
  for (const auto& [f, a] : m.factors) d2 += 2 * a * corank(poset, f);
  return d2;
}

int face_join(const FacePoset& poset, int f, int g) {
  std::vector<int> uppers;
  for (int h = 0; h < static_cast<int>(poset.faces.size()); ++h)
    if (poset.leq(f, h) && poset.leq(g, h)) uppers.push_back(h);
  if (uppers.empty()) throw std::runtime_error("no common upper face");
  std::vector<int> minimal;
  for (int h : uppers) {
    bool is_min = true;
    for (int h2 : uppers)
      if (h2 != h && poset.leq(h2, h)) is_min = false;
    if (is_min) minimal.push_back(h);
  }
  if (minimal.size() != 1) throw std::runtime_error("least upper face not unique");
  return minimal[0];
}

std::vector<int> face_meet_components(const FacePoset& poset, int f, int g) {
  const GkmGraph& graph = *poset.g;
  const Face& a = poset.faces[f];
  const Face& b = poset.faces[g];
  std::vector<int> verts, edges;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                        b.vertices.end(), std::back_inserter(verts));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(edges));
  // connected components of the intersection subgraph
  std::map<int, int> comp;  // vertex -> component id
  int next = 0;
  for (int v : verts) comp[v] = next++;
  auto unite = [&](int x, int y) {
    int cx = comp[x], cy = comp[y];
    if (cx == cy) return;
    for (auto& [v, c] : comp)
      if (c == cy) c = cx;
  };
  for (int e : edges) {
    int d = graph.canonical_dart(e);
    unite(graph.dart_origin[d], graph.head(d));
  }
  std::vector<int> out;
  std::set<int> seen;
  for (int v : verts) {
    if (!seen.insert(comp[v]).second) continue;
    Face component;
    for (int w : verts)
      if (comp[w] == comp[v]) component.vertices.push_back(w);
    for (int e : edges) {
      int d = graph.canonical_dart(e);
      if (comp[graph.dart_origin[d]] == comp[v]) component.edges.push_back(e);
    }
    int idx = -1;
    for (int h = 0; h < static_cast<int>(poset.faces.size()); ++h)
      if (poset.faces[h].vertices == component.vertices && poset.faces[h].edges == component.edges)
        idx = h;
    if (idx < 0) throw std::runtime_error("intersection component is not a face");
    out.push_back(idx);
  }
  return out;
}

namespace {

TGraph as_tgraph(const GkmGraph& g) {
  if (!g.is_signed) return lift_to_tgraph(g);
  TGraph t{to_unsigned(g), g.label};
  auto report = validate_tgraph(t);
  if (!report.ok()) throw std::invalid_argument("signed graph is not a T-graph");
  return t;
}

FaceRingElement monomial_element(std::vector<int> faces) {
  std::sort(faces.begin(), faces.end());
  FaceMonomial m;
  for (int f : faces) {
    if (!m.factors.empty() && m.factors.back().first == f)
      ++m.factors.back().second;
    else
      m.factors.push_back({f, 1});
  }
  FaceRingElement out;
  out.terms[m] = 1;
  return out;
}

void accumulate(FaceRingElement& into, const FaceRingElement& x, const Rat& c) {
  for (const auto& [m, coeff] : x.terms) {
    Rat& slot = into.terms[m];
    slot += c * coeff;
    if (slot == 0) into.terms.erase(m);
  }
}

}  // namespace

FaceRingElement straighten(const FacePoset& poset, std::vector<int> faces, std::mt19937_64* rng) {
  int top = poset.top();
  faces.erase(std::remove(faces.begin(), faces.end(), top), faces.end());
  // incomparable pairs, by position
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      if (!poset.leq(faces[i], faces[j]) && !poset.leq(faces[j], faces[i]))
        pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
  if (pairs.empty()) return monomial_element(std::move(faces));
  auto [pi, pj] = rng ? pairs[(*rng)() % pairs.size()] : pairs.front();
  int f = faces[pi], g = faces[pj];
  std::vector<int> rest;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (static_cast<int>(i) != pi && static_cast<int>(i) != pj) rest.push_back(faces[i]);
  int join = face_join(poset, f, g);
  FaceRingElement out;
  for (int h : face_meet_components(poset, f, g)) {
    std::vector<int> next = rest;
    next.push_back(join);
    next.push_back(h);
    accumulate(out, straighten(poset, std::move(next), rng), 1);
  }
  return out;  // empty meet: the product is zero
}

FaceRingElement straighten_product(const FacePoset& poset, const FaceRingElement& a,
                                   const FaceRingElement& b) {
  FaceRingElement out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      std::vector<int> faces;
      for (const auto& [f, e] : ma.factors) faces.insert(faces.end(), e, f);
      for (const auto& [f, e] : mb.factors) faces.insert(faces.end(), e, f);
      accumulate(out, straighten(poset, std::move(faces)), ca * cb);
    }
  return out;
}

std::vector<FaceMonomial> chain_monomials(const FacePoset& poset, int degree2) {
  if (degree2 % 2 != 0 || degree2 < 0) throw std::invalid_argument("degree must be even");
  std::vector<FaceMonomial> out;
  int top = poset.top();
  FaceMonomial current;
  // faces are grouped by rank, so chains ascend in index order
  auto recurse = [&](auto&& self, int min_face, int budget) -> void {
    if (budget == 0) {
      out.push_back(current);
      return;
    }
    for (int f = min_face; f < static_cast<int>(poset.faces.size()); ++f) {
      if (f == top) continue;
      if (!current.factors.empty() && !poset.leq(current.factors.back().first, f)) continue;
      int w = corank(poset, f);
      for (int a = 1; a * w <= budget; ++a) {
        current.factors.push_back({f, a});
        self(self, f + 1, budget - a * w);
        current.factors.pop_back();
      }
    }
  };
  recurse(recurse, 0, degree2 / 2);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> face_ring_hilbert(const FacePoset& poset, int D) {
  std::vector<int> out;
  for (int degree2 = 0; degree2 <= D; degree2 += 2)
    out.push_back(static_cast<int>(chain_monomials(poset, degree2).size()));
  return out;
}

CohomologyClass facemap_image(const TGraph& lift, const FacePoset& poset,
                              const FaceRingElement& x) {
  const GkmGraph& g = lift.base;
  int degree2 = x.terms.empty() ? 0 : monomial_degree2(poset, x.terms.begin()->first);
  CohomologyClass out;
  out.degree2 = degree2;
  out.value.assign(g.num_vertices(), Polynomial(g.rank));
  for (const auto& [m, c] : x.terms) {
    if (monomial_degree2(poset, m) != degree2)
      throw std::invalid_argument("facemap_image: inhomogeneous element");
    CohomologyClass prod = thom_class(lift, poset.faces[poset.top()]);  // the unit
    for (const auto& [f, a] : m.factors)
      for (int i = 0; i < a; ++i) prod = class_product(prod, thom_class(lift, poset.faces[f]));
    out = class_sum(out, class_scale(c, prod));
  }
  return out;
}

FacemapIso check_facemap_iso(const GkmGraph& g, int D) {
  TGraph lift = as_tgraph(g);
  FacePoset poset = face_poset(g);
  FacemapIso out;
  for (int degree2 = 0; degree2 <= D; degree2 += 2) {
    auto mons = chain_monomials(poset, degree2);
    std::size_t vec_size =
        g.num_vertices() * homogeneous_monomials(g.rank, degree2 / 2).size();
    RatMatrix m(vec_size, mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) {
      FaceRingElement el;
      el.terms[mons[j]] = 1;
      RatVec col = class_to_vector(g, facemap_image(lift, poset, el));
      for (std::size_t r = 0; r < vec_size; ++r) m.at(r, j) = col[r];
    }
    std::size_t rk = rank(m);
    bool iso = rk == mons.size() &&
               rk == cohomology_basis(g, degree2).size();
    out.per_degree.push_back(iso);
  }
  out.all = std::all_of(out.per_degree.begin(), out.per_degree.end(), [](bool b) { return b; });
  return out;
}

QuotientComparison face_ring_quotient_check(const GkmGraph& gK, const GkmGraph& gT,
                                           const IntMatrix& p, int D) {
  auto ext = check_extension(gK, gT, p);
  if (!ext.ok()) throw std::invalid_argument("face_ring_quotient_check: not an extension");
  TGraph lift = as_tgraph(gT);
  FacePoset poset = face_poset(gT);

  // degree-2 chain monomials are single facets; their images must be a basis
  auto facet_mons = chain_monomials(poset, 2);
  std::size_t vec2 = gT.num_vertices() * gT.rank;
  auto basis2 = cohomology_basis(gT, 2);
  if (facet_mons.size() != basis2.size())
    throw std::runtime_error("facemap is not an isomorphism in degree 2");
  RatMatrix aug(vec2, facet_mons.size());
  for (std::size_t j = 0; j < facet_mons.size(); ++j) {
    FaceRingElement el;
    el.terms[facet_mons[j]] = 1;
    RatVec col = class_to_vector(gT, facemap_image(lift, poset, el));
    for (std::size_t r = 0; r < vec2; ++r) aug.at(r, j) = col[r];
  }
  // express each generator of ker p (as a global linear class) in tau terms
  IntMatrix kerp = kernel_lattice_basis(p);
  std::vector<FaceRingElement> ideal_gens;
  {
    std::size_t nf = facet_mons.size();
    RatMatrix full(vec2, nf + kerp.rows);
    for (std::size_t r = 0; r < vec2; ++r)
      for (std::size_t c = 0; c < nf; ++c) full.at(r, c) = aug.at(r, c);
    for (std::size_t l = 0; l < kerp.rows; ++l) {
      CohomologyClass cls;
      cls.degree2 = 2;
      Polynomial lin = Polynomial::linear_form(kerp.row(l));
      cls.value.assign(gT.num_vertices(), lin);
      RatVec col = class_to_vector(gT, cls);
      for (std::size_t r = 0; r < vec2; ++r) full.at(r, nf + l) = col[r];
    }
    auto pivots = rref(full);
    // the facet images must be independent and the kernel forms in their span
    if (pivots.size() != nf) throw std::runtime_error("facemap is not an isomorphism in degree 2");
    for (std::size_t c : pivots)
      if (c >= nf) throw std::runtime_error("facemap is not an isomorphism in degree 2");
    for (std::size_t l = 0; l < kerp.rows; ++l) {
      FaceRingElement gen;
      for (std::size_t i = 0; i < pivots.size(); ++i)
        if (full.at(i, nf + l) != 0) gen.terms[facet_mons[pivots[i]]] = full.at(i, nf + l);
      ideal_gens.push_back(std::move(gen));
    }
  }

  QuotientComparison out;
  out.target_dims = hilbert_function(gK, D);
  for (int degree2 = 0; degree2 <= D; degree2 += 2) {
    auto mons = chain_monomials(poset, degree2);
    std::map<FaceMonomial, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    // span of { m . gen : m of degree 2d-2 }
    std::vector<RatVec> rows;
    if (degree2 >= 2)
      for (const auto& m : chain_monomials(poset, degree2 - 2))
        for (const auto& gen : ideal_gens) {
          FaceRingElement me;
          me.terms[m] = 1;
          FaceRingElement prod = straighten_product(poset, me, gen);
          RatVec row(mons.size(), 0);
          for (const auto& [mon, c] : prod.terms) row[index.at(mon)] = c;
          rows.push_back(std::move(row));
        }
    RatMatrix mat(rows.size(), mons.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < mons.size(); ++c) mat.at(r, c) = rows[r][c];
    std::size_t ideal_dim = rows.empty() ? 0 : rank(mat);
    out.quotient_dims.push_back(static_cast<int>(mons.size() - ideal_dim));
  }
  for (std::size_t i = 0; i < out.quotient_dims.size(); ++i)
    out.equal.push_back(out.quotient_dims[i] == out.target_dims[i]);
  out.all_equal = std::all_of(out.equal.begin(), out.equal.end(), [](bool b) { return b; });
  return out;
}

}  // namespace gkm
