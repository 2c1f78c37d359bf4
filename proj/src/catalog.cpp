#include "gkm/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

namespace {

// K_{3,3} on parts {1,3,5} and {2,4,6}; the three perfect matchings carry the
// three labels. x = {16,25,34}, y = {12,45,36}, z = {23,14,56}.
GkmGraph k33_graph(int rank, const IntVec& lx, const IntVec& ly, const IntVec& lz) {
  std::vector<EdgeSpec> edges = {
      {"1", "6", lx}, {"2", "5", lx}, {"3", "4", lx},
      {"1", "2", ly}, {"4", "5", ly}, {"3", "6", ly},
      {"2", "3", lz}, {"1", "4", lz}, {"5", "6", lz},
  };
  GkmGraph g = make_graph(rank, false, {"1", "2", "3", "4", "5", "6"}, std::move(edges));
  // the matching-preserving connection: transport each matching to itself
  g.conn.assign(g.num_darts(), {});
  auto matching_of = [&](int dart) {
    // matchings are recoverable from the edge endpoints
    static const char* mx[3] = {"16", "25", "34"};
    static const char* my[3] = {"12", "45", "36"};
    int u = std::min(g.dart_origin[dart], g.head(dart)) + 1;
    int v = std::max(g.dart_origin[dart], g.head(dart)) + 1;
    std::string key = std::to_string(u) + std::to_string(v);
    for (auto* s : mx)
      if (key == s) return 0;
    for (auto* s : my)
      if (key == s) return 1;
    return 2;
  };
  for (int d = 0; d < g.num_darts(); ++d) {
    int v = g.dart_origin[d], w = g.head(d);
    g.conn[d].resize(g.star[v].size());
    for (std::size_t j = 0; j < g.star[v].size(); ++j) {
      int src = g.star[v][j];
      int img = -1;
      for (int cand : g.star[w])
        if (matching_of(cand) == matching_of(src)) img = cand;
      g.conn[d][j] = img;
    }
  }
  return g;
}

GkmGraph fig3() {
  return k33_graph(3, {Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)},
                   {Int(0), Int(0), Int(1)});
}

GkmGraph flag_su3() {
  return k33_graph(2, {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)});
}

// complete graph K_{n+1} with the standard CP^n weights e_j - e_i (e_0 = 0)
GkmGraph cpn_torus(int n, const IntMatrix* proj = nullptr) {
  if (n < 2) throw std::invalid_argument("cpn_torus: n >= 2 required");
  int out_rank = proj ? static_cast<int>(proj->rows) : n;
  auto weight = [&](int i, int j) {  // e_j - e_i in Z^n, e_0 = 0
    IntVec w(n, 0);
    if (j > 0) w[j - 1] += 1;
    if (i > 0) w[i - 1] -= 1;
    if (proj) w = mat_vec(*proj, w);
    return w;
  };
  std::vector<std::string> verts;
  for (int i = 0; i <= n; ++i) verts.push_back(std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({std::to_string(i), std::to_string(j), weight(i, j)});
  GkmGraph g = make_graph(out_rank, proj == nullptr, verts, std::move(edges));
  // connection on K_{n+1}: along i -> j send (i -> k) to (j -> k)
  g.conn.assign(g.num_darts(), {});
  for (int d = 0; d < g.num_darts(); ++d) {
    int v = g.dart_origin[d], w = g.head(d);
    g.conn[d].resize(g.star[v].size());
    for (std::size_t idx = 0; idx < g.star[v].size(); ++idx) {
      int src = g.star[v][idx];
      int k = g.head(src);
      int img = -1;
      if (src == d)
        img = g.dart_opp[d];
      else
        for (int cand : g.star[w])
          if (g.head(cand) == k) img = cand;
      g.conn[d][idx] = img;
    }
  }
  return g;
}

IntMatrix cp4_projection() {
  // p: Z^4 -> Z^3, e1,e2,e3 -> standard basis, e4 -> (1,1,1)
  return IntMatrix(3, 4,
                   {Int(1), Int(0), Int(0), Int(1),
                    Int(0), Int(1), Int(0), Int(1),
                    Int(0), Int(0), Int(1), Int(1)});
}

}  // namespace

GkmGraph catalog(const std::string& name) {
  if (name == "fig3") return fig3();
  if (name == "flag_su3") return flag_su3();
  if (name == "cp4_projected") {
    IntMatrix p = cp4_projection();
    return cpn_torus(4, &p);
  }
  if (name.rfind("cpn_torus:", 0) == 0) {
    int n = std::stoi(name.substr(10));
    return cpn_torus(n);
  }
  throw std::invalid_argument("unknown catalog name '" + name + "'");
}

ExtensionPair catalog_extension(const std::string& name) {
  if (name == "flag") {
    // p(x) = a, p(y) = b, p(z) = a + b
    IntMatrix p(2, 3, {Int(1), Int(0), Int(1), Int(0), Int(1), Int(1)});
    return {flag_su3(), fig3(), p};
  }
  if (name == "cp4") {
    IntMatrix p = cp4_projection();
    return {catalog("cp4_projected"), cpn_torus(4), p};
  }
  throw std::invalid_argument("unknown extension pair '" + name + "'");
}

}  // namespace gkm
