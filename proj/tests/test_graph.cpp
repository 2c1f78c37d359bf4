#include <doctest.h>

#include "gkm/graph.hpp"

#include <random>

using namespace gkm;

namespace {

const std::vector<std::string> kCatalog = {"fig3", "flag_su3", "cpn_torus:2", "cpn_torus:3",
                                           "cpn_torus:4", "cp4_projected"};

GkmGraph theta_constant_label() {
  // three parallel edges with one label: the two non-self darts can swap
  std::vector<EdgeSpec> edges = {{"a", "b", {Int(1), Int(0)}},
                                 {"a", "b", {Int(1), Int(0)}},
                                 {"a", "b", {Int(1), Int(0)}}};
  return make_graph(2, false, {"a", "b"}, std::move(edges));
}

}  // namespace

TEST_CASE("catalog graphs validate") {
  for (const auto& name : kCatalog) {
    CAPTURE(name);
    GkmGraph g = catalog(name);
    CHECK(validate_graph(g).ok());
    CHECK(check_congruence(g).ok());
    CHECK(check_effectivity(g, CoeffMode::rational));
    CHECK(check_effectivity(g, CoeffMode::integer));
  }
  CHECK_THROWS(catalog("nope"));
}

TEST_CASE("fig3 structure matches the figure") {
  GkmGraph g = catalog("fig3");
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 9);
  CHECK(g.valence == 3);
  CHECK(g.rank == 3);
  CHECK_FALSE(g.is_signed);
  // the x matching {16,25,34} carries label (1,0,0)
  auto edge_label = [&](const std::string& a, const std::string& b) {
    for (int e = 0; e < g.num_edges(); ++e) {
      int d = g.canonical_dart(e);
      if (g.vertex_names[g.dart_origin[d]] == a && g.vertex_names[g.head(d)] == b)
        return g.label[d];
    }
    FAIL("edge not found");
    return IntVec{};
  };
  CHECK(edge_label("1", "6") == IntVec{Int(1), Int(0), Int(0)});
  CHECK(edge_label("2", "5") == IntVec{Int(1), Int(0), Int(0)});
  CHECK(edge_label("1", "2") == IntVec{Int(0), Int(1), Int(0)});
  CHECK(edge_label("3", "6") == IntVec{Int(0), Int(1), Int(0)});
  CHECK(edge_label("2", "3") == IntVec{Int(0), Int(0), Int(1)});
  CHECK(edge_label("5", "6") == IntVec{Int(0), Int(0), Int(1)});
}

TEST_CASE("GKM independence levels") {
  CHECK(gkm_independence_level(catalog("flag_su3")) == 2);
  CHECK(gkm_independence_level(catalog("fig3")) == 3);
  CHECK(gkm_independence_level(catalog("cp4_projected")) == 3);
  CHECK(gkm_independence_level(catalog("cpn_torus:3")) == 3);
  CHECK(gkm_independence_level(catalog("cpn_torus:4")) == 4);
}

TEST_CASE("validate_graph flags a broken connection") {
  GkmGraph g = catalog("fig3");
  // swap two images of one dart map so that ∇_e(e) != ē
  int d = 0;
  int v = g.dart_origin[d];
  int self_idx = g.star_index(v, d);
  std::swap(g.conn[d][self_idx], g.conn[d][(self_idx + 1) % 3]);
  auto rep = validate_graph(g);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& s : rep.violations)
    if (s.find("e ↦ ē") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("check_congruence detects a perturbed label") {
  GkmGraph g = catalog("cpn_torus:3");
  g.label[0] = {Int(1), Int(1), Int(1)};
  g.label[1] = negate(g.label[0]);
  CHECK_FALSE(check_congruence(g).ok());
}

TEST_CASE("effectivity distinguishes lattice from span") {
  // all labels scaled by 2: rational effectivity holds, integer fails
  GkmGraph g = catalog("fig3");
  for (auto& l : g.label)
    for (auto& x : l) x *= 2;
  CHECK(check_effectivity(g, CoeffMode::rational));
  CHECK_FALSE(check_effectivity(g, CoeffMode::integer));
}

TEST_CASE("unique compatible connection recovered for GKM3 graphs") {
  for (const auto& name : {"fig3", "cpn_torus:3", "cpn_torus:4", "cp4_projected"}) {
    CAPTURE(name);
    GkmGraph g = catalog(name);
    REQUIRE(gkm_independence_level(g) >= 3);
    GkmGraph stripped = g;
    stripped.conn.clear();
    auto conn = unique_compatible_connection(stripped);
    CHECK(conn == g.conn);
  }
}

TEST_CASE("connection not unique for parallel edges with a constant label") {
  GkmGraph g = theta_constant_label();
  bool unique = true;
  auto conn = compatible_connection(g, &unique);
  CHECK_FALSE(unique);
  CHECK_THROWS_WITH_AS(unique_compatible_connection(g), "connection not unique",
                       std::runtime_error);
}

TEST_CASE("cpn torus graphs are signed torus graphs") {
  GkmGraph g = catalog("cpn_torus:3");
  CHECK(g.is_signed);
  CHECK(g.rank == g.valence);
  // at every vertex the labels form a basis
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<IntVec> rows;
    for (int d : g.star[v]) rows.push_back(g.label[d]);
    Int dv = det(from_rows(rows, g.rank));
    CHECK((dv == 1 || dv == -1));
  }
}

TEST_CASE("catalog extension pairs share skeleton and connection") {
  for (const auto& name : {"flag", "cp4"}) {
    CAPTURE(name);
    ExtensionPair pair = catalog_extension(name);
    CHECK(pair.gK.num_edges() == pair.gT.num_edges());
    CHECK(pair.gK.vertex_names == pair.gT.vertex_names);
    CHECK(pair.gK.conn == pair.gT.conn);
    CHECK(pair.p.rows == static_cast<std::size_t>(pair.gK.rank));
    CHECK(pair.p.cols == static_cast<std::size_t>(pair.gT.rank));
  }
}

TEST_CASE("random unimodular relabelings preserve validator verdicts") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 100);
  for (const auto& name : kCatalog) {
    GkmGraph g = catalog(name);
    int lvl = gkm_independence_level(g);
    for (int iter = 0; iter < 10; ++iter) {
      // random product of elementary matrices
      IntMatrix m = IntMatrix::identity(g.rank);
      for (int s = 0; s < 6; ++s) {
        int i = pick(rng) % g.rank, j = pick(rng) % g.rank;
        if (i == j) continue;
        Int c = pick(rng) % 3 - 1;
        for (int col = 0; col < g.rank; ++col) m.at(i, col) += c * m.at(j, col);
      }
      GkmGraph h = g;
      for (auto& l : h.label) {
        l = mat_vec(m, l);
        if (!h.is_signed) l = normalized_sign_rep(l);
      }
      CAPTURE(name);
      CHECK(validate_graph(h).ok());
      CHECK(check_congruence(h).ok());
      CHECK(check_effectivity(h, CoeffMode::integer));
      CHECK(gkm_independence_level(h) == lvl);
    }
  }
}
