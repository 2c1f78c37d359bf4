#include <doctest.h>

#include "gkm/abfp.hpp"

using namespace gkm;

TEST_CASE("quotient normal form kills exactly the ideal") {
  GkmGraph g = catalog("fig3");
  FacePoset poset = face_poset(g);
  for (int fi : poset.by_rank[1]) {
    QuotientRing q = make_quotient(g, poset.faces[fi], CoeffMode::integer);
    CHECK(q.num_killed == 1);
    // the label itself maps to zero
    int e = poset.faces[fi].edges[0];
    Polynomial lab = Polynomial::linear_form(g.label[g.canonical_dart(e)]);
    CHECK(q.normal_form(lab).is_zero());
    // lifting a normal form and projecting again is the identity
    for (const auto& m : q.basis(2)) {
      Polynomial nf = Polynomial::monomial(m, 1);
      CHECK(q.normal_form(q.lift(nf)) == nf);
    }
  }
}

TEST_CASE("degree slice dimensions for projective space") {
  AbfpComplex c = build_abfp(catalog("cpn_torus:3"));
  DegreeSlice s = degree_slice(c, 2);
  CHECK(s.dim0 == 4 * 3);
  CHECK(s.dim1 == 6 * 2);
  CHECK(s.dim2 == 4 * 1);
}

TEST_CASE("one-edge graph: single summand, no second differential") {
  GkmGraph g = make_graph(1, false, {"a", "b"}, {{"a", "b", {Int(1)}}});
  g.conn = unique_compatible_connection(g);
  AbfpComplex c = build_abfp(g);
  DegreeSlice s = degree_slice(c, 4);
  CHECK(c.edge_quot.size() == 1);
  CHECK(s.dim2 == 0);
  CHECK(s.d1.rows == 0);
  CHECK(check_cochain(c, 8));
}

TEST_CASE("cochain property holds for catalog graphs") {
  for (const auto& name : {"cpn_torus:3", "cpn_torus:4", "cp4_projected", "fig3"}) {
    CAPTURE(name);
    AbfpComplex c = build_abfp(catalog(name));
    CHECK(check_cochain(c, 10));
  }
}

TEST_CASE("a flipped sign breaks the cochain property") {
  GkmGraph g = catalog("cpn_torus:3");
  FacePoset poset = face_poset(g);
  SignAssignment signs = solve_signs(poset);
  // flip one vertex-edge sign only: some diamond no longer cancels
  for (auto& [pair, s] : signs.sign)
    if (poset.faces[pair.first].rank == 0) {
      s = -s;
      break;
    }
  AbfpComplex c = build_abfp(g, signs);
  CHECK_FALSE(check_cochain(c, 4));
}

TEST_CASE("exactness at the first two positions") {
  for (const auto& name : {"cpn_torus:3", "cp4_projected", "fig3"}) {
    CAPTURE(name);
    AbfpComplex c = build_abfp(catalog(name));
    for (int h : homology_at(c, AbfpPosition::cohomology, 8)) CHECK(h == 0);
    for (int h : homology_at(c, AbfpPosition::zero, 8)) CHECK(h == 0);
  }
}

TEST_CASE("position one vanishes for the projected projective space") {
  AbfpComplex c = build_abfp(catalog("cp4_projected"));
  for (int h : homology_at(c, AbfpPosition::one, 12)) CHECK(h == 0);
}

TEST_CASE("position one for the counterexample graph is reported") {
  // exploratory: the graph is only GKM_2, so nothing is asserted beyond the
  // computation finishing; the value is recorded to catch regressions
  AbfpComplex c = build_abfp(catalog("fig3"));
  auto h1 = homology_at(c, AbfpPosition::one, 6);
  CHECK(h1 == std::vector<int>{2, 0, 0, 0});
}

TEST_CASE("integral differentials and torsion report") {
  AbfpComplex c = build_abfp(catalog("cpn_torus:3"), CoeffMode::integer);
  IntVec inv = d0_invariant_factors(c, 2);
  for (const Int& x : inv) CHECK(x >= 0);
}

TEST_CASE("homology does not depend on the sign choice") {
  for (const auto& name : {"cpn_torus:3", "cp4_projected"}) {
    CAPTURE(name);
    SignIndependence res = sign_independence_check(catalog(name), 8);
    REQUIRE(res.applicable);
    CHECK(res.equal);
  }
}

TEST_CASE("unsaturated spans are rejected in integer mode") {
  GkmGraph g = make_graph(1, false, {"a", "b"}, {{"a", "b", {Int(2)}}});
  g.conn = unique_compatible_connection(g);
  CHECK_THROWS_WITH_AS(build_abfp(g, CoeffMode::integer), "face label span is not saturated",
                       std::runtime_error);
  CHECK_FALSE(build_abfp(g, CoeffMode::rational).edge_quot[0].saturated);
}
