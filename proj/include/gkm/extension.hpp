#pragma once

#include "gkm/faces.hpp"
#include "gkm/graph.hpp"

namespace gkm {

/// Dart-by-dart verification that gT extends gK along the epimorphism p
/// (p is k x n): same skeleton and connection, and p(alpha_T) = alpha_K on
/// every dart (equality of sign classes in unsigned mode).
ValidationReport check_extension(const GkmGraph& gK, const GkmGraph& gT, const IntMatrix& p);

/// Backtracking search for rank-n extensions of gK under the coordinate
/// projection Z^n -> Z^k, with the free coordinates of every edge lift bounded
/// by `bound` in absolute value. Returns all congruence-compatible labelings
/// (unsigned, hence up to sign per edge); may be empty.
std::vector<GkmGraph> search_extension(const GkmGraph& gK, int n, const Int& bound = 2);
/// Same search for an arbitrary surjective p, normalized to the coordinate
/// projection by a unimodular change of the target lattice.
std::vector<GkmGraph> search_extension(const GkmGraph& gK, const IntMatrix& p,
                                       const Int& bound = 2);

/// Facet normals of a torus graph: one primitive vector per rank-(n-1) face,
/// forming a basis of Z^n at every vertex.
struct CharacteristicFunction {
  GkmGraph graph;             // the unsigned torus graph
  std::vector<Face> facets;   // rank n-1 faces, canonical order
  std::vector<IntVec> lambda; // parallel to facets
};

/// Reads the normals off a T-graph as the dual bases of the signed vertex
/// stars; errors when the value at two vertices of one facet disagrees.
CharacteristicFunction facet_normals(const TGraph& t);

/// Rebuilds the T-graph whose signed labels are the dual bases of the facet
/// normals; errors when some vertex star of normals is not unimodular.
TGraph tgraph_from_characteristic(const CharacteristicFunction& chi);

/// Sign lift of an unsigned torus graph: arbitrary per-dart sign choice,
/// per-facet normal with the sign fixed at the facet's least vertex, then
/// tgraph_from_characteristic. The unsigned reduction of the result is g.
TGraph lift_to_tgraph(const GkmGraph& g);

}  // namespace gkm
