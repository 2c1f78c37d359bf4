#pragma once

#include "gkm/exact.hpp"
#include "gkm/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkm {

/// Abstract GKM graph. Oriented edges ("darts") are the primitive notion;
/// an undirected edge is a dart orbit under the opposition involution.
/// Darts come in pairs (2e, 2e+1) for edge index e; dart 2e points from the
/// lexicographically smaller endpoint.
struct GkmGraph {
  int rank = 0;     // k, length of label vectors
  int valence = 0;  // n, darts per vertex
  bool is_signed = false;

  std::vector<std::string> vertex_names;  // sorted, unique
  std::vector<int> dart_origin;           // per dart
  std::vector<int> dart_opp;              // involution
  std::vector<std::vector<int>> star;     // per vertex, ascending dart ids
  std::vector<IntVec> label;              // per dart; unsigned: sign-normalized
  // conn[d][j] = image under ∇_d of star[origin(d)][j]; empty if absent
  std::vector<std::vector<int>> conn;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_darts() const { return static_cast<int>(dart_origin.size()); }
  int num_edges() const { return num_darts() / 2; }
  int head(int d) const { return dart_origin[dart_opp[d]]; }
  bool has_connection() const { return !conn.empty(); }
  int star_index(int v, int d) const;
  /// ∇_along(d); both darts must start at origin(along).
  int transport(int along, int d) const;
  int edge_of_dart(int d) const { return std::min(d, dart_opp[d]) / 2; }
  int canonical_dart(int edge) const { return 2 * edge; }
  bool operator==(const GkmGraph&) const = default;
};

struct EdgeSpec {
  std::string u, v;
  IntVec label;  // for a signed graph: value on the dart u -> v
};

/// Canonical constructor: sorts vertices and edges, normalizes unsigned
/// labels, installs opposite-dart labels. Connection may be added later.
GkmGraph make_graph(int rank, bool is_signed, std::vector<std::string> vertices,
                    std::vector<EdgeSpec> edges);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Valence, involution, loop-freeness, connectedness, connection axioms.
ValidationReport validate_graph(const GkmGraph& g);
/// Congruence relations (gkmcomp1)/(gkmcomp2) for every dart pair with
/// common origin. Requires a connection.
ValidationReport check_congruence(const GkmGraph& g);
/// Rational mode: labels span Q^k. Integer mode: lattice of lifts is all of Z^k.
bool check_effectivity(const GkmGraph& g, CoeffMode mode = CoeffMode::rational);
/// Largest j <= n such that any i <= j pairwise distinct label classes at a
/// vertex are linearly independent over Q.
int gkm_independence_level(const GkmGraph& g);

/// All connections compatible with the labels (per-edge product structure).
/// Throws if some edge admits none. `unique` out-param reports uniqueness.
std::vector<std::vector<int>> compatible_connection(const GkmGraph& g, bool* unique);
/// The unique compatible connection; throws "no compatible connection" or
/// "connection not unique".
std::vector<std::vector<int>> unique_compatible_connection(const GkmGraph& g);

/// Signed refinement of an unsigned torus graph (Definition of a T-graph):
/// per-dart beta with unimodular vertex stars and integral congruences.
struct TGraph {
  GkmGraph base;              // unsigned torus graph (the reduction)
  std::vector<IntVec> beta;   // per dart
};

ValidationReport validate_tgraph(const TGraph& t);
/// Forget signs: unsigned torus graph with labels normalize(beta).
GkmGraph unsigned_reduction(const TGraph& t);
/// Forget the sign information of a signed GKM graph.
GkmGraph to_unsigned(const GkmGraph& g);

/// Built-in examples. Accepted names: "fig3", "flag_su3", "cpn_torus:<n>",
/// "cp4_projected". Throws on unknown names.
GkmGraph catalog(const std::string& name);
/// Catalog extension pairs: "flag" = (flag_su3 ⊂ fig3), "cp4" =
/// (cp4_projected ⊂ cpn_torus:4). Returns (gK, gT, p).
struct ExtensionPair {
  GkmGraph gK, gT;
  IntMatrix p;  // k x n
};
ExtensionPair catalog_extension(const std::string& name);

}  // namespace gkm
