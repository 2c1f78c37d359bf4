#pragma once

#include "gkm/graph.hpp"
#include "gkm/poly.hpp"

#include <map>
#include <utility>

namespace gkm {

/// Connection-invariant subgraph of constant in-face valence.
struct Face {
  int rank = 0;               // common in-face valence
  std::vector<int> vertices;  // sorted vertex indices
  std::vector<int> edges;     // sorted edge indices
  std::vector<int> darts;     // sorted darts (closed under involution)

  bool operator==(const Face& o) const { return vertices == o.vertices && edges == o.edges; }
  bool operator<(const Face& o) const {
    if (rank != o.rank) return rank < o.rank;
    if (vertices != o.vertices) return vertices < o.vertices;
    return edges < o.edges;
  }
};

/// All rank-i faces, by seeding (vertex, i-subset of its star) and closing
/// under connection transport; a seed is rejected when the closure forces more
/// than i darts at some vertex.
std::vector<Face> enumerate_faces(const GkmGraph& g, int i);

struct FacePoset {
  const GkmGraph* g = nullptr;
  std::vector<Face> faces;                  // grouped by rank, sorted within
  std::vector<std::vector<int>> by_rank;    // face indices per rank 0..n
  std::vector<std::pair<int, int>> covers;  // (lower, upper), consecutive ranks

  bool leq(int f, int h) const;  // subgraph inclusion
  int index_of(const Face& f) const;
  std::vector<int> rank_profile() const;
  int top() const;  // index of the whole graph
};

FacePoset face_poset(const GkmGraph& g);

/// Regular-CW test on ranks <= 2: every vertex-under-2-face interval has
/// exactly two edges in between, and every 2-face boundary is a simple cycle.
bool check_regular_cw(const FacePoset& poset);

/// Incidence signs on covering pairs of ranks <= 2 satisfying, for each
/// vertex-edge-face diamond, [p:p'][p':q] + [p:q'][q':q] = 0, and giving the
/// two endpoints of every edge opposite signs.
struct SignAssignment {
  std::map<std::pair<int, int>, int> sign;  // covering pair -> +1 / -1
  int at(int lower, int upper) const { return sign.at({lower, upper}); }
};

/// Solves the diamond system over GF(2); with alternate=true returns a second
/// solution differing by a coboundary when one exists. Throws
/// "no sign assignment exists" when the system is inconsistent.
SignAssignment solve_signs(const FacePoset& poset, bool alternate = false);

/// Generators {alpha(e) : e in E_F} of the ideal I_F together with a basis of
/// the annihilator lattice {xi : <alpha(e), xi> = 0 for all face edges}.
struct FaceAnnihilator {
  std::vector<IntVec> generators;   // one per face edge, normalized reps
  std::vector<IntVec> annihilator;  // lattice basis, rank k - rk(labels)
  bool saturated = true;            // label span splits off Z^k
};

/// In integer mode a non-saturated label span is an error ("face label span
/// is not saturated"); rational mode only records the flag.
FaceAnnihilator face_ideal(const GkmGraph& g, const Face& f, CoeffMode mode);

}  // namespace gkm
