#pragma once

#include "gkm/cohomology.hpp"
#include "gkm/extension.hpp"
#include "gkm/faces.hpp"

#include <map>
#include <random>

namespace gkm {

/// Verdict that the opposite of the face poset is simplicial: every upper
/// interval [F, top] is a Boolean lattice of rank n - rk F.
struct SimplicialCheck {
  bool simplicial = false;
  std::vector<int> failing_faces;  // poset indices of offending lower ends
};

SimplicialCheck check_simplicial_opposite(const FacePoset& poset);

/// tau_{F_1}^{a_1} ... tau_{F_m}^{a_m}; in normal form the support is a chain
/// and the top face never appears (tau_top = 1). Grading: deg tau_F =
/// 2 (n - rk F), matching the cohomological degree of its image.
struct FaceMonomial {
  std::vector<std::pair<int, int>> factors;  // (poset face index, exponent>0)
  auto operator<=>(const FaceMonomial&) const = default;
};

int monomial_degree2(const FacePoset& poset, const FaceMonomial& m);

struct FaceRingElement {
  std::map<FaceMonomial, Rat> terms;  // no zero coefficients
  bool operator==(const FaceRingElement&) const = default;
};

/// Least face containing both (poset indices); throws "no common upper face"
/// or "least upper face not unique".
int face_join(const FacePoset& poset, int f, int g);
/// Connected components of the intersection subgraph, as poset indices;
/// throws when a component is not itself a face.
std::vector<int> face_meet_components(const FacePoset& poset, int f, int g);

/// Chain-supported normal form of tau_{faces[0]} ... tau_{faces[m-1]}
/// (repetitions allowed). A non-null rng randomizes the rewrite order, which
/// must not change the result (confluence).
FaceRingElement straighten(const FacePoset& poset, std::vector<int> faces,
                           std::mt19937_64* rng = nullptr);
FaceRingElement straighten_product(const FacePoset& poset, const FaceRingElement& a,
                                   const FaceRingElement& b);

/// All chain-supported monomials of the given degree, in canonical order.
std::vector<FaceMonomial> chain_monomials(const FacePoset& poset, int degree2);
/// Their counts for 2d = 0..D.
std::vector<int> face_ring_hilbert(const FacePoset& poset, int D);

/// Multiplicative extension of the per-face product formula (thom_class).
CohomologyClass facemap_image(const TGraph& lift, const FacePoset& poset,
                              const FaceRingElement& x);

struct FacemapIso {
  std::vector<bool> per_degree;  // 2d = 0..D
  bool all = false;
};

/// Images of the chain monomials are independent and span H^{2d}, per degree.
FacemapIso check_facemap_iso(const GkmGraph& g, int D);

/// Compares k[S(Gamma_T)]/I with the cohomology of gK, where I is generated
/// by the degree-2 tau-preimages of ker p . 1.
struct QuotientComparison {
  std::vector<int> quotient_dims;
  std::vector<int> target_dims;
  std::vector<bool> equal;
  bool all_equal = false;
};

QuotientComparison face_ring_quotient_check(const GkmGraph& gK, const GkmGraph& gT,
                                           const IntMatrix& p, int D);

}  // namespace gkm
