#pragma once

#include "gkm/cohomology.hpp"
#include "gkm/faces.hpp"
#include "gkm/graph.hpp"

namespace gkm {

/// S(t*)/I_F in normal form: a unimodular change of coordinates sends the
/// ideal generators to the leading variables, which are then dropped.
struct QuotientRing {
  int rank = 0;        // ambient variable count
  int num_killed = 0;  // independent ideal generators
  IntMatrix v, v_inv;  // t = v s; generators become multiples of s_1..s_r
  bool saturated = true;

  /// Canonical representative: coordinates changed, killed variables dropped.
  Polynomial normal_form(const Polynomial& f) const;
  /// Back to ambient coordinates (a distinguished preimage of a normal form).
  Polynomial lift(const Polynomial& nf) const;
  /// Monomials of degree d in the surviving variables (killed exponents 0).
  std::vector<Exponents> basis(int d) const;
  RatVec coords(const Polynomial& nf, int d) const;
};

QuotientRing make_quotient(const GkmGraph& g, const Face& f, CoeffMode mode);

/// Positions 0..2 of the face-indexed cochain complex
///   AB0 = sum_v S(t*) -> AB1 = sum_e S/I_e -> AB2 = sum_F S/I_F
/// with incidence signs from the GF(2) diamond system.
struct AbfpComplex {
  GkmGraph graph;
  FacePoset poset;
  SignAssignment signs;
  std::vector<QuotientRing> edge_quot;  // parallel to poset.by_rank[1]
  std::vector<QuotientRing> face_quot;  // parallel to poset.by_rank[2]
};

/// Throws "complex undefined" when S_2 is not regular-CW or admits no sign
/// assignment (the construction needs a cell structure).
AbfpComplex build_abfp(const GkmGraph& g, CoeffMode mode = CoeffMode::rational);
AbfpComplex build_abfp(const GkmGraph& g, const SignAssignment& signs,
                       CoeffMode mode = CoeffMode::rational);

struct DegreeSlice {
  int degree2 = 0;
  std::size_t dim0 = 0, dim1 = 0, dim2 = 0;
  RatMatrix d0;  // dim1 x dim0
  RatMatrix d1;  // dim2 x dim1
};

DegreeSlice degree_slice(const AbfpComplex& c, int degree2);

/// d1 . d0 = 0 in every degree 2d <= D.
bool check_cochain(const AbfpComplex& c, int D);

enum class AbfpPosition { cohomology, zero, one };

/// Homology dimension per degree 2d = 0..D at the requested position:
/// cohomology: ker(H_T -> AB0); zero: ker d0 / H_T; one: ker d1 / im d0.
std::vector<int> homology_at(const AbfpComplex& c, AbfpPosition pos, int D);

/// Invariant factors of the integral d0 in one degree (informational torsion
/// data; all differentials are integer matrices).
IntVec d0_invariant_factors(const AbfpComplex& c, int degree2);

struct SignIndependence {
  bool applicable = false;  // false when only one sign solution exists
  bool equal = false;       // homology tables of two solutions agree
};

SignIndependence sign_independence_check(const GkmGraph& g, int D);

}  // namespace gkm
