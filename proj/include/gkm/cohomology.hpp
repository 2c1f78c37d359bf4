#pragma once

#include "gkm/faces.hpp"
#include "gkm/graph.hpp"
#include "gkm/poly.hpp"

#include <optional>

namespace gkm {

/// Element of equivariant graph cohomology: one homogeneous polynomial of
/// degree d per vertex, subject to f(head) - f(tail) in (alpha(e)) per edge.
struct CohomologyClass {
  int degree2 = 0;                 // cohomological degree 2d
  std::vector<Polynomial> value;   // per vertex, homogeneous of degree d
  bool operator==(const CohomologyClass&) const = default;
};

bool is_cohomology_class(const GkmGraph& g, const CohomologyClass& c);

CohomologyClass class_sum(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass class_scale(const Rat& c, const CohomologyClass& a);
/// Pointwise product; degrees add.
CohomologyClass class_product(const CohomologyClass& a, const CohomologyClass& b);
/// Multiplication by a global polynomial (image of H(BT)).
CohomologyClass poly_multiply(const Polynomial& f, const CohomologyClass& a);

/// Coefficient vector over (vertex, degree-d monomial) pairs, grlex within
/// each vertex block.
RatVec class_to_vector(const GkmGraph& g, const CohomologyClass& c);
CohomologyClass class_from_vector(const GkmGraph& g, int degree2, const RatVec& v);

/// Basis of H^{2d}: kernel of the per-edge divisibility conditions, solved
/// exactly. Integer mode returns a lattice basis of the integral solutions
/// (labels must be primitive).
std::vector<CohomologyClass> cohomology_basis(const GkmGraph& g, int degree2,
                                              CoeffMode mode = CoeffMode::rational);

/// dim H^{2d} for 2d = 0, 2, ..., D; degrees are solved independently on up
/// to `jobs` threads.
std::vector<int> hilbert_function(const GkmGraph& g, int D,
                                  CoeffMode mode = CoeffMode::rational, int jobs = 1);

/// The map applying p to every vertex polynomial, in the two degree-2d bases.
struct RestrictionResult {
  int degree2 = 0;
  std::vector<CohomologyClass> source_basis;  // of H(gT)
  std::vector<CohomologyClass> target_basis;  // of H(gK)
  RatMatrix matrix;  // target coordinates of each source basis image, by rows
  int image_dim = 0;
  bool surjective = false;
  std::optional<CohomologyClass> not_hit;  // witness when not surjective
};

RestrictionResult restriction_map(const GkmGraph& gT, const GkmGraph& gK, const IntMatrix& p,
                                  int degree2);

/// Degreewise comparison of ker(p_*) with (ker p) . H, both inside H(gT).
struct KernelIdealReport {
  std::vector<int> kernel_dims;  // dim ker p_* per 2d = 0..D
  std::vector<int> ideal_dims;   // dim span{l . h} per 2d
  std::vector<bool> equal;
  bool all_equal = false;
};

KernelIdealReport kernel_ideal_check(const GkmGraph& gT, const GkmGraph& gK, const IntMatrix& p,
                                     int D);

/// Lifts of a basis of H / (H^+(BT) . H) up to degree D, chosen degreewise by
/// first-come pivoting over the canonical bases.
struct ModuleGenerators {
  std::vector<CohomologyClass> generators;
  std::vector<int> new_per_degree;  // quotient dimension per 2d = 0..D
  std::vector<int> hilbert;         // dim H^{2d} alongside
};

ModuleGenerators module_generators(const GkmGraph& g, int D);

/// Searches degreewise for a polynomial-coefficient relation among the chosen
/// module generators.
struct FreenessVerdict {
  bool free_up_to = false;
  int checked_to = 0;          // D
  int witness_degree2 = -1;    // degree of the found relation, when any
  std::vector<Polynomial> relation;  // coefficient per generator; sum gives 0
  ModuleGenerators gens;
};

FreenessVerdict freeness_probe(const GkmGraph& g, int D);

/// Class supported on the face's vertices with value prod of the signed labels
/// of the transversal darts; needs a T-graph lift of the graph.
CohomologyClass thom_class(const TGraph& lift, const Face& f);

}  // namespace gkm
