#include "gkm/abfp.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

Polynomial QuotientRing::normal_form(const Polynomial& f) const {
  Polynomial changed = f.substitute_linear(v);
  Polynomial out(rank);
  for (const auto& [e, c] : changed.terms()) {
    bool killed = false;
    for (int i = 0; i < num_killed; ++i)
      if (e[i] > 0) killed = true;
    if (!killed) out.add_term(e, c);
  }
  return out;
}

Polynomial QuotientRing::lift(const Polynomial& nf) const { return nf.substitute_linear(v_inv); }

std::vector<Exponents> QuotientRing::basis(int d) const {
  std::vector<Exponents> out;
  if (rank == num_killed) {
    // the quotient is the ground field
    if (d == 0) out.push_back(Exponents(rank, 0));
    return out;
  }
  for (const auto& tail : homogeneous_monomials(rank - num_killed, d)) {
    Exponents e(rank, 0);
    std::copy(tail.begin(), tail.end(), e.begin() + num_killed);
    out.push_back(std::move(e));
  }
  return out;
}

RatVec QuotientRing::coords(const Polynomial& nf, int d) const {
  auto mons = basis(d);
  RatVec out(mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j) out[j] = nf.coeff(mons[j]);
  return out;
}

QuotientRing make_quotient(const GkmGraph& g, const Face& f, CoeffMode mode) {
  QuotientRing q;
  q.rank = g.rank;
  FaceAnnihilator fa = face_ideal(g, f, mode);
  q.saturated = fa.saturated;
  if (fa.generators.empty()) {
    q.num_killed = 0;
    q.v = IntMatrix::identity(g.rank);
    q.v_inv = q.v;
    return q;
  }
  SmithForm snf = smith_normal_form(from_rows(fa.generators, g.rank));
  q.num_killed = static_cast<int>(snf.rank());
  q.v = snf.v;
  q.v_inv = snf.v_inv;
  return q;
}

AbfpComplex build_abfp(const GkmGraph& g, const SignAssignment& signs, CoeffMode mode) {
  AbfpComplex c;
  c.graph = g;
  c.poset = face_poset(g);
  if (!check_regular_cw(c.poset)) throw std::runtime_error("complex undefined");
  c.signs = signs;
  for (int fi : c.poset.by_rank[1]) c.edge_quot.push_back(make_quotient(g, c.poset.faces[fi], mode));
  if (c.poset.by_rank.size() > 2)
    for (int fi : c.poset.by_rank[2])
      c.face_quot.push_back(make_quotient(g, c.poset.faces[fi], mode));
  return c;
}

AbfpComplex build_abfp(const GkmGraph& g, CoeffMode mode) {
  FacePoset poset = face_poset(g);
  if (!check_regular_cw(poset)) throw std::runtime_error("complex undefined");
  SignAssignment signs;
  try {
    signs = solve_signs(poset);
  } catch (const std::runtime_error&) {
    throw std::runtime_error("complex undefined");
  }
  return build_abfp(g, signs, mode);
}

DegreeSlice degree_slice(const AbfpComplex& c, int degree2) {
  if (degree2 < 0 || degree2 % 2 != 0) throw std::invalid_argument("degree must be even");
  const GkmGraph& g = c.graph;
  const int d = degree2 / 2;
  const auto& vertices = c.poset.by_rank[0];
  const auto& edges = c.poset.by_rank[1];
  const bool has2 = c.poset.by_rank.size() > 2;
  const auto mons0 = homogeneous_monomials(g.rank, d);

  DegreeSlice slice;
  slice.degree2 = degree2;
  slice.dim0 = vertices.size() * mons0.size();

  std::vector<std::size_t> edge_offset(edges.size());
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    edge_offset[ei] = slice.dim1;
    slice.dim1 += c.edge_quot[ei].basis(d).size();
  }
  std::vector<std::size_t> face_offset;
  if (has2)
    for (std::size_t fi = 0; fi < c.poset.by_rank[2].size(); ++fi) {
      face_offset.push_back(slice.dim2);
      slice.dim2 += c.face_quot[fi].basis(d).size();
    }

  // d0: for each vertex basis element, its signed restrictions to the edges
  slice.d0 = RatMatrix(slice.dim1, slice.dim0);
  for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
    int v_face = vertices[vi];
    int v = c.poset.faces[v_face].vertices[0];
    for (std::size_t mi = 0; mi < mons0.size(); ++mi) {
      std::size_t col = vi * mons0.size() + mi;
      Polynomial f = Polynomial::monomial(mons0[mi], 1);
      for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        const Face& e_face = c.poset.faces[edges[ei]];
        if (!std::binary_search(e_face.vertices.begin(), e_face.vertices.end(), v)) continue;
        int sgn = c.signs.at(v_face, edges[ei]);
        RatVec restr = c.edge_quot[ei].coords(c.edge_quot[ei].normal_form(f), d);
        for (std::size_t r = 0; r < restr.size(); ++r)
          slice.d0.at(edge_offset[ei] + r, col) += Rat(sgn) * restr[r];
      }
    }
  }

  // d1: for each edge basis element, its signed restrictions to the 2-faces
  if (has2) {
    slice.d1 = RatMatrix(slice.dim2, slice.dim1);
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
      auto e_basis = c.edge_quot[ei].basis(d);
      for (std::size_t bi = 0; bi < e_basis.size(); ++bi) {
        std::size_t col = edge_offset[ei] + bi;
        Polynomial ambient = c.edge_quot[ei].lift(Polynomial::monomial(e_basis[bi], 1));
        for (std::size_t fi = 0; fi < c.poset.by_rank[2].size(); ++fi) {
          int f_face = c.poset.by_rank[2][fi];
          if (!c.poset.leq(edges[ei], f_face)) continue;
          int sgn = c.signs.at(edges[ei], f_face);
          RatVec restr = c.face_quot[fi].coords(c.face_quot[fi].normal_form(ambient), d);
          for (std::size_t r = 0; r < restr.size(); ++r)
            slice.d1.at(face_offset[fi] + r, col) += Rat(sgn) * restr[r];
        }
      }
    }
  } else {
    slice.d1 = RatMatrix(0, slice.dim1);
  }
  return slice;
}

namespace {

bool is_zero_matrix(const RatMatrix& m) {
  for (const Rat& x : m.data)
    if (x != 0) return false;
  return true;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rat& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

std::size_t kernel_dim(const RatMatrix& m) { return m.cols - rank(m); }

}  // namespace

bool check_cochain(const AbfpComplex& c, int D) {
  for (int degree2 = 0; degree2 <= D; degree2 += 2) {
    DegreeSlice s = degree_slice(c, degree2);
    if (s.d1.rows > 0 && !is_zero_matrix(rat_mul(s.d1, s.d0))) return false;
  }
  return true;
}

std::vector<int> homology_at(const AbfpComplex& c, AbfpPosition pos, int D) {
  std::vector<int> out;
  for (int degree2 = 0; degree2 <= D; degree2 += 2) {
    auto basis = cohomology_basis(c.graph, degree2);
    if (pos == AbfpPosition::cohomology) {
      // the augmentation is the identity on vertex tuples: kernel = relations
      // among the basis vectors, i.e. always zero, computed honestly
      RatMatrix m(basis.empty() ? 0 : class_to_vector(c.graph, basis[0]).size(), basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        RatVec col = class_to_vector(c.graph, basis[j]);
        for (std::size_t r = 0; r < col.size(); ++r) m.at(r, j) = col[r];
      }
      out.push_back(static_cast<int>(kernel_dim(m)));
      continue;
    }
    DegreeSlice s = degree_slice(c, degree2);
    if (pos == AbfpPosition::zero) {
      out.push_back(static_cast<int>(kernel_dim(s.d0) - basis.size()));
    } else {
      std::size_t rank_d0 = s.dim0 - kernel_dim(s.d0);
      out.push_back(static_cast<int>(kernel_dim(s.d1) - rank_d0));
    }
  }
  return out;
}

IntVec d0_invariant_factors(const AbfpComplex& c, int degree2) {
  DegreeSlice s = degree_slice(c, degree2);
  IntMatrix m(s.d0.rows, s.d0.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    if (s.d0.data[i].get_den() != 1)
      throw std::runtime_error("d0 is not integral");  // cannot happen: v is unimodular
    m.data[i] = s.d0.data[i].get_num();
  }
  return smith_normal_form(m).diagonal();
}

SignIndependence sign_independence_check(const GkmGraph& g, int D) {
  FacePoset poset = face_poset(g);
  if (!check_regular_cw(poset)) throw std::runtime_error("complex undefined");
  SignAssignment s1 = solve_signs(poset, false);
  SignAssignment s2 = solve_signs(poset, true);
  SignIndependence res;
  if (s1.sign == s2.sign) return res;  // single solution: check skipped
  res.applicable = true;
  AbfpComplex c1 = build_abfp(g, s1);
  AbfpComplex c2 = build_abfp(g, s2);
  res.equal = homology_at(c1, AbfpPosition::cohomology, D) ==
                  homology_at(c2, AbfpPosition::cohomology, D) &&
              homology_at(c1, AbfpPosition::zero, D) == homology_at(c2, AbfpPosition::zero, D) &&
              homology_at(c1, AbfpPosition::one, D) == homology_at(c2, AbfpPosition::one, D);
  return res;
}

}  // namespace gkm
