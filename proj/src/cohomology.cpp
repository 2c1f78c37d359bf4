#include "gkm/cohomology.hpp"

#include "gkm/extension.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace gkm {

namespace {

int half_degree(int degree2) {
  if (degree2 < 0 || degree2 % 2 != 0)
    throw std::invalid_argument("cohomology degree must be even and nonnegative");
  return degree2 / 2;
}

/// Unimodular V with (alpha^T V) s = s_1, i.e. V^T alpha = e_1.
IntMatrix divisor_coordinates(const IntVec& alpha) {
  IntVec prim = alpha;
  Int c = content(prim);
  if (c == 0) throw std::invalid_argument("zero label");
  for (Int& x : prim) x /= c;
  SmithForm snf = smith_normal_form(from_rows({prim}, prim.size()));
  // v^T is k x k unimodular and (prim * v) = e_1^T up to the 1x1 factor u
  IntMatrix w = snf.v;  // prim^T * v = u^{-1} * [1 0 .. 0]
  if (snf.u.at(0, 0) == -1)
    for (std::size_t r = 0; r < w.rows; ++r)
      for (std::size_t cidx = 0; cidx < w.cols; ++cidx) w.at(r, cidx) = -w.at(r, cidx);
  return w;
}

/// For one edge: matrix taking the coefficient vector of a degree-d
/// polynomial to the s_1-free coefficients of its pullback along V.
IntMatrix divisibility_conditions(const IntVec& alpha, int k, int d) {
  IntMatrix v = divisor_coordinates(alpha);
  auto mons = homogeneous_monomials(k, d);
  std::vector<Exponents> free_mons;
  for (const auto& m : mons)
    if (m[0] == 0) free_mons.push_back(m);
  IntMatrix out(free_mons.size(), mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j) {
    Polynomial composed = Polynomial::monomial(mons[j], 1).substitute_linear(v);
    for (std::size_t r = 0; r < free_mons.size(); ++r) {
      Rat c = composed.coeff(free_mons[r]);
      out.at(r, j) = c.get_num();  // denominators are 1: V is integral
    }
  }
  return out;
}

IntMatrix congruence_system(const GkmGraph& g, int d) {
  const int k = g.rank;
  const std::size_t nmon = homogeneous_monomials(k, d).size();
  std::vector<IntVec> rows;
  for (int e = 0; e < g.num_edges(); ++e) {
    int dart = g.canonical_dart(e);
    IntMatrix cond = divisibility_conditions(g.label[dart], k, d);
    int u = g.dart_origin[dart], v = g.head(dart);
    for (std::size_t r = 0; r < cond.rows; ++r) {
      IntVec row(g.num_vertices() * nmon, 0);
      for (std::size_t j = 0; j < nmon; ++j) {
        row[u * nmon + j] += cond.at(r, j);
        row[v * nmon + j] -= cond.at(r, j);
      }
      rows.push_back(std::move(row));
    }
  }
  return from_rows(rows, g.num_vertices() * nmon);
}

}  // namespace

bool is_cohomology_class(const GkmGraph& g, const CohomologyClass& c) {
  int d = half_degree(c.degree2);
  if (static_cast<int>(c.value.size()) != g.num_vertices()) return false;
  for (const auto& f : c.value)
    if (!f.is_zero() && !f.is_homogeneous(d)) return false;
  for (int e = 0; e < g.num_edges(); ++e) {
    int dart = g.canonical_dart(e);
    Polynomial diff = c.value[g.head(dart)] - c.value[g.dart_origin[dart]];
    if (diff.is_zero()) continue;
    if (!divide_by_linear(diff, g.label[dart], CoeffMode::rational).divisible) return false;
  }
  return true;
}

CohomologyClass class_sum(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.degree2 != b.degree2 || a.value.size() != b.value.size())
    throw std::invalid_argument("class_sum: mismatched classes");
  CohomologyClass out = a;
  for (std::size_t v = 0; v < out.value.size(); ++v) out.value[v] += b.value[v];
  return out;
}

CohomologyClass class_scale(const Rat& c, const CohomologyClass& a) {
  CohomologyClass out = a;
  for (auto& f : out.value) f = c * f;
  return out;
}

CohomologyClass class_product(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.value.size() != b.value.size())
    throw std::invalid_argument("class_product: mismatched classes");
  CohomologyClass out;
  out.degree2 = a.degree2 + b.degree2;
  for (std::size_t v = 0; v < a.value.size(); ++v) out.value.push_back(a.value[v] * b.value[v]);
  return out;
}

CohomologyClass poly_multiply(const Polynomial& f, const CohomologyClass& a) {
  CohomologyClass out;
  out.degree2 = a.degree2 + 2 * std::max(0, f.degree());
  for (const auto& g : a.value) out.value.push_back(f * g);
  return out;
}

RatVec class_to_vector(const GkmGraph& g, const CohomologyClass& c) {
  int d = half_degree(c.degree2);
  auto mons = homogeneous_monomials(g.rank, d);
  RatVec out(g.num_vertices() * mons.size(), 0);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (std::size_t j = 0; j < mons.size(); ++j) out[v * mons.size() + j] = c.value[v].coeff(mons[j]);
  return out;
}

CohomologyClass class_from_vector(const GkmGraph& g, int degree2, const RatVec& vec) {
  int d = half_degree(degree2);
  auto mons = homogeneous_monomials(g.rank, d);
  CohomologyClass c;
  c.degree2 = degree2;
  c.value.assign(g.num_vertices(), Polynomial(g.rank));
  for (int v = 0; v < g.num_vertices(); ++v)
    for (std::size_t j = 0; j < mons.size(); ++j)
      c.value[v].add_term(mons[j], vec[v * mons.size() + j]);
  return c;
}

std::vector<CohomologyClass> cohomology_basis(const GkmGraph& g, int degree2, CoeffMode mode) {
  int d = half_degree(degree2);
  if (mode == CoeffMode::integer)
    for (int e = 0; e < g.num_edges(); ++e)
      if (!is_primitive(g.label[g.canonical_dart(e)]))
        throw std::invalid_argument("integer mode requires primitive labels");
  IntMatrix sys = congruence_system(g, d);
  std::vector<CohomologyClass> out;
  if (mode == CoeffMode::rational) {
    for (const RatVec& v : rational_kernel_basis(sys)) out.push_back(class_from_vector(g, degree2, v));
  } else {
    IntMatrix ker = kernel_lattice_basis(sys);
    for (std::size_t r = 0; r < ker.rows; ++r) {
      RatVec v;
      for (const Int& x : ker.row(r)) v.emplace_back(x);
      out.push_back(class_from_vector(g, degree2, v));
    }
  }
  return out;
}

std::vector<int> hilbert_function(const GkmGraph& g, int D, CoeffMode mode, int jobs) {
  int count = D / 2 + 1;
  std::vector<int> dims(count, 0);
  jobs = std::max(1, std::min(jobs, count));
  auto worker = [&](int offset) {
    for (int i = offset; i < count; i += jobs)
      dims[i] = static_cast<int>(cohomology_basis(g, 2 * i, mode).size());
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  return dims;
}

namespace {

/// Incremental rank tracker over Q: rows are reduced against the pivots seen
/// so far; a row that survives increases the rank.
struct RankTracker {
  std::vector<RatVec> reduced;        // rows in echelon form
  std::vector<std::size_t> pivots;

  bool add(RatVec row) {
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      const Rat& lead = row[pivots[i]];
      if (lead != 0) {
        Rat f = lead / reduced[i][pivots[i]];
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * reduced[i][j];
      }
    }
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) {
        pivots.push_back(j);
        reduced.push_back(std::move(row));
        return true;
      }
    return false;
  }
  std::size_t rank() const { return reduced.size(); }
};

}  // namespace

RestrictionResult restriction_map(const GkmGraph& gT, const GkmGraph& gK, const IntMatrix& p,
                                  int degree2) {
  auto rep = check_extension(gK, gT, p);
  if (!rep.ok())
    throw std::invalid_argument("restriction_map: not an extension: " + rep.violations.front());
  RestrictionResult res;
  res.degree2 = degree2;
  res.source_basis = cohomology_basis(gT, degree2);
  res.target_basis = cohomology_basis(gK, degree2);

  // coordinates: solve in the target basis by RREF on [basis columns | images]
  int d = half_degree(degree2);
  std::size_t mk = homogeneous_monomials(gK.rank, d).size() * gK.num_vertices();
  IntMatrix subst = transpose(p);  // t_i -> sum_j p(j,i) s_j
  std::vector<RatVec> images;
  for (const auto& cls : res.source_basis) {
    CohomologyClass img;
    img.degree2 = degree2;
    for (const auto& f : cls.value) img.value.push_back(f.substitute_linear(subst));
    images.push_back(class_to_vector(gK, img));
  }
  std::size_t dim_k = res.target_basis.size();
  RatMatrix aug(mk, dim_k + images.size());
  for (std::size_t c = 0; c < dim_k; ++c) {
    RatVec col = class_to_vector(gK, res.target_basis[c]);
    for (std::size_t r = 0; r < mk; ++r) aug.at(r, c) = col[r];
  }
  for (std::size_t c = 0; c < images.size(); ++c)
    for (std::size_t r = 0; r < mk; ++r) aug.at(r, dim_k + c) = images[c][r];
  rref(aug);
  res.matrix = RatMatrix(images.size(), dim_k);
  for (std::size_t c = 0; c < images.size(); ++c)
    for (std::size_t r = 0; r < dim_k; ++r) res.matrix.at(c, r) = aug.at(r, dim_k + c);

  RankTracker tracker;
  for (const auto& img : images) tracker.add(img);
  res.image_dim = static_cast<int>(tracker.rank());
  res.surjective = res.image_dim == static_cast<int>(dim_k);
  if (!res.surjective)
    for (const auto& cls : res.target_basis)
      if (tracker.add(class_to_vector(gK, cls))) {
        res.not_hit = cls;
        break;
      }
  return res;
}

KernelIdealReport kernel_ideal_check(const GkmGraph& gT, const GkmGraph& gK, const IntMatrix& p,
                                     int D) {
  KernelIdealReport rep;
  IntMatrix kerp = kernel_lattice_basis(p);
  std::vector<CohomologyClass> prev;  // basis one degree lower
  for (int degree2 = 0; degree2 <= D; degree2 += 2) {
    RestrictionResult r = restriction_map(gT, gK, p, degree2);
    int ker_dim = static_cast<int>(r.source_basis.size()) - r.image_dim;
    RankTracker tracker;
    for (std::size_t l = 0; l < kerp.rows; ++l) {
      Polynomial lin = Polynomial::linear_form(kerp.row(l));
      for (const auto& h : prev) tracker.add(class_to_vector(gT, poly_multiply(lin, h)));
    }
    rep.kernel_dims.push_back(ker_dim);
    rep.ideal_dims.push_back(static_cast<int>(tracker.rank()));
    rep.equal.push_back(ker_dim == static_cast<int>(tracker.rank()));
    prev = std::move(r.source_basis);
  }
  rep.all_equal = std::all_of(rep.equal.begin(), rep.equal.end(), [](bool b) { return b; });
  return rep;
}

ModuleGenerators module_generators(const GkmGraph& g, int D) {
  ModuleGenerators out;
  std::vector<CohomologyClass> prev;
  for (int degree2 = 0; degree2 <= D; degree2 += 2) {
    auto basis = cohomology_basis(g, degree2);
    out.hilbert.push_back(static_cast<int>(basis.size()));
    RankTracker tracker;
    for (int i = 0; i < g.rank; ++i) {
      Polynomial t = Polynomial::variable(g.rank, i);
      for (const auto& h : prev) tracker.add(class_to_vector(g, poly_multiply(t, h)));
    }
    int fresh = 0;
    for (const auto& cls : basis)
      if (tracker.add(class_to_vector(g, cls))) {
        out.generators.push_back(cls);
        ++fresh;
      }
    out.new_per_degree.push_back(fresh);
    prev = std::move(basis);
  }
  return out;
}

FreenessVerdict freeness_probe(const GkmGraph& g, int D) {
  FreenessVerdict verdict;
  verdict.checked_to = D;
  verdict.gens = module_generators(g, D);
  const auto& gens = verdict.gens.generators;
  for (int degree2 = 0; degree2 <= D && verdict.witness_degree2 < 0; degree2 += 2) {
    int d = degree2 / 2;
    // columns: monomial multiples of each generator landing in degree 2d
    struct Product {
      std::size_t gen;
      Exponents mon;
    };
    std::vector<Product> products;
    std::vector<RatVec> cols;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int gd = gens[gi].degree2 / 2;
      if (gd > d) continue;
      for (const auto& m : homogeneous_monomials(g.rank, d - gd)) {
        products.push_back({gi, m});
        cols.push_back(class_to_vector(g, poly_multiply(Polynomial::monomial(m, 1), gens[gi])));
      }
    }
    if (cols.empty()) continue;
    RatMatrix mat(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < cols[c].size(); ++r) mat.at(r, c) = cols[c][r];
    auto ker = kernel_basis(mat);
    if (!ker.empty()) {
      verdict.witness_degree2 = degree2;
      verdict.relation.assign(gens.size(), Polynomial(g.rank));
      for (std::size_t c = 0; c < products.size(); ++c)
        if (ker[0][c] != 0) verdict.relation[products[c].gen].add_term(products[c].mon, ker[0][c]);
    }
  }
  verdict.free_up_to = verdict.witness_degree2 < 0;
  return verdict;
}

CohomologyClass thom_class(const TGraph& lift, const Face& f) {
  const GkmGraph& g = lift.base;
  CohomologyClass out;
  out.degree2 = 2 * (g.valence - f.rank);
  out.value.assign(g.num_vertices(), Polynomial(g.rank));
  for (int v : f.vertices) {
    Polynomial prod = Polynomial::constant(g.rank, 1);
    for (int dart : g.star[v])
      if (!std::binary_search(f.edges.begin(), f.edges.end(), g.edge_of_dart(dart)))
        prod = prod * Polynomial::linear_form(lift.beta[dart]);
    out.value[v] = prod;
  }
  return out;
}

}  // namespace gkm
