#pragma once

#include "gkm/exact.hpp"

#include <map>
#include <string>
#include <vector>

namespace gkm {

enum class CoeffMode { rational, integer };

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded lexicographic order (global monomial order for the whole project).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All exponent vectors of total degree d in k variables, in grlex order.
std::vector<Exponents> homogeneous_monomials(int k, int d);

/// Multivariate polynomial with rational coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rat, GrlexLess>;

  explicit Polynomial(int rank = 0) : rank_(rank) {}
  static Polynomial constant(int rank, const Rat& c);
  static Polynomial monomial(Exponents e, const Rat& c);
  static Polynomial linear_form(const IntVec& a);
  static Polynomial variable(int rank, int i);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rat coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rat& c);

  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int d) const;
  bool has_integer_coeffs() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rat& c, const Polynomial& a);
  bool operator==(const Polynomial& o) const = default;

  /// Substitute t_i -> images[i]; all images share a common rank.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Linear change of variables t = M s (M has rank() rows): t_i -> sum_j M(i,j) s_j.
  Polynomial substitute_linear(const IntMatrix& m) const;

  std::string str(const std::vector<std::string>& vars = {}) const;

 private:
  int rank_;
  TermMap terms_;
};

struct LinearDivision {
  Polynomial quotient;
  bool divisible = false;
};

/// Exact division of f by the linear form <a, t>. a must be nonzero; in
/// integer mode a must additionally be primitive.
LinearDivision divide_by_linear(const Polynomial& f, const IntVec& a,
                                CoeffMode mode = CoeffMode::rational);

}  // namespace gkm
