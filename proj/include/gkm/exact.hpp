#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major matrix over arbitrary-precision integers.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  IntMatrix(std::size_t r, std::size_t c, std::vector<Int> d)
      : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols) throw std::invalid_argument("IntMatrix: entry count mismatch");
  }
  static IntMatrix identity(std::size_t n);

  Int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  IntVec row(std::size_t r) const;
  IntVec col(std::size_t c) const;
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVec mat_vec(const IntMatrix& a, const IntVec& x);
IntMatrix transpose(const IntMatrix& a);
IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
Int det(const IntMatrix& a);
/// Inverse of a matrix with det = ±1; throws otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// u * m * v = s, s diagonal with d_i >= 0 and d_i | d_{i+1}; u, v unimodular.
struct SmithForm {
  IntMatrix s, u, v;
  IntMatrix u_inv, v_inv;
  std::size_t rank() const;
  IntVec diagonal() const;
};
SmithForm smith_normal_form(const IntMatrix& m);

/// Dense matrix over rationals with exact elimination.
struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> data;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static RatMatrix from_int(const IntMatrix& m);

  Rat& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  void append_row(const RatVec& r);
};

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(RatMatrix m);
/// Basis of the right kernel, one vector per free column, in RREF-canonical form.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

std::size_t rank_rational(const IntMatrix& m);
std::vector<RatVec> rational_kernel_basis(const IntMatrix& m);

/// Rows form a basis of the integer kernel lattice {x : m x = 0}; always saturated.
IntMatrix kernel_lattice_basis(const IntMatrix& m);
/// Rows span a saturated (split) sublattice iff all SNF invariant factors are 1.
bool span_is_saturated(const IntMatrix& rows);
/// Rows form a basis of the saturation of the row lattice of m.
IntMatrix saturate_row_lattice(const IntMatrix& m);

Int content(const IntVec& a);  // gcd of entries, >= 0
bool is_zero(const IntVec& a);
bool is_primitive(const IntVec& a);
IntVec negate(const IntVec& a);
/// Sign-class normal form: first nonzero entry positive (zero vector unchanged).
IntVec normalized_sign_rep(IntVec v);
/// b = c*a for an integer c? (a nonzero)
bool integer_multiple_of(const IntVec& b, const IntVec& a, Int* factor = nullptr);

std::string to_string(const IntVec& v);

}  // namespace gkm
