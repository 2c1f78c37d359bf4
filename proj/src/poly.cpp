#include "gkm/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gkm {

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Exponents> homogeneous_monomials(int k, int d) {
  if (k < 1 || d < 0) throw std::invalid_argument("homogeneous_monomials: k >= 1, d >= 0 required");
  std::vector<Exponents> out;
  Exponents cur(k, 0);
  // enumerate recursively, then sort into grlex order
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == k - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

Polynomial Polynomial::constant(int rank, const Rat& c) {
  Polynomial p(rank);
  p.add_term(Exponents(rank, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Exponents e, const Rat& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear_form(const IntVec& a) {
  Polynomial p(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Exponents e(a.size(), 0);
    e[i] = 1;
    p.add_term(e, Rat(a[i]));
  }
  return p;
}

Polynomial Polynomial::variable(int rank, int i) {
  Exponents e(rank, 0);
  e[i] = 1;
  return monomial(std::move(e), 1);
}

Rat Polynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != rank_) throw std::invalid_argument("add_term: rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

bool Polynomial::is_homogeneous(int d) const {
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

bool Polynomial::has_integer_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(rank_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("poly add: rank mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("poly sub: rank mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("poly mul: rank mismatch");
  Polynomial p(a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.rank_);
      for (int i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial operator*(const Rat& c, const Polynomial& a) {
  Polynomial p(a.rank_);
  if (c == 0) return p;
  for (const auto& [e, x] : a.terms_) p.terms_.emplace(e, c * x);
  return p;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != rank_)
    throw std::invalid_argument("substitute: image count mismatch");
  int out_rank = images.empty() ? 0 : images[0].rank();
  Polynomial result(out_rank);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(out_rank, c);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < e[i]; ++j) term = term * images[i];
    result += term;
  }
  return result;
}

Polynomial Polynomial::substitute_linear(const IntMatrix& m) const {
  if (m.rows != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("substitute_linear: shape mismatch");
  std::vector<Polynomial> images;
  images.reserve(rank_);
  for (int i = 0; i < rank_; ++i) images.push_back(Polynomial::linear_form(m.row(i)));
  return substitute(images);
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](int i) {
    if (i < static_cast<int>(vars.size())) return vars[i];
    return "t" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  // print highest-degree terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = total_degree(e) > 0;
    if (a != 1 || !has_var) os << a.get_str();
    bool printed = (a != 1 || !has_var);
    for (int i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << var_name(i);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

LinearDivision divide_by_linear(const Polynomial& f, const IntVec& a, CoeffMode mode) {
  if (static_cast<int>(a.size()) != f.rank())
    throw std::invalid_argument("divide_by_linear: rank mismatch");
  if (is_zero(a)) throw std::invalid_argument("divide_by_linear: zero linear form");
  Int cont = content(a);
  if (mode == CoeffMode::integer && cont != 1)
    throw std::invalid_argument("divide_by_linear: non-primitive form in integer mode");
  IntVec prim(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) prim[i] = a[i] / cont;

  int k = f.rank();
  // unimodular V with prim * V = ±e1; then <prim, t> becomes ±s1 under t = V s
  SmithForm snf = smith_normal_form(from_rows({prim}, prim.size()));
  const IntMatrix& V = snf.v;
  Polynomial g = f.substitute_linear(V);
  // sign of the image of the form
  IntVec img = mat_vec(transpose(V), prim);  // row vector prim * V
  Rat lead(img[0]);                          // ±1

  LinearDivision out;
  out.quotient = Polynomial(k);
  Polynomial qs(k);
  for (const auto& [e, c] : g.terms()) {
    if (e[0] == 0) return out;  // not divisible
    Exponents q = e;
    q[0] -= 1;
    qs.add_term(q, c / lead);
  }
  out.divisible = true;
  out.quotient = qs.substitute_linear(inverse_unimodular(V));
  // account for the content scaled out of a: quotient * a = f
  if (cont != 1) out.quotient = Rat(1, cont) * out.quotient;
  return out;
}

}  // namespace gkm
