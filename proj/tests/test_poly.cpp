#include <doctest.h>

#include "gkm/poly.hpp"

#include <random>

using namespace gkm;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int k, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg), coeff(-5, 5), nterms(1, 5);
  Polynomial p(k);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e(k);
    for (int i = 0; i < k; ++i) e[i] = deg(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

IntVec random_nonzero_vec(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  IntVec a(k);
  do {
    for (int i = 0; i < k; ++i) a[i] = coeff(rng);
  } while (is_zero(a));
  return a;
}

}  // namespace

TEST_CASE("homogeneous monomial enumeration") {
  auto m1 = homogeneous_monomials(3, 1);
  REQUIRE(m1.size() == 3);
  CHECK(m1[0] == Exponents{0, 0, 1});
  CHECK(m1[1] == Exponents{0, 1, 0});
  CHECK(m1[2] == Exponents{1, 0, 0});

  CHECK(homogeneous_monomials(3, 2).size() == 6);

  auto m0 = homogeneous_monomials(2, 0);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0] == Exponents{0, 0});
}

TEST_CASE("grlex order is graded") {
  GrlexLess less;
  CHECK(less({2, 0}, {0, 3}));   // degree first
  CHECK(less({0, 2}, {1, 1}));   // then lex
  CHECK_FALSE(less({1, 1}, {1, 1}));
}

TEST_CASE("divide_by_linear: stated examples") {
  // f = x*z, a = x -> quotient z
  Polynomial f = Polynomial::monomial({1, 0, 1}, 1);
  auto d = divide_by_linear(f, {Int(1), Int(0), Int(0)});
  CHECK(d.divisible);
  CHECK(d.quotient == Polynomial::monomial({0, 0, 1}, 1));

  // f = x + y not divisible by x - y
  Polynomial g = Polynomial::linear_form({Int(1), Int(1)});
  CHECK_FALSE(divide_by_linear(g, {Int(1), Int(-1)}).divisible);

  // x^2 - y^2 = (x - y)(x + y)
  Polynomial h(2);
  h.add_term({2, 0}, 1);
  h.add_term({0, 2}, -1);
  auto dh = divide_by_linear(h, {Int(1), Int(-1)});
  CHECK(dh.divisible);
  CHECK(dh.quotient == Polynomial::linear_form({Int(1), Int(1)}));
}

TEST_CASE("divide_by_linear: error paths") {
  Polynomial f = Polynomial::constant(2, 1);
  CHECK_THROWS(divide_by_linear(f, {Int(0), Int(0)}));
  CHECK_THROWS(divide_by_linear(f, {Int(2), Int(4)}, CoeffMode::integer));
  // rational mode scales a non-primitive form
  Polynomial g = Polynomial::linear_form({Int(2), Int(4)});
  auto d = divide_by_linear(g, {Int(2), Int(4)});
  CHECK(d.divisible);
  CHECK(d.quotient == Polynomial::constant(2, 1));
}

TEST_CASE("divide_by_linear: constructed products always divide back") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 300; ++iter) {
    int k = 2 + static_cast<int>(iter % 3);
    Polynomial g = random_poly(rng, k, 2);
    IntVec a = random_nonzero_vec(rng, k);
    Polynomial f = g * Polynomial::linear_form(a);
    auto d = divide_by_linear(f, a);
    REQUIRE(d.divisible);
    REQUIRE(d.quotient * Polynomial::linear_form(a) == f);
    REQUIRE(d.quotient == g);
  }
}

TEST_CASE("divide_by_linear: round-trip on random f when divisible") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    int k = 2 + static_cast<int>(iter % 3);
    Polynomial f = random_poly(rng, k, 3);
    IntVec a = random_nonzero_vec(rng, k);
    auto d = divide_by_linear(f, a);
    if (d.divisible) REQUIRE(d.quotient * Polynomial::linear_form(a) == f);
  }
}

TEST_CASE("polynomial arithmetic basics") {
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  Polynomial p = (x + y) * (x - y);
  Polynomial q(2);
  q.add_term({2, 0}, 1);
  q.add_term({0, 2}, -1);
  CHECK(p == q);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous(2));
  CHECK((p - p).is_zero());
  CHECK(Polynomial(2).degree() == -1);
}

TEST_CASE("substitute_linear composes with inverse") {
  std::mt19937_64 rng(5);
  IntMatrix m(3, 3, {Int(1), Int(2), Int(0), Int(0), Int(1), Int(3), Int(0), Int(0), Int(1)});
  IntMatrix mi = inverse_unimodular(m);
  for (int iter = 0; iter < 50; ++iter) {
    Polynomial f = random_poly(rng, 3, 3);
    CHECK(f.substitute_linear(m).substitute_linear(mi) == f);
  }
}

TEST_CASE("polynomial printing") {
  Polynomial p(3);
  p.add_term({1, 0, 1}, 1);
  p.add_term({0, 1, 0}, -2);
  CHECK(p.str({"x", "y", "z"}) == "x*z - 2*y");
}
