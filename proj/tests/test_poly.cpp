#include "eschur/errors.hpp"
#include "eschur/poly.hpp"

#include <doctest.h>

#include <random>

using namespace eschur;

namespace {

Poly random_poly(std::mt19937 &rng, int max_terms = 4) {
  std::uniform_int_distribution<int> coef(-5, 5), nterms(0, max_terms),
      which(0, 5), expo(1, 2);
  const Var vars[] = {Var::x(1), Var::x(2), Var::y(1), Var::alpha(),
                      Var::a(-1), Var::a(2)};
  Poly p;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Poly m(coef(rng));
    int deg = 0;
    while (deg < 4 && which(rng) < 4) {
      int e = expo(rng);
      m *= Poly(vars[which(rng)]).pow(e);
      deg += e;
    }
    p += m;
  }
  return p;
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("addition cancels") {
  Poly x1 = Poly::x(1), a0 = Poly::a(0);
  CHECK((x1 + a0) + (x1 - a0) == 2 * x1);
  CHECK(x1 + Poly() == x1);
  Poly q = (1 + Poly::a(-1) * Poly::x(2)) * (1 + a0 * Poly::x(2));
  CHECK((q + (-q)).is_zero());
}

TEST_CASE("product of factorial terms") {
  Poly x1 = Poly::x(1), a1 = Poly::a(1), a2 = Poly::a(2);
  Poly p = (x1 - a1) * (x1 - a2);
  CHECK(p == x1.pow(2) - a1 * x1 - a2 * x1 + a1 * a2);
  CHECK(canonical_string(p) == "x1^2 - a1*x1 - a2*x1 + a1*a2");
  CHECK(p * 1 == p);
}

TEST_CASE("truncated product drops high degree") {
  // Only x and y count toward the bound; a and alpha are coefficients.
  Poly a1 = Poly::a(1), x1 = Poly::x(1);
  Poly f = (1 + a1 * x1).with_trunc(2);
  Poly cube = f * f * f;
  CHECK(cube == 1 + 3 * a1 * x1 + 3 * a1.pow(2) * x1.pow(2));
  CHECK(cube.trunc() == 2);
  Poly g = (1 + x1 * Poly::y(1)).with_trunc(3);
  CHECK(g * g == 1 + 2 * x1 * Poly::y(1));
}

TEST_CASE("series inverse") {
  Poly x1 = Poly::x(1), y1 = Poly::y(1), a0 = Poly::a(0);
  CHECK(series_inverse(1 - x1 * y1, 3) == 1 + x1 * y1);
  CHECK(series_inverse(Poly(1), 5) == Poly(1));
  Poly inv = series_inverse(1 + a0 * y1, 2);
  CHECK(inv == 1 - a0 * y1 + a0.pow(2) * y1.pow(2));
  CHECK(equal_mod_degree(inv * (1 + a0 * y1), Poly(1), 2));
  CHECK_THROWS_AS(series_inverse(2 + x1, 3), NotInvertible);
  CHECK_THROWS_AS(series_inverse(1 + a0 + x1, 3), NotInvertible);
}

TEST_CASE("series inverse times input is one, random") {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    Poly p(k % 2 ? 1 : -1);
    Poly r = random_poly(rng);
    for (const auto &[m, c] : r.terms())
      if (series_degree(m) > 0) p += Poly::monomial(m, c);
    int t = 1 + k % 5;
    Poly q = series_inverse(p, t);
    CHECK(equal_mod_degree(p * q, Poly(1), t));
  }
}

TEST_CASE("substitution into a geometric series") {
  Poly y1 = Poly::y(1), al = Poly::alpha();
  Poly expr = y1 * series_inverse(1 - al * y1, 3);
  Poly got = substitute(y1, Var::y(1), expr, 3);
  CHECK(got == y1 + al * y1.pow(2) + al.pow(2) * y1.pow(3));
  CHECK(substitute(Poly(1), Var::y(1), expr, 3) == Poly(1));
  CHECK_THROWS_AS(substitute(y1, Var::y(1), 1 + y1), DivergenceRisk);
}

TEST_CASE("canonical strings") {
  CHECK(canonical_string(Poly()) == "0");
  CHECK(canonical_string(Poly::a(-3) * Poly::x(1)) == "a(-3)*x1");
  CHECK(Poly::parse("a-3*x1") == Poly::a(-3) * Poly::x(1));
  CHECK(Poly::parse("x1^2 - a1*x1 - a2*x1 + a1*a2") ==
        (Poly::x(1) - Poly::a(1)) * (Poly::x(1) - Poly::a(2)));
  CHECK_THROWS_AS(Poly::parse("x1 +* 2"), ParseError);
}

TEST_CASE("parse inverts canonical_string, random") {
  std::mt19937 rng(5);
  for (int k = 0; k < 200; ++k) {
    Poly p = random_poly(rng, 6);
    CHECK(Poly::parse(canonical_string(p)) == p);
  }
}

TEST_CASE("ring axioms, random triples") {
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("truncated arithmetic equals truncating afterwards") {
  std::mt19937 rng(8);
  for (int k = 0; k < 100; ++k) {
    Poly p = random_poly(rng), q = random_poly(rng);
    int t = k % 6;
    CHECK(p.with_trunc(t) * q.with_trunc(t) == (p * q).truncated(t));
    CHECK(p.with_trunc(t) + q == (p + q).truncated(t));
  }
}

TEST_CASE("swapping variables") {
  Poly p = Poly::x(1).pow(2) * Poly::x(2) + Poly::a(1);
  CHECK(swap_vars(p, Var::x(1), Var::x(2)) ==
        Poly::x(2).pow(2) * Poly::x(1) + Poly::a(1));
}

}
