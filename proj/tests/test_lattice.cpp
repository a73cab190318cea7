#include "eschur/errors.hpp"
#include "eschur/lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace eschur;

namespace {

Poly x(int i) { return Poly::x(i); }
Poly a(int d) { return Poly::a(d); }

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("square ice") {
  for (Model m : {Model::L, Model::Lstar, Model::Ell})
    for (int v = 0; v < 16; ++v) {
      int w = v >> 3 & 1, s = v >> 2 & 1, e = v >> 1 & 1, n = v & 1;
      if (w + s != e + n) CHECK(vertex_weight(m, w, s, e, n, x(1), a(0)).is_zero());
    }
}

TEST_CASE("deformed diagonals of the transfer example") {
  CHECK(deformed_diagonals(Partition({4, 4, 1}), Partition({4, 2, 0}), -4, 4) ==
        std::set<int>{-1, 4});
  // top = bottom: every column except the particle positions.
  auto d = deformed_diagonals(Partition({2, 1}), Partition({2, 1}), -3, 4);
  CHECK(d == std::set<int>{-2, 0, 2, 3, 4});
}

TEST_CASE("single rows") {
  CHECK(transfer_row(Model::L, Partition({4, 2, 0}), Partition({4, 4, 1}), x(1), -4, 4) ==
        x(1).pow(3) * (1 + a(-1) * x(1)) * (1 + a(4) * x(1)));
  CHECK(transfer_row(Model::L, Partition({}, 0), Partition({}, 0), x(1), 0, 2) ==
        (1 + a(0) * x(1)) * (1 + a(1) * x(1)) * (1 + a(2) * x(1)));
  CHECK(transfer_row(Model::Ell, Partition({}, 0), Partition({2}), x(1), 1, 3) ==
        (x(1) - a(1)) * (x(1) - a(2)));
  CHECK(transfer_row(Model::L, Partition({0, 0}), Partition({2, 2}), x(1), -2, 2).is_zero());
}

TEST_CASE("deformed diagonals match single-row states") {
  std::mt19937 rng(12);
  int done = 0;
  while (done < 50) {
    std::vector<int> top(3), bottom(3);
    int prev = 4;
    for (auto &v : top) prev = v = static_cast<int>(rng() % (prev + 1));
    for (int k = 0; k < 3; ++k)
      bottom[k] = std::uniform_int_distribution<int>(k + 1 < 3 ? top[k + 1] : 0, top[k])(rng);
    Partition t(top), b(bottom);
    if (!is_horizontal_strip(t, b)) continue;
    ++done;
    Poly expected = x(1).pow(t.size() - b.size());
    for (int d : deformed_diagonals(t, b, -3, 5)) expected *= 1 + a(d) * x(1);
    CHECK(transfer_row(Model::L, b, t, x(1), -3, 5) == expected);
  }
}

TEST_CASE("frontier DP equals brute-force state sums") {
  std::mt19937 rng(77);
  const Model models[] = {Model::L, Model::Lstar, Model::Ell};
  for (int k = 0; k < 40; ++k) {
    int rows = 2 + k % 2, lo = -2, hi = rows == 2 ? 2 : 1;
    Grid g;
    g.lo = lo;
    g.hi = hi;
    for (int c = lo; c <= hi; ++c) {
      g.bottom.push_back(static_cast<int>(rng() % 2));
      g.top.push_back(static_cast<int>(rng() % 2));
    }
    for (int r = 0; r < rows; ++r)
      g.rows.push_back(make_row(models[rng() % 3], x(r + 1), lo, hi,
                                [](int d) { return a(d); },
                                static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)));
    CHECK(partition_function(g) == partition_function_brute(g));
  }
  Grid empty;
  empty.lo = 0;
  empty.hi = 1;
  empty.bottom = empty.top = {1, 0};
  CHECK(partition_function(empty) == Poly(1));
}

TEST_CASE("E grid of the (2,0) example") {
  SkewShape s(Partition({2, 0}));
  EdgeParams p = EdgeParams::defaults(s, 2).with_window(-2, 1);
  Poly expected = x(1).pow(2) * (1 + a(-1) * x(2)) * (1 + a(0) * x(2)) +
                  x(1) * x(2) * (1 + a(1) * x(1)) * (1 + a(-1) * x(2)) +
                  x(2).pow(2) * (1 + a(0) * x(1)) * (1 + a(1) * x(1));
  CHECK(edge_schur_lattice(s, p, Form::T) == expected);
  CHECK(edge_schur_lattice(s, p, Form::TStar) == expected);
  // A narrow window still needs columns for the vacuum particle at -2.
  CHECK(edge_schur_lattice(s, p.with_window(-1, 0)) == edge_schur(s, p.with_window(-1, 0)));
}

TEST_CASE("lattice forms agree with the chain sum") {
  std::mt19937 rng(5);
  for (int k = 0; k < 30; ++k) {
    std::vector<int> outer(2), inner(2);
    outer[0] = static_cast<int>(rng() % 4);
    outer[1] = static_cast<int>(rng() % (outer[0] + 1));
    inner[0] = static_cast<int>(rng() % (outer[0] + 1));
    inner[1] = static_cast<int>(rng() % (std::min(inner[0], outer[1]) + 1));
    SkewShape s{Partition(outer), Partition(inner)};
    int n = 1 + k % 3;
    EdgeParams p = EdgeParams::defaults(s, n).with_window(-2 - k % 2, outer[0] + k % 2);
    Poly e = edge_schur(s, p);
    CHECK(edge_schur_lattice(s, p, Form::T) == e);
    CHECK(edge_schur_lattice(s, p, Form::TStar) == e);
  }
  SkewShape same(Partition({2, 1}), Partition({2, 1}));
  EdgeParams p = EdgeParams::defaults(same, 1).with_window(-2, 2);
  Poly expected(1);
  for (int d : deformed_diagonals(same.outer(), same.outer(), -2, 2))
    expected *= 1 + a(d) * x(1);
  CHECK(edge_schur_lattice(same, p) == expected);
}

TEST_CASE("factorial schur from Ell rows") {
  SkewShape s20(Partition({2, 0}));
  Poly expected = (x(1) - a(1)) * (x(1) - a(2)) + (x(1) - a(1)) * (x(2) - a(3)) +
                  (x(2) - a(2)) * (x(2) - a(3));
  CHECK(factorial_schur_lattice(s20, 2, 0) == expected);
  CHECK(factorial_schur_lattice(s20, 2, 1) == expected);
  CHECK(factorial_schur_lattice(SkewShape(Partition({}, 0)), 2, 0) == Poly(1));
  std::mt19937 rng(14);
  for (int k = 0; k < 20; ++k) {
    std::vector<int> outer(2), inner(2);
    outer[0] = static_cast<int>(rng() % 4);
    outer[1] = static_cast<int>(rng() % (outer[0] + 1));
    inner[0] = static_cast<int>(rng() % (outer[0] + 1));
    inner[1] = static_cast<int>(rng() % (std::min(inner[0], outer[1]) + 1));
    SkewShape s{Partition(outer), Partition(inner)};
    int n = 1 + k % 3, l = s.inner().length();
    Poly f = oracle::factorial_schur(s, n);
    CHECK(factorial_schur_lattice(s, n, l) == f);
    CHECK(factorial_schur_lattice(s, n, l + 1) == f);
  }
}

TEST_CASE("Yang-Baxter relations") {
  for (auto k : {YBKind::RLL_L, YBKind::RLL_Lstar, YBKind::rll_Ell, YBKind::frakRLell}) {
    YBResult r = yang_baxter_check(k);
    CHECK_MESSAGE(r.ok, yb_kind_name(k));
    CHECK(r.boundaries == 64);
  }
}

TEST_CASE("perturbed weights break Yang-Baxter") {
  for (auto k : {YBKind::RLL_L, YBKind::RLL_Lstar, YBKind::rll_Ell, YBKind::frakRLell})
    for (std::string t : {"a1", "a2", "b1", "b2", "c1", "c2", "r0", "r1", "r2", "r3", "r4"}) {
      YBResult r = yang_baxter_check(k, Perturbation{t});
      CHECK_MESSAGE(!r.ok, std::string(yb_kind_name(k) + " " + t));
      CHECK(r.lhs != r.rhs);
    }
}

TEST_CASE("commutation of T* and t") {
  CHECK(commutation_check(-2, 3, 6, 2, 2).ok);
  CHECK(commutation_check(0, 0, 6, 1, 1).ok);
  CHECK_FALSE(commutation_check(-2, 3, 6, 1, 1, true).ok);
}

TEST_CASE("Cauchy identity") {
  CHECK(cauchy_check(Partition({}, 0), Partition({}, 0), 1, 1, -2, 2, 4).ok);
  CHECK(cauchy_check(Partition({1}), Partition({}, 0), 2, 1, -2, 2, 4).ok);
}

TEST_CASE("free fermion condition") {
  CHECK(free_fermion_check(Model::L));
  CHECK(free_fermion_check(Model::Lstar));
  CHECK(free_fermion_check(Model::Ell));
  CHECK_FALSE(free_fermion_check(std::array<Poly, 6>{1, 1, 1, 1, 1, 1}));
}

TEST_CASE("transfer rows commute") {
  CHECK(symmetry_check(2, 2, 3, -2, 2).ok);
}

TEST_CASE("model names") {
  CHECK(parse_model("Lstar") == Model::Lstar);
  CHECK(parse_yb_kind("frakRLell") == YBKind::frakRLell);
  CHECK_THROWS(parse_yb_kind("nope"));
}

}
