#include <random>

#include "cherw/linalg.hpp"
#include "cherw/series.hpp"
#include "doctest.h"

using namespace cherw;

namespace {

Poly random_poly(const ContextPtr& ctx, std::mt19937& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-5, 5), var(0, ctx->size() - 1), deg(0, maxdeg);
  Poly p(ctx);
  for (int t = 0; t < terms; ++t) {
    Poly m(ctx, frac(coef(rng), 1 + std::abs(coef(rng))));
    int d = deg(rng);
    for (int k = 0; k < d; ++k) m *= Poly::var(ctx, var(rng));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("scalar canonical form") {
  CHECK(parse_scalar("6/4") == frac(3, 2));
  CHECK(to_string(parse_scalar("-0/7")) == "0");
  CHECK(to_string(frac(-2, 4)) == "-1/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-2, 3) == -4);
  CHECK(factorial(6) == 720);
}

TEST_CASE("poly basics and canonical text") {
  auto ctx = make_context({"a", "b", "c"});
  Poly a = Poly::var(ctx, "a"), b = Poly::var(ctx, "b");
  Poly p = (a + b) * (a - b);
  CHECK(p == a * a - b * b);
  CHECK(p.to_string() == "a^2 - b^2");
  CHECK((frac(1, 2) * a * b - 3).to_string() == "1/2*a*b - 3");
  CHECK(p.derivative(0) == 2 * a);
  CHECK(p.evaluate({3, 1, 0}) == 8);
  auto coeffs = (a * a * b + a + 1).coefficients_in(0);
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[2] == b);
  CHECK(Poly(ctx).degree() == -1);
}

TEST_CASE("ring axioms on random triples") {
  auto ctx = make_context({"a", "b", "c", "d"});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(ctx, rng, 4, 3), q = random_poly(ctx, rng, 4, 3), r = random_poly(ctx, rng, 4, 3);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("substitute and embed") {
  auto ctx = make_context({"x", "y"});
  auto big = make_context({"y", "z", "x"});
  Poly x = Poly::var(ctx, "x"), y = Poly::var(ctx, "y");
  Poly p = x * x * y + 2;
  Poly e = p.embed(big);
  CHECK(e.to_string() == "y*x^2 + 2");
  CHECK(e.embed(ctx) == p);
  Poly z = Poly::var(big, "z");
  Poly s = p.substitute(big, {z + 1, Poly(big, 3)});
  CHECK(s == 3 * (z + 1) * (z + 1) + 2);
}

TEST_CASE("series_invert") {
  auto ctx = make_context({"a", "b"});
  Poly a = Poly::var(ctx, "a"), b = Poly::var(ctx, "b");
  TruncSeries s("t", 4);
  s.set(0, Poly(1));
  s.set(1, Poly(-1));
  auto inv = series_invert(s);
  for (int k = 0; k < 4; ++k) CHECK(coefficient_of(inv, k) == Poly(1));

  CHECK(coefficient_of(series_invert(TruncSeries::constant("t", 3, Poly(1))), 0) == Poly(1));

  TruncSeries u("t", 3);
  u.set(0, Poly(ctx, 1));
  u.set(1, -a);
  u.set(2, -b);
  auto ui = series_invert(u);
  CHECK(coefficient_of(ui, 0) == Poly(ctx, 1));
  CHECK(coefficient_of(ui, 1) == a);
  CHECK(coefficient_of(ui, 2) == a * a + b);
  auto one = u * ui;
  CHECK(one.coefficients().size() == 1);

  TruncSeries g("z", 5);
  g.set(0, Poly(ctx, 1));
  g.set(1, -a);
  CHECK(coefficient_of(series_invert(g), 3) == a * a * a);

  TruncSeries bad("t", 3);
  bad.set(0, a);
  CHECK_THROWS_WITH_AS(series_invert(bad), "not invertible as series", Error);
  CHECK_THROWS_WITH_AS(series_invert(TruncSeries("t", 3)), "not invertible as series", Error);
}

TEST_CASE("series_invert property on random unit series") {
  auto ctx = make_context({"a", "b", "c"});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> nz(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    int order = 2 + trial % 5;
    TruncSeries s("t", order);
    s.set(0, Poly(ctx, frac(nz(rng), nz(rng))));
    for (int k = 1; k < order; ++k) s.set(k, random_poly(ctx, rng, 2, 2));
    auto prod = s * series_invert(s);
    CHECK(prod.order() == order);
    CHECK(coefficient_of(prod, 0) == Poly(ctx, 1));
    for (int k = 1; k < order; ++k) CHECK(coefficient_of(prod, k).is_zero());
  }
}

TEST_CASE("coefficient_of with Laurent support") {
  TruncSeries s("z", 3);
  s.set(0, Poly(1));
  s.set(1, Poly(2));
  s.set(2, Poly(3));
  CHECK(coefficient_of(s, 1) == Poly(2));
  TruncSeries l("z", 2);
  l.set(-1, Poly(1));
  l.set(0, Poly(5));
  CHECK(coefficient_of(l, -1) == Poly(1));
  CHECK(coefficient_of(l, -3).is_zero());
  CHECK_THROWS_WITH_AS(coefficient_of(l, 2), doctest::Contains("beyond truncation"), Error);
  // z^-1 * (1 + z + O(z^3)) is known through z^1
  TruncSeries w("z", 3);
  w.set(0, Poly(1));
  w.set(1, Poly(1));
  auto prod = TruncSeries::monomial("z", 100, Poly(1), -1) * w;
  CHECK(prod.order() == 2);
  CHECK(coefficient_of(series_invert(l), 2) == Poly(-5));
}

TEST_CASE("solve_linear") {
  Matrix id = identity_matrix(3);
  std::vector<Scalar> b{1, 2, 3};
  CHECK(solve_linear(id, b) == b);
  CHECK(solve_linear({{2, 0}, {0, 4}}, {1, 1}) == std::vector<Scalar>{frac(1, 2), frac(1, 4)});
  CHECK_THROWS_AS(solve_linear({{1, 2}, {2, 4}}, {1, 1}), SingularError);
  try {
    solve_linear({{1, 2}, {2, 4}}, {1, 1});
  } catch (const SingularError& e) {
    CHECK(e.rank == 1);
  }
  // overdetermined and consistent
  CHECK(solve_linear({{1, 0}, {0, 1}, {1, 1}}, {1, 2, 3}) == std::vector<Scalar>{1, 2});
  CHECK_THROWS_AS(solve_linear({{1, 0}, {0, 1}, {1, 1}}, {1, 2, 4}), SingularError);
}

TEST_CASE("solve_linear residual on random systems") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a(5, std::vector<Scalar>(5));
    std::vector<Scalar> b(5);
    for (auto& row : a)
      for (auto& v : row) v = d(rng);
    for (auto& v : b) v = d(rng);
    if (rank(a) < 5) continue;
    auto x = solve_linear(a, b);
    CHECK(mat_vec(a, x) == b);
    CHECK(multiply(a, inverse(a)) == identity_matrix(5));
    ++solved;
  }
  CHECK(solved > 20);
}

TEST_CASE("nullspace") {
  Matrix a{{1, 1, 0}, {0, 0, 1}};
  auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK(mat_vec(a, ns[0]) == std::vector<Scalar>{0, 0});
}
