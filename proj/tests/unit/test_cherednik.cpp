#include "cherw/cherednik.hpp"
#include "doctest.h"

using namespace cherw;

namespace {

Poly zeta(const CherednikAlgebra& h, int j) { return Poly::var(h.alg->coef_ctx(), zeta_name(j)); }

}  // namespace

TEST_CASE("H_2(gl_1) defining relation") {
  auto h = build_universal(LieKind::gl, 1, 2);
  CHECK(h.params == std::vector<std::string>{"zeta0"});
  Element yx = h.alg->commutator(h.y(1), h.x(1));
  Element want = h.alg->scalar(zeta(h, 0)) + h.alg->gen("E(1,1)", 2) * Poly(3L);
  CHECK(yx == want);
}

TEST_CASE("identity acts by +1 on y and -1 on x") {
  auto h = build_universal(LieKind::gl, 2, 2);
  Element id = h.a("E(1,1)") + h.a("E(2,2)");
  for (int i = 1; i <= 2; ++i) {
    CHECK(h.alg->commutator(id, h.y(i)) == h.y(i));
    CHECK(h.alg->commutator(id, h.x(i)) == -h.x(i));
  }
}

TEST_CASE("generator order options") {
  auto a = build_universal(LieKind::gl, 1, 1, VOrder::y_then_x);
  auto b = build_universal(LieKind::gl, 1, 1, VOrder::x_then_y);
  CHECK(a.y_gen[0] < a.x_gen[0]);
  CHECK(b.x_gen[0] < b.y_gen[0]);
  CHECK(a.alg->consistency_check().ok());
  CHECK(b.alg->consistency_check().ok());
}

TEST_CASE("consistency of small universal algebras") {
  for (int m = 0; m <= 3; ++m) {
    auto h = build_universal(LieKind::gl, 1, m);
    auto rep = h.alg->consistency_check();
    CHECK_MESSAGE(rep.ok(), "gl_1 m=" << m << " " << rep.summary());
  }
  for (int m = 1; m <= 2; ++m) {
    auto h = build_universal(LieKind::gl, 2, m);
    CHECK(h.alg->consistency_check().ok());
  }
  CHECK(build_universal(LieKind::sp, 1, 1).alg->consistency_check().ok());
  CHECK(build_universal(LieKind::sp, 1, 2).alg->consistency_check().ok());
}

TEST_CASE("corrupted action entry fails the diamond check") {
  auto h = build_universal(LieKind::gl, 1, 2);
  auto g = h.g;
  PBWAlgebra bad(h.alg->coef_ctx());
  for (int i = 0; i < h.alg->num_generators(); ++i) bad.add_generator(h.alg->generator(i));
  for (int i = 0; i < h.alg->num_generators(); ++i)
    for (int j = 0; j < i; ++j) {
      Element r = h.alg->generator_commutator(i, j);
      if (!r.is_zero()) bad.set_commutator(i, j, r);
    }
  // [A, x] = -x is the correct action; use 2x instead
  bad.set_commutator(h.g_gen[0], h.x_gen[0], bad.gen(h.x_gen[0]) * Poly(2L));
  bad.finalize();
  auto rep = bad.consistency_check();
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.first_failure());
  CHECK(rep.first_failure()->witness.find("(ab)c - a(bc)") == 0);
}

TEST_CASE("specialize") {
  auto h = build_universal(LieKind::gl, 1, 3);
  CHECK(h.params.size() == 2);
  auto s0 = specialize(h, {0, 0});
  Element yx = s0.alg->commutator(s0.y(1), s0.x(1));
  CHECK(yx == s0.alg->gen("E(1,1)", 3) * Poly(4L));
  auto s = specialize(h, {frac(1, 2), -3});
  CHECK(s.alg->consistency_check().ok());
  Element yx2 = s.alg->commutator(s.y(1), s.x(1));
  Element want = s.alg->gen("E(1,1)", 3) * Poly(4L) + s.alg->gen("E(1,1)") * Poly(-6L) + s.alg->scalar(frac(1, 2));
  CHECK(yx2 == want);
  CHECK_THROWS_WITH(specialize(h, {1}), doctest::Contains("expected 2"));
}

TEST_CASE("H_{zeta_0 r_0}(sp) has scalar [y_i, y_j]") {
  for (int n = 1; n <= 2; ++n) {
    auto h = build_universal(LieKind::sp, n, 0);
    REQUIRE(h.params.empty());
    // length 0 with leading coefficient 1: [y_i, y_j] = omega(y_i, y_j)
    Matrix j = symplectic_J(n);
    for (int a = 1; a <= 2 * n; ++a)
      for (int b = 1; b <= 2 * n; ++b) CHECK(h.alg->commutator(h.y(a), h.y(b)) == h.alg->scalar(j[a - 1][b - 1]));
  }
  auto ctx = make_context({"zeta0"});
  auto h = build_cherednik(LieKind::sp, 1, {Poly::var(ctx, 0)}, ctx);
  CHECK(h.alg->commutator(h.y(1), h.y(2)) == h.alg->scalar(Poly::var(ctx, 0) * symplectic_J(1)[0][1]));
}

TEST_CASE("filtration degrees") {
  for (int m = 1; m <= 3; ++m) {
    auto h = build_universal(LieKind::gl, 1, m);
    CHECK(filtration_degree(h, h.alg->mul(h.y(1), h.x(1))) == 2 * (m + 1));
    CHECK(filtration_degree(h, h.alg->commutator(h.y(1), h.x(1))) <= 2 * m);
    if (m >= 2) CHECK(filtration_degree(h, h.alg->scalar(zeta(h, 0))) == 2 * m);
  }
  auto s = build_universal(LieKind::sp, 1, 2);
  CHECK(filtration_degree(s, s.y(1)) == 5);
  CHECK(filtration_degree(s, s.alg->scalar(zeta(s, 0))) == 8);
  CHECK(filtration_degree(s, s.alg->commutator(s.y(1), s.y(2))) == 8);
}

TEST_CASE("defining relations respect the Kazhdan degree") {
  for (auto kind : {LieKind::gl, LieKind::sp}) {
    auto h = build_universal(kind, 1, 2);
    for (const auto& rel : defining_relations(h)) {
      if (rel.rhs.is_zero()) continue;
      int top = h.alg->generator(rel.a).degree + h.alg->generator(rel.b).degree;
      int lhs_deg = top - 2;  // commutators drop the Kazhdan degree by 2
      // symmetrization adds lower-order tails, so only the top part is homogeneous
      CHECK(h.alg->filtration_degree(rel.rhs) == lhs_deg);
    }
  }
}

TEST_CASE("symmetrized pairings have the pairing as symbol") {
  auto h = build_universal(LieKind::gl, 2, 3);
  auto t = pairing_table(LieKind::gl, 2, 3);
  for (int j = 0; j <= 3; ++j) {
    Element r = h.r(j, 1, 2);
    Element top;
    for (const auto& [m, c] : r.terms())
      if (mono_length(m) == j) top.add_term(m, c);
    CHECK(h.alg->commutative_image(top, t->ctx) == t->at(j, 1, 2));
  }
}

TEST_CASE("gl_1 with zeta_0 r_0 + zeta_1 r_1 closes on a Lie algebra") {
  auto ctx = make_context({"zeta0", "zeta1"});
  auto h = build_cherednik(LieKind::gl, 1, {Poly::var(ctx, 0), Poly::var(ctx, 1)}, ctx);
  Element yx = h.alg->commutator(h.y(1), h.x(1));
  // zeta_0 + 2 zeta_1 E11: linear in the generators
  CHECK(yx == h.alg->scalar(Poly::var(ctx, 0)) + h.a("E(1,1)") * (Poly::var(ctx, 1) * Scalar(2)));
  CHECK(h.alg->consistency_check().ok());
}
