#include "cherw/cherednik.hpp"
#include "cherw/poisson.hpp"
#include "doctest.h"

using namespace cherw;

namespace {

// top Kazhdan component of a Cherednik element, as a commutative polynomial
Poly top_symbol(const CherednikAlgebra& h, const Element& e, int degree, const ContextPtr& ctx) {
  Element top;
  for (const auto& [m, c] : e.terms())
    for (const auto& t : c.terms()) {
      Poly ct = Poly::monomial(c.ctx(), t.exp, t.coef);
      Element single;
      single.add_term(m, ct);
      if (h.alg->filtration_degree(single) == degree) top.add_term(m, ct);
    }
  return h.alg->commutative_image(top, ctx);
}

}  // namespace

TEST_CASE("bracket basics") {
  auto pc = build_poisson(LieKind::gl, 2, 2);
  Poly f = pc->var("E(1,2)") * pc->var("y1") + pc->var("x2");
  CHECK(poisson_bracket(*pc, f, f).is_zero());
  CHECK(poisson_bracket(*pc, pc->var("E(1,2)"), pc->var("y2")) == pc->var("y1"));
  CHECK(poisson_bracket(*pc, pc->var("E(1,2)"), pc->var("x1")) == -pc->var("x2"));
  CHECK(poisson_jacobi(*pc).ok());
}

TEST_CASE("gl_1 length 2 bracket") {
  auto pc = build_poisson(LieKind::gl, 1, 2);
  Poly a = pc->var("E(1,1)");
  CHECK(poisson_bracket(*pc, pc->var("y1"), pc->var("x1")) == pc->var("zeta0") + a * a * Scalar(3));
}

TEST_CASE("tau_1 for gl is sum x_i y_i") {
  for (int n = 1; n <= 2; ++n) {
    auto pc = build_poisson(LieKind::gl, n, 2);
    Poly want(pc->ctx);
    for (int i = 1; i <= n; ++i) want += pc->var("x" + std::to_string(i)) * pc->var("y" + std::to_string(i));
    CHECK(tau(*pc, 1) == want);
  }
  auto pc = build_poisson(LieKind::gl, 1, 1);
  CHECK_THROWS_WITH(tau(*pc, 2), doctest::Contains("out of range"));
}

TEST_CASE("tau has the expected bidegree") {
  auto gl = build_poisson(LieKind::gl, 2, 1);
  auto sp = build_poisson(LieKind::sp, 1, 1);
  for (auto pc : {gl, sp})
    for (int k = 1; k <= pc->n; ++k) {
      Poly t = tau(*pc, k);
      CHECK_FALSE(t.is_zero());
      for (const auto& term : t.terms()) {
        int dy = 0, dx = 0, dg = 0;
        for (int v : pc->y_var) dy += term.exp.e[v];
        for (int v : pc->x_var) dx += term.exp.e[v];
        for (int v : pc->g_var) dg += term.exp.e[v];
        if (pc->kind == LieKind::gl) {
          CHECK(dy == 1);
          CHECK(dx == 1);
          CHECK(dg == k - 1);
        } else {
          CHECK(dy == 2);
          CHECK(dg == 2 * k - 1);
        }
      }
    }
}

TEST_CASE("c series shape") {
  auto pc = build_poisson(LieKind::gl, 1, 1);
  auto cs = c_series(*pc, kResidueRegion);
  CHECK(cs.c[1] == pc->var("E(1,1)").pow(2));
  CHECK(cs.raw_constant == 0);
  auto sp = build_poisson(LieKind::sp, 2, 1);
  auto series = residue_series(*sp, kResidueRegion);
  for (const auto& [k, c] : series) CHECK(k % 2 == 0);
  CHECK_THROWS_WITH(c_series(*pc, ResidueRegion::small_z), doctest::Contains("residue convention mismatch"));
}

TEST_CASE("the two expansions differ by the polar part of zeta(1/t)") {
  auto pc = build_poisson(LieKind::gl, 2, 2);
  auto small = residue_series(*pc, ResidueRegion::small_z);
  auto large = residue_series(*pc, ResidueRegion::large_z);
  for (int k = 1; k <= 4; ++k) {
    Poly a = small.count(k) ? small[k] : Poly(pc->ctx);
    Poly b = large.count(k) ? large[k] : Poly(pc->ctx);
    CHECK(a == b);
  }
  CHECK(small[-2] == Poly(pc->ctx, 1));
}

TEST_CASE("residue region selection") {
  std::vector<std::string> log;
  CHECK(select_residue_region(&log) == kResidueRegion);
  CHECK(log.size() == 2);
}

TEST_CASE("Poisson centers") {
  CHECK(verify_central(*build_poisson(LieKind::gl, 1, 2), build_poisson(LieKind::gl, 1, 2)->var("zeta0")).ok());
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto rep = poisson_suite(LieKind::gl, n, m);
      CHECK_MESSAGE(rep.ok(), rep.summary());
    }
  CHECK(poisson_suite(LieKind::sp, 1, 2).ok());
}

TEST_CASE("tau alone is not central") {
  auto pc = build_poisson(LieKind::gl, 1, 1);
  auto rep = verify_central(*pc, tau(*pc, 1));
  CHECK_FALSE(rep.ok());
  CHECK(rep.first_failure()->witness.find("{p, y1}") == 0);
}

TEST_CASE("top symbols of commutators are Poisson brackets") {
  for (auto [kind, n, m] : std::vector<std::tuple<LieKind, int, int>>{{LieKind::gl, 1, 2}, {LieKind::gl, 2, 2}, {LieKind::sp, 1, 2}}) {
    auto h = build_universal(kind, n, m);
    auto pc = build_poisson(kind, n, m);
    const PBWAlgebra& A = *h.alg;
    for (int a = 0; a < A.num_generators(); ++a)
      for (int b = 0; b < a; ++b) {
        Element c = A.commutator(A.gen(a), A.gen(b));
        int d = A.generator(a).degree + A.generator(b).degree - 2;
        Poly want = poisson_bracket(*pc, pc->var(A.generator(a).label), pc->var(A.generator(b).label));
        CHECK(top_symbol(h, c, d, pc->ctx) == want);
      }
  }
}

TEST_CASE("Jacobian rank detects dependence") {
  auto pc = build_poisson(LieKind::gl, 2, 1);
  Poly t1 = tau(*pc, 1);
  CHECK(jacobian_rank(*pc, {t1, t1 * t1}, 1) == 1);
  CHECK(jacobian_rank(*pc, {t1, tau(*pc, 2)}, 1) == 2);
}
