#include "cherw/liedata.hpp"
#include "doctest.h"

using namespace cherw;

namespace {

// brute-force dimension of {x in g : [e, x] = 0}
int kernel_dim(const LieAlgebra& g, const Matrix& e) {
  const int d = g.dim();
  const int s = g.matrix_size();
  Matrix lin(s * s, std::vector<Scalar>(d));
  for (int a = 0; a < d; ++a) {
    Matrix b = mat_bracket(e, g.basis(a));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) lin[i * s + j][a] = b[i][j];
  }
  return d - rank(lin);
}

PolyMatrix poly_bracket(const PolyMatrix& a, const PolyMatrix& b) { return pm_sub(pm_mul(a, b), pm_mul(b, a)); }

bool all_zero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("build_lie gl_2 structure constants") {
  auto g = build_lie(LieKind::gl, 2);
  CHECK(g->dim() == 4);
  int e21 = g->index("E(2,1)"), e12 = g->index("E(1,2)");
  auto br = g->bracket(e21, e12);
  std::vector<Scalar> c(4, Scalar(0));
  for (auto& [k, v] : br) c[k] = v;
  CHECK(c[g->index("E(1,1)")] == -1);
  CHECK(c[g->index("E(2,2)")] == 1);
  CHECK(c[e12] == 0);
  // trace-dual of E_ij is E_ji
  auto d = g->dual(e12);
  REQUIRE(d.size() == 1);
  CHECK(d[0].first == e21);
}

TEST_CASE("sp_2 is sl_2") {
  auto g = build_lie(LieKind::sp, 1);
  CHECK(g->dim() == 3);
  for (int a = 0; a < 3; ++a) CHECK(sp_membership(g->basis(a)));
  // the Killing-type form is nondegenerate and the algebra is perfect
  Matrix span;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::vector<Scalar> row(3, Scalar(0));
      for (auto& [k, v] : g->bracket(a, b)) row[k] = v;
      span.push_back(row);
    }
  CHECK(rank(span) == 3);
  CHECK(rank(Matrix{{g->trace_form(0, 0), g->trace_form(0, 1), g->trace_form(0, 2)},
                    {g->trace_form(1, 0), g->trace_form(1, 1), g->trace_form(1, 2)},
                    {g->trace_form(2, 0), g->trace_form(2, 1), g->trace_form(2, 2)}}) == 3);
}

TEST_CASE("sl_3 dimension and tracelessness") {
  auto g = build_lie(LieKind::sl, 3);
  CHECK(g->dim() == 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(mat_trace(mat_bracket(g->basis(a), g->basis(b))) == 0);
}

TEST_CASE("Jacobi and membership exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(build_lie(LieKind::gl, n)->jacobi_check() >= 0);
    CHECK(build_lie(LieKind::sl, n)->jacobi_check() >= 0);
  }
  for (int n = 1; n <= 3; ++n) {
    auto g = build_lie(LieKind::sp, n);
    CHECK(g->dim() == n * (2 * n + 1));
    for (int a = 0; a < g->dim(); ++a) CHECK(sp_membership(g->basis(a)));
    CHECK(g->jacobi_check() >= 0);
  }
}

TEST_CASE("one_block_nilpotent") {
  auto t = one_block_nilpotent(LieKind::sl, 1, 2);
  CHECK(t.e == unit_matrix(3, 2, 3));
  Matrix h = zero_matrix(3);
  h[1][1] = 1;
  h[2][2] = -1;
  CHECK(t.h == h);
  CHECK(t.f == unit_matrix(3, 3, 2));
  auto s = one_block_nilpotent(LieKind::sp, 1, 1);
  CHECK(s.e == unit_matrix(4, 2, 3));
  CHECK(mat_bracket(s.e, s.f) == s.h);
  CHECK_THROWS_AS(one_block_nilpotent(LieKind::sl, 1, 1), Error);
  // Jordan type: rank of e^k drops by one per step on the single block
  auto t4 = one_block_nilpotent(LieKind::sl, 2, 3);
  CHECK(rank(t4.e) == 2);
  CHECK(rank(multiply(t4.e, t4.e)) == 1);
  auto s4 = one_block_nilpotent(LieKind::sp, 1, 2);
  CHECK(rank(s4.e) == 3);
}

TEST_CASE("centralizer dimensions match brute-force kernel") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) {
      auto cb = centralizer_basis(LieKind::gl, n, m);
      CHECK(cb.dim() == n * n + 2 * n + m - 1);
      auto g = build_lie(LieKind::sl, n + m);
      CHECK(kernel_dim(*g, one_block_nilpotent(LieKind::sl, n, m).e) == cb.dim() - 1 + 1);
      Matrix span;
      for (auto* x : cb.all()) {
        std::vector<Scalar> row;
        for (auto& r : x->mat) row.insert(row.end(), r.begin(), r.end());
        span.push_back(row);
      }
      CHECK(rank(span) == cb.dim());
      for (auto& y : cb.v_plus) {
        CHECK(y.h_weight == m - 1);
        CHECK(y.t_weight == 1);
      }
      for (auto& x : cb.v_minus) {
        CHECK(x.h_weight == m - 1);
        CHECK(x.t_weight == -1);
      }
      for (int k = 0; k <= m - 2; ++k) CHECK(cb.xi[k].h_weight == 2 * m - 2 * k - 2);
    }
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto cb = centralizer_basis(LieKind::sp, n, m);
      CHECK(cb.dim() == n * (2 * n + 1) + 2 * n + m);
      auto g = build_lie(LieKind::sp, n + m);
      CHECK(kernel_dim(*g, one_block_nilpotent(LieKind::sp, n, m).e) == cb.dim());
      for (auto& y : cb.v) CHECK(y.h_weight == 2 * m - 1);
      for (int k = 0; k < m; ++k) CHECK(cb.xi[k].h_weight == 4 * m - 4 * k - 2);
    }
}

TEST_CASE("xi basis and T_{n,m}") {
  auto cb = centralizer_basis(LieKind::gl, 1, 3);
  // xi_{m-2} = E_23 + E_34
  Matrix x = zero_matrix(4);
  x[1][2] = 1;
  x[2][3] = 1;
  CHECK(cb.xi[1].mat == x);
  Matrix t = iota_gl(identity_matrix(2), 2, 2);
  CHECK(mat_trace(t) == 0);
  CHECK(t[0][0] == frac(1, 2));
  CHECK(t[3][3] == frac(-1, 2));
}

TEST_CASE("slice matrices lie in e + ker ad f") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) {
      auto sm = slice_matrix(LieKind::gl, n, m);
      auto t = one_block_nilpotent(LieKind::sl, n, m);
      CHECK(all_zero(poly_bracket(pm_sub(sm.X, to_poly_matrix(t.e, sm.ctx)), to_poly_matrix(t.f, sm.ctx))));
      CHECK(pm_trace(sm.X).is_zero());
    }
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto sm = slice_matrix(LieKind::sp, n, m);
      auto t = one_block_nilpotent(LieKind::sp, n, m);
      CHECK(all_zero(poly_bracket(pm_sub(sm.X, to_poly_matrix(t.e, sm.ctx)), to_poly_matrix(t.f, sm.ctx))));
      const int s = static_cast<int>(sm.X.size());
      for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) {
          Scalar sign = ((i + j + 1) % 2 == 0) ? 1 : -1;
          CHECK(sm.X[s - j][s - i] == sm.X[i - 1][j - 1] * sign);
        }
    }
  // free coordinates = dim ker ad(f) in sp_4 (= 3 + 2 + 1)
  CHECK(slice_matrix(LieKind::sp, 1, 1).coordinates.size() ==
        static_cast<std::size_t>(kernel_dim(*build_lie(LieKind::sp, 2), one_block_nilpotent(LieKind::sp, 1, 1).f)));
  CHECK(slice_matrix(LieKind::sp, 1, 1).coordinates.size() == 6);
  // display pattern for n = 1, m = 2: zero in position (1,3)
  auto sm = slice_matrix(LieKind::gl, 1, 2);
  CHECK(sm.X[0][2].is_zero());
  CHECK(sm.X[1][2] == Poly(sm.ctx, 1));
  CHECK(sm.X[0][1] == Poly::var(sm.ctx, "u(1)"));
  CHECK(sm.X[2][0] == Poly::var(sm.ctx, "v(1)"));
}

TEST_CASE("char_invariants") {
  auto ctx = make_context({"a"});
  PolyMatrix d = to_poly_matrix(Matrix{{1, 0}, {0, 2}}, ctx);
  auto ci = char_invariants(d, 2);
  CHECK(ci.F[1] == Poly(ctx, 3));
  CHECK(ci.F[2] == Poly(ctx, 2));
  CHECK(ci.trS[2] == Poly(ctx, 7));
  CHECK(ci.trLambda[2] == Poly(ctx, 2));
  CHECK((ci.trS[2] - ci.trS[1] * ci.trLambda[1] + ci.trLambda[2]).is_zero());
  auto sm = slice_matrix(LieKind::gl, 2, 2);
  CHECK(char_invariants(sm.X, 1).F[1].is_zero());
}

TEST_CASE("Newton-type identity on generic matrices") {
  for (int n = 1; n <= 3; ++n) {
    auto g = build_lie(LieKind::gl, n);
    std::vector<std::string> names;
    for (auto& l : g->labels()) names.push_back("X" + l);
    auto ctx = make_context(names);
    auto ci = char_invariants(g->generic_matrix(ctx, "X"), 4);
    for (int l = 1; l <= 4; ++l) {
      Poly sum(ctx);
      for (int j = 0; j <= l; ++j) sum += (j % 2 ? Scalar(-1) : Scalar(1)) * (ci.trS[l - j] * ci.trLambda[j]);
      CHECK(sum.is_zero());
    }
  }
}
