#include <map>
#include <random>

#include "cherw/centers.hpp"
#include "cherw/liedata.hpp"
#include "doctest.h"

using namespace cherw;

namespace {

ZPoly zp(const std::vector<Scalar>& c) {
  ZPoly p;
  for (const auto& s : c) p.push_back(Poly(make_context({}), s));
  return p;
}

std::vector<Scalar> scalars(const ZPoly& p) {
  std::vector<Scalar> out;
  for (const auto& c : p) out.push_back(c.constant_term());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Sym^k(C^n) (x) det^b as polynomials in n variables; E_ij acts by x_i d/dx_j + b delta_ij.
// The highest weight vector x_1^k has weight (k + b, b, .., b).
using Vec = std::map<std::vector<int>, Scalar>;

Vec act(int n, int b, int i, int j, const Vec& v) {
  Vec out;
  for (const auto& [e, c] : v) {
    if (i == j && b != 0) out[e] += c * b;
    if (e[j] == 0) continue;
    auto f = e;
    Scalar k = f[j];
    --f[j];
    ++f[i];
    out[f] += c * k;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  (void)n;
  return out;
}

// scalar by which a central z acts on the highest weight vector
Scalar highest_weight_value(const PBWAlgebra& alg, int n, const Element& z, int k, int b) {
  std::vector<int> top(n, 0);
  top[0] = k;
  Vec total;
  for (const auto& [m, c] : z.terms()) {
    Vec v{{top, c.constant_term()}};
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      const std::string& lab = alg.generator(it->first).label;
      int i = lab[2] - '1', j = lab[4] - '1';
      for (int r = 0; r < it->second; ++r) v = act(n, b, i, j, v);
    }
    for (const auto& [e, s] : v) total[e] += s;
  }
  Scalar val = total.count(top) ? total[top] : Scalar(0);
  for (const auto& [e, s] : total)
    if (e != top) REQUIRE(s == 0);
  return val;
}

}  // namespace

TEST_CASE("fgw for n = 1, zeta = z") {
  auto t = solve_fgw(1, 1, {Poly(0), Poly(1)}, nullptr);
  CHECK(scalars(t.f) == std::vector<Scalar>{0, 1, 1});
  CHECK(scalars(t.g) == std::vector<Scalar>{0, 1, 1});
  CHECK(scalars(t.w) == std::vector<Scalar>{1, 1});
  CHECK(verify_fgw(t).ok());
}

TEST_CASE("fgw leading coefficients of w") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto h = build_universal(LieKind::gl, n, m);
      auto t = solve_fgw(n, m, h.zeta, h.alg->coef_ctx());
      CHECK(t.w[m] == Poly(h.alg->coef_ctx(), 1));
      CHECK(t.w[m - 1] == Poly(h.alg->coef_ctx(), frac(n + m, 2)));
    }
}

TEST_CASE("fgw re-substitution and the constant residual for n >= 2") {
  auto t = solve_fgw(2, 1, {Poly(0), Poly(1)}, nullptr);
  CHECK(scalars(t.f) == std::vector<Scalar>{0, 3, 3});
  auto rep = verify_fgw(t);
  CHECK(rep.first_failure()->id == "w.sinh");
  CHECK(rep.failed() == 1);
  ZPoly lhs = zpoly_two_sinh(zpoly_times_power(t.w, 2), 1);
  CHECK(scalars(lhs) == std::vector<Scalar>{frac(1, 4), 3, 3});
  auto t1 = solve_fgw(1, 3, {Poly(2), Poly(-1), Poly(5), Poly(1)}, nullptr);
  CHECK(verify_fgw(t1).ok());
}

TEST_CASE("ZPoly operators") {
  CHECK(scalars(zpoly_shift(zp({0, 0, 1}), -1)) == std::vector<Scalar>{1, -2, 1});
  CHECK(scalars(zpoly_derivative(zp({1, 1, 1}), 1)) == std::vector<Scalar>{1, 2});
  CHECK(scalars(zpoly_times_power(zp({1}), 2)) == std::vector<Scalar>{0, 0, 1});
  // 2 sinh(d/2) z^2 = (z + 1/2)^2 - (z - 1/2)^2 = 2z
  CHECK(scalars(zpoly_two_sinh(zp({0, 0, 1}), 1)) == std::vector<Scalar>{0, 2});
  CHECK(zpoly_is_zero(zp({0, 0})));
}

TEST_CASE("t_1' is central and t_1 is not") {
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto h = build_universal(LieKind::gl, n, m, VOrder::x_then_y);
      CHECK(verify_central_element(*h.alg, casimir(h), "t1'").ok());
      CHECK_FALSE(verify_central_element(*h.alg, casimir_t1(h), "t1").ok());
    }
}

TEST_CASE("Harish-Chandra projection against highest weight vectors") {
  for (int n = 2; n <= 3; ++n) {
    auto h = build_universal(LieKind::gl, n, 1, VOrder::x_then_y);
    for (int j = 1; j <= 3; ++j) {
      Element H = casimir_H(h, j);
      HCImage img = hc_project(*h.alg, h.g_gen[0], n, H);
      for (int k = 0; k <= 3; ++k)
        for (int b = -1; b <= 1; ++b) {
          std::vector<Scalar> lam(img.ctx->size(), 0);
          for (int i = 0; i < n; ++i) lam[i] = Scalar(i == 0 ? k + b : b) + frac(n + 1 - 2 * (i + 1), 2);
          CHECK(img.value.evaluate(lam) == highest_weight_value(*h.alg, n, H, k, b));
        }
    }
  }
}

TEST_CASE("Harish-Chandra projection: small cases") {
  auto h = build_universal(LieKind::gl, 2, 1, VOrder::x_then_y);
  HCImage one = hc_project(*h.alg, h.g_gen[0], 2, h.alg->one());
  CHECK(one.value == Poly(one.ctx, 1));
  HCImage h1 = hc_project(*h.alg, h.g_gen[0], 2, casimir_H(h, 1));
  CHECK(h1.value == complete_h(h1.ctx, 2, 1));
  HCImage h2 = hc_project(*h.alg, h.g_gen[0], 2, casimir_H(h, 2));
  CHECK(h2.value == complete_h(h2.ctx, 2, 2) - Poly(h2.ctx, frac(1, 4)));
  CHECK_THROWS_WITH(hc_project(*h.alg, h.g_gen[0], 2, h.a("E(1,2)")), doctest::Contains("non-central"));
}

TEST_CASE("Harish-Chandra projection is multiplicative on the center") {
  auto h = build_universal(LieKind::gl, 2, 1, VOrder::x_then_y);
  Element a = casimir_H(h, 1), b = casimir_H(h, 2);
  auto pa = hc_project(*h.alg, h.g_gen[0], 2, a);
  auto pb = hc_project(*h.alg, h.g_gen[0], 2, b);
  auto pab = hc_project(*h.alg, h.g_gen[0], 2, h.alg->mul(a, b));
  CHECK(pab.value == pa.value * pb.value);
}

TEST_CASE("Casimir report for n = 1 is exact") {
  for (int m = 1; m <= 3; ++m) {
    auto rep = verify_casimir_hc(1, m);
    CHECK_MESSAGE(rep.ok(), rep.summary());
  }
}

TEST_CASE("Casimir report for n = 2 exposes the constant offset") {
  auto rep = verify_casimir_hc(2, 1);
  std::map<std::string, bool> pass;
  for (const auto& e : rep.entries) pass[e.id] = e.pass;
  CHECK(pass.at("t1'.central"));
  CHECK(pass.at("phi_H.sum_H_g"));
  CHECK(pass.at("hc.sum_h_w.up_to_constant"));
  CHECK(pass.at("hc.constant_is_w_residual"));
  CHECK_FALSE(pass.at("hc.sum_h_w"));
  bool offset_note = false;
  for (const auto& n : rep.notes) offset_note = offset_note || n.find("by -1/4") != std::string::npos;
  CHECK(offset_note);
}

TEST_CASE("corrupted w_0 is detected") {
  auto rep = verify_casimir_hc(1, 1, {true});
  CHECK_FALSE(rep.ok());
  std::string wit;
  for (const auto& e : rep.entries)
    if (e.id == "hc.sum_h_w") wit = e.witness;
  CHECK(wit.find("difference") == 0);
}

TEST_CASE("Newton identity on diag(1,2)") {
  Matrix d = zero_matrix(2);
  d[0][0] = 1;
  d[1][1] = 2;
  auto ctx = make_context({});
  PolyMatrix x(2, std::vector<Poly>(2, Poly(ctx)));
  for (int i = 0; i < 2; ++i) x[i][i] = Poly(ctx, d[i][i]);
  auto inv = char_invariants(x, 2);
  CHECK(inv.trS[2].constant_term() == 7);
  CHECK(inv.trS[1].constant_term() * inv.trLambda[1].constant_term() == 9);
  CHECK(inv.trLambda[2].constant_term() == 2);
  for (int n = 1; n <= 3; ++n) CHECK(verify_newton_identity(n, 4).ok());
}

TEST_CASE("gl slice identities") {
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto rep = verify_slice_identities(LieKind::gl, n, m);
      CHECK_MESSAGE(rep.ok(), rep.summary());
    }
  auto rep = verify_slice_identities(LieKind::gl, 1, 2);
  CHECK(rep.entries.front().id == "block1.i.k2");
  CHECK(rep.entries.front().pass);
}

TEST_CASE("sp slice identity and its sign") {
  auto r1 = verify_slice_identities(LieKind::sp, 1, 1);
  CHECK_MESSAGE(r1.ok(), r1.summary());
  auto r2 = verify_slice_identities(LieKind::sp, 2, 1);
  std::map<std::string, bool> pass;
  for (const auto& e : r2.entries) pass[e.id] = e.pass;
  CHECK_FALSE(pass.at("rho.sp"));
  CHECK(pass.at("rho.sp.tau_sign_(-1)^(n+1)"));
}

TEST_CASE("twist lemma") {
  for (int n = 1; n <= 3; ++n) CHECK(verify_twist_lemma(n, 4).ok());
  auto ctx = make_context({"lambda1", "lambda2", "delta"});
  Poly d = Poly::var(ctx, 2);
  Poly lhs = complete_h(ctx, 2, 2).substitute(ctx, {Poly::var(ctx, 0) + d, Poly::var(ctx, 1) + d, d});
  CHECK(lhs == complete_h(ctx, 2, 2) + complete_h(ctx, 2, 1) * d * Scalar(3) + d * d * Scalar(3));
}

TEST_CASE("classification for n = 1, m = 1") {
  auto c = classify_findim(1, 1, {0, 1}, {1});
  REQUIRE(c.finite);
  CHECK(c.k == 3);
  CHECK(c.p.evaluate({1}) == 2);
  CHECK(c.p.evaluate({-2}) == 2);
  CHECK(c.nu == std::vector<Scalar>{1, -2});
  auto none = classify_findim(1, 1, {0, 1}, {frac(-1, 2)});
  CHECK_FALSE(none.finite);
  CHECK_THROWS_WITH(classify_findim(2, 1, {0, 1}, {0, frac(1, 2)}), doctest::Contains("dominant"));
}

TEST_CASE("rational roots") {
  // (t - 1/2)(t + 3)(t^2 + 1)
  auto r = rational_roots({frac(-3, 2), frac(5, 2), frac(-1, 2), frac(5, 2), 1});
  CHECK(r == std::vector<Scalar>{-3, frac(1, 2)});
  CHECK(rational_roots({0, 0, 1}) == std::vector<Scalar>{0, 0});
}

TEST_CASE("bijection round trip on random dominant weights") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4), gap(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 2, m = 1 + (trial / 2) % 2;
    std::vector<Scalar> lam(n);
    lam[n - 1] = frac(num(rng), den(rng));
    for (int i = n - 2; i >= 0; --i) lam[i] = lam[i + 1] + gap(rng);
    std::vector<Scalar> zeta(m + 1, 0);
    for (int j = 0; j < m; ++j) zeta[j] = num(rng);
    zeta[m] = 1;
    std::string wit;
    CHECK_MESSAGE(bijection_round_trip(n, m, zeta, lam, &wit), wit);
  }
}

TEST_CASE("v coefficients") {
  CHECK(v_coefficients(1, 2, 0, 2) == std::vector<Scalar>{12, 4, 1});
  CHECK(v_coefficients(2, 2, 2, 5) == std::vector<Scalar>{1, 0, 0});
}
