#include <random>

#include "cherw/cherednik.hpp"
#include "doctest.h"

using namespace cherw;

namespace {

// W_n with [d_k, z_l] = hbar^2 delta_kl; z_n optionally invertible
std::shared_ptr<PBWAlgebra> weyl(int n, bool invert_last) {
  auto ctx = make_context({"hbar"});
  auto w = std::make_shared<PBWAlgebra>(ctx);
  for (int k = 1; k <= n; ++k) w->add_generator({"z" + std::to_string(k), 1, 0, false, invert_last && k == n});
  for (int k = 1; k <= n; ++k) w->add_generator({"d" + std::to_string(k), 1, 0, false, false});
  Poly h2 = Poly::var(ctx, 0).pow(2);
  for (int k = 1; k <= n; ++k) w->set_commutator(w->index("d" + std::to_string(k)), w->index("z" + std::to_string(k)), w->scalar(h2));
  w->finalize();
  return w;
}

std::string e(int i, int j) { return "E(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Element random_element(const PBWAlgebra& a, std::mt19937& rng, int maxlen) {
  std::uniform_int_distribution<int> gen(0, a.num_generators() - 1), len(0, maxlen), c(-2, 2);
  Element out;
  for (int t = 0; t < 3; ++t) {
    std::vector<Token> word;
    int l = len(rng);
    for (int k = 0; k < l; ++k) word.push_back({gen(rng), 1});
    out += a.normal_order(word) * Poly(Scalar(c(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("normal ordering in U(gl_2)") {
  auto u = build_enveloping(LieKind::gl, 2);
  int e21 = u->index(e(2, 1)), e12 = u->index(e(1, 2));
  Element got = u->normal_order({{e21, 1}, {e12, 1}});
  Element want = u->mul(u->gen(e12), u->gen(e21)) - u->gen(e(1, 1)) + u->gen(e(2, 2));
  CHECK(got == want);
  CHECK(u->to_string(got) == "E(1,2)*E(2,1) + E(2,2) + (-1)*E(1,1)");
}

TEST_CASE("normal ordering is idempotent on ordered words") {
  auto u = build_enveloping(LieKind::gl, 3);
  std::vector<Token> w{{0, 1}, {0, 1}, {2, 1}, {5, 1}, {8, 1}};
  Element x = u->normal_order(w);
  CHECK(x.num_terms() == 1);
  const auto& [m, c] = *x.terms().begin();
  CHECK(c == Poly(1L));
  CHECK(u->mono_string(m) == "E(1,1)^2*E(1,3)*E(2,3)*E(3,3)");
}

TEST_CASE("Weyl relation") {
  auto w = weyl(1, false);
  Element got = w->normal_order({{w->index("d1"), 1}, {w->index("z1"), 1}});
  Element want = w->mul(w->gen("z1"), w->gen("d1")) + w->param("hbar") * Poly::var(w->coef_ctx(), 0);
  CHECK(got == want);
  // d z^2 = z^2 d + 2 hbar^2 z
  Element dz2 = w->mul(w->gen("d1"), w->gen("z1", 2));
  CHECK(w->to_string(dz2) == "z1^2*d1 + (2*hbar^2)*z1");
}

TEST_CASE("commutator round-trips structure constants of gl_3") {
  auto u = build_enveloping(LieKind::gl, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          Element want;
          if (j == k) want += u->gen(e(i, l));
          if (l == i) want -= u->gen(e(k, j));
          CHECK(u->commutator(u->gen(e(i, j)), u->gen(e(k, l))) == want);
        }
  CHECK(u->commutator(u->gen(0), u->gen(0)).is_zero());
}

TEST_CASE("central generator") {
  auto a = std::make_shared<PBWAlgebra>(nullptr);
  int c = a->add_generator({"C", 1, 0, true, false});
  int x = a->add_generator({"x", 1, 0, false, false});
  a->finalize();
  CHECK(a->commutator(a->gen(c), a->gen(x)).is_zero());
  CHECK(a->normal_order({{x, 1}, {c, 1}}) == a->normal_order({{c, 1}, {x, 1}}));

  PBWAlgebra bad(nullptr);
  int c2 = bad.add_generator({"C", 1, 0, true, false});
  int x2 = bad.add_generator({"x", 1, 0, false, false});
  bad.set_commutator(x2, c2, bad.gen(x2));
  CHECK_THROWS_WITH(bad.finalize(), doctest::Contains("central"));
}

TEST_CASE("finalize rejects rewrites that do not lower degree") {
  PBWAlgebra a(nullptr);
  int p = a.add_generator({"p", 1, 0, false, false});
  int q = a.add_generator({"q", 1, 0, false, false});
  a.set_commutator(q, p, a.mul(a.gen(p), a.gen(q)));
  CHECK_THROWS_WITH(a.finalize(), doctest::Contains("does not lower"));
}

TEST_CASE("symmetrize") {
  auto u = build_enveloping(LieKind::gl, 2);
  int e12 = u->index(e(1, 2)), e21 = u->index(e(2, 1));
  CHECK(u->symmetrize({e12}) == u->gen(e12));
  Element want = u->mul(u->gen(e12), u->gen(e21)) + (u->gen(e(2, 2)) - u->gen(e(1, 1))) * Poly(frac(1, 2));
  CHECK(u->symmetrize({e12, e21}) == want);
  CHECK(u->symmetrize({e21, e12}) == want);
  u->set_symmetrization_cap(3);
  CHECK_THROWS_WITH(u->symmetrize({0, 1, 2, 3}), doctest::Contains("symmetrization degree cap"));
}

TEST_CASE("gr of symmetrization reproduces the monomial") {
  auto u = build_enveloping(LieKind::gl, 2);
  auto ctx = make_context(build_lie(LieKind::gl, 2)->labels());
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> g(0, 3), len(1, 5);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> gens;
    int l = len(rng);
    Exponent ex;
    for (int k = 0; k < l; ++k) {
      int x = g(rng);
      gens.push_back(x);
      ex.e[x]++;
      ex.deg++;
    }
    Element s = u->symmetrize(gens);
    CHECK(u->filtration_degree(s) == l);
    Element top;
    for (const auto& [m, c] : s.terms())
      if (mono_length(m) == l) top.add_term(m, c);
    CHECK(u->commutative_image(top, ctx) == Poly::monomial(ctx, ex, 1));
  }
}

TEST_CASE("consistency of enveloping algebras") {
  CHECK(build_enveloping(LieKind::gl, 2)->consistency_check().ok());
  CHECK(build_enveloping(LieKind::gl, 3)->consistency_check().ok());
  CHECK(build_enveloping(LieKind::sp, 1)->consistency_check().ok());
  CHECK(build_enveloping(LieKind::sl, 3)->consistency_check().ok());
}

TEST_CASE("consistency check catches a corrupted relation") {
  auto g = build_lie(LieKind::gl, 2);
  PBWAlgebra a(nullptr);
  for (int b = 0; b < g->dim(); ++b) a.add_generator({g->label(b), 1, 0, false, false});
  for (int x = 0; x < g->dim(); ++x)
    for (int y = 0; y < x; ++y) {
      Element r;
      for (const auto& [c, w] : g->bracket(x, y)) r += a.gen(c) * Poly(w);
      if (!r.is_zero()) a.set_commutator(x, y, r);
    }
  // [E22, E12] should be -E12
  a.set_commutator(a.index(e(2, 2)), a.index(e(1, 2)), a.gen(e(1, 2)));
  a.finalize();
  auto rep = a.consistency_check();
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.first_failure());
  CHECK(rep.first_failure()->id.rfind("triple(", 0) == 0);
  CHECK_FALSE(rep.first_failure()->witness.empty());
}

TEST_CASE("random associativity") {
  std::mt19937 rng(11);
  auto u = build_enveloping(LieKind::gl, 2);
  auto w = weyl(2, false);
  for (int t = 0; t < 15; ++t) {
    for (auto* alg : {u.get(), w.get()}) {
      Element a = random_element(*alg, rng, 4), b = random_element(*alg, rng, 4), c = random_element(*alg, rng, 4);
      CHECK(alg->mul(alg->mul(a, b), c) == alg->mul(a, alg->mul(b, c)));
    }
  }
}

TEST_CASE("filtration is compatible with products") {
  std::mt19937 rng(5);
  auto u = build_enveloping(LieKind::gl, 2);
  auto ctx = make_context(build_lie(LieKind::gl, 2)->labels());
  for (int t = 0; t < 15; ++t) {
    Element a = random_element(*u, rng, 3), b = random_element(*u, rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    int da = u->filtration_degree(a), db = u->filtration_degree(b);
    Element ab = u->mul(a, b);
    CHECK(u->filtration_degree(ab) <= da + db);
    auto top = [&](const Element& x, int d) {
      Element r;
      for (const auto& [m, c] : x.terms())
        if (mono_length(m) == d) r.add_term(m, c);
      return u->commutative_image(r, ctx);
    };
    CHECK(top(ab, da + db) == top(a, da) * top(b, db));
  }
}

TEST_CASE("inverse generators") {
  auto w = weyl(2, true);
  int z2 = w->index("z2"), d2 = w->index("d2");
  Poly h2 = Poly::var(w->coef_ctx(), 0).pow(2);
  CHECK(w->normal_order({{z2, 1}, {z2, -1}}) == w->one());
  CHECK(w->normal_order({{z2, -1}, {z2, 1}}) == w->one());
  CHECK(w->commutator(w->gen(d2), w->gen(z2, -1)) == w->gen(z2, -2) * (-h2));
  CHECK(w->commutator(w->gen(d2), w->gen(z2, -2)) == w->gen(z2, -3) * (-h2 * Scalar(2)));
  CHECK(w->consistency_check().ok());
  CHECK_THROWS(w->gen("z1", -1));
}

TEST_CASE("algebra map U(gl_2) -> W_2") {
  // E_ij -> z_i d_j, with [d_k, z_l] = delta_kl
  auto ctx1 = make_context({});
  PBWAlgebra w1(ctx1);
  for (int k = 1; k <= 2; ++k) w1.add_generator({"z" + std::to_string(k), 1, 0, false, false});
  for (int k = 1; k <= 2; ++k) w1.add_generator({"d" + std::to_string(k), 1, 0, false, false});
  for (int k = 1; k <= 2; ++k) w1.set_commutator(w1.index("d" + std::to_string(k)), w1.index("z" + std::to_string(k)), w1.one());
  w1.finalize();
  auto u1 = build_enveloping(LieKind::gl, 2);
  AlgebraMap g("gl2-to-weyl", *u1, w1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      g.set_gen(e(i, j), w1.mul(w1.gen("z" + std::to_string(i)), w1.gen("d" + std::to_string(j))));
  CHECK(verify_homomorphism(g).ok());
  g.set_gen(e(1, 2), w1.mul(w1.gen("z2"), w1.gen("d1")));
  auto rep = verify_homomorphism(g);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.first_failure()->witness.empty());
}
