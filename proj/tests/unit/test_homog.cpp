#include "cherw/homog.hpp"
#include "doctest.h"

using namespace cherw;

namespace {

Poly hbar_pow(const PBWAlgebra& a, int k) { return Poly::var(a.coef_ctx(), "hbar").pow(k); }

}  // namespace

TEST_CASE("homogenized Weyl algebra") {
  auto w = build_homog({HomogKind::weyl, LieKind::gl, 2, 0, {"z2"}});
  const auto& A = *w.alg;
  CHECK(A.commutator(A.gen("d1"), A.gen("z1")) == A.one() * hbar_pow(A, 2));
  CHECK(A.commutator(A.gen("d1"), A.gen("z2")).is_zero());
  // [d_n, z_n^-1] = -hbar^2 z_n^-2
  CHECK(A.commutator(A.gen("d2"), A.gen("z2", -1)) == -(A.gen("z2", -2) * hbar_pow(A, 2)));
  CHECK(w.grade.at("d1") == 1);
  CHECK_THROWS(build_homog({HomogKind::weyl, LieKind::gl, 2, 0, {"q"}}));
}

TEST_CASE("homogenized algebras are graded, divisible by hbar^2 and specialize at hbar = 1") {
  std::vector<HomogSpec> specs{
      {HomogKind::enveloping, LieKind::gl, 2, 0, {}},   {HomogKind::enveloping, LieKind::sp, 1, 0, {}},
      {HomogKind::cherednik, LieKind::gl, 2, -1, {}},   {HomogKind::cherednik, LieKind::gl, 2, 0, {}},
      {HomogKind::cherednik, LieKind::gl, 2, 2, {}},    {HomogKind::cherednik, LieKind::sp, 1, 1, {}},
      {HomogKind::cherednik_prime, LieKind::gl, 2, 1, {}}, {HomogKind::cherednik_prime, LieKind::sp, 1, 0, {}}};
  for (const auto& s : specs) {
    auto h = build_homog(s);
    auto rep = verify_homogenized(h);
    CHECK_MESSAGE(rep.ok(), h.name << ": " << rep.summary());
  }
}

TEST_CASE("Rees powers on nonlinear rewrites") {
  // [y_2, y_1] in H_{hbar,1}(sp_2) = hbar^2 (zeta0 + Sym r_2); the linear tail of Sym r_2 carries hbar^4
  auto h = build_homog({HomogKind::cherednik, LieKind::sp, 1, 1, {}});
  const auto& A = *h.alg;
  Element r = A.generator_commutator(A.index("y2"), A.index("y1"));
  int hv = A.coef_ctx()->index("hbar");
  bool quartic = false;
  for (const auto& [m, c] : r.terms())
    if (mono_length(m) == 1)
      for (const auto& t : c.terms()) quartic |= t.exp.e[hv] == 4;
  CHECK(quartic);
  CHECK(h.coef_grade.at("zeta0") == 4);
  CHECK(h.grade.at("y1") == 3);
}

TEST_CASE("Psi_0 displayed brackets") {
  const int n = 3;
  HomogMap hm = build_map_psi(0, n);
  const auto& S = *hm.source->alg;
  const auto& T = *hm.target->alg;
  const auto& f = *hm.map;
  auto img = [&](const std::string& l) { return f.gen_images[S.index(l)]; };
  Poly h2 = hbar_pow(T, 2);
  // [Psi_0(e_{i,n}), Psi_0(x_j)] = -hbar^2 delta_ij Psi_0(x_n) for i, j < n
  CHECK(T.commutator(img("E(1,3)"), img("x1")) == -(img("x3") * h2));
  CHECK(T.commutator(img("E(1,3)"), img("x2")).is_zero());
  CHECK(T.commutator(img("E(2,3)"), img("x3")).is_zero());
  CHECK(T.commutator(img("y3"), img("x3")) == f.apply(S.generator_commutator(S.index("y3"), S.index("x3"))));
}

TEST_CASE("Psi maps are homomorphisms") {
  for (int n : {2, 3})
    for (int m : {-1, 0}) {
      auto rep = verify_psi(m, n);
      CHECK_MESSAGE(rep.ok(), rep.summary());
    }
  CHECK_THROWS_WITH(build_map_psi(1, 2), doctest::Contains("m = -1 and m = 0"));
  CHECK_THROWS_WITH(build_map_psi(0, 1), doctest::Contains("n >= 2"));
}

TEST_CASE("inverse of Psi_0") {
  auto rep = verify_inverse_psi0(2);
  CHECK_MESSAGE(rep.ok(), rep.summary());
  bool zeta = false;
  for (const auto& e : rep.entries) zeta |= e.id == "Psi_0.after.inverse/zeta0";
  CHECK(zeta);
}

TEST_CASE("displayed Upsilon_{-1} fails, the repaired one holds") {
  auto rep = verify_upsilon(1);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.first_failure()->id == "Upsilon_-1/[U(2,1),U(1,1)]");
  CHECK(rep.first_failure()->witness.find("zeta0") != std::string::npos);
  bool candidate = false;
  for (const auto& s : rep.notes) candidate |= s.find("(zeta0)*z1^-2") != std::string::npos;
  CHECK(candidate);
  CHECK_FALSE(verify_upsilon(2).ok());
  for (int n : {1, 2}) {
    auto fix = verify_upsilon_repaired(n);
    CHECK_MESSAGE(fix.ok(), fix.summary());
  }
}

TEST_CASE("negative control: one flipped Weyl sign") {
  auto rep = verify_psi(0, 2, {true, false});
  CHECK_FALSE(rep.ok());
  CHECK(rep.params.at("corrupt").size() > 0);
}

TEST_CASE("localized tensor targets are consistent") {
  auto check = [](const HomogMap& hm, const std::string& z) {
    auto rep = verify_homogenized(*hm.target);
    CHECK_MESSAGE(rep.ok(), hm.target->name << ": " << rep.summary());
    const auto& T = *hm.target->alg;
    CHECK(T.mul(T.gen(z, -1), T.gen(z)) == T.one());
    CHECK(T.mul(T.gen(z), T.gen(z, -1)) == T.one());
  };
  check(build_map_psi(0, 2), "z2");
  check(build_map_upsilon(1), "z1");
}
