#include "cherw/wmin.hpp"
#include "doctest.h"

using namespace cherw;

TEST_CASE("minimal data for sl_3") {
  auto d = minimal_data(LieKind::sl, 2);
  CHECK(d.c0 == frac(-3, 2));
  CHECK(d.z0.size() == 1);
  CHECK(d.z1.size() == 2);
  CHECK(d.witt.size() == 2);
  // z_chi(0) is spanned by T_{1,2} = diag(2/3, -1/3, -1/3)
  CHECK(d.z0[0][0][0] == frac(2, 3));
  CHECK(d.z0[0][2][2] == frac(-1, 3));
  CHECK(omega_chi(d, d.witt[1], d.witt[0]) == 1);
  CHECK(sharp(d, d.triple.h) == zero_matrix(3));
  CHECK_THROWS_WITH(minimal_data(LieKind::sl, 1), doctest::Contains("n >= 2"));
}

TEST_CASE("sp v_k basis") {
  auto d = minimal_data(LieKind::sp, 1);
  // v_1 = E_{2,4} - E_{1,3}, v_2 = E_{3,4} + E_{1,2}
  CHECK(d.z1[0][1][3] == 1);
  CHECK(d.z1[0][0][2] == -1);
  CHECK(d.z1[1][2][3] == 1);
  CHECK(d.z1[1][0][1] == 1);
  CHECK(d.c0 == frac(-3, 8));
  CHECK(z1_coords(d, d.z1[1]) == std::vector<Scalar>{0, 1});
  CHECK_THROWS_WITH(z0_coords(d, d.z1[0]), doctest::Contains("not in z_chi(0)"));
}

TEST_CASE("stated brackets, sharps and Casimir displays") {
  for (auto [kind, n] : std::vector<std::pair<LieKind, int>>{{LieKind::sl, 2}, {LieKind::sl, 3}, {LieKind::sp, 1}}) {
    auto rep = verify_minimal_data(kind, n);
    CHECK_MESSAGE(rep.ok(), rep.summary());
  }
}

TEST_CASE("minimal W-algebra presentation") {
  auto w = build_minimal_w(LieKind::sl, 2);
  const auto& A = *w.alg;
  Element x = A.gen(w.z0_gen[0]);
  CHECK(A.commutator(x, x).is_zero());
  CHECK(A.commutator(w.C(), A.gen(w.z1_gen[0])).is_zero());
  CHECK(A.consistency_check(3).ok());
  // T_{1,2} acts on Y1 = E_{1,3} with weight 1 and on X1 = E_{2,1} with weight -1
  CHECK(A.commutator(x, A.gen(w.z1_gen[0])) == A.gen(w.z1_gen[0]));
  CHECK(A.commutator(x, A.gen(w.z1_gen[1])) == -A.gen(w.z1_gen[1]));
}

TEST_CASE("explicit isomorphisms") {
  auto gl = verify_explicit_gl(2);
  CHECK_MESSAGE(gl.ok(), gl.summary());
  auto sp = verify_explicit_sp(1);
  CHECK_MESSAGE(sp.ok(), sp.summary());
}

TEST_CASE("wrong zeta_0 sign is caught") {
  auto gl = verify_explicit_gl(2, {true});
  REQUIRE_FALSE(gl.ok());
  CHECK(gl.first_failure()->id == "gamma/[x1,y1]");
  CHECK(gl.first_failure()->witness.find("C") != std::string::npos);
  CHECK_FALSE(verify_explicit_sp(1, {true}).ok());
}
