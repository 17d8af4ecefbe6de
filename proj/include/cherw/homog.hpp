#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cherw/cherednik.hpp"
#include "cherw/pbw.hpp"
#include "cherw/report.hpp"

namespace cherw {

// A PBW presentation over C[hbar, ...] in which every commutator carries
// hbar^2, with the grading (deg hbar = 1) recorded per generator and parameter.
struct HomogenizedAlgebra {
  std::string name;
  std::shared_ptr<PBWAlgebra> alg;
  std::map<std::string, int> grade;       // generator label -> degree
  std::map<std::string, int> coef_grade;  // coefficient variable -> degree
  // the unhomogenized algebra for the hbar = 1 comparison (null for tensor products)
  std::shared_ptr<const PBWAlgebra> classical;
};

enum class HomogKind {
  weyl,             // W_{hbar,n}: z_k, d_k with [d_k, z_l] = hbar^2 delta_kl
  enveloping,       // U_hbar(g)
  cherednik,        // H_{hbar,m}(g), m >= -1 (m = -1: U_hbar(g x V))
  cherednik_prime,  // H'_{hbar,m}(g): extra central zeta0, [y, x] = hbar^2 (zeta0 r_0 + r_m) (m = 0: zeta0 r_0 only)
};

struct HomogSpec {
  HomogKind what = HomogKind::weyl;
  LieKind kind = LieKind::gl;
  int n = 1;
  int m = 0;
  std::vector<std::string> invertible;  // generator labels to localize at
};

HomogenizedAlgebra build_homog(const HomogSpec& spec);
// tensor product: generator families commute; labels must be distinct
HomogenizedAlgebra tensor(const std::vector<const HomogenizedAlgebra*>& parts, const std::string& name,
                          const std::vector<std::string>& invertible = {});

// rewrites are homogeneous, divisible by hbar^2, and (when available) hbar = 1 gives the classical relations
VerificationReport verify_homogenized(const HomogenizedAlgebra& a);

struct HomogMap {
  std::string name;
  std::shared_ptr<HomogenizedAlgebra> source, target;
  std::unique_ptr<AlgebraMap> map;
};

// Psi_{-1} (m_case = -1) or Psi_0 (m_case = 0) for gl_n, n >= 2
HomogMap build_map_psi(int m_case, int n);
// Upsilon_{-1} for sp_2n, n >= 1, with the displayed images. repaired: z_1-dependent
// stabilizer part (z_1^-1 on Y_i, zeta0 z_1^-2), which is a homomorphism
HomogMap build_map_upsilon(int n, bool repaired = false);

struct HomogOptions {
  bool corrupt = false;  // negative control: flips the sign of the z_i d_j term in the image of e(1,1) / u(1,1)
  bool search_corrections = true;
};
// every defining relation; failures carry the residual, and a correction
// search over the images is reported (never applied)
VerificationReport verify_map(const HomogMap& m, const HomogOptions& opt = {});
VerificationReport verify_psi(int m_case, int n, const HomogOptions& opt = {});
VerificationReport verify_upsilon(int n, const HomogOptions& opt = {});
VerificationReport verify_upsilon_repaired(int n);
// the stated inverse of Psi_0 on the localization at y_n, both composites
VerificationReport verify_inverse_psi0(int n);

}  // namespace cherw
