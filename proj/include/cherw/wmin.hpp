#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cherw/cherednik.hpp"
#include "cherw/liedata.hpp"
#include "cherw/report.hpp"

namespace cherw {

// Minimal nilpotent data. gl side: ambient sl_{n+1}, e = E_{n,n+1},
// z_chi(0) = iota(gl_{n-1}). sp side: ambient sp_{2n+2}, e = E_{1,2n+2},
// z_chi(0) = sp_2n in the middle block.
struct MinimalWData {
  LieKind kind = LieKind::sl;  // sl or sp
  int n = 0;
  int size = 0;  // matrix size of the ambient algebra
  SL2Triple triple;
  std::shared_ptr<const LieAlgebra> q;  // gl_{n-1} or sp_2n
  std::vector<Matrix> z0, z1;           // bases of z_chi(0) (q order) and z_chi(1)
  std::vector<std::string> z0_labels, z1_labels;
  std::vector<Matrix> witt, witt_dual;  // z_1..z_2s and z_i^* with omega(z_i^*, z_j) = delta_ij
  Scalar c0;
};

MinimalWData minimal_data(LieKind kind, int n);
Scalar trace_pair(const Matrix& a, const Matrix& b);
// omega_chi(a, b) = tr(e [a, b])
Scalar omega_chi(const MinimalWData& d, const Matrix& a, const Matrix& b);
// x - (x, h) h / 2
Matrix sharp(const MinimalWData& d, const Matrix& x);
// coordinates in the z_chi(0) / z_chi(1) bases; throw if outside
std::vector<Scalar> z0_coords(const MinimalWData& d, const Matrix& x);
std::vector<Scalar> z1_coords(const MinimalWData& d, const Matrix& x);

struct MinimalWAlgebra {
  MinimalWData data;
  std::shared_ptr<PBWAlgebra> alg;
  int c_gen = 0;
  std::vector<int> z0_gen, z1_gen;
  Element theta_cas;
  // rhs[u][v] of [Theta_u, Theta_v] as installed
  std::vector<std::vector<Element>> rhs;

  Element C() const { return alg->gen(c_gen); }
  Element theta0(const Matrix& x) const;  // Theta_x for x in z_chi(0)
  Element theta1(const Matrix& x) const;  // Theta_u for u in z_chi(1)
};

// generators C, Theta(z_chi(0)), Theta(z_chi(1)) with relations (i)-(iii)
MinimalWAlgebra build_minimal_w(LieKind kind, int n);

// Witt conditions, c_0, the stated bracket and sharp values, Casimir display
VerificationReport verify_minimal_data(LieKind kind, int n);

struct WminOptions {
  bool corrupt = false;  // negative control: zeta_0 -> (C - c_0)/2 instead of (c_0 - C)/2
};
// H_2(gl_{n-1}) -> W(sl_{n+1}, minimal) on every defining relation, plus the r_2 cross-checks
VerificationReport verify_explicit_gl(int n, const WminOptions& opt = {});
// H_1(sp_2n) -> W(sp_{2n+2}, minimal) in the rescaled form y -> Theta_v, zeta_1 = 2
VerificationReport verify_explicit_sp(int n, const WminOptions& opt = {});

}  // namespace cherw
