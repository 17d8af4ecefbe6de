#pragma once

#include <memory>
#include <vector>

#include "cherw/liedata.hpp"
#include "cherw/report.hpp"
#include "cherw/series.hpp"

namespace cherw {

constexpr int kDefaultJmax = 6;

// alpha_j(y_i, x_l) for gl_n, or beta_2j(y_i, y_l) for sp_2n, as polynomials
// on g. Variables are the basis labels of g; the generic element is
// A = sum_b X_b b^dual for the trace form, so X_b is the function tr(b A).
struct PairingTable {
  LieKind kind;
  int n;
  int jmax;
  std::shared_ptr<const LieAlgebra> g;
  ContextPtr ctx;
  // value[j][i][l]; for sp, value[j] is beta_{2j}
  std::vector<std::vector<std::vector<Poly>>> value;
  // for sp: the odd tau-powers, which must vanish (kept for the parity check)
  std::vector<std::vector<std::vector<Poly>>> odd;

  const Poly& at(int j, int i, int l) const { return value.at(j).at(i - 1).at(l - 1); }
  int vdim() const { return kind == LieKind::sp ? 2 * n : n; }
};

PairingTable compute_pairings(LieKind kind, int n, int jmax, int cap = kDefaultJmax);
// process-wide cache keyed by (kind, n, jmax)
std::shared_ptr<const PairingTable> pairing_table(LieKind kind, int n, int jmax);

// linear A-action of basis element b on V (gl: also V*). Returns coefficient vectors.
std::vector<Scalar> act_on_V(const LieAlgebra& g, int b, int i);       // b . y_i
std::vector<Scalar> act_on_Vdual(const LieAlgebra& g, int b, int l);   // b . x_l
// the Poisson bracket {X_a, f} on S(g) (derivation extending {X_a, X_b} = X_[a,b])
Poly coadjoint_derivation(const LieAlgebra& g, const ContextPtr& ctx, int a, const Poly& f);

// g-invariance of every alpha_j / beta_2j: {X_b, alpha(y, x)} = alpha(b y, x) + alpha(y, b x)
VerificationReport verify_invariance(const PairingTable& t);

struct DeformationParam {
  LieKind kind;
  int n;
  int m;                   // nominal length; zeta.size() == m + 1
  std::vector<Poly> zeta;  // zeta[j] multiplies r_j (gl) or r_2j (sp)
  int length() const;      // max j with zeta_j != 0, or -1
  std::string to_string() const;
};

DeformationParam make_param(LieKind kind, int n, std::vector<Poly> zeta);

// phi_lambda: A -> A + lambda tr A (gl only), re-expanded in the alpha basis.
// lambda may be symbolic in the zeta variables.
DeformationParam phi_lambda(const DeformationParam& z, const Poly& lambda);
DeformationParam zeta_sign(const DeformationParam& z);
// scale so zeta_m = 1, then shift by lambda = -zeta_{m-1}/(n+m)
std::pair<DeformationParam, Poly> normalize_length_m(const DeformationParam& z);

// alpha_j(A + I) = sum_i K[j][i] alpha_i(A) for j <= jmax, obtained by linear
// solve against the table. By homogeneity alpha_j(A + sI) has coefficients
// K[j][i] s^(j-i).
Matrix shift_matrix(int n, int jmax);

VerificationReport verify_expansion_identity(int n, int m);

}  // namespace cherw
