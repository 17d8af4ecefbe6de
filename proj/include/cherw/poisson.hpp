#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cherw/pairings.hpp"
#include "cherw/report.hpp"

namespace cherw {

// Classical algebra S(g + V (+ V*))[zeta] with the Poisson bracket of the
// universal length-m algebra.
struct PoissonContext {
  LieKind kind;
  int n = 0, m = 0;
  std::shared_ptr<const LieAlgebra> g;
  ContextPtr ctx;  // g labels, y1.., x1.. (gl), zeta params
  std::vector<int> g_var, y_var, x_var, zeta_var;
  std::vector<int> gens;  // every non-central variable
  // bracket on variables; zero rows/columns for central ones
  std::vector<std::vector<Poly>> table;

  int vdim() const { return kind == LieKind::sp ? 2 * n : n; }
  Poly var(const std::string& name) const { return Poly::var(ctx, name); }
  Poly zeta_poly(int j) const;  // zeta_j as a polynomial (1 for j = m, 0 when fixed)
};

// builds the context and asserts Jacobi on all generator triples
std::shared_ptr<const PoissonContext> build_poisson(LieKind kind, int n, int m);

Poly poisson_bracket(const PoissonContext& pc, const Poly& f, const Poly& h);
// Jacobi on generator triples; witness is the first nonzero cyclic sum
VerificationReport poisson_jacobi(const PoissonContext& pc);

// Q~_k with 1 + sum Q~_k z^k (gl) or 1 + sum Q~_k z^{2k} (sp) = det(1 + zA)
Poly q_tilde(const PoissonContext& pc, int k);
Poly tau(const PoissonContext& pc, int k);

// Expansion of the kernel 1/(1 - t^{-1} z) (resp. 1/(1 - t^{-2} z^2)):
// small_z uses sum (z/t)^k, large_z uses -sum (t/z)^k.
enum class ResidueRegion { small_z, large_z };
std::string region_name(ResidueRegion r);

// Coefficients of the residue as a Laurent polynomial in t: exponent -> Poly
std::map<int, Poly> residue_series(const PoissonContext& pc, ResidueRegion region);

struct CSeries {
  ResidueRegion region;
  std::vector<Poly> c;          // c[1..n]; c[0] unused
  Scalar raw_constant;          // t^0 coefficient of the residue before normalization
  std::vector<std::string> notes;
};
// throws "residue convention mismatch" when the residue is not of the expected shape
CSeries c_series(const PoissonContext& pc, ResidueRegion region);

// the frozen convention, selected by select_residue_region
constexpr ResidueRegion kResidueRegion = ResidueRegion::large_z;
// tries both regions on (gl, n=1, m=2) and returns the one for which
// tau_1 + c_1 is Poisson-central
ResidueRegion select_residue_region(std::vector<std::string>* log = nullptr);

struct CentralCandidate {
  int k;
  Poly tau, c, sum;
};
CentralCandidate central_candidate(const PoissonContext& pc, int k, ResidueRegion region = kResidueRegion);

VerificationReport verify_central(const PoissonContext& pc, const Poly& p, const std::string& id = "central");
// full suite: Jacobi, centrality of tau_k + c_k, independence, and the tau-alone control
VerificationReport poisson_suite(LieKind kind, int n, int m);

// rank of the Jacobian of polys at a pseudo-random rational point
int jacobian_rank(const PoissonContext& pc, const std::vector<Poly>& polys, unsigned seed);

}  // namespace cherw
