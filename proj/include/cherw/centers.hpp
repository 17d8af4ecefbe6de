#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cherw/cherednik.hpp"
#include "cherw/report.hpp"

namespace cherw {

// Univariate polynomial in z with coefficients in a parameter ring; index k
// multiplies z^k.
using ZPoly = std::vector<Poly>;

struct WPolyTriple {
  int n = 0, m = 0;
  ContextPtr ctx;         // coefficient ring (zeta variables, possibly empty)
  std::vector<Poly> zeta;  // zeta_0..zeta_m
  ZPoly f, g, w;
};

// f(z) - f(z-1) = d^n(z^n zeta(z)), f(0) = 0; d^{n-1}(z^{n-1} g) = f;
// f = (2 sinh(d/2))^{n-1}(z^n w). Throws if a system is singular or inconsistent.
WPolyTriple solve_fgw(int n, int m, const std::vector<Poly>& zeta, ContextPtr ctx);
// substitutes the solution back into all three equations
VerificationReport verify_fgw(const WPolyTriple& t);
std::string zpoly_string(const ZPoly& p, const std::string& var = "z");

// elementwise operators on ZPoly
ZPoly zpoly_shift(const ZPoly& p, const Scalar& a);  // p(z + a)
ZPoly zpoly_derivative(const ZPoly& p, int times = 1);
ZPoly zpoly_times_power(const ZPoly& p, int k);     // z^k p
ZPoly zpoly_two_sinh(const ZPoly& p, int times);    // (2 sinh(d/2))^times p
bool zpoly_is_zero(const ZPoly& p);

// t_1 = sum x_i y_i (gl only)
Element casimir_t1(const CherednikAlgebra& h);
// H_j = Sym(tr S^j A) in the g-part of h
Element casimir_H(const CherednikAlgebra& h, int j);
// t_1' = t_1 + sum_{j=1}^{m+1} H_j g_j, with g from solve_fgw(h.zeta)
Element casimir(const CherednikAlgebra& h);
// [e, generator] for every generator
VerificationReport verify_central_element(const PBWAlgebra& alg, const Element& e, const std::string& id);

// phi^H: drop the monomials containing V generators. Valid only for degree-0
// elements of an algebra built with VOrder::x_then_y (y rightmost).
Element phi_H(const CherednikAlgebra& h, const Element& e);

struct HCImage {
  int n = 0;
  ContextPtr ctx;  // lambda1..lambdan followed by the coefficient variables
  Poly value;
};
// Harish-Chandra projection of a central element of U(gl_n) (coefficients in
// alg.coef_ctx()). g_offset is the index of E(1,1) in alg. Throws on
// non-central input.
HCImage hc_project(const PBWAlgebra& alg, int g_offset, int n, const Element& z);
// complete homogeneous h_j in the lambda variables of ctx (first n variables)
Poly complete_h(const ContextPtr& ctx, int n, int j);
Poly elementary_sigma(const ContextPtr& ctx, int n, int j);

struct CasimirOptions {
  bool corrupt_w0 = false;  // negative control: adds 1 to w_0
};
// centrality of t_1', phi^H(t_1') = sum H_j g_j, HC image = sum h_{j+1} w_j,
// w_m = 1, w_{m-1} = (n+m)/2, and the hc(H_j) = h_j comparison
VerificationReport verify_casimir_hc(int n, int m, const CasimirOptions& opt = {});

// symmetric function identities
VerificationReport verify_newton_identity(int n, int lmax);  // Newton identity between tr S^k and tr L^k
VerificationReport verify_slice_identities(LieKind kind, int n, int m);
VerificationReport verify_twist_lemma(int n, int imax);

struct Classification {
  bool finite = false;
  int k = 0;
  std::vector<Scalar> nu;            // (lambda_1..lambda_n, lambda_n - k, other rational roots)
  ZPoly residual;                    // factor of Q(t)/(t - lambda_n) without rational roots
  Poly p;                            // P as a polynomial in lambda1..lambdan
  ContextPtr ctx;
};
// P = sum w_j h_{j+1}; looks for k > 0 with P(lambda) = P(lambda_1, .., lambda_n - k)
Classification classify_findim(int n, int m, const std::vector<Scalar>& zeta, const std::vector<Scalar>& lambda);
// lambda -> nu -> lambda, plus a check that nu reproduces the root set
bool bijection_round_trip(int n, int m, const std::vector<Scalar>& zeta, const std::vector<Scalar>& lambda,
                          std::string* witness = nullptr);
std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs);

// V_l = sum_j s^{m-l-j} binom(n+m-j, m-l-j) S_j as coefficients of S_0..S_m
std::vector<Scalar> v_coefficients(int n, int m, int l, const Scalar& s);

}  // namespace cherw
