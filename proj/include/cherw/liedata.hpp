#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cherw/linalg.hpp"
#include "cherw/poly.hpp"

namespace cherw {

enum class LieKind { gl, sl, sp };
std::string kind_name(LieKind k);
LieKind parse_kind(const std::string& s);

using PolyMatrix = std::vector<std::vector<Poly>>;
using SparseVec = std::vector<std::pair<int, Scalar>>;

// matrix helpers over Q
Matrix zero_matrix(int n);
Matrix unit_matrix(int n, int i, int j);  // E_ij, 1-based
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Scalar& c);
Matrix mat_bracket(const Matrix& a, const Matrix& b);
Scalar mat_trace(const Matrix& a);
bool mat_is_zero(const Matrix& a);

// A Lie algebra of matrices with a fixed ordered basis.
class LieAlgebra {
 public:
  LieAlgebra(LieKind kind, int n);

  LieKind kind() const { return kind_; }
  int rank_param() const { return n_; }
  int matrix_size() const { return size_; }  // N for gl_N/sl_N, 2N for sp_2N
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_.at(a); }
  int index(const std::string& label) const;
  const Matrix& basis(int a) const { return basis_.at(a); }

  // structure constants: [b_a, b_b] = sum c * b_c
  const SparseVec& bracket(int a, int b) const { return bracket_[a][b]; }
  const Scalar& trace_form(int a, int b) const { return gram_[a][b]; }
  // trace-form dual of b_a as a combination of basis elements
  const SparseVec& dual(int a) const { return dual_[a]; }

  // coordinates of a matrix in the basis; throws if it is not in the span
  std::vector<Scalar> coords(const Matrix& m) const;
  Matrix element(const std::vector<Scalar>& c) const;
  bool contains(const Matrix& m) const;

  // A = sum_b X_b b^dual, entries as polynomials in variables named by prefix + label
  PolyMatrix generic_matrix(const ContextPtr& ctx, const std::string& prefix) const;

  // Jacobi on every basis triple; returns the number of triples checked
  long jacobi_check() const;

 private:
  LieKind kind_;
  int n_, size_;
  std::vector<std::string> labels_;
  std::vector<Matrix> basis_;
  std::map<std::string, int> index_;
  std::vector<std::vector<SparseVec>> bracket_;
  Matrix gram_;
  std::vector<SparseVec> dual_;
  std::vector<std::pair<int, int>> pivots_;  // matrix positions used to read coordinates
  Matrix pivot_inverse_;
};

// cached construction; Jacobi is verified once per (kind, n)
std::shared_ptr<const LieAlgebra> build_lie(LieKind kind, int n);

// symplectic form on V_2n: J_ij = (-1)^j delta_{i+j,2n+1}
Matrix symplectic_J(int n);
bool sp_membership(const Matrix& a);
// U(k,l) = E_kl + (-1)^{k+l+1} E_{2N+1-l,2N+1-k} inside sp_2N
Matrix sp_unit(int N, int k, int l);

struct SL2Triple {
  Matrix e, h, f;
};

SL2Triple one_block_nilpotent(LieKind kind, int n, int m);

struct CentralizerElement {
  std::string label;
  Matrix mat;
  int h_weight;
  Scalar t_weight;
};

struct CentralizerBasis {
  LieKind kind;  // gl (inside sl_{n+m}) or sp (inside sp_{2n+2m})
  int n, m;
  std::vector<CentralizerElement> q, v_plus, v_minus, v, xi;
  std::vector<const CentralizerElement*> all() const;
  int dim() const;
};

// gl: iota(A) = A - tr(A)/(n+m) I_{n+m}; sp: corner-block embedding
Matrix iota_gl(const Matrix& a, int n, int m);
Matrix iota_sp(const Matrix& a, int n, int m);

CentralizerBasis centralizer_basis(LieKind kind, int n, int m);

struct SliceMatrix {
  LieKind kind;
  int n, m;
  ContextPtr ctx;
  std::vector<std::string> coordinates;
  PolyMatrix X;
};

SliceMatrix slice_matrix(LieKind kind, int n, int m);

// symbolic matrix helpers
PolyMatrix to_poly_matrix(const Matrix& a, const ContextPtr& ctx);
PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_sub(const PolyMatrix& a, const PolyMatrix& b);
Poly pm_trace(const PolyMatrix& a);
PolyMatrix pm_block(const PolyMatrix& a, int r0, int c0, int rows, int cols);

// power sums p_1..p_kmax (index 0 holds the size of the matrix)
std::vector<Poly> power_traces(const PolyMatrix& x, int kmax);
// from power sums: e_k (tr Lambda^k) and h_k (tr S^k), index 0 = 1
std::vector<Poly> elementary_from_power(const std::vector<Poly>& p, int kmax);
std::vector<Poly> complete_from_power(const std::vector<Poly>& p, int kmax);

struct CharInvariants {
  std::vector<Poly> F;        // F[k] = coefficient of z^k in det(1 + zX), F[0] = 1
  std::vector<Poly> trS;      // tr S^k X
  std::vector<Poly> trLambda; // tr Lambda^k X (= F)
};
CharInvariants char_invariants(const PolyMatrix& x, int kmax);

}  // namespace cherw
