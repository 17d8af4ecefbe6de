#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cherw/pairings.hpp"
#include "cherw/pbw.hpp"

namespace cherw {

// U(g) with generators named by the basis labels, all of filtration degree 1
std::shared_ptr<PBWAlgebra> build_enveloping(LieKind kind, int n, ContextPtr coef_ctx = nullptr);

// Sym(p) for a polynomial on g whose variables are g labels; gen_offset is the
// index of the first g generator in alg
Element symmetrize_on_g(const PBWAlgebra& alg, const Poly& p, int gen_offset);

// order of the V block among generators. The default puts y before x.
enum class VOrder { y_then_x, x_then_y };

struct CherednikAlgebra {
  LieKind kind;
  int n = 0, m = 0;
  bool universal = false;
  VOrder order = VOrder::y_then_x;
  std::shared_ptr<const LieAlgebra> g;
  std::shared_ptr<PBWAlgebra> alg;
  std::vector<int> g_gen, y_gen, x_gen;  // generator indices; x empty for sp
  std::vector<std::string> params;       // free zeta variable names
  std::vector<Poly> zeta;                // coefficient of r_j (gl) / r_2j (sp), j = 0..m

  // r_j(y_i, x_l) (gl) or r_2j(y_i, y_l) (sp) in this algebra, 1-based i, l
  Element r(int j, int i, int l) const;
  Element y(int i) const { return alg->gen(y_gen.at(i - 1)); }
  Element x(int l) const { return alg->gen(x_gen.at(l - 1)); }
  Element a(const std::string& label) const { return alg->gen(label); }
  int vdim() const { return kind == LieKind::sp ? 2 * n : n; }
};

std::string zeta_name(int j);

// [y, x] = sum zeta_j r_j (gl) or [y_i, y_l] = sum zeta_j r_2j(y_i, y_l) (sp);
// zeta[j] must live in coef_ctx (or be constant)
CherednikAlgebra build_cherednik(LieKind kind, int n, const std::vector<Poly>& zeta, ContextPtr coef_ctx,
                                 VOrder order = VOrder::y_then_x);
// universal length m: free zeta_0..zeta_{m-2} (gl) or zeta_0..zeta_{m-1} (sp), leading coefficient 1
CherednikAlgebra build_universal(LieKind kind, int n, int m, VOrder order = VOrder::y_then_x);
CherednikAlgebra specialize(const CherednikAlgebra& h, const std::vector<Scalar>& c);

int filtration_degree(const CherednikAlgebra& h, const Element& e);

// the defining relations as (name, lhs commutator, rhs) for reporting
struct Relation {
  std::string name;
  int a, b;  // generator indices, [a, b] = rhs
  Element rhs;
};
std::vector<Relation> defining_relations(const CherednikAlgebra& h);

}  // namespace cherw
