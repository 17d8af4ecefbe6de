#include "cherw/cherednik.hpp"

#include <algorithm>

namespace cherw {

std::shared_ptr<PBWAlgebra> build_enveloping(LieKind kind, int n, ContextPtr coef_ctx) {
  auto g = build_lie(kind, n);
  auto alg = std::make_shared<PBWAlgebra>(coef_ctx ? coef_ctx : make_context({}));
  for (int a = 0; a < g->dim(); ++a) alg->add_generator({g->label(a), 1, 0, false, false});
  for (int a = 0; a < g->dim(); ++a)
    for (int b = 0; b < a; ++b) {
      Element r;
      for (const auto& [c, w] : g->bracket(a, b)) r += alg->gen(c) * Poly(w);
      if (!r.is_zero()) alg->set_commutator(a, b, r);
    }
  alg->finalize();
  return alg;
}

Element symmetrize_on_g(const PBWAlgebra& alg, const Poly& p, int gen_offset) {
  if (p.is_zero()) return {};
  std::vector<int> map;
  if (p.ctx())
    for (int v = 0; v < p.ctx()->size(); ++v) map.push_back(gen_offset + v);
  return alg.symmetrize_poly(p, map);
}

std::string zeta_name(int j) { return "zeta" + std::to_string(j); }

Element CherednikAlgebra::r(int j, int i, int l) const {
  auto t = pairing_table(kind == LieKind::sp ? LieKind::sp : LieKind::gl, n, j);
  return symmetrize_on_g(*alg, t->at(j, i, l), g_gen.at(0));
}

CherednikAlgebra build_cherednik(LieKind kind, int n, const std::vector<Poly>& zeta, ContextPtr coef_ctx,
                                 VOrder order) {
  if (kind == LieKind::sl) throw Error("Cherednik algebras are built for gl and sp");
  if (zeta.empty()) throw Error("empty deformation parameter");
  CherednikAlgebra h;
  h.kind = kind;
  h.n = n;
  h.m = static_cast<int>(zeta.size()) - 1;
  h.order = order;
  h.g = build_lie(kind, n);
  if (!coef_ctx) coef_ctx = make_context({});
  h.alg = std::make_shared<PBWAlgebra>(coef_ctx);
  for (const auto& z : zeta) h.zeta.push_back(z.ctx() ? z.embed(coef_ctx) : Poly(coef_ctx, z.constant_term()));
  PBWAlgebra& A = *h.alg;
  const LieAlgebra& g = *h.g;
  const bool sp = kind == LieKind::sp;
  const int vdeg = sp ? 2 * h.m + 1 : h.m + 1;

  for (int a = 0; a < g.dim(); ++a) h.g_gen.push_back(A.add_generator({g.label(a), 2, 0, false, false}));
  auto add_y = [&] {
    for (int i = 1; i <= h.vdim(); ++i) h.y_gen.push_back(A.add_generator({"y" + std::to_string(i), vdeg, 1, false, false}));
  };
  auto add_x = [&] {
    for (int i = 1; i <= n; ++i) h.x_gen.push_back(A.add_generator({"x" + std::to_string(i), vdeg, -1, false, false}));
  };
  if (sp) {
    add_y();
  } else if (order == VOrder::y_then_x) {
    add_y();
    add_x();
  } else {
    add_x();
    add_y();
  }
  for (int v = 0; v < coef_ctx->size(); ++v) {
    const std::string& name = coef_ctx->name(v);
    if (name.rfind("zeta", 0) == 0) {
      int j = std::stoi(name.substr(4));
      A.set_coef_degree(name, (sp ? 4 : 2) * (h.m - j));
    }
  }

  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < a; ++b) {
      Element r;
      for (const auto& [c, w] : g.bracket(a, b)) r += A.gen(h.g_gen[c]) * Poly(w);
      if (!r.is_zero()) A.set_commutator(h.g_gen[a], h.g_gen[b], r);
    }
  for (int a = 0; a < g.dim(); ++a) {
    for (int i = 1; i <= h.vdim(); ++i) {
      Element r;
      auto img = act_on_V(g, a, i);
      for (int p = 0; p < h.vdim(); ++p)
        if (img[p] != 0) r += A.gen(h.y_gen[p]) * Poly(img[p]);
      if (!r.is_zero()) A.set_commutator(h.g_gen[a], h.y_gen[i - 1], r);
    }
    if (!sp)
      for (int l = 1; l <= n; ++l) {
        Element r;
        auto img = act_on_Vdual(g, a, l);
        for (int q = 0; q < n; ++q)
          if (img[q] != 0) r += A.gen(h.x_gen[q]) * Poly(img[q]);
        if (!r.is_zero()) A.set_commutator(h.g_gen[a], h.x_gen[l - 1], r);
      }
  }
  auto t = pairing_table(sp ? LieKind::sp : LieKind::gl, n, h.m);
  auto pairing = [&](int i, int l) {
    Element r;
    for (int j = 0; j <= h.m; ++j)
      if (!h.zeta[j].is_zero()) r += symmetrize_on_g(A, t->at(j, i, l), h.g_gen[0]) * h.zeta[j];
    return r;
  };
  if (sp) {
    for (int i = 1; i <= 2 * n; ++i)
      for (int l = i + 1; l <= 2 * n; ++l) {
        Element r = pairing(i, l);
        if (!r.is_zero()) A.set_commutator(h.y_gen[i - 1], h.y_gen[l - 1], r);
      }
  } else {
    for (int i = 1; i <= n; ++i)
      for (int l = 1; l <= n; ++l) {
        Element r = pairing(i, l);
        if (!r.is_zero()) A.set_commutator(h.y_gen[i - 1], h.x_gen[l - 1], r);
      }
  }
  A.finalize();
  return h;
}

CherednikAlgebra build_universal(LieKind kind, int n, int m, VOrder order) {
  if (m < 0) throw Error("length must be nonnegative");
  const bool sp = kind == LieKind::sp;
  // gl: zeta_{m-1} is normalized away
  const int nparams = sp ? m : std::max(m - 1, 0);
  std::vector<std::string> names;
  for (int j = 0; j < nparams; ++j) names.push_back(zeta_name(j));
  ContextPtr ctx = make_context(names);
  std::vector<Poly> zeta(m + 1, Poly(ctx));
  for (int j = 0; j < nparams; ++j) zeta[j] = Poly::var(ctx, j);
  zeta[m] = Poly(ctx, 1);
  CherednikAlgebra h = build_cherednik(kind, n, zeta, ctx, order);
  h.universal = true;
  h.params = names;
  return h;
}

CherednikAlgebra specialize(const CherednikAlgebra& h, const std::vector<Scalar>& c) {
  if (c.size() != h.params.size())
    throw Error("specialize: expected " + std::to_string(h.params.size()) + " values, got " + std::to_string(c.size()));
  ContextPtr target = make_context({});
  ContextPtr src = h.alg->coef_ctx();
  std::vector<Poly> images;
  for (int v = 0; v < src->size(); ++v) {
    auto it = std::find(h.params.begin(), h.params.end(), src->name(v));
    if (it == h.params.end()) throw Error("specialize: stray coefficient variable " + src->name(v));
    images.push_back(Poly(target, c[it - h.params.begin()]));
  }
  std::vector<Poly> zeta;
  for (const auto& z : h.zeta) zeta.push_back(z.substitute(target, images));
  return build_cherednik(h.kind, h.n, zeta, target, h.order);
}

int filtration_degree(const CherednikAlgebra& h, const Element& e) { return h.alg->filtration_degree(e); }

std::vector<Relation> defining_relations(const CherednikAlgebra& h) {
  std::vector<Relation> out;
  const PBWAlgebra& A = *h.alg;
  for (int a = 0; a < A.num_generators(); ++a)
    for (int b = 0; b < a; ++b)
      out.push_back({"[" + A.generator(a).label + "," + A.generator(b).label + "]", a, b, A.generator_commutator(a, b)});
  return out;
}

}  // namespace cherw
