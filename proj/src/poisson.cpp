#include "cherw/poisson.hpp"

#include <mutex>
#include <optional>
#include <random>
#include <tuple>

namespace cherw {

Poly PoissonContext::zeta_poly(int j) const {
  if (j == m) return Poly(ctx, 1);
  if (j < 0 || j > m) return Poly(ctx);
  const int nparams = kind == LieKind::sp ? m : std::max(m - 1, 0);
  if (j < nparams) return Poly::var(ctx, zeta_var[j]);
  return Poly(ctx);
}

namespace {

Poly linear_combination(const ContextPtr& ctx, const std::vector<int>& vars, const std::vector<Scalar>& c) {
  Poly r(ctx);
  for (std::size_t p = 0; p < c.size(); ++p)
    if (c[p] != 0) r += Poly::var(ctx, vars[p]) * c[p];
  return r;
}

std::shared_ptr<PoissonContext> make_context_for(LieKind kind, int n, int m) {
  if (kind == LieKind::sl) throw Error("Poisson algebras are built for gl and sp");
  if (m < 0) throw Error("length must be nonnegative");
  auto pc = std::make_shared<PoissonContext>();
  pc->kind = kind;
  pc->n = n;
  pc->m = m;
  pc->g = build_lie(kind, n);
  const bool sp = kind == LieKind::sp;
  std::vector<std::string> names = pc->g->labels();
  for (int i = 1; i <= pc->vdim(); ++i) names.push_back("y" + std::to_string(i));
  if (!sp)
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  const int nparams = sp ? m : std::max(m - 1, 0);
  for (int j = 0; j < nparams; ++j) names.push_back("zeta" + std::to_string(j));
  pc->ctx = make_context(names);
  int v = 0;
  for (int a = 0; a < pc->g->dim(); ++a) pc->g_var.push_back(v++);
  for (int i = 1; i <= pc->vdim(); ++i) pc->y_var.push_back(v++);
  if (!sp)
    for (int i = 1; i <= n; ++i) pc->x_var.push_back(v++);
  for (int j = 0; j < nparams; ++j) pc->zeta_var.push_back(v++);
  for (int k = 0; k < v - nparams; ++k) pc->gens.push_back(k);
  return pc;
}

}  // namespace

std::shared_ptr<const PoissonContext> build_poisson(LieKind kind, int n, int m) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const PoissonContext>> cache;
  auto key = std::make_tuple(static_cast<int>(kind), n, m);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto pc = make_context_for(kind, n, m);
  const LieAlgebra& g = *pc->g;
  const ContextPtr& ctx = pc->ctx;
  const int nv = ctx->size();
  const bool sp = kind == LieKind::sp;
  pc->table.assign(nv, std::vector<Poly>(nv, Poly(ctx)));
  auto set = [&](int a, int b, const Poly& p) {
    pc->table[a][b] = p;
    pc->table[b][a] = -p;
  };
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < a; ++b) {
      Poly r(ctx);
      for (const auto& [c, w] : g.bracket(a, b)) r += Poly::var(ctx, pc->g_var[c]) * w;
      set(pc->g_var[a], pc->g_var[b], r);
    }
  for (int a = 0; a < g.dim(); ++a) {
    for (int i = 1; i <= pc->vdim(); ++i) set(pc->g_var[a], pc->y_var[i - 1], linear_combination(ctx, pc->y_var, act_on_V(g, a, i)));
    if (!sp)
      for (int l = 1; l <= n; ++l)
        set(pc->g_var[a], pc->x_var[l - 1], linear_combination(ctx, pc->x_var, act_on_Vdual(g, a, l)));
  }
  auto t = pairing_table(sp ? LieKind::sp : LieKind::gl, n, m);
  auto pairing = [&](int i, int l) {
    Poly r(ctx);
    for (int j = 0; j <= m; ++j) {
      Poly z = pc->zeta_poly(j);
      if (!z.is_zero()) r += t->at(j, i, l).embed(ctx) * z;
    }
    return r;
  };
  if (sp) {
    for (int i = 1; i <= 2 * n; ++i)
      for (int l = i + 1; l <= 2 * n; ++l) set(pc->y_var[i - 1], pc->y_var[l - 1], pairing(i, l));
  } else {
    for (int i = 1; i <= n; ++i)
      for (int l = 1; l <= n; ++l) set(pc->y_var[i - 1], pc->x_var[l - 1], pairing(i, l));
  }
  auto rep = poisson_jacobi(*pc);
  if (!rep.ok()) throw Error("Poisson bracket fails Jacobi: " + rep.first_failure()->witness);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, pc).first->second;
}

Poly poisson_bracket(const PoissonContext& pc, const Poly& f, const Poly& h) {
  Poly out(pc.ctx);
  if (f.is_zero() || h.is_zero()) return out;
  std::vector<std::pair<int, Poly>> dh;
  for (int w : pc.gens)
    if (h.uses_var(w)) dh.emplace_back(w, h.derivative(w));
  if (dh.empty()) return out;
  for (int v : pc.gens) {
    if (!f.uses_var(v)) continue;
    Poly dfv = f.derivative(v);
    Poly inner(pc.ctx);
    for (const auto& [w, d] : dh) {
      const Poly& b = pc.table[v][w];
      if (!b.is_zero()) inner += d * b;
    }
    if (!inner.is_zero()) out += dfv * inner;
  }
  return out;
}

VerificationReport poisson_jacobi(const PoissonContext& pc) {
  VerificationReport rep;
  rep.suite = "poisson.jacobi";
  Stopwatch sw;
  const auto& gs = pc.gens;
  for (std::size_t a = 0; a < gs.size(); ++a)
    for (std::size_t b = a + 1; b < gs.size(); ++b)
      for (std::size_t c = b + 1; c < gs.size(); ++c) {
        Poly x = Poly::var(pc.ctx, gs[a]), y = Poly::var(pc.ctx, gs[b]), z = Poly::var(pc.ctx, gs[c]);
        Poly s = poisson_bracket(pc, x, pc.table[gs[b]][gs[c]]) + poisson_bracket(pc, y, pc.table[gs[c]][gs[a]]) +
                 poisson_bracket(pc, z, pc.table[gs[a]][gs[b]]);
        if (!s.is_zero()) {
          rep.add("jacobi(" + pc.ctx->name(gs[a]) + "," + pc.ctx->name(gs[b]) + "," + pc.ctx->name(gs[c]) + ")",
                  "Jacobi identity of the bracket", false, s.to_string(), sw.ms());
          return rep;
        }
      }
  rep.add("jacobi", "Jacobi identity of the bracket", true, {}, sw.ms());
  return rep;
}

Poly q_tilde(const PoissonContext& pc, int k) {
  if (k < 1 || k > pc.n) throw Error("k out of range 1.." + std::to_string(pc.n));
  PolyMatrix a = pc.g->generic_matrix(pc.ctx, "");
  const int deg = pc.kind == LieKind::sp ? 2 * k : k;
  auto e = elementary_from_power(power_traces(a, deg), deg);
  return e[deg];
}

Poly tau(const PoissonContext& pc, int k) {
  Poly q = q_tilde(pc, k);
  Poly out(pc.ctx);
  if (pc.kind == LieKind::sp) {
    const int n2 = 2 * pc.n;
    for (int i = 1; i <= n2; ++i) {
      // y_i^* = (-1)^{i+1} y_{2n+1-i}, so that omega(y_i, y_i^*) = 1
      Poly dual = Poly::var(pc.ctx, pc.y_var[n2 - i]) * Scalar(i % 2 ? 1 : -1);
      out += poisson_bracket(pc, q, Poly::var(pc.ctx, pc.y_var[i - 1])) * dual;
    }
  } else {
    for (int i = 1; i <= pc.n; ++i)
      out += Poly::var(pc.ctx, pc.x_var[i - 1]) * poisson_bracket(pc, q, Poly::var(pc.ctx, pc.y_var[i - 1]));
  }
  return out;
}

std::string region_name(ResidueRegion r) { return r == ResidueRegion::small_z ? "small_z" : "large_z"; }

std::map<int, Poly> residue_series(const PoissonContext& pc, ResidueRegion region) {
  const bool sp = pc.kind == LieKind::sp;
  const int s = sp ? 2 : 1;
  const int m = pc.m, n = pc.n;
  const int big = n + m + 2;  // kernel terms kept in the large_z region
  std::vector<std::string> names = pc.ctx->names();
  names.push_back("t");
  ContextPtr ct = make_context(names);
  const int tv = ct->size() - 1;
  Poly t = Poly::var(ct, tv);

  PolyMatrix a = pc.g->generic_matrix(ct, "");
  const int size = pc.g->matrix_size();
  auto e = elementary_from_power(power_traces(a, size), size);
  const int order = s * (m + big) + 2;
  TruncSeries det_z("z", order);
  Poly det_t(ct);
  for (int k = 0; k <= size; ++k) {
    Poly c = k % 2 ? -e[k] : e[k];
    det_z.set(k, c);
    det_t += c * t.pow(k);
  }
  TruncSeries inv_det = series_invert(det_z);
  TruncSeries zeta_z("z", order);
  for (int j = 0; j <= m; ++j) zeta_z.set(-s * j, pc.zeta_poly(j).embed(ct));
  TruncSeries kernel("z", order);
  int shift = 0;
  if (region == ResidueRegion::small_z) {
    // 1/(1 - t^{-s} z^s) = sum_k z^{sk} t^{-sk}; only k <= m reach z^0. Multiply by t^{sm}.
    for (int k = 0; k <= m; ++k) kernel.set(s * k, t.pow(s * (m - k)));
    shift = s * m;
  } else {
    // -(t/z)^s / (1 - (t/z)^s)
    for (int k = 1; k <= big; ++k) kernel.set(-s * k, -t.pow(s * k));
  }
  TruncSeries prod = zeta_z * inv_det * kernel;
  Poly res = coefficient_of(prod, 0) * det_t;
  if (sp) res *= Scalar(2);
  std::map<int, Poly> out;
  auto coeffs = res.coefficients_in(tv);
  const int exact_limit = region == ResidueRegion::large_z ? s * big : 1 << 20;
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    if (coeffs[k].is_zero() || k > exact_limit) continue;
    out[k - shift] = coeffs[k].embed(pc.ctx);
  }
  return out;
}

CSeries c_series(const PoissonContext& pc, ResidueRegion region) {
  const int s = pc.kind == LieKind::sp ? 2 : 1;
  auto series = residue_series(pc, region);
  CSeries out;
  out.region = region;
  out.c.assign(pc.n + 1, Poly(pc.ctx));
  out.raw_constant = 0;
  for (const auto& [k, c] : series) {
    if (k < 0 || k > s * pc.n || k % s != 0)
      throw Error("residue convention mismatch: t^" + std::to_string(k) + " coefficient " + c.to_string() + " (" +
                  region_name(region) + ")");
    if (k == 0) {
      if (!c.is_constant()) throw Error("residue convention mismatch: nonconstant t^0 coefficient " + c.to_string());
      out.raw_constant = c.constant_term();
      continue;
    }
    const int i = k / s;
    out.c[i] = (s == 1 && i % 2) ? -c : c;
  }
  if (out.raw_constant == 0)
    out.notes.push_back("residue has zero constant term; c(t) = 1 + residue");
  else if (out.raw_constant != 1)
    throw Error("residue convention mismatch: constant term " + to_string(out.raw_constant));
  return out;
}

ResidueRegion select_residue_region(std::vector<std::string>* log) {
  auto pc = build_poisson(LieKind::gl, 1, 2);
  std::optional<ResidueRegion> chosen;
  for (auto region : {ResidueRegion::small_z, ResidueRegion::large_z}) {
    try {
      auto cs = c_series(*pc, region);
      Poly p = tau(*pc, 1) + cs.c[1];
      bool central = verify_central(*pc, p).ok();
      if (log) log->push_back(region_name(region) + ": shape ok, " + (central ? "central" : "not central"));
      if (central && !chosen) chosen = region;
    } catch (const Error& e) {
      if (log) log->push_back(region_name(region) + ": " + e.what());
    }
  }
  if (!chosen) throw Error("no residue region makes tau_1 + c_1 central");
  return *chosen;
}

CentralCandidate central_candidate(const PoissonContext& pc, int k, ResidueRegion region) {
  CentralCandidate cc;
  cc.k = k;
  cc.tau = tau(pc, k);
  cc.c = c_series(pc, region).c.at(k);
  cc.sum = cc.tau + cc.c;
  return cc;
}

VerificationReport verify_central(const PoissonContext& pc, const Poly& p, const std::string& id) {
  VerificationReport rep;
  rep.suite = "poisson.central";
  Stopwatch sw;
  for (int v : pc.gens) {
    Poly b = poisson_bracket(pc, p, Poly::var(pc.ctx, v));
    if (!b.is_zero()) {
      rep.add(id, "Poisson centrality", false, "{p, " + pc.ctx->name(v) + "} = " + b.to_string(), sw.ms());
      return rep;
    }
  }
  rep.add(id, "Poisson centrality", true, {}, sw.ms());
  return rep;
}

int jacobian_rank(const PoissonContext& pc, const std::vector<Poly>& polys, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Scalar> point(pc.ctx->size());
  for (auto& x : point) x = frac(d(rng), 1 + (d(rng) + 9) % 4);
  Matrix jac;
  for (const auto& p : polys) {
    std::vector<Scalar> row;
    for (int v = 0; v < pc.ctx->size(); ++v) row.push_back(p.derivative(v).evaluate(point));
    jac.push_back(row);
  }
  return rank(jac);
}

VerificationReport poisson_suite(LieKind kind, int n, int m) {
  VerificationReport rep;
  rep.suite = "poisson";
  rep.params = {{"kind", kind_name(kind)}, {"n", std::to_string(n)}, {"m", std::to_string(m)},
                {"residue_region", region_name(kResidueRegion)}};
  Stopwatch sw;
  auto pc = build_poisson(kind, n, m);
  rep.append(poisson_jacobi(*pc));
  rep.entries.back().wall_ms += sw.ms();
  std::vector<Poly> gens;
  for (int v : pc->zeta_var) gens.push_back(Poly::var(pc->ctx, v));
  auto cs = c_series(*pc, kResidueRegion);
  for (const auto& note : cs.notes) rep.notes.push_back(note);
  for (int k = 1; k <= n; ++k) {
    Poly tk = tau(*pc, k);
    Poly sum = tk + cs.c[k];
    rep.append(verify_central(*pc, sum, "tau_" + std::to_string(k) + "+c_" + std::to_string(k)));
    gens.push_back(sum);
    // the correction is needed: tau alone is not central once c_k is nonconstant
    if (!cs.c[k].is_constant()) {
      auto ctl = verify_central(*pc, tk, "tau_" + std::to_string(k));
      bool failed = !ctl.ok();
      rep.add("control.tau_" + std::to_string(k) + "_alone", "uncorrected tau is not central", failed,
              failed ? "" : "tau alone was central", ctl.entries.front().wall_ms);
    }
  }
  Stopwatch sj;
  int r = jacobian_rank(*pc, gens, 1234u + n * 31 + m);
  rep.add("independence", "generators algebraically independent (Jacobian rank)", r == static_cast<int>(gens.size()),
          r == static_cast<int>(gens.size()) ? "" : "rank " + std::to_string(r) + " < " + std::to_string(gens.size()),
          sj.ms());
  return rep;
}

}  // namespace cherw
