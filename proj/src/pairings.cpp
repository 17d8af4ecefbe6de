#include "cherw/pairings.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace cherw {

namespace {

PolyMatrix pm_identity(int size, const ContextPtr& ctx) {
  PolyMatrix r(size, std::vector<Poly>(size, Poly(ctx)));
  for (int i = 0; i < size; ++i) r[i][i] = Poly(ctx, 1);
  return r;
}

// coefficients h_0..h_kmax of det(1 - tau A)^{-1}
std::vector<Poly> inverse_det_series(const PolyMatrix& a, int kmax, const ContextPtr& ctx) {
  int size = static_cast<int>(a.size());
  auto e = elementary_from_power(power_traces(a, size), size);
  TruncSeries det("tau", kmax + 1);
  for (int k = 0; k <= size; ++k) det.set(k, (k % 2 ? -e[k] : e[k]));
  TruncSeries inv = series_invert(det);
  std::vector<Poly> h(kmax + 1, Poly(ctx));
  for (int k = 0; k <= kmax; ++k) h[k] = coefficient_of(inv, k);
  return h;
}

}  // namespace

PairingTable compute_pairings(LieKind kind, int n, int jmax, int cap) {
  if (kind == LieKind::sl) throw Error("pairings are defined for gl and sp only");
  if (n < 1) throw Error("pairings need n >= 1");
  if (jmax < 0 || jmax > cap) throw Error("jmax cap exceeded (" + std::to_string(jmax) + " > " + std::to_string(cap) + ")");
  PairingTable t;
  t.kind = kind;
  t.n = n;
  t.jmax = jmax;
  t.g = build_lie(kind, n);
  t.ctx = make_context(t.g->labels());
  const int size = t.g->matrix_size();
  PolyMatrix a = t.g->generic_matrix(t.ctx, "");
  const bool sp = kind == LieKind::sp;
  const int top = sp ? 2 * jmax + 1 : jmax;
  auto h = inverse_det_series(a, top, t.ctx);

  // powers A^k (gl) or J A^{2k} (sp)
  std::vector<PolyMatrix> pw;
  pw.push_back(sp ? to_poly_matrix(symplectic_J(n), t.ctx) : pm_identity(size, t.ctx));
  PolyMatrix a2 = sp ? pm_mul(a, a) : a;
  for (int k = 1; k <= jmax; ++k) pw.push_back(pm_mul(pw.back(), a2));

  auto blank = [&] { return std::vector<std::vector<Poly>>(size, std::vector<Poly>(size, Poly(t.ctx))); };
  for (int j = 0; j <= jmax; ++j) {
    auto v = blank();
    for (int i = 0; i < size; ++i)
      for (int l = 0; l < size; ++l) {
        Poly acc(t.ctx);
        for (int k = 0; k <= j; ++k) {
          // gl: (x_l, A^k y_i) = (A^k)_{li}; sp: omega(y_i, A^{2k} y_l) = (J A^{2k})_{il}
          const Poly& entry = sp ? pw[k][i][l] : pw[k][l][i];
          if (!entry.is_zero()) acc += entry * h[(sp ? 2 : 1) * (j - k)];
        }
        v[i][l] = acc;
      }
    t.value.push_back(std::move(v));
    if (sp) {
      auto o = blank();
      for (int i = 0; i < size; ++i)
        for (int l = 0; l < size; ++l) {
          Poly acc(t.ctx);
          for (int k = 0; k <= j; ++k)
            if (!pw[k][i][l].is_zero()) acc += pw[k][i][l] * h[2 * (j - k) + 1];
          o[i][l] = acc;
        }
      t.odd.push_back(std::move(o));
    }
  }
  return t;
}

std::shared_ptr<const PairingTable> pairing_table(LieKind kind, int n, int jmax) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const PairingTable>> cache;
  auto key = std::make_tuple(static_cast<int>(kind), n, jmax);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto t = std::make_shared<const PairingTable>(compute_pairings(kind, n, jmax));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, t).first->second;
}

std::vector<Scalar> act_on_V(const LieAlgebra& g, int b, int i) {
  const Matrix& m = g.basis(b);
  std::vector<Scalar> r(g.matrix_size());
  for (int p = 0; p < g.matrix_size(); ++p) r[p] = m[p][i - 1];
  return r;
}

std::vector<Scalar> act_on_Vdual(const LieAlgebra& g, int b, int l) {
  const Matrix& m = g.basis(b);
  std::vector<Scalar> r(g.matrix_size());
  for (int q = 0; q < g.matrix_size(); ++q) r[q] = -m[l - 1][q];
  return r;
}

Poly coadjoint_derivation(const LieAlgebra& g, const ContextPtr& ctx, int a, const Poly& f) {
  Poly out(ctx);
  for (int b = 0; b < g.dim(); ++b) {
    if (!f.uses_var(b)) continue;
    const SparseVec& br = g.bracket(a, b);
    if (br.empty()) continue;
    Poly img(ctx);
    for (const auto& [c, w] : br) img += Poly::var(ctx, c) * w;
    out += f.derivative(b) * img;
  }
  return out;
}

VerificationReport verify_invariance(const PairingTable& t) {
  VerificationReport rep;
  rep.suite = "pairings.invariance";
  rep.params = {{"kind", kind_name(t.kind)}, {"n", std::to_string(t.n)}, {"jmax", std::to_string(t.jmax)}};
  const LieAlgebra& g = *t.g;
  const int size = t.vdim();
  const bool sp = t.kind == LieKind::sp;
  for (int j = 0; j <= t.jmax; ++j) {
    Stopwatch sw;
    std::string witness;
    for (int a = 0; a < g.dim() && witness.empty(); ++a)
      for (int i = 1; i <= size && witness.empty(); ++i)
        for (int l = 1; l <= size && witness.empty(); ++l) {
          Poly lhs = coadjoint_derivation(g, t.ctx, a, t.at(j, i, l));
          Poly rhs(t.ctx);
          auto ay = act_on_V(g, a, i);
          for (int p = 1; p <= size; ++p)
            if (ay[p - 1] != 0) rhs += t.at(j, p, l) * ay[p - 1];
          auto ax = sp ? act_on_V(g, a, l) : act_on_Vdual(g, a, l);
          for (int q = 1; q <= size; ++q)
            if (ax[q - 1] != 0) rhs += t.at(j, i, q) * ax[q - 1];
          Poly diff = lhs - rhs;
          if (!diff.is_zero())
            witness = "A=" + g.label(a) + " i=" + std::to_string(i) + " l=" + std::to_string(l) + ": " + diff.to_string();
        }
    rep.add((sp ? "beta_" + std::to_string(2 * j) : "alpha_" + std::to_string(j)) + ".invariant", "pairing g-invariance",
            witness.empty(), witness, sw.ms());
  }
  return rep;
}

int DeformationParam::length() const {
  for (int j = static_cast<int>(zeta.size()) - 1; j >= 0; --j)
    if (!zeta[j].is_zero()) return j;
  return -1;
}

std::string DeformationParam::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < zeta.size(); ++j) {
    if (zeta[j].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << zeta[j].to_string() << ")*r_" << (kind == LieKind::sp ? 2 * j : j);
    first = false;
  }
  return first ? "0" : os.str();
}

DeformationParam make_param(LieKind kind, int n, std::vector<Poly> zeta) {
  DeformationParam z;
  z.kind = kind;
  z.n = n;
  z.m = static_cast<int>(zeta.size()) - 1;
  z.zeta = std::move(zeta);
  return z;
}

Matrix shift_matrix(int n, int jmax) {
  auto t = pairing_table(LieKind::gl, n, jmax);
  const LieAlgebra& g = *t->g;
  std::vector<Poly> images;
  for (int b = 0; b < g.dim(); ++b) images.push_back(Poly::var(t->ctx, b) + Poly(t->ctx, mat_trace(g.basis(b))));
  Matrix k(jmax + 1, std::vector<Scalar>(jmax + 1));
  for (int j = 0; j <= jmax; ++j) {
    // rows: (i, l, monomial); unknowns: coefficients of alpha_0..alpha_j
    std::map<std::tuple<int, int, std::string>, std::vector<Scalar>> rows;
    std::map<std::tuple<int, int, std::string>, Scalar> rhs;
    auto key_of = [](int i, int l, const Exponent& e) {
      return std::make_tuple(i, l, std::string(reinterpret_cast<const char*>(e.e.data()), kMaxVars));
    };
    for (int i = 1; i <= n; ++i)
      for (int l = 1; l <= n; ++l) {
        for (int c = 0; c <= j; ++c)
          for (const auto& term : t->at(c, i, l).terms()) {
            auto& row = rows[key_of(i, l, term.exp)];
            row.resize(j + 1);
            row[c] += term.coef;
          }
        Poly shifted = t->at(j, i, l).substitute(t->ctx, images);
        for (const auto& term : shifted.terms()) {
          auto key = key_of(i, l, term.exp);
          rhs[key] += term.coef;
          rows[key].resize(j + 1);
        }
      }
    Matrix a;
    std::vector<Scalar> b;
    for (auto& [key, row] : rows) {
      a.push_back(row);
      auto it = rhs.find(key);
      b.push_back(it == rhs.end() ? Scalar(0) : it->second);
    }
    std::vector<Scalar> x;
    try {
      x = solve_linear(a, b);
    } catch (const SingularError& e) {
      throw Error(std::string("shifted pairing not expressible in the alpha basis: ") + e.what());
    }
    for (int c = 0; c <= j; ++c) k[j][c] = x[c];
  }
  return k;
}

DeformationParam phi_lambda(const DeformationParam& z, const Poly& lambda) {
  if (z.kind != LieKind::gl) throw Error("phi_lambda is defined for gl only");
  int top = static_cast<int>(z.zeta.size()) - 1;
  if (top < 0 || lambda.is_zero()) return z;
  Matrix k = shift_matrix(z.n, top);
  DeformationParam r = z;
  ContextPtr ctx;
  for (const auto& c : z.zeta)
    if (c.ctx()) ctx = c.ctx();
  if (!ctx) ctx = lambda.ctx();
  std::vector<Poly> lp{Poly(ctx, 1)};
  for (int d = 1; d <= top; ++d) lp.push_back(lp.back() * lambda);
  for (int i = 0; i <= top; ++i) {
    Poly acc(ctx);
    for (int j = i; j <= top; ++j)
      if (!z.zeta[j].is_zero() && k[j][i] != 0) acc += z.zeta[j] * lp[j - i] * k[j][i];
    r.zeta[i] = acc;
  }
  return r;
}

DeformationParam zeta_sign(const DeformationParam& z) {
  DeformationParam r = z;
  for (std::size_t j = 1; j < r.zeta.size(); j += 2) r.zeta[j] = -r.zeta[j];
  return r;
}

std::pair<DeformationParam, Poly> normalize_length_m(const DeformationParam& z) {
  if (z.m < 0 || z.m >= static_cast<int>(z.zeta.size()) || z.zeta[z.m].is_zero()) throw Error("not length m");
  if (!z.zeta[z.m].is_constant()) throw Error("leading coefficient must be a nonzero scalar");
  Scalar lead = z.zeta[z.m].constant_term();
  DeformationParam scaled = z;
  for (auto& c : scaled.zeta) c *= Scalar(1 / lead);
  if (z.m == 0 || z.kind != LieKind::gl) return {scaled, Poly(0L)};
  Poly lambda = -scaled.zeta[z.m - 1] * frac(1, z.n + z.m);
  DeformationParam out = phi_lambda(scaled, lambda);
  if (!out.zeta[z.m - 1].is_zero()) throw Error("normalization failed: zeta_{m-1} = " + out.zeta[z.m - 1].to_string());
  return {out, lambda};
}

VerificationReport verify_expansion_identity(int n, int m) {
  VerificationReport rep;
  rep.suite = "pairings.expansion";
  rep.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
  auto t = pairing_table(LieKind::gl, n, m);
  const LieAlgebra& g = *t->g;
  std::vector<std::string> names = g.labels();
  names.push_back("s");
  ContextPtr ctx = make_context(names);
  const int svar = g.dim();
  Poly s = Poly::var(ctx, svar);
  std::vector<Poly> shift;
  for (int b = 0; b < g.dim(); ++b) shift.push_back(Poly::var(ctx, b) + s * mat_trace(g.basis(b)));

  const int order = m + 1;
  TruncSeries one_minus("tau", order);
  one_minus.set(0, Poly(ctx, 1));
  one_minus.set(1, -s);
  TruncSeries geo = series_invert(one_minus);
  TruncSeries pre = TruncSeries::constant("tau", order, Poly(ctx, 1));
  for (int k = 0; k <= n; ++k) pre = pre * geo;
  TruncSeries u = TruncSeries::monomial("tau", order + 1, Poly(ctx, 1), 1) * geo;

  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= n; ++l) {
      Stopwatch sw;
      TruncSeries inner("tau", order);
      TruncSeries upow = TruncSeries::constant("tau", order, Poly(ctx, 1));
      for (int c = 0; c <= m; ++c) {
        inner += upow * t->at(c, i, l).embed(ctx);
        upow = upow * u;
      }
      TruncSeries rhs = pre * inner;
      std::string witness;
      for (int j = 0; j <= m && witness.empty(); ++j) {
        Poly lhs = t->at(j, i, l).substitute(ctx, shift);
        Poly diff = lhs - coefficient_of(rhs, j);
        if (!diff.is_zero()) witness = "tau^" + std::to_string(j) + ": " + diff.to_string();
      }
      std::string id = "(" + std::to_string(i) + "," + std::to_string(l) + ")";
      rep.add("shift_series" + id, "alpha under A -> A + sI", witness.empty(), witness, sw.ms());

      // first-order form: d/ds at s = 0
      Stopwatch sw2;
      Poly deriv(t->ctx);
      for (int b = 0; b < g.dim(); ++b) {
        Scalar tr = mat_trace(g.basis(b));
        if (tr != 0) deriv += t->at(m, i, l).derivative(b) * tr;
      }
      Poly diff2 = m >= 1 ? deriv - t->at(m - 1, i, l) * Scalar(n + m) : deriv;
      rep.add("d_alpha_m" + id, "derivative along identity", diff2.is_zero(), diff2.is_zero() ? "" : diff2.to_string(),
              sw2.ms());
    }
  return rep;
}

}  // namespace cherw
