#include "cherw/wmin.hpp"

#include "cherw/pairings.hpp"

namespace cherw {

namespace {

Scalar sgn(long k) { return k % 2 == 0 ? 1 : -1; }

std::vector<Scalar> coords_in(const std::vector<Matrix>& basis, const Matrix& x, const char* what) {
  const int sz = static_cast<int>(x.size());
  Matrix a(sz * sz, std::vector<Scalar>(basis.size()));
  std::vector<Scalar> b(sz * sz);
  for (int r = 0; r < sz; ++r)
    for (int c = 0; c < sz; ++c) {
      for (std::size_t k = 0; k < basis.size(); ++k) a[r * sz + c][k] = basis[k][r][c];
      b[r * sz + c] = x[r][c];
    }
  try {
    return solve_linear(a, b);
  } catch (const SingularError&) {
    throw Error(std::string("matrix is not in ") + what);
  }
}

// middle-block embedding sp_2n -> sp_{2n+2}
Matrix shift_in(const Matrix& a) {
  const int s = static_cast<int>(a.size());
  Matrix out = zero_matrix(s + 2);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) out[i + 1][j + 1] = a[i][j];
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) { return mat_add(a, mat_scale(b, -1)); }

std::string mat_string(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != 0) {
        if (!s.empty()) s += " + ";
        s += m[i][j].get_str() + "*E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      }
  return s.empty() ? "0" : s;
}

Element sym2(const PBWAlgebra& a, const Element& x, const Element& y) {
  return (a.mul(x, y) + a.mul(y, x)) * Poly(a.coef_ctx(), frac(1, 2));
}

// element of a Lie algebra given by matrix coordinates, as a sum of generators
Element linear(const PBWAlgebra& alg, const std::vector<int>& gens, const std::vector<Scalar>& c) {
  Element e;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) e += alg.gen(gens[k]) * Poly(alg.coef_ctx(), c[k]);
  return e;
}

void add_equal(VerificationReport& rep, const PBWAlgebra& alg, const std::string& id, const std::string& anchor,
               const Element& a, const Element& b) {
  Element d = a - b;
  rep.add(id, anchor, d.is_zero(), d.is_zero() ? "" : "difference " + alg.to_string(d));
}

void add_mat_equal(VerificationReport& rep, const std::string& id, const std::string& anchor, const Matrix& a,
                   const Matrix& b) {
  Matrix d = mat_sub(a, b);
  rep.add(id, anchor, mat_is_zero(d), mat_is_zero(d) ? "" : "difference " + mat_string(d));
}

}  // namespace

Scalar trace_pair(const Matrix& a, const Matrix& b) { return mat_trace(multiply(a, b)); }

Scalar omega_chi(const MinimalWData& d, const Matrix& a, const Matrix& b) {
  return trace_pair(d.triple.e, mat_bracket(a, b));
}

Matrix sharp(const MinimalWData& d, const Matrix& x) {
  return mat_sub(x, mat_scale(d.triple.h, trace_pair(x, d.triple.h) / 2));
}

std::vector<Scalar> z0_coords(const MinimalWData& d, const Matrix& x) { return coords_in(d.z0, x, "z_chi(0)"); }
std::vector<Scalar> z1_coords(const MinimalWData& d, const Matrix& x) { return coords_in(d.z1, x, "z_chi(1)"); }

MinimalWData minimal_data(LieKind kind, int n) {
  MinimalWData d;
  d.n = n;
  if (kind == LieKind::sl || kind == LieKind::gl) {
    if (n < 2) throw Error("minimal W-algebra of sl_{n+1} needs n >= 2");
    d.kind = LieKind::sl;
    d.size = n + 1;
    const int s = n - 1;
    d.triple = {unit_matrix(n + 1, n, n + 1), mat_sub(unit_matrix(n + 1, n, n), unit_matrix(n + 1, n + 1, n + 1)),
                unit_matrix(n + 1, n + 1, n)};
    d.q = build_lie(LieKind::gl, s);
    for (int a = 0; a < d.q->dim(); ++a) {
      d.z0.push_back(iota_gl(d.q->basis(a), s, 2));
      d.z0_labels.push_back(d.q->label(a));
    }
    for (int i = 1; i <= s; ++i) {
      d.z1.push_back(unit_matrix(n + 1, i, n + 1));
      d.z1_labels.push_back("Y" + std::to_string(i));
    }
    for (int i = 1; i <= s; ++i) {
      d.z1.push_back(unit_matrix(n + 1, n, i));
      d.z1_labels.push_back("X" + std::to_string(i));
    }
    for (int i = 1; i <= s; ++i) d.witt.push_back(unit_matrix(n + 1, i, n));
    for (int i = 1; i <= s; ++i) d.witt.push_back(unit_matrix(n + 1, n + 1, i));
    d.c0 = frac(-n * (n + 1), 4);
  } else {
    if (n < 1) throw Error("minimal W-algebra of sp_{2n+2} needs n >= 1");
    d.kind = LieKind::sp;
    const int sz = 2 * n + 2;
    d.size = sz;
    d.triple = {unit_matrix(sz, 1, sz), mat_sub(unit_matrix(sz, 1, 1), unit_matrix(sz, sz, sz)), unit_matrix(sz, sz, 1)};
    d.q = build_lie(LieKind::sp, n);
    for (int a = 0; a < d.q->dim(); ++a) {
      d.z0.push_back(shift_in(d.q->basis(a)));
      d.z0_labels.push_back(d.q->label(a));
    }
    for (int k = 1; k <= 2 * n; ++k) {
      d.z1.push_back(mat_add(unit_matrix(sz, k + 1, sz), mat_scale(unit_matrix(sz, 1, sz - k), sgn(k))));
      d.z1_labels.push_back("v" + std::to_string(k));
    }
    for (int i = 1; i <= n; ++i)
      d.witt.push_back(mat_scale(mat_add(unit_matrix(sz, sz - i, 1), mat_scale(unit_matrix(sz, sz, i + 1), sgn(i))),
                                 sgn(i + 1) / 2));
    for (int i = 1; i <= n; ++i)
      d.witt.push_back(mat_sub(unit_matrix(sz, i + 1, 1), mat_scale(unit_matrix(sz, sz, sz - i), sgn(i))));
    d.c0 = frac(-n * (2 * n + 1), 8);
  }
  const int w = static_cast<int>(d.witt.size());
  Matrix omega(w, std::vector<Scalar>(w));
  for (int l = 0; l < w; ++l)
    for (int j = 0; j < w; ++j) omega[l][j] = omega_chi(d, d.witt[l], d.witt[j]);
  Matrix mi = inverse(omega);
  for (int k = 0; k < w; ++k) {
    Matrix z = zero_matrix(d.size);
    for (int l = 0; l < w; ++l) z = mat_add(z, mat_scale(d.witt[l], mi[k][l]));
    d.witt_dual.push_back(z);
  }
  return d;
}

Element MinimalWAlgebra::theta0(const Matrix& x) const { return linear(*alg, z0_gen, z0_coords(data, x)); }
Element MinimalWAlgebra::theta1(const Matrix& x) const { return linear(*alg, z1_gen, z1_coords(data, x)); }

MinimalWAlgebra build_minimal_w(LieKind kind, int n) {
  MinimalWAlgebra w;
  w.data = minimal_data(kind, n);
  const MinimalWData& d = w.data;
  w.alg = std::make_shared<PBWAlgebra>(make_context({}));
  PBWAlgebra& A = *w.alg;
  w.c_gen = A.add_generator({"C", 4, 0, true, false});
  for (const auto& l : d.z0_labels) w.z0_gen.push_back(A.add_generator({"Theta(" + l + ")", 2, 0, false, false}));
  for (const auto& l : d.z1_labels) w.z1_gen.push_back(A.add_generator({"Theta(" + l + ")", 3, 0, false, false}));
  const int d0 = static_cast<int>(d.z0.size()), d1 = static_cast<int>(d.z1.size());

  // (i)
  for (int a = 0; a < d0; ++a)
    for (int b = 0; b < a; ++b) A.set_commutator(w.z0_gen[a], w.z0_gen[b], w.theta0(mat_bracket(d.z0[a], d.z0[b])));
  for (int a = 0; a < d0; ++a)
    for (int u = 0; u < d1; ++u) A.set_commutator(w.z0_gen[a], w.z1_gen[u], w.theta1(mat_bracket(d.z0[a], d.z1[u])));

  // Casimir of Theta(z_chi(0)) for the trace form
  Matrix gram(d0, std::vector<Scalar>(d0));
  for (int a = 0; a < d0; ++a)
    for (int b = 0; b < d0; ++b) gram[a][b] = trace_pair(d.z0[a], d.z0[b]);
  Matrix gi = inverse(gram);
  for (int a = 0; a < d0; ++a)
    for (int b = 0; b < d0; ++b)
      if (gi[a][b] != 0) w.theta_cas += A.mul(A.gen(w.z0_gen[a]), A.gen(w.z0_gen[b])) * Poly(A.coef_ctx(), gi[a][b]);

  // (iii)
  const auto& ctx = A.coef_ctx();
  Element cpart = w.C() - w.theta_cas - A.scalar(d.c0);
  w.rhs.assign(d1, std::vector<Element>(d1));
  for (int u = 0; u < d1; ++u)
    for (int v = 0; v < d1; ++v) {
      Element r = cpart * Poly(ctx, trace_pair(d.triple.f, mat_bracket(d.z1[u], d.z1[v])) / 2);
      for (std::size_t i = 0; i < d.witt.size(); ++i) {
        Matrix a = sharp(d, mat_bracket(d.z1[u], d.witt[i]));
        Matrix b = sharp(d, mat_bracket(d.z1[v], d.witt_dual[i]));
        if (mat_is_zero(a) || mat_is_zero(b)) continue;
        r += sym2(A, w.theta0(a), w.theta0(b));
      }
      w.rhs[u][v] = r;
    }
  for (int u = 0; u < d1; ++u)
    for (int v = 0; v < u; ++v) A.set_commutator(w.z1_gen[u], w.z1_gen[v], w.rhs[u][v]);
  A.finalize();
  return w;
}

VerificationReport verify_minimal_data(LieKind kind, int n) {
  VerificationReport rep;
  rep.suite = "wmin.data";
  MinimalWAlgebra w = build_minimal_w(kind, n);
  const MinimalWData& d = w.data;
  const PBWAlgebra& A = *w.alg;
  rep.params = {{"kind", kind_name(d.kind)}, {"n", std::to_string(n)}};
  const auto& t = d.triple;
  bool tri = mat_bracket(t.h, t.e) == mat_scale(t.e, 2) && mat_bracket(t.h, t.f) == mat_scale(t.f, -2) &&
             mat_bracket(t.e, t.f) == t.h;
  rep.add("triple", "[h, e] = 2e, [h, f] = -2f, [e, f] = h", tri, tri ? "" : "not an sl_2-triple");
  if (d.kind == LieKind::sp) {
    bool mem = sp_membership(t.e) && sp_membership(t.f);
    for (const auto& x : d.z1) mem = mem && sp_membership(x);
    for (const auto& x : d.witt) mem = mem && sp_membership(x);
    rep.add("sp.membership", "e, f, v_k and the Witt basis lie in sp_{2n+2}", mem, mem ? "" : "element outside sp");
  }
  auto weight_ok = [&](const std::vector<Matrix>& xs, int wt, bool central) {
    for (const auto& x : xs) {
      if (mat_bracket(t.h, x) != mat_scale(x, wt)) return false;
      if (central && !mat_is_zero(mat_bracket(t.e, x))) return false;
    }
    return true;
  };
  bool g0 = weight_ok(d.z0, 0, true), g1 = weight_ok(d.z1, 1, true), gm = weight_ok(d.witt, -1, false);
  rep.add("z_chi(0)", "z_chi(0) commutes with e and h", g0, g0 ? "" : "bad z_chi(0) element");
  rep.add("z_chi(1)", "z_chi(1) commutes with e and has h-weight 1", g1, g1 ? "" : "bad z_chi(1) element");
  rep.add("g(-1)", "the Witt basis has h-weight -1", gm, gm ? "" : "bad Witt element");

  const int s = static_cast<int>(d.witt.size()) / 2;
  std::string wit;
  for (int i = 0; i < s && wit.empty(); ++i)
    for (int j = 0; j < s && wit.empty(); ++j) {
      Scalar a = omega_chi(d, d.witt[i + s], d.witt[j]);
      Scalar b = omega_chi(d, d.witt[i], d.witt[j]);
      Scalar c = omega_chi(d, d.witt[i + s], d.witt[j + s]);
      if (a != (i == j ? 1 : 0) || b != 0 || c != 0)
        wit = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + ": " + a.get_str() + ", " + b.get_str() +
              ", " + c.get_str();
    }
  rep.add("witt", "omega(z_{i+s}, z_j) = delta_ij, omega(z_i, z_j) = omega(z_{i+s}, z_{j+s}) = 0", wit.empty(), wit);
  Scalar want_c0 = d.kind == LieKind::sl ? frac(-n * (n + 1), 4) : frac(-n * (2 * n + 1), 8);
  rep.add("c0", d.kind == LieKind::sl ? "c_0 = -n(n+1)/4" : "c_0 = -n(2n+1)/8", d.c0 == want_c0, d.c0.get_str());

  const int sz = d.size;
  auto E = [&](int i, int j) { return unit_matrix(sz, i, j); };
  Element display_cas;
  if (d.kind == LieKind::sl) {
    Matrix hn = mat_add(E(n, n), E(n + 1, n + 1));
    for (int p = 1; p <= s; ++p)
      for (int i = 1; i <= s; ++i) {
        std::string tag = ".p" + std::to_string(p) + ".i" + std::to_string(i);
        add_mat_equal(rep, "bracket.y_z" + tag, "[E_{p,n+1}, z_i] = 0", mat_bracket(E(p, n + 1), d.witt[i - 1]),
                      zero_matrix(sz));
        Matrix want = mat_sub(E(p, i), mat_scale(hn, p == i ? frac(1, 2) : Scalar(0)));
        add_mat_equal(rep, "sharp.y" + tag, "[E_{p,n+1}, z_{i+s}]^# = E_pi - delta_pi (E_nn + E_{n+1,n+1})/2",
                      sharp(d, mat_bracket(E(p, n + 1), d.witt[i + s - 1])), want);
        add_mat_equal(rep, "sharp.x" + tag, "[E_nq, z_{i+s}^*]^# = E_iq - delta_qi (E_nn + E_{n+1,n+1})/2",
                      sharp(d, mat_bracket(E(n, p), d.witt_dual[i + s - 1])),
                      mat_sub(E(i, p), mat_scale(hn, p == i ? frac(1, 2) : Scalar(0))));
      }
    // the trace-form dual of iota(E_lk) is iota(E_kl + delta_kl I/2)
    std::string dw;
    Matrix id = zero_matrix(s);
    for (int i = 0; i < s; ++i) id[i][i] = 1;
    for (int a = 0; a < d.q->dim() && dw.empty(); ++a)
      for (int k = 1; k <= s && dw.empty(); ++k)
        for (int l = 1; l <= s && dw.empty(); ++l) {
          Matrix dual = iota_gl(mat_add(unit_matrix(s, k, l), mat_scale(id, k == l ? frac(1, 2) : Scalar(0))), s, 2);
          Scalar want = d.q->label(a) == "E(" + std::to_string(l) + "," + std::to_string(k) + ")" ? 1 : 0;
          if (trace_pair(d.z0[a], dual) != want) dw = d.q->label(a) + " against E(" + std::to_string(l) + "," + std::to_string(k) + ")";
        }
    rep.add("dual.display", "gamma^{-1}(gamma(E_lk)^*) = E_kl + delta_kl I/2", dw.empty(), dw);
    auto th = [&](int k, int l) { return A.gen("Theta(E(" + std::to_string(k) + "," + std::to_string(l) + "))"); };
    Element idt;
    for (int k = 1; k <= s; ++k) idt += th(k, k);
    for (int k = 1; k <= s; ++k)
      for (int l = 1; l <= s; ++l) display_cas += A.mul(th(k, l), th(l, k));
    display_cas += A.mul(idt, idt) * Poly(A.coef_ctx(), frac(1, 2));
    add_equal(rep, A, "casimir.display", "gamma^{-1}(Theta_Cas) = sum_{k!=l} E_kl E_lk + sum E_kk^2 + I^2/2", w.theta_cas,
              display_cas);
  } else {
    Matrix h = t.h;
    for (int q = 1; q <= 2 * n; ++q)
      for (int p = 1; p <= 2 * n; ++p) {
        Scalar got = trace_pair(t.f, mat_bracket(d.z1[q - 1], d.z1[p - 1]));
        Scalar want = p + q == 2 * n + 1 ? Scalar(2 * sgn(q)) : Scalar(0);
        rep.add("f_vv.q" + std::to_string(q) + ".p" + std::to_string(p), "(f, [v_q, v_p]) = 2(-1)^q delta_{p+q,2n+1}",
                got == want, got == want ? "" : got.get_str());
      }
    for (int k = 1; k <= 2 * n; ++k)
      for (int j = 1; j <= n; ++j) {
        std::string tag = ".k" + std::to_string(k) + ".j" + std::to_string(j);
        Matrix core = mat_sub(E(k + 1, j + 1), mat_scale(E(sz - j, sz - k), sgn(k + j)));
        Matrix want1 = mat_sub(mat_scale(core, frac(-1, 2)), mat_scale(h, k == j ? frac(1, 2) : Scalar(0)));
        Matrix b1 = mat_bracket(d.z1[k - 1], d.witt[j - 1]);
        add_mat_equal(rep, "bracket.v_z" + tag, "[v_k, z_j] = -(E_{k+1,j+1} - (-1)^{k+j} E_{2n+2-j,2n+2-k})/2 - delta_kj h/2",
                      b1, want1);
        add_mat_equal(rep, "sharp.v_z" + tag, "[v_k, z_j]^# = ((-1)^{k+j} E_{2n+2-j,2n+2-k} - E_{k+1,j+1})/2", sharp(d, b1),
                      mat_scale(core, frac(-1, 2)));
        const int l = k;
        Matrix core2 = mat_add(E(l + 1, sz - j), mat_scale(E(j + 1, sz - l), sgn(l - j)));
        Matrix want2 = mat_add(mat_scale(core2, sgn(j + 1)), mat_scale(h, l + j == 2 * n + 1 ? sgn(l) : Scalar(0)));
        Matrix b2 = mat_bracket(d.z1[l - 1], d.witt[j + s - 1]);
        add_mat_equal(rep, "bracket.v_zs" + tag,
                      "[v_l, z_{j+s}] = (-1)^{j+1}(E_{l+1,2n+2-j} + (-1)^{l-j} E_{j+1,2n+2-l}) + (-1)^l delta_{l+j,2n+1} h",
                      b2, want2);
        add_mat_equal(rep, "sharp.v_zs" + tag, "[v_l, z_{j+s}]^# = (-1)^{j+1} E_{l+1,2n+2-j} + (-1)^{l+1} E_{j+1,2n+2-l}",
                      sharp(d, b2), mat_add(mat_scale(E(l + 1, sz - j), sgn(j + 1)), mat_scale(E(j + 1, sz - l), sgn(l + 1))));
      }
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = 1; j <= 2 * n; ++j) {
        Element a = w.theta0(shift_in(sp_unit(n, j, i)));
        Element b = w.theta0(shift_in(sp_unit(n, i, j)));
        display_cas += A.mul(a, b) * Poly(A.coef_ctx(), frac(1, 4));
      }
    add_equal(rep, A, "casimir.display", "gamma^{-1}(Theta_Cas) = 1/4 sum U(j,i) U(i,j)", w.theta_cas, display_cas);
  }

  // [Theta_u, Theta_v] = -[Theta_v, Theta_u]
  std::string anti;
  for (std::size_t u = 0; u < w.rhs.size() && anti.empty(); ++u)
    for (std::size_t v = 0; v <= u && anti.empty(); ++v)
      if (!(w.rhs[u][v] + w.rhs[v][u]).is_zero()) anti = d.z1_labels[u] + ", " + d.z1_labels[v];
  rep.add("iii.antisymmetric", "the (iii) right-hand side is antisymmetric in (u, v)", anti.empty(), anti);
  return rep;
}

VerificationReport verify_explicit_gl(int n, const WminOptions& opt) {
  VerificationReport rep;
  rep.suite = "wmin.explicit_gl";
  rep.params = {{"kind", "gl"}, {"n", std::to_string(n)}};
  if (opt.corrupt) rep.params["corrupt"] = "zeta0 sign";
  MinimalWAlgebra w = build_minimal_w(LieKind::sl, n);
  const PBWAlgebra& W = *w.alg;
  const int s = n - 1;
  CherednikAlgebra h = build_universal(LieKind::gl, s, 2);
  const PBWAlgebra& H = *h.alg;

  AlgebraMap f("gamma", H, W);
  for (const auto& l : w.data.z0_labels) f.set_gen(l, W.gen("Theta(" + l + ")"));
  for (int i = 1; i <= s; ++i) {
    f.set_gen("y" + std::to_string(i), W.gen("Theta(Y" + std::to_string(i) + ")"));
    f.set_gen("x" + std::to_string(i), W.gen("Theta(X" + std::to_string(i) + ")"));
  }
  Element z0 = (W.scalar(w.data.c0) - w.C()) * Poly(W.coef_ctx(), frac(opt.corrupt ? -1 : 1, 2));
  f.set_coef("zeta0", z0);
  rep.append(verify_homomorphism(f), "gamma");
  rep.append(W.consistency_check(3), "W");

  // r_2 from the kernel, from the closed form, and from the generating function
  auto E = [&](int i, int j) { return H.gen("E(" + std::to_string(i) + "," + std::to_string(j) + ")"); };
  Element id;
  for (int k = 1; k <= s; ++k) id += E(k, k);
  Element rt;
  for (int i = 1; i <= s; ++i) rt += H.mul(E(i, i), E(i, i));
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j)
      if (i != j) rt += (sym2(H, E(i, i), E(j, j)) + sym2(H, E(i, j), E(j, i))) * Poly(H.coef_ctx(), frac(1, 2));
  for (int p = 1; p <= s; ++p)
    for (int q = 1; q <= s; ++q) {
      std::string tag = ".p" + std::to_string(p) + ".q" + std::to_string(q);
      Element gf = h.r(2, p, q);
      Element disp = sym2(H, id, E(p, q));
      for (int i = 1; i <= s; ++i) disp += sym2(H, E(p, i), E(i, q));
      if (p == q) disp += rt;
      add_equal(rep, H, "r2.display" + tag, "Sym(sum E_pi E_iq + I E_pq + delta_pq R~) = r_2(y_p, x_q)", disp, gf);
      Element kern = w.rhs[p - 1][s + q - 1];
      if (p == q) kern -= (W.scalar(w.data.c0) - w.C()) * Poly(W.coef_ctx(), frac(1, 2));
      add_equal(rep, W, "r2.kernel" + tag, "[Theta_{y_p}, Theta_{x_q}] - (c_0 - C)/2 delta_pq = gamma(r_2(y_p, x_q))", kern,
                f.apply(gf));
    }
  rep.notes.push_back("zeta_0 -> (c_0 - C)/2 with c_0 = " + w.data.c0.get_str() +
                      "; C is a free central generator, so c_0 only shifts C");
  return rep;
}

VerificationReport verify_explicit_sp(int n, const WminOptions& opt) {
  VerificationReport rep;
  rep.suite = "wmin.explicit_sp";
  rep.params = {{"kind", "sp"}, {"n", std::to_string(n)}};
  if (opt.corrupt) rep.params["corrupt"] = "zeta0 sign";
  MinimalWAlgebra w = build_minimal_w(LieKind::sp, n);
  const PBWAlgebra& W = *w.alg;
  auto ctx = make_context({"zeta0"});
  // y -> Theta_v with [y, y] = zeta_0 r_0 + 2 r_2 is the sqrt(2)-free form of y -> Theta_v / sqrt(2)
  CherednikAlgebra h = build_cherednik(LieKind::sp, n, {Poly::var(ctx, 0), Poly(ctx, 2)}, ctx);
  const PBWAlgebra& H = *h.alg;
  AlgebraMap f("gamma", H, W);
  for (const auto& l : w.data.z0_labels) f.set_gen(l, W.gen("Theta(" + l + ")"));
  for (int k = 1; k <= 2 * n; ++k) f.set_gen("y" + std::to_string(k), W.gen("Theta(v" + std::to_string(k) + ")"));
  Element z0 = (W.scalar(w.data.c0) - w.C()) * Poly(W.coef_ctx(), Scalar(opt.corrupt ? -1 : 1));
  f.set_coef("zeta0", z0);
  rep.append(verify_homomorphism(f), "gamma");
  rep.append(W.consistency_check(3), "W");

  auto U = [&](int k, int l) { return linear(H, h.g_gen, h.g->coords(sp_unit(n, k, l))); };
  Element cas;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) cas += sym2(H, U(i, j), U(j, i));
  auto t0 = pairing_table(LieKind::sp, n, 1);
  for (int q = 1; q <= 2 * n; ++q)
    for (int p = 1; p <= 2 * n; ++p) {
      std::string tag = ".q" + std::to_string(q) + ".p" + std::to_string(p);
      const bool opp = p + q == 2 * n + 1;
      Poly r0 = t0->at(0, q, p);
      Scalar want0 = opp ? sgn(p) : Scalar(0);
      rep.add("r0.display" + tag, "r_0(y_q, y_p) = (-1)^p delta_{p+q,2n+1}", r0 == Poly(r0.ctx(), want0),
              r0 == Poly(r0.ctx(), want0) ? "" : r0.to_string());
      Element gf = h.r(1, q, p);
      Element disp;
      for (int t = 1; t <= 2 * n; ++t) disp += sym2(H, U(t, 2 * n + 1 - q), U(p, t));
      disp *= Poly(H.coef_ctx(), sgn(q + 1) / 4);
      if (opp) disp += cas * Poly(H.coef_ctx(), sgn(p) / 8);
      add_equal(rep, H, "r2.display" + tag, "two-line display of r_2(y_q, y_p)", disp, gf);
      Element kern = w.rhs[q - 1][p - 1];
      if (opp) kern -= (W.scalar(w.data.c0) - w.C()) * Poly(W.coef_ctx(), sgn(p));
      add_equal(rep, W, "r2.kernel" + tag, "[Theta_{v_q}, Theta_{v_p}] - (c_0 - C) r_0(y_q, y_p) = 2 gamma(r_2(y_q, y_p))",
                kern, f.apply(gf) * Poly(W.coef_ctx(), 2));
    }
  rep.notes.push_back("verified in rescaled form: y_k -> Theta_{v_k}, zeta_0 -> c_0 - C, [y, y] = zeta_0 r_0 + 2 r_2");
  rep.notes.push_back("c_0 = " + w.data.c0.get_str() + "; C is a free central generator, so c_0 only shifts C");
  return rep;
}

}  // namespace cherw
