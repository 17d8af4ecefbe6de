#include "cherw/liedata.hpp"

#include <mutex>
#include <sstream>

namespace cherw {

std::string kind_name(LieKind k) {
  switch (k) {
    case LieKind::gl: return "gl";
    case LieKind::sl: return "sl";
    case LieKind::sp: return "sp";
  }
  return "?";
}

LieKind parse_kind(const std::string& s) {
  if (s == "gl") return LieKind::gl;
  if (s == "sl") return LieKind::sl;
  if (s == "sp") return LieKind::sp;
  throw Error("unknown Lie algebra kind '" + s + "'");
}

Matrix zero_matrix(int n) { return Matrix(n, std::vector<Scalar>(n, Scalar(0))); }

Matrix unit_matrix(int n, int i, int j) {
  Matrix m = zero_matrix(n);
  m.at(i - 1).at(j - 1) = 1;
  return m;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += b[i][j];
  return c;
}

Matrix mat_scale(const Matrix& a, const Scalar& s) {
  Matrix c = a;
  for (auto& row : c)
    for (auto& v : row) v *= s;
  return c;
}

Matrix mat_bracket(const Matrix& a, const Matrix& b) {
  Matrix ab = multiply(a, b), ba = multiply(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

Scalar mat_trace(const Matrix& a) {
  Scalar t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

bool mat_is_zero(const Matrix& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

Matrix symplectic_J(int n) {
  Matrix j = zero_matrix(2 * n);
  for (int r = 1; r <= 2 * n; ++r) {
    int c = 2 * n + 1 - r;
    j[r - 1][c - 1] = (c % 2 == 0) ? 1 : -1;
  }
  return j;
}

bool sp_membership(const Matrix& a) {
  const int s = static_cast<int>(a.size());
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j) {
      Scalar sign = ((i + j + 1) % 2 == 0) ? 1 : -1;
      if (a[s - j][s - i] != sign * a[i - 1][j - 1]) return false;
    }
  return true;
}

Matrix sp_unit(int N, int k, int l) {
  Matrix u = unit_matrix(2 * N, k, l);
  Scalar sign = ((k + l + 1) % 2 == 0) ? 1 : -1;
  u[2 * N - l][2 * N - k] += sign;
  return u;
}

static std::string elabel(const char* head, int i, int j) {
  std::ostringstream os;
  os << head << "(" << i << "," << j << ")";
  return os.str();
}

LieAlgebra::LieAlgebra(LieKind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw Error("Lie algebra rank must be >= 1");
  size_ = kind == LieKind::sp ? 2 * n : n;
  if (kind == LieKind::gl) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        labels_.push_back(elabel("E", i, j));
        basis_.push_back(unit_matrix(n, i, j));
      }
  } else if (kind == LieKind::sl) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i != j) {
          labels_.push_back(elabel("E", i, j));
          basis_.push_back(unit_matrix(n, i, j));
        } else if (i < n) {
          labels_.push_back("H(" + std::to_string(i) + ")");
          Matrix h = unit_matrix(n, i, i);
          h[i][i] = -1;
          basis_.push_back(h);
        }
      }
  } else {
    for (int k = 1; k <= 2 * n; ++k)
      for (int l = 1; k + l <= 2 * n + 1; ++l) {
        labels_.push_back(elabel("U", k, l));
        basis_.push_back(sp_unit(n, k, l));
      }
  }
  const int d = dim();
  for (int a = 0; a < d; ++a) index_[labels_[a]] = a;

  // choose matrix positions that determine coordinates
  Matrix bt(d, std::vector<Scalar>(size_ * size_));
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) bt[a][i * size_ + j] = basis_[a][i][j];
  {
    Matrix work = bt;
    int r = 0;
    const int cols = size_ * size_;
    for (int c = 0; c < cols && r < d; ++c) {
      int p = r;
      while (p < d && work[p][c] == 0) ++p;
      if (p == d) continue;
      std::swap(work[p], work[r]);
      for (int i = 0; i < d; ++i) {
        if (i == r || work[i][c] == 0) continue;
        Scalar f = work[i][c] / work[r][c];
        for (int k = c; k < cols; ++k) work[i][k] -= f * work[r][k];
      }
      pivots_.push_back({c / size_, c % size_});
      ++r;
    }
    if (r != d) throw Error("basis is linearly dependent");
  }
  Matrix sub(d, std::vector<Scalar>(d));
  for (int p = 0; p < d; ++p)
    for (int a = 0; a < d; ++a) sub[p][a] = basis_[a][pivots_[p].first][pivots_[p].second];
  pivot_inverse_ = inverse(sub);

  bracket_.assign(d, std::vector<SparseVec>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (b < a) {
        for (const auto& [c, v] : bracket_[b][a]) bracket_[a][b].push_back({c, -v});
        continue;
      }
      auto cs = coords(mat_bracket(basis_[a], basis_[b]));
      for (int c = 0; c < d; ++c)
        if (cs[c] != 0) bracket_[a][b].push_back({c, cs[c]});
    }

  gram_.assign(d, std::vector<Scalar>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) gram_[a][b] = mat_trace(multiply(basis_[a], basis_[b]));
  Matrix ginv = inverse(gram_);
  dual_.resize(d);
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c)
      if (ginv[a][c] != 0) dual_[a].push_back({c, ginv[a][c]});
}

int LieAlgebra::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error("unknown basis label " + label);
  return it->second;
}

std::vector<Scalar> LieAlgebra::coords(const Matrix& m) const {
  std::vector<Scalar> rhs(pivots_.size());
  for (std::size_t p = 0; p < pivots_.size(); ++p) rhs[p] = m[pivots_[p].first][pivots_[p].second];
  auto c = mat_vec(pivot_inverse_, rhs);
  Matrix back = element(c);
  if (back != m) throw Error("matrix is not in the span of the " + kind_name(kind_) + " basis");
  return c;
}

Matrix LieAlgebra::element(const std::vector<Scalar>& c) const {
  Matrix m = zero_matrix(size_);
  for (int a = 0; a < dim(); ++a) {
    if (c[a] == 0) continue;
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j)
        if (basis_[a][i][j] != 0) m[i][j] += c[a] * basis_[a][i][j];
  }
  return m;
}

bool LieAlgebra::contains(const Matrix& m) const {
  try {
    coords(m);
    return true;
  } catch (const Error&) {
    return false;
  }
}

PolyMatrix LieAlgebra::generic_matrix(const ContextPtr& ctx, const std::string& prefix) const {
  PolyMatrix a(size_, std::vector<Poly>(size_, Poly(ctx)));
  for (int b = 0; b < dim(); ++b) {
    Poly x = Poly::var(ctx, prefix + labels_[b]);
    for (const auto& [c, w] : dual_[b])
      for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j)
          if (basis_[c][i][j] != 0) a[i][j] += x * (w * basis_[c][i][j]);
  }
  return a;
}

long LieAlgebra::jacobi_check() const {
  const int d = dim();
  long count = 0;
  std::vector<Scalar> acc(d);
  auto add_nested = [&](int a, int b, int c) {
    // [a, [b, c]]
    for (const auto& [k, v] : bracket_[b][c])
      for (const auto& [l, w] : bracket_[a][k]) acc[l] += v * w;
  };
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = b + 1; c < d; ++c) {
        for (auto& v : acc) v = 0;
        add_nested(a, b, c);
        add_nested(b, c, a);
        add_nested(c, a, b);
        for (int l = 0; l < d; ++l)
          if (acc[l] != 0)
            throw Error("Jacobi identity fails on (" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ")");
        ++count;
      }
  return count;
}

std::shared_ptr<const LieAlgebra> build_lie(LieKind kind, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const LieAlgebra>> cache;
  std::pair<int, int> key{static_cast<int>(kind), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto alg = std::make_shared<const LieAlgebra>(kind, n);
  alg->jacobi_check();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, alg).first->second;
}

static void check_sl2(const SL2Triple& t) {
  if (mat_bracket(t.h, t.e) != mat_scale(t.e, 2) || mat_bracket(t.h, t.f) != mat_scale(t.f, -2) ||
      mat_bracket(t.e, t.f) != t.h)
    throw Error("sl2 relations fail");
}

SL2Triple one_block_nilpotent(LieKind kind, int n, int m) {
  if (n < 0) throw Error("n must be >= 0");
  SL2Triple t;
  if (kind == LieKind::sp) {
    if (m < 1) throw Error("sp one-block nilpotent needs m >= 1");
    int s = 2 * (n + m);
    t.e = t.h = t.f = zero_matrix(s);
    for (int j = 1; j <= 2 * m - 1; ++j) {
      t.e[n + j - 1][n + j] = 1;
      t.f[n + j][n + j - 1] = j * (2 * m - j);
    }
    for (int j = 1; j <= 2 * m; ++j) t.h[n + j - 1][n + j - 1] = 2 * m + 1 - 2 * j;
    if (!sp_membership(t.e) || !sp_membership(t.h) || !sp_membership(t.f))
      throw Error("sl2 triple is not in sp");
  } else {
    if (m < 2) throw Error("sl one-block nilpotent needs m >= 2 (got m = " + std::to_string(m) + ")");
    int s = n + m;
    t.e = t.h = t.f = zero_matrix(s);
    for (int j = 1; j <= m - 1; ++j) {
      t.e[n + j - 1][n + j] = 1;
      t.f[n + j][n + j - 1] = j * (m - j);
    }
    for (int j = 1; j <= m; ++j) t.h[n + j - 1][n + j - 1] = m + 1 - 2 * j;
  }
  check_sl2(t);
  return t;
}

Matrix iota_gl(const Matrix& a, int n, int m) {
  int s = n + m;
  Matrix r = zero_matrix(s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = a[i][j];
  Scalar shift = mat_trace(a) / (n + m);
  for (int i = 0; i < s; ++i) r[i][i] -= shift;
  return r;
}

Matrix iota_sp(const Matrix& a, int n, int m) {
  int s = 2 * (n + m);
  Matrix r = zero_matrix(s);
  auto idx = [&](int k) { return k < n ? k : k + 2 * m; };
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) r[idx(i)][idx(j)] = a[i][j];
  return r;
}

std::vector<const CentralizerElement*> CentralizerBasis::all() const {
  std::vector<const CentralizerElement*> out;
  for (const auto* part : {&q, &v_plus, &v_minus, &v, &xi})
    for (const auto& x : *part) out.push_back(&x);
  return out;
}

int CentralizerBasis::dim() const { return static_cast<int>(all().size()); }

// eigenvalue of ad(h) on x; throws if x is not an eigenvector
static Scalar ad_weight(const Matrix& h, const Matrix& x) {
  Matrix b = mat_bracket(h, x);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[i][j] != 0) {
        Scalar w = b[i][j] / x[i][j];
        if (b != mat_scale(x, w)) throw Error("not an ad-eigenvector");
        return w;
      }
  throw Error("zero centralizer element");
}

static SL2Triple triple_or_zero(LieKind kind, int n, int m) {
  if (kind != LieKind::sp && m == 1) {
    // e_1 = 0 in sl_{n+1}
    Matrix z = zero_matrix(n + 1);
    return {z, z, z};
  }
  return one_block_nilpotent(kind == LieKind::sp ? LieKind::sp : LieKind::sl, n, m);
}

CentralizerBasis centralizer_basis(LieKind kind, int n, int m) {
  if (n < 1) throw Error("centralizer_basis needs n >= 1");
  CentralizerBasis cb;
  cb.kind = kind == LieKind::sp ? LieKind::sp : LieKind::gl;
  cb.n = n;
  cb.m = m;
  SL2Triple t = triple_or_zero(kind, n, m);
  Matrix tgrade;
  if (cb.kind == LieKind::gl) {
    int s = n + m;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) cb.q.push_back({elabel("E", i, j), iota_gl(unit_matrix(n, i, j), n, m), 0, 0});
    for (int i = 1; i <= n; ++i) cb.v_plus.push_back({"y(" + std::to_string(i) + ")", unit_matrix(s, i, n + m), 0, 0});
    for (int i = 1; i <= n; ++i) cb.v_minus.push_back({"x(" + std::to_string(i) + ")", unit_matrix(s, n + 1, i), 0, 0});
    for (int k = 0; k <= m - 2; ++k) {
      int j = m - 2 - k;
      Matrix x = zero_matrix(s);
      for (int r = n + 1, c = n + j + 2; c <= n + m; ++r, ++c) x[r - 1][c - 1] = 1;
      cb.xi.push_back({"xi(" + std::to_string(k) + ")", x, 0, 0});
    }
    tgrade = zero_matrix(s);
    for (int i = 0; i < s; ++i) tgrade[i][i] = i < n ? frac(m, n + m) : frac(-n, n + m);
  } else {
    int N = n + m, s = 2 * N;
    for (int k = 1; k <= 2 * n; ++k)
      for (int l = 1; k + l <= 2 * n + 1; ++l)
        cb.q.push_back({elabel("U", k, l), iota_sp(sp_unit(n, k, l), n, m), 0, 0});
    for (int i = 1; i <= n; ++i) {
      Matrix y = unit_matrix(s, i, n + 2 * m);
      y[n][2 * n + 2 * m - i] += ((n + i + 1) % 2 == 0) ? 1 : -1;
      cb.v.push_back({"y(" + std::to_string(i) + ")", y, 0, 0});
    }
    for (int i = 1; i <= n; ++i) {
      Matrix y = unit_matrix(s, n + 2 * m + i, n + 2 * m);
      y[n][n - i] += ((i + 1) % 2 == 0) ? 1 : -1;
      cb.v.push_back({"y(" + std::to_string(n + i) + ")", y, 0, 0});
    }
    for (int k = m; k >= 1; --k) {
      Matrix x = zero_matrix(s);
      for (int r = n + 1, c = n + 2 * k; c <= n + 2 * m; ++r, ++c) x[r - 1][c - 1] = 1;
      cb.xi.push_back({"xi(" + std::to_string(m - k) + ")", x, 0, 0});
    }
    Matrix ip = zero_matrix(2 * n);
    for (int i = 0; i < 2 * n; ++i) ip[i][i] = i < n ? 1 : -1;
    tgrade = iota_sp(ip, n, m);
  }
  for (auto* part : {&cb.q, &cb.v_plus, &cb.v_minus, &cb.v, &cb.xi})
    for (auto& x : *part) {
      if (!mat_is_zero(mat_bracket(t.e, x.mat))) throw Error("centralizer element " + x.label + " does not commute with e");
      if (cb.kind == LieKind::sp && !sp_membership(x.mat)) throw Error("centralizer element " + x.label + " not in sp");
      Scalar hw = mat_is_zero(t.h) ? Scalar(0) : ad_weight(t.h, x.mat);
      if (!is_integer(hw)) throw Error("non-integral ad(h) weight");
      x.h_weight = static_cast<int>(hw.get_num().get_si());
      x.t_weight = ad_weight(tgrade, x.mat);
    }
  return cb;
}

SliceMatrix slice_matrix(LieKind kind, int n, int m) {
  if (n < 1) throw Error("slice_matrix needs n >= 1");
  SliceMatrix sm;
  sm.kind = kind == LieKind::sp ? LieKind::sp : LieKind::gl;
  sm.n = n;
  sm.m = m;
  SL2Triple t = triple_or_zero(kind, n, m);
  if (sm.kind == LieKind::gl) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) sm.coordinates.push_back(elabel("x", i, j));
    for (int i = 1; i <= n; ++i) sm.coordinates.push_back("u(" + std::to_string(i) + ")");
    for (int i = 1; i <= n; ++i) sm.coordinates.push_back("v(" + std::to_string(i) + ")");
    for (int k = 1; k <= m - 1; ++k) sm.coordinates.push_back("w(" + std::to_string(k) + ")");
    sm.ctx = make_context(sm.coordinates);
    int s = n + m;
    PolyMatrix x = to_poly_matrix(t.e, sm.ctx);
    Poly tr(sm.ctx);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Poly v = Poly::var(sm.ctx, elabel("x", i, j));
        x[i - 1][j - 1] += v;
        if (i == j) tr += v;
      }
    for (int i = 1; i <= n; ++i) {
      x[i - 1][n] += Poly::var(sm.ctx, "u(" + std::to_string(i) + ")");
      x[n + m - 1][i - 1] += Poly::var(sm.ctx, "v(" + std::to_string(i) + ")");
    }
    Matrix fk = identity_matrix(s);
    for (int k = 1; k <= m - 1; ++k) {
      fk = multiply(fk, t.f);
      Poly w = Poly::var(sm.ctx, "w(" + std::to_string(k) + ")");
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
          if (fk[i][j] != 0) x[i][j] += w * fk[i][j];
    }
    for (int j = n; j < s; ++j) x[j][j] -= tr * frac(1, m);
    sm.X = x;
  } else {
    for (int k = 1; k <= 2 * n; ++k)
      for (int l = 1; k + l <= 2 * n + 1; ++l) sm.coordinates.push_back(elabel("x", k, l));
    for (int i = 1; i <= 2 * n; ++i) sm.coordinates.push_back("v(" + std::to_string(i) + ")");
    for (int k = 1; k <= m; ++k) sm.coordinates.push_back("w(" + std::to_string(k) + ")");
    sm.ctx = make_context(sm.coordinates);
    int N = n + m, s = 2 * N;
    PolyMatrix x = to_poly_matrix(t.e, sm.ctx);
    auto add = [&](const Matrix& mat, const Poly& c) {
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
          if (mat[i][j] != 0) x[i][j] += c * mat[i][j];
    };
    for (int k = 1; k <= 2 * n; ++k)
      for (int l = 1; k + l <= 2 * n + 1; ++l)
        add(iota_sp(sp_unit(n, k, l), n, m), Poly::var(sm.ctx, elabel("x", k, l)));
    for (int i = 1; i <= n; ++i) {
      add(sp_unit(N, i, n + 1), Poly::var(sm.ctx, "v(" + std::to_string(i) + ")"));
      add(sp_unit(N, n + 2 * m + i, n + 1), Poly::var(sm.ctx, "v(" + std::to_string(n + i) + ")"));
    }
    Matrix fk = t.f;
    Matrix f2 = multiply(t.f, t.f);
    for (int k = 1; k <= m; ++k) {
      add(fk, Poly::var(sm.ctx, "w(" + std::to_string(k) + ")"));
      fk = multiply(fk, f2);
    }
    sm.X = x;
  }
  return sm;
}

PolyMatrix to_poly_matrix(const Matrix& a, const ContextPtr& ctx) {
  PolyMatrix p(a.size(), std::vector<Poly>(a.empty() ? 0 : a[0].size(), Poly(ctx)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) p[i][j] = Poly(ctx, a[i][j]);
  return p;
}

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
  ContextPtr ctx = n && inner ? a[0][0].ctx() : nullptr;
  PolyMatrix c(n, std::vector<Poly>(cols, Poly(ctx)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      PolyBuilder acc(ctx);
      bool any = false;
      for (std::size_t k = 0; k < inner; ++k) {
        if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
        acc.add(a[i][k] * b[k][j]);
        any = true;
      }
      if (any) c[i][j] = acc.finish();
    }
  return c;
}

PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

PolyMatrix pm_sub(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b[i][j];
  return c;
}

Poly pm_trace(const PolyMatrix& a) {
  Poly t = a.empty() ? Poly() : Poly(a[0][0].ctx());
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

PolyMatrix pm_block(const PolyMatrix& a, int r0, int c0, int rows, int cols) {
  PolyMatrix b(rows, std::vector<Poly>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b[i][j] = a[r0 + i][c0 + j];
  return b;
}

std::vector<Poly> power_traces(const PolyMatrix& x, int kmax) {
  ContextPtr ctx = x.empty() ? nullptr : x[0][0].ctx();
  std::vector<Poly> p(kmax + 1, Poly(ctx));
  p[0] = Poly(ctx, static_cast<long>(x.size()));
  if (kmax < 1) return p;
  PolyMatrix pw = x;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) pw = pm_mul(pw, x);
    p[k] = pm_trace(pw);
  }
  return p;
}

std::vector<Poly> elementary_from_power(const std::vector<Poly>& p, int kmax) {
  ContextPtr ctx = p.empty() ? nullptr : p[0].ctx();
  std::vector<Poly> e(kmax + 1, Poly(ctx));
  e[0] = Poly(ctx, 1);
  for (int k = 1; k <= kmax; ++k) {
    Poly acc(ctx);
    for (int i = 1; i <= k; ++i) {
      Poly t = e[k - i] * p[i];
      if (i % 2 == 1)
        acc += t;
      else
        acc -= t;
    }
    e[k] = acc * frac(1, k);
  }
  return e;
}

std::vector<Poly> complete_from_power(const std::vector<Poly>& p, int kmax) {
  ContextPtr ctx = p.empty() ? nullptr : p[0].ctx();
  std::vector<Poly> h(kmax + 1, Poly(ctx));
  h[0] = Poly(ctx, 1);
  for (int k = 1; k <= kmax; ++k) {
    Poly acc(ctx);
    for (int i = 1; i <= k; ++i) acc += h[k - i] * p[i];
    h[k] = acc * frac(1, k);
  }
  return h;
}

CharInvariants char_invariants(const PolyMatrix& x, int kmax) {
  auto p = power_traces(x, kmax);
  CharInvariants ci;
  ci.F = elementary_from_power(p, kmax);
  ci.trLambda = ci.F;
  ci.trS = complete_from_power(p, kmax);
  return ci;
}

}  // namespace cherw
