#include "cherw/linalg.hpp"

namespace cherw {

std::vector<Scalar> solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  return solve_linear_generic<Scalar>(a, b);
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(Matrix& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Scalar inv = 1 / a[r][c];
    for (int k = c; k < cols; ++k) a[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Scalar f = a[i][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix a) { return static_cast<int>(rref(a).size()); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& a) {
  Matrix m = a;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  Matrix aug(n, std::vector<Scalar>(2 * n, Scalar(0)));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw Error("inverse: matrix not square");
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n) {
    int r = 0;
    for (int c : pivots)
      if (c < n) ++r;
    throw SingularError("singular matrix: rank " + std::to_string(r), r);
  }
  Matrix inv(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Matrix c(a.size(), std::vector<Scalar>(cols, Scalar(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& x) {
  std::vector<Scalar> y(a.size(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace cherw
