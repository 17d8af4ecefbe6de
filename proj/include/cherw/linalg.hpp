#pragma once

#include <string>
#include <vector>

#include "cherw/poly.hpp"

namespace cherw {

using Matrix = std::vector<std::vector<Scalar>>;

class SingularError : public Error {
 public:
  SingularError(const std::string& what, int rank) : Error(what), rank(rank) {}
  int rank;
};

namespace detail {
inline bool is_zero_value(const Scalar& s) { return s == 0; }
inline bool is_zero_value(const Poly& p) { return p.is_zero(); }
}  // namespace detail

// Rational Gaussian elimination. Rows >= columns; extra rows must be
// consistent. V is anything that is a Q-vector space (Scalar, Poly).
template <class V>
std::vector<V> solve_linear_generic(Matrix a, std::vector<V> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  if (static_cast<int>(b.size()) != rows) throw Error("solve_linear: dimension mismatch");
  if (rows < cols) throw SingularError("solve_linear: underdetermined system", rows);
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Scalar inv = 1 / a[r][c];
    for (int k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] = b[r] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Scalar f = a[i][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] = b[i] - b[r] * f;
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols)
    throw SingularError("singular system: rank " + std::to_string(r) + " < " + std::to_string(cols), r);
  for (int i = r; i < rows; ++i)
    if (!detail::is_zero_value(b[i]))
      throw SingularError("inconsistent system: rank " + std::to_string(r) + ", row " + std::to_string(i), r);
  std::vector<V> x(b.begin(), b.begin() + cols);
  return x;
}

std::vector<Scalar> solve_linear(const Matrix& a, const std::vector<Scalar>& b);
int rank(Matrix a);
// basis of {x : a x = 0}
std::vector<std::vector<Scalar>> nullspace(const Matrix& a);
Matrix inverse(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& x);
Matrix identity_matrix(int n);

}  // namespace cherw
