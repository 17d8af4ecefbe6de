#pragma once

#include <map>
#include <string>

#include "cherw/poly.hpp"

namespace cherw {

// Truncated Laurent series in one distinguished variable with Poly
// coefficients. Every coefficient with exponent < order is exact.
class TruncSeries {
 public:
  TruncSeries(std::string var, int order) : var_(std::move(var)), order_(order) {}
  static TruncSeries constant(std::string var, int order, const Poly& c);
  static TruncSeries monomial(std::string var, int order, const Poly& c, int k);

  const std::string& var() const { return var_; }
  int order() const { return order_; }
  const std::map<int, Poly>& coefficients() const { return coef_; }
  // lowest exponent with a nonzero coefficient; order() when zero
  int valuation() const;
  bool is_zero() const { return coef_.empty(); }

  void set(int k, const Poly& c);
  void add_to(int k, const Poly& c);
  TruncSeries truncated(int order) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries operator*(const Poly& c) const;
  TruncSeries operator-() const;

  std::string to_string() const;

 private:
  std::string var_;
  int order_;
  std::map<int, Poly> coef_;
};

TruncSeries series_invert(const TruncSeries& s);
Poly coefficient_of(const TruncSeries& s, int k);

}  // namespace cherw
