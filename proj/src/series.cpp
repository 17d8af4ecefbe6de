#include "cherw/series.hpp"

#include <algorithm>
#include <sstream>

namespace cherw {

TruncSeries TruncSeries::constant(std::string var, int order, const Poly& c) {
  return monomial(std::move(var), order, c, 0);
}

TruncSeries TruncSeries::monomial(std::string var, int order, const Poly& c, int k) {
  TruncSeries s(std::move(var), order);
  s.set(k, c);
  return s;
}

int TruncSeries::valuation() const { return coef_.empty() ? order_ : coef_.begin()->first; }

void TruncSeries::set(int k, const Poly& c) {
  if (k >= order_) return;
  if (c.is_zero())
    coef_.erase(k);
  else
    coef_[k] = c;
}

void TruncSeries::add_to(int k, const Poly& c) {
  if (k >= order_ || c.is_zero()) return;
  auto it = coef_.find(k);
  if (it == coef_.end()) {
    coef_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coef_.erase(it);
}

TruncSeries TruncSeries::truncated(int order) const {
  TruncSeries r(var_, std::min(order, order_));
  for (const auto& [k, c] : coef_) r.set(k, c);
  return r;
}

static void check_var(const TruncSeries& a, const TruncSeries& b) {
  if (a.var() != b.var()) throw Error("series in different variables: " + a.var() + ", " + b.var());
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_var(*this, o);
  order_ = std::min(order_, o.order_);
  for (auto it = coef_.lower_bound(order_); it != coef_.end();) it = coef_.erase(it);
  for (const auto& [k, c] : o.coef_) add_to(k, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& [k, c] : r.coef_) c = -c;
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_var(a, b);
  int order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
  TruncSeries r(a.var_, order);
  for (const auto& [i, ci] : a.coef_)
    for (const auto& [j, cj] : b.coef_)
      if (i + j < order) r.add_to(i + j, ci * cj);
  return r;
}

TruncSeries TruncSeries::operator*(const Poly& c) const {
  TruncSeries r(var_, order_);
  for (const auto& [k, v] : coef_) r.set(k, v * c);
  return r;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coef_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    if (k != 0) os << "*" << var_ << "^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << order_ << ")";
  return os.str();
}

TruncSeries series_invert(const TruncSeries& s) {
  if (s.is_zero()) throw Error("not invertible as series");
  int v = s.valuation();
  const Poly& lead = s.coefficients().begin()->second;
  if (!lead.is_constant()) throw Error("not invertible as series");
  Scalar inv_lead = 1 / lead.constant_term();
  // s = x^v * u with u a unit; the inverse is exact up to order - 2v
  int rel = s.order() - v;
  std::vector<Poly> u(rel), t(rel);
  for (const auto& [k, c] : s.coefficients()) u[k - v] = c;
  ContextPtr ctx = lead.ctx();
  for (const auto& [k, c] : s.coefficients())
    if (c.ctx()) ctx = c.ctx();
  for (int k = 0; k < rel; ++k) {
    Poly acc(ctx, k == 0 ? Scalar(1) : Scalar(0));
    for (int i = 1; i <= k; ++i)
      if (!u[i].is_zero() && !t[k - i].is_zero()) acc -= u[i] * t[k - i];
    t[k] = acc * inv_lead;
  }
  TruncSeries r(s.var(), rel - v);
  for (int k = 0; k < rel; ++k) r.set(k - v, t[k]);
  return r;
}

Poly coefficient_of(const TruncSeries& s, int k) {
  if (k >= s.order()) throw Error("beyond truncation: exponent " + std::to_string(k) + " >= order " + std::to_string(s.order()));
  auto it = s.coefficients().find(k);
  return it == s.coefficients().end() ? Poly() : it->second;
}

}  // namespace cherw
