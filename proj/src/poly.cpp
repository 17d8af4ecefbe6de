#include "cherw/poly.hpp"

#include <algorithm>
#include <cstring>
#include <ostream>
#include <sstream>

namespace cherw {

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e[i]) + unsigned(o.e[i]);
    if (s > 255) throw Error("exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  return r;
}

bool Exponent::divides(const Exponent& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

bool grlex_greater(const Exponent& a, const Exponent& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  return std::memcmp(a.e.data(), b.e.data(), kMaxVars) > 0;
}

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw Error("too many variables in context (" + std::to_string(names_.size()) + ")");
  for (int i = 0; i < size(); ++i)
    if (!index_.emplace(names_[i], i).second) throw Error("duplicate variable " + names_[i]);
}

int VarContext::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("unknown variable " + name);
  return it->second;
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

Poly::Poly(ContextPtr ctx, const Scalar& c) : ctx_(std::move(ctx)) {
  if (c != 0) terms_.push_back({Exponent{}, c});
}

Poly::Poly(const Scalar& c) {
  if (c != 0) terms_.push_back({Exponent{}, c});
}

Poly Poly::var(const ContextPtr& ctx, int i) {
  if (i < 0 || i >= ctx->size()) throw Error("variable index out of range");
  Exponent e;
  e.e[i] = 1;
  e.deg = 1;
  return monomial(ctx, e, 1);
}

Poly Poly::var(const ContextPtr& ctx, const std::string& name) { return var(ctx, ctx->index(name)); }

Poly Poly::monomial(const ContextPtr& ctx, const Exponent& e, const Scalar& c) {
  Poly p(ctx);
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.deg == 0); }

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().exp.deg == 0) return terms_.back().coef;
  return 0;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.front().exp.deg; }

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, int(t.exp.e[var]));
  return d;
}

bool Poly::uses_var(int var) const {
  for (const auto& t : terms_)
    if (t.exp.e[var]) return true;
  return false;
}

const ContextPtr& Poly::common_ctx(const Poly& a, const Poly& b) {
  if (!a.ctx_) return b.ctx_;
  if (!b.ctx_ || a.ctx_ == b.ctx_) return a.ctx_;
  if (a.ctx_->names() != b.ctx_->names()) throw Error("polynomials from different variable contexts");
  return a.ctx_;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exp, a[i].exp)) {
      out.push_back({b[j].exp, subtract ? Scalar(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Scalar c = subtract ? Scalar(a[i].coef - b[j].coef) : Scalar(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].exp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  ctx_ = common_ctx(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  ctx_ = common_ctx(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  const ContextPtr& ctx = Poly::common_ctx(a, b);
  Poly r(ctx);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  // multiplying by a single term keeps grlex order
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Poly& one = a.terms_.size() == 1 ? a : b;
    const Poly& many = a.terms_.size() == 1 ? b : a;
    const auto& t0 = one.terms_[0];
    r.terms_.reserve(many.terms_.size());
    for (const auto& t : many.terms_) r.terms_.push_back({t.exp + t0.exp, t.coef * t0.coef});
    return r;
  }
  PolyBuilder acc(ctx);
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) acc.add(ta.exp + tb.exp, ta.coef * tb.coef);
  return acc.finish();
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw Error("negative power of polynomial");
  Poly result(ctx_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::derivative(int var) const {
  Poly r(ctx_);
  for (const auto& t : terms_) {
    if (!t.exp.e[var]) continue;
    Exponent e = t.exp;
    Scalar c = t.coef * int(e.e[var]);
    e.e[var]--;
    e.deg--;
    r.terms_.push_back({e, c});
  }
  // lowering one exponent by one preserves the relative order within a fixed
  // exponent of var, but not across; re-sort to be safe
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return grlex_greater(x.exp, y.exp); });
  return r;
}

std::vector<Poly> Poly::coefficients_in(int var) const {
  std::vector<Poly> out;
  for (const auto& t : terms_) {
    int k = t.exp.e[var];
    if (static_cast<int>(out.size()) <= k) out.resize(k + 1, Poly(ctx_));
    Exponent e = t.exp;
    e.e[var] = 0;
    e.deg = static_cast<std::uint16_t>(e.deg - k);
    out[k].terms_.push_back({e, t.coef});
  }
  for (auto& p : out)
    std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& x, const Term& y) { return grlex_greater(x.exp, y.exp); });
  return out;
}

Poly Poly::substitute(const ContextPtr& target, const std::vector<Poly>& images) const {
  int nv = ctx_ ? ctx_->size() : 0;
  if (static_cast<int>(images.size()) < nv) throw Error("substitution needs an image for every variable");
  // cache powers per variable
  std::vector<std::vector<Poly>> powers(nv);
  Poly result(target);
  for (const auto& t : terms_) {
    Poly term(target, t.coef);
    for (int i = 0; i < nv; ++i) {
      int k = t.exp.e[i];
      if (!k) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly(target, 1));
      while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
      term *= pw[k];
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

Poly Poly::embed(const ContextPtr& target) const {
  if (ctx_ == target || !ctx_) {
    Poly r = *this;
    r.ctx_ = target;
    return r;
  }
  std::vector<int> map(ctx_->size(), -1);
  for (int i = 0; i < ctx_->size(); ++i)
    if (target->has(ctx_->name(i))) map[i] = target->index(ctx_->name(i));
  PolyBuilder acc(target);
  for (const auto& t : terms_) {
    Exponent e;
    for (int i = 0; i < ctx_->size(); ++i) {
      if (!t.exp.e[i]) continue;
      if (map[i] < 0) throw Error("cannot embed: variable " + ctx_->name(i) + " missing in target");
      e.e[map[i]] = t.exp.e[i];
    }
    e.deg = t.exp.deg;
    acc.add(e, t.coef);
  }
  return acc.finish();
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  Scalar total = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (int i = 0; i < kMaxVars && v != 0; ++i) {
      for (int k = 0; k < t.exp.e[i]; ++k) v *= point.at(i);
    }
    total += v;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool unit = (c == 1 || c == -1) && t.exp.deg > 0;
    if (unit) {
      if (c == -1) os << "-";
    } else {
      os << cherw::to_string(c);
    }
    bool need_star = !unit;
    for (int i = 0; i < kMaxVars; ++i) {
      int k = t.exp.e[i];
      if (!k) continue;
      if (need_star) os << "*";
      os << (ctx_ ? ctx_->name(i) : "v" + std::to_string(i));
      if (k > 1) os << "^" << k;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

void PolyBuilder::add(const Exponent& e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(e, c);
  if (!inserted) it->second += c;
}

void PolyBuilder::add(const Poly& p) {
  for (const auto& t : p.terms()) add(t.exp, t.coef);
}

void PolyBuilder::add_scaled(const Poly& p, const Scalar& c, const Exponent& shift) {
  for (const auto& t : p.terms()) add(t.exp + shift, t.coef * c);
}

Poly PolyBuilder::finish() {
  Poly r(ctx_);
  r.terms_.reserve(acc_.size());
  for (auto& [e, c] : acc_)
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Poly::Term& x, const Poly::Term& y) { return grlex_greater(x.exp, y.exp); });
  acc_.clear();
  return r;
}

}  // namespace cherw
