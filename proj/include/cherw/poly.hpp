#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cherw/scalar.hpp"

namespace cherw {

constexpr int kMaxVars = 48;

// Dense exponent vector. Total degree is cached because every comparison in
// graded order looks at it first.
struct Exponent {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  bool operator==(const Exponent& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Exponent& o) const { return !(*this == o); }
  Exponent operator+(const Exponent& o) const;
  bool divides(const Exponent& o) const;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& x) const noexcept {
    return std::hash<std::string_view>()(
        std::string_view(reinterpret_cast<const char*>(x.e.data()), kMaxVars));
  }
};

// graded lexicographic, larger first
bool grlex_greater(const Exponent& a, const Exponent& b);

class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names);
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;  // throws if absent
  bool has(const std::string& name) const { return index_.count(name) != 0; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using ContextPtr = std::shared_ptr<const VarContext>;
ContextPtr make_context(std::vector<std::string> names);

class Poly {
 public:
  struct Term {
    Exponent exp;
    Scalar coef;
  };

  Poly() = default;
  explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Poly(ContextPtr ctx, const Scalar& c);
  Poly(const Scalar& c);  // context-free constant
  Poly(long c) : Poly(Scalar(c)) {}

  static Poly var(const ContextPtr& ctx, int i);
  static Poly var(const ContextPtr& ctx, const std::string& name);
  static Poly monomial(const ContextPtr& ctx, const Exponent& e, const Scalar& c);

  const ContextPtr& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int degree() const;  // -1 for zero
  int degree_in(int var) const;
  int num_terms() const { return static_cast<int>(terms_.size()); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, long c) { return a *= Scalar(c); }
  friend Poly operator*(long c, Poly a) { return a *= Scalar(c); }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int k) const;
  Poly derivative(int var) const;
  // coefficient list in powers of one variable: result[k] multiplies var^k
  std::vector<Poly> coefficients_in(int var) const;
  // images[i] replaces variable i; all images share the target context
  Poly substitute(const ContextPtr& target, const std::vector<Poly>& images) const;
  // re-key into a context that contains every variable used, by name
  Poly embed(const ContextPtr& target) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  bool uses_var(int var) const;

  std::string to_string() const;

 private:
  friend class PolyBuilder;
  ContextPtr ctx_;
  std::vector<Term> terms_;  // sorted by grlex_greater, no zero coefficients

  static const ContextPtr& common_ctx(const Poly& a, const Poly& b);
};

// Accumulates terms in a hash map; used for products and substitutions.
class PolyBuilder {
 public:
  explicit PolyBuilder(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  void add(const Exponent& e, const Scalar& c);
  void add(const Poly& p);
  void add_scaled(const Poly& p, const Scalar& c, const Exponent& shift);
  Poly finish();

 private:
  ContextPtr ctx_;
  std::unordered_map<Exponent, Scalar, ExponentHash> acc_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace cherw
