#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cherw/poly.hpp"
#include "cherw/report.hpp"

namespace cherw {

// Ordered monomial: runs (generator index, nonzero exponent), strictly
// increasing in generator index. Negative exponents only on invertible
// generators.
using Mono = std::vector<std::pair<std::uint16_t, std::int16_t>>;

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

int mono_length(const Mono& m);

class Element {
 public:
  using Terms = std::map<Mono, Poly, MonoLess>;

  Element() = default;
  static Element scalar(const Poly& c);
  static Element monomial(const Mono& m, const Poly& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  Poly coefficient(const Mono& m) const;
  // the coefficient of the empty monomial
  Poly scalar_part() const { return coefficient({}); }

  void add_term(const Mono& m, const Poly& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Poly& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Poly& c) { return a *= c; }
  friend Element operator*(const Poly& c, Element a) { return a *= c; }
  Element operator-() const;
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  Terms terms_;
};

struct Generator {
  std::string label;
  int degree = 1;  // filtration degree
  int weight = 0;  // auxiliary grading weight
  bool central = false;
  bool invertible = false;
};

struct Token {
  int gen;
  int sign;  // +1 or -1
};

// A PBW-ordered algebra: generators g_0 < g_1 < ... with commutators
// [g_i, g_j] = R_ij for i > j. Coefficients live in a polynomial ring of
// central parameters.
class PBWAlgebra {
 public:
  explicit PBWAlgebra(ContextPtr coef_ctx);
  PBWAlgebra(const PBWAlgebra&) = delete;
  PBWAlgebra& operator=(const PBWAlgebra&) = delete;

  int add_generator(const Generator& g);
  // declares [g_i, g_j] = r (either order); unset pairs commute
  void set_commutator(int i, int j, const Element& r);
  void set_coef_degree(const std::string& var, int degree);
  // checks the degree-lowering invariant and freezes the table
  void finalize();

  const ContextPtr& coef_ctx() const { return coef_ctx_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(int i) const { return gens_.at(i); }
  int index(const std::string& label) const;
  bool has(const std::string& label) const { return index_.count(label) != 0; }
  // stored [g_i, g_j] for any i, j
  Element generator_commutator(int i, int j) const;

  Element one() const;
  Element scalar(const Poly& c) const;
  Element scalar(const Scalar& c) const { return scalar(Poly(coef_ctx_, c)); }
  Element param(const std::string& var) const;
  Element gen(int i, int exponent = 1) const;
  Element gen(const std::string& label, int exponent = 1) const { return gen(index(label), exponent); }

  Element mul(const Element& a, const Element& b) const;
  Element commutator(const Element& a, const Element& b) const;
  Element pow(const Element& a, int k) const;
  Element normal_order(const std::vector<Token>& word) const;

  // (1/k!) sum over orderings of a commutative monomial given as a list of
  // generator indices (with repetition)
  Element symmetrize(std::vector<int> gens) const;
  // linear extension to a polynomial: var_to_gen[i] is the generator for
  // variable i of p's context, or -1 to treat the variable as a coefficient
  // parameter (matched by name in coef_ctx)
  Element symmetrize_poly(const Poly& p, const std::vector<int>& var_to_gen) const;
  void set_symmetrization_cap(int cap) { sym_cap_ = cap; }

  int filtration_degree(const Element& e) const;
  std::string to_string(const Element& e) const;
  std::string mono_string(const Mono& m) const;

  // commutative image: monomials as Poly in a context of generator labels
  Poly commutative_image(const Element& e, const ContextPtr& ctx) const;

  // associativity on all generator triples a >= b >= c (with inverse tokens)
  VerificationReport consistency_check(int through_degree = 3) const;

  std::size_t memo_size() const;
  void clear_memo() const;

 private:
  ContextPtr coef_ctx_;
  std::vector<Generator> gens_;
  std::map<std::string, int> index_;
  std::vector<std::vector<Element>> comm_;  // comm_[i][j] for i > j
  std::vector<int> coef_degree_;
  bool finalized_ = false;
  int sym_cap_ = 8;

  mutable std::mutex memo_mu_;
  mutable std::unordered_map<std::string, Element> memo_;
  mutable std::unordered_map<std::string, Element> comm_memo_;
  mutable std::unordered_map<std::string, Element> sym_memo_;

  Element mul_mono_token(const Mono& m, int g, int s) const;
  Element mul_elem_token(const Element& x, int g, int s) const;
  Element mul_mono_elem(const Mono& m, const Element& b) const;
  Element token_commutator(int k, int sk, int g, int s) const;
  void check_token(int g, int s) const;
};

// algebra homomorphism data: generator images and coefficient-variable images
struct AlgebraMap {
  std::string name;
  const PBWAlgebra* source = nullptr;
  const PBWAlgebra* target = nullptr;
  std::vector<Element> gen_images;   // indexed by source generator
  std::vector<Element> coef_images;  // indexed by source coefficient variable
  std::vector<bool> gen_set, coef_set;

  AlgebraMap(std::string name, const PBWAlgebra& src, const PBWAlgebra& tgt);
  void set_gen(const std::string& label, const Element& img);
  void set_coef(const std::string& var, const Element& img);
  Element apply(const Element& e) const;
  Element apply_coef(const Poly& c) const;
};

// [f(a), f(b)] - f([a, b]) for every generator pair of the source
VerificationReport verify_homomorphism(const AlgebraMap& f);

}  // namespace cherw
