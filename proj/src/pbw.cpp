#include "cherw/pbw.hpp"

#include <algorithm>
#include <sstream>

namespace cherw {

namespace {

constexpr int kMaxDepth = 20000;
thread_local int g_depth = 0;

struct DepthGuard {
  DepthGuard() {
    if (++g_depth > kMaxDepth) {
      --g_depth;
      throw Error("PBW rewrite recursion limit exceeded (non-terminating presentation?)");
    }
  }
  ~DepthGuard() { --g_depth; }
};

std::string mono_key(const Mono& m) {
  std::string k;
  k.reserve(m.size() * 4 + 4);
  for (const auto& [g, e] : m) {
    k.push_back(static_cast<char>(g & 0xff));
    k.push_back(static_cast<char>(g >> 8));
    k.push_back(static_cast<char>(e & 0xff));
    k.push_back(static_cast<char>((e >> 8) & 0xff));
  }
  return k;
}

}  // namespace

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
  int la = mono_length(a), lb = mono_length(b);
  if (la != lb) return la < lb;
  return a < b;
}

int mono_length(const Mono& m) {
  int l = 0;
  for (const auto& [g, e] : m) l += e < 0 ? -e : e;
  return l;
}

Element Element::scalar(const Poly& c) { return monomial({}, c); }

Element Element::monomial(const Mono& m, const Poly& c) {
  Element e;
  if (!c.is_zero()) e.terms_.emplace(m, c);
  return e;
}

Poly Element::coefficient(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly() : it->second;
}

void Element::add_term(const Mono& m, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Poly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool Element::operator==(const Element& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

PBWAlgebra::PBWAlgebra(ContextPtr coef_ctx) : coef_ctx_(std::move(coef_ctx)) {
  if (!coef_ctx_) coef_ctx_ = make_context({});
  coef_degree_.assign(coef_ctx_->size(), 0);
}

int PBWAlgebra::add_generator(const Generator& g) {
  if (finalized_) throw Error("presentation already finalized");
  if (index_.count(g.label)) throw Error("duplicate generator " + g.label);
  if (gens_.size() >= 0xffff) throw Error("too many generators");
  int i = static_cast<int>(gens_.size());
  gens_.push_back(g);
  index_[g.label] = i;
  comm_.emplace_back(i);
  return i;
}

void PBWAlgebra::set_commutator(int i, int j, const Element& r) {
  if (finalized_) throw Error("presentation already finalized");
  if (i == j) {
    if (!r.is_zero()) throw Error("[g, g] must vanish");
    return;
  }
  if (i > j)
    comm_[i][j] = r;
  else
    comm_[j][i] = -r;
}

void PBWAlgebra::set_coef_degree(const std::string& var, int degree) { coef_degree_[coef_ctx_->index(var)] = degree; }

void PBWAlgebra::finalize() {
  const int n = num_generators();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const Element& r = comm_[i][j];
      if (r.is_zero()) continue;
      if (gens_[i].central || gens_[j].central)
        throw Error("central generator " + (gens_[i].central ? gens_[i].label : gens_[j].label) +
                    " has a nonzero commutator");
      int top = gens_[i].degree + gens_[j].degree;
      for (const auto& [m, c] : r.terms()) {
        int d = 0;
        for (const auto& [g, e] : m) {
          if (e < 0 && !gens_[g].invertible) throw Error("negative power of non-invertible generator in rewrite");
          d += e * gens_[g].degree;
        }
        int len = mono_length(m);
        if (d > top || (d == top && len >= 2))
          throw Error("rewrite [" + gens_[i].label + ", " + gens_[j].label + "] does not lower (degree, length): " +
                      mono_string(m));
      }
    }
  finalized_ = true;
}

int PBWAlgebra::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error("unknown generator " + label);
  return it->second;
}

Element PBWAlgebra::generator_commutator(int i, int j) const {
  if (i == j) return {};
  if (i > j) return comm_[i][j];
  return -comm_[j][i];
}

Element PBWAlgebra::one() const { return scalar(Poly(coef_ctx_, 1)); }

Element PBWAlgebra::scalar(const Poly& c) const { return Element::scalar(c.is_zero() ? c : c.embed(coef_ctx_)); }

Element PBWAlgebra::param(const std::string& var) const { return Element::scalar(Poly::var(coef_ctx_, var)); }

Element PBWAlgebra::gen(int i, int exponent) const {
  if (i < 0 || i >= num_generators()) throw Error("generator index out of range");
  if (exponent == 0) return one();
  if (exponent < 0 && !gens_[i].invertible) throw Error("generator " + gens_[i].label + " is not invertible");
  return Element::monomial({{static_cast<std::uint16_t>(i), static_cast<std::int16_t>(exponent)}}, Poly(coef_ctx_, 1));
}

void PBWAlgebra::check_token(int g, int s) const {
  if (s < 0 && !gens_[g].invertible) throw Error("generator " + gens_[g].label + " is not invertible");
}

Element PBWAlgebra::mul_mono_token(const Mono& m, int g, int s) const {
  if (m.empty()) return Element::monomial({{static_cast<std::uint16_t>(g), static_cast<std::int16_t>(s)}}, Poly(coef_ctx_, 1));
  const int k = m.back().first;
  const int e = m.back().second;
  if (k < g) {
    Mono r = m;
    r.push_back({static_cast<std::uint16_t>(g), static_cast<std::int16_t>(s)});
    return Element::monomial(r, Poly(coef_ctx_, 1));
  }
  if (k == g) {
    Mono r = m;
    int e2 = e + s;
    if (e2 == 0)
      r.pop_back();
    else
      r.back().second = static_cast<std::int16_t>(e2);
    return Element::monomial(r, Poly(coef_ctx_, 1));
  }
  // k > g: move g^s past the last token of m. Central or commuting pairs
  // reduce to inserting g at its sorted position.
  bool commutes = gens_[k].central || gens_[g].central || comm_[k][g].is_zero();
  if (commutes) {
    bool all_commute = true;
    for (const auto& [h, f] : m)
      if (h > g && !(gens_[h].central || gens_[g].central || comm_[h][g].is_zero())) {
        all_commute = false;
        break;
      }
    if (all_commute) {
      Mono r;
      r.reserve(m.size() + 1);
      bool placed = false;
      for (const auto& run : m) {
        if (!placed && run.first >= g) {
          if (run.first == g) {
            int e2 = run.second + s;
            if (e2 != 0) r.push_back({run.first, static_cast<std::int16_t>(e2)});
            placed = true;
            continue;
          }
          r.push_back({static_cast<std::uint16_t>(g), static_cast<std::int16_t>(s)});
          placed = true;
        }
        r.push_back(run);
      }
      if (!placed) r.push_back({static_cast<std::uint16_t>(g), static_cast<std::int16_t>(s)});
      return Element::monomial(r, Poly(coef_ctx_, 1));
    }
  }

  std::string key = mono_key(m);
  key.push_back(static_cast<char>(g & 0xff));
  key.push_back(static_cast<char>(g >> 8));
  key.push_back(static_cast<char>(s > 0 ? 1 : 2));
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  DepthGuard guard;
  const int sk = e > 0 ? 1 : -1;
  Mono prefix = m;
  if (e - sk == 0)
    prefix.pop_back();
  else
    prefix.back().second = static_cast<std::int16_t>(e - sk);
  // m g^s = (prefix g^s) k^sk + prefix [k^sk, g^s]
  Element result = mul_elem_token(mul_mono_token(prefix, g, s), k, sk);
  if (!commutes) {
    Element c = token_commutator(k, sk, g, s);
    if (!c.is_zero()) result += mul_mono_elem(prefix, c);
  }
  std::lock_guard<std::mutex> lock(memo_mu_);
  memo_.emplace(std::move(key), result);
  return result;
}

Element PBWAlgebra::mul_elem_token(const Element& x, int g, int s) const {
  if (x.num_terms() == 1) {
    const auto& [m, c] = *x.terms().begin();
    Element r = mul_mono_token(m, g, s);
    if (c == Poly(coef_ctx_, 1)) return r;
    return r * c;
  }
  Element out;
  for (const auto& [m, c] : x.terms()) out += mul_mono_token(m, g, s) * c;
  return out;
}

Element PBWAlgebra::mul_mono_elem(const Mono& m, const Element& b) const {
  Element out;
  for (const auto& [mb, cb] : b.terms()) {
    Element x = Element::monomial(m, cb);
    for (const auto& [g, e] : mb) {
      int s = e > 0 ? 1 : -1;
      for (int t = 0; t < e * s; ++t) x = mul_elem_token(x, g, s);
    }
    out += x;
  }
  return out;
}

Element PBWAlgebra::token_commutator(int k, int sk, int g, int s) const {
  const Element& r = comm_[k][g];
  if (r.is_zero()) return {};
  if (sk > 0 && s > 0) return r;
  std::string key{static_cast<char>(k & 0xff), static_cast<char>(k >> 8), static_cast<char>(sk > 0 ? 1 : 2),
                  static_cast<char>(g & 0xff), static_cast<char>(g >> 8), static_cast<char>(s > 0 ? 1 : 2)};
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = comm_memo_.find(key);
    if (it != comm_memo_.end()) return it->second;
  }
  DepthGuard guard;
  Element out;
  if (sk > 0) {
    // [k, g^-1] = -g^-1 [k, g] g^-1
    out = -mul(mul(gen(g, -1), r), gen(g, -1));
  } else if (s > 0) {
    // [k^-1, g] = -k^-1 [k, g] k^-1
    out = -mul(mul(gen(k, -1), r), gen(k, -1));
  } else {
    // [k^-1, g^-1] = k^-1 g^-1 [k, g] g^-1 k^-1
    Element kg = mul(gen(k, -1), gen(g, -1));
    out = mul(mul(kg, r), mul(gen(g, -1), gen(k, -1)));
  }
  std::lock_guard<std::mutex> lock(memo_mu_);
  comm_memo_.emplace(std::move(key), out);
  return out;
}

Element PBWAlgebra::mul(const Element& a, const Element& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Element out;
  for (const auto& [ma, ca] : a.terms()) out += mul_mono_elem(ma, b) * ca;
  return out;
}

Element PBWAlgebra::commutator(const Element& a, const Element& b) const { return mul(a, b) - mul(b, a); }

Element PBWAlgebra::pow(const Element& a, int k) const {
  if (k < 0) throw Error("negative power of element");
  Element r = one();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Element PBWAlgebra::normal_order(const std::vector<Token>& word) const {
  Element x = one();
  for (const auto& t : word) {
    if (t.gen < 0 || t.gen >= num_generators()) throw Error("word uses an undeclared generator");
    check_token(t.gen, t.sign);
    x = mul_elem_token(x, t.gen, t.sign);
  }
  return x;
}

Element PBWAlgebra::symmetrize(std::vector<int> g) const {
  if (static_cast<int>(g.size()) > sym_cap_)
    throw Error("symmetrization degree cap (" + std::to_string(g.size()) + " > " + std::to_string(sym_cap_) + ")");
  std::sort(g.begin(), g.end());
  std::string key;
  for (int x : g) {
    key.push_back(static_cast<char>(x & 0xff));
    key.push_back(static_cast<char>(x >> 8));
  }
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = sym_memo_.find(key);
    if (it != sym_memo_.end()) return it->second;
  }
  // averaging over distinct arrangements equals averaging over all k! orders
  Element sum;
  long count = 0;
  do {
    std::vector<Token> word;
    for (int x : g) word.push_back({x, 1});
    sum += normal_order(word);
    ++count;
  } while (std::next_permutation(g.begin(), g.end()));
  sum *= Poly(coef_ctx_, frac(1, count));
  std::lock_guard<std::mutex> lock(memo_mu_);
  sym_memo_.emplace(std::move(key), sum);
  return sum;
}

Element PBWAlgebra::symmetrize_poly(const Poly& p, const std::vector<int>& var_to_gen) const {
  Element out;
  if (p.is_zero()) return out;
  const ContextPtr& pctx = p.ctx();
  const int nv = pctx ? pctx->size() : 0;
  std::vector<int> coef_index(nv, -1);
  for (int v = 0; v < nv; ++v)
    if (var_to_gen.at(v) < 0) coef_index[v] = coef_ctx_->index(pctx->name(v));
  for (const auto& t : p.terms()) {
    std::vector<int> g;
    Exponent ce;
    for (int v = 0; v < nv; ++v) {
      int k = t.exp.e[v];
      if (!k) continue;
      if (var_to_gen[v] >= 0) {
        for (int r = 0; r < k; ++r) g.push_back(var_to_gen[v]);
      } else {
        ce.e[coef_index[v]] = static_cast<std::uint8_t>(k);
        ce.deg = static_cast<std::uint16_t>(ce.deg + k);
      }
    }
    out += symmetrize(g) * Poly::monomial(coef_ctx_, ce, t.coef);
  }
  return out;
}

int PBWAlgebra::filtration_degree(const Element& x) const {
  int best = -1;
  for (const auto& [m, c] : x.terms()) {
    int d = 0;
    for (const auto& [g, e] : m) d += e * gens_[g].degree;
    int cd = 0;
    for (const auto& t : c.terms()) {
      int s = 0;
      for (int v = 0; v < coef_ctx_->size(); ++v) s += t.exp.e[v] * coef_degree_[v];
      cd = std::max(cd, s);
    }
    best = std::max(best, d + cd);
  }
  return best;
}

std::string PBWAlgebra::mono_string(const Mono& m) const {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : m) {
    if (!first) os << "*";
    os << gens_[g].label;
    if (e != 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::string PBWAlgebra::to_string(const Element& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print in descending monomial order
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    if (!first) os << " + ";
    const Poly& c = it->second;
    if (it->first.empty())
      os << "(" << c.to_string() << ")";
    else if (c == Poly(coef_ctx_, 1))
      os << mono_string(it->first);
    else
      os << "(" << c.to_string() << ")*" << mono_string(it->first);
    first = false;
  }
  return os.str();
}

Poly PBWAlgebra::commutative_image(const Element& x, const ContextPtr& ctx) const {
  Poly out(ctx);
  for (const auto& [m, c] : x.terms()) {
    Exponent ex;
    for (const auto& [g, e] : m) {
      if (e < 0) throw Error("commutative image of a negative power");
      int v = ctx->index(gens_[g].label);
      ex.e[v] = static_cast<std::uint8_t>(e);
      ex.deg = static_cast<std::uint16_t>(ex.deg + e);
    }
    if (!c.is_constant()) {
      out += Poly::monomial(ctx, ex, 1) * c.embed(ctx);
    } else {
      out += Poly::monomial(ctx, ex, c.constant_term());
    }
  }
  return out;
}

VerificationReport PBWAlgebra::consistency_check(int through_degree) const {
  VerificationReport rep;
  rep.suite = "pbw-consistency";
  rep.params["generators"] = std::to_string(num_generators());
  rep.params["through_degree"] = std::to_string(through_degree);
  // degree-3 overlaps are sufficient (diamond lemma); higher degrees add nothing
  std::vector<Token> tokens;
  for (int i = 0; i < num_generators(); ++i) {
    if (gens_[i].central) continue;
    tokens.push_back({i, 1});
    if (gens_[i].invertible) tokens.push_back({i, -1});
  }
  long checked = 0;
  Stopwatch sw;
  for (const auto& a : tokens)
    for (const auto& b : tokens) {
      if (b.gen > a.gen) continue;
      for (const auto& c : tokens) {
        if (c.gen > b.gen) continue;
        if (a.gen == b.gen && b.gen == c.gen && a.sign == b.sign && b.sign == c.sign) continue;
        Element ab = normal_order({a, b});
        Element left = mul(ab, gen(c.gen, c.sign));
        Element bc = normal_order({b, c});
        Element right = mul(gen(a.gen, a.sign), bc);
        ++checked;
        if (left != right) {
          auto tok = [&](const Token& t) { return gens_[t.gen].label + (t.sign < 0 ? "^-1" : ""); };
          rep.add("triple(" + tok(a) + "," + tok(b) + "," + tok(c) + ")", "PBW diamond: (ab)c = a(bc)", false,
                  "(ab)c - a(bc) = " + to_string(left - right), sw.ms());
          return rep;
        }
      }
    }
  rep.add("all-triples", "PBW diamond: (ab)c = a(bc)", true, {}, sw.ms());
  rep.notes.push_back(std::to_string(checked) + " triples checked");
  return rep;
}

std::size_t PBWAlgebra::memo_size() const {
  std::lock_guard<std::mutex> lock(memo_mu_);
  return memo_.size() + comm_memo_.size() + sym_memo_.size();
}

void PBWAlgebra::clear_memo() const {
  std::lock_guard<std::mutex> lock(memo_mu_);
  memo_.clear();
  comm_memo_.clear();
  sym_memo_.clear();
}

AlgebraMap::AlgebraMap(std::string n, const PBWAlgebra& src, const PBWAlgebra& tgt)
    : name(std::move(n)), source(&src), target(&tgt) {
  gen_images.resize(src.num_generators());
  gen_set.assign(src.num_generators(), false);
  coef_images.resize(src.coef_ctx()->size());
  coef_set.assign(src.coef_ctx()->size(), false);
}

void AlgebraMap::set_gen(const std::string& label, const Element& img) {
  int i = source->index(label);
  gen_images[i] = img;
  gen_set[i] = true;
}

void AlgebraMap::set_coef(const std::string& var, const Element& img) {
  int i = source->coef_ctx()->index(var);
  coef_images[i] = img;
  coef_set[i] = true;
}

Element AlgebraMap::apply_coef(const Poly& c) const {
  const auto& sctx = source->coef_ctx();
  Element out;
  for (const auto& t : c.terms()) {
    Element term = target->scalar(t.coef);
    for (int v = 0; v < sctx->size(); ++v) {
      int k = t.exp.e[v];
      if (!k) continue;
      Element img;
      if (coef_set[v])
        img = coef_images[v];
      else if (target->coef_ctx()->has(sctx->name(v)))
        img = target->param(sctx->name(v));
      else
        throw Error(name + ": no image for parameter " + sctx->name(v));
      for (int r = 0; r < k; ++r) term = target->mul(term, img);
    }
    out += term;
  }
  return out;
}

Element AlgebraMap::apply(const Element& e) const {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    Element x = apply_coef(c);
    for (const auto& [g, k] : m) {
      if (!gen_set[g]) throw Error(name + ": no image for generator " + source->generator(g).label);
      Element img = gen_images[g];
      if (k < 0) {
        // only monomial images with constant coefficient can be inverted
        if (img.num_terms() != 1 || !img.terms().begin()->second.is_constant())
          throw Error(name + ": cannot invert image of " + source->generator(g).label);
        const auto& [im, ic] = *img.terms().begin();
        Mono inv;
        for (auto it = im.rbegin(); it != im.rend(); ++it) inv.push_back({it->first, static_cast<std::int16_t>(-it->second)});
        // inverse of a product reverses the order; rebuild by multiplication
        Element invx = target->one();
        for (const auto& [h, f] : inv) invx = target->mul(invx, target->gen(h, f));
        img = invx * Poly(target->coef_ctx(), 1 / ic.constant_term());
      }
      int reps = k < 0 ? -k : k;
      for (int r = 0; r < reps; ++r) x = target->mul(x, img);
    }
    out += x;
  }
  return out;
}

VerificationReport verify_homomorphism(const AlgebraMap& f) {
  VerificationReport rep;
  rep.suite = "homomorphism:" + f.name;
  const PBWAlgebra& src = *f.source;
  const PBWAlgebra& tgt = *f.target;
  const int n = src.num_generators();
  for (int i = 0; i < n; ++i)
    if (!f.gen_set[i]) throw Error(f.name + ": no image for generator " + src.generator(i).label);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      Stopwatch sw;
      Element lhs = tgt.commutator(f.gen_images[i], f.gen_images[j]);
      Element rhs = f.apply(src.generator_commutator(i, j));
      Element diff = lhs - rhs;
      std::string id = "[" + src.generator(i).label + "," + src.generator(j).label + "]";
      rep.add(id, "relation preserved", diff.is_zero(), diff.is_zero() ? "" : "residual " + tgt.to_string(diff), sw.ms());
    }
  // parameter images must be central
  for (int v = 0; v < src.coef_ctx()->size(); ++v) {
    if (!f.coef_set[v]) continue;
    for (int i = 0; i < n; ++i) {
      Stopwatch sw;
      Element c = tgt.commutator(f.coef_images[v], f.gen_images[i]);
      rep.add("central(" + src.coef_ctx()->name(v) + "," + src.generator(i).label + ")", "parameter image central",
              c.is_zero(), c.is_zero() ? "" : "residual " + tgt.to_string(c), sw.ms());
    }
  }
  return rep;
}

}  // namespace cherw
