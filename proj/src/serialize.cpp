#include "cherw/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cherw/liedata.hpp"

namespace cherw {

namespace fs = std::filesystem;

Json report_to_json(const VerificationReport& r, bool timings) {
  Json j;
  j["suite"] = r.suite;
  j["params"] = Json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["entries"] = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["id"] = e.id;
    x["anchor"] = e.anchor;
    x["status"] = e.pass ? "pass" : "fail";
    if (!e.pass) x["witness"] = e.witness;
    if (timings) x["wall_ms"] = e.wall_ms;
    j["entries"].push_back(x);
  }
  j["notes"] = r.notes;
  j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}, {"ok", r.ok()}};
  return j;
}

Json reports_to_json(const std::vector<VerificationReport>& rs, bool timings) {
  Json j;
  j["schema"] = "cherw-report";
  j["schema_version"] = kReportSchemaVersion;
  j["reports"] = Json::array();
  int passed = 0, failed = 0;
  bool ok = true;
  for (const auto& r : rs) {
    j["reports"].push_back(report_to_json(r, timings));
    passed += r.passed();
    failed += r.failed();
    ok = ok && r.ok();
  }
  j["summary"] = {{"reports", rs.size()}, {"passed", passed}, {"failed", failed}, {"ok", ok}};
  return j;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "== " << r.suite;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  for (const auto& e : r.entries) {
    os << (e.pass ? "  pass  " : "  FAIL  ") << e.id;
    if (!e.pass) os << "\n        " << e.witness;
    os << "\n";
  }
  for (const auto& n : r.notes) os << "  note  " << n << "\n";
  os << "  " << r.passed() << " passed, " << r.failed() << " failed\n";
  return os.str();
}

Json poly_to_json(const Poly& p) {
  Json j;
  j["vars"] = p.ctx() ? Json(p.ctx()->names()) : Json::array();
  j["terms"] = Json::array();
  const int nv = p.ctx() ? p.ctx()->size() : 0;
  for (const auto& t : p.terms()) {
    std::vector<int> e(t.exp.e.begin(), t.exp.e.begin() + nv);
    j["terms"].push_back(Json::array({e, to_string(t.coef)}));
  }
  return j;
}

Poly poly_from_json(const Json& j, const ContextPtr& ctx) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) throw Error("poly: expected {vars, terms}");
  auto vars = j.at("vars").get<std::vector<std::string>>();
  if (vars != ctx->names()) throw Error("poly: variable list does not match the context");
  Poly out(ctx);
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw Error("poly: malformed term");
    auto e = t[0].get<std::vector<int>>();
    if (static_cast<int>(e.size()) != ctx->size()) throw Error("poly: exponent length mismatch");
    Exponent x;
    for (int i = 0; i < ctx->size(); ++i) {
      if (e[i] < 0 || e[i] > 255) throw Error("poly: exponent out of range");
      x.e[i] = static_cast<std::uint8_t>(e[i]);
      x.deg += e[i];
    }
    Scalar c = parse_scalar(t[1].get<std::string>());
    c.canonicalize();
    out += Poly::monomial(ctx, x, c);
  }
  return out;
}

Json element_to_json(const PBWAlgebra& a, const Element& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json mono = Json::array();
    for (const auto& [g, k] : m) mono.push_back(Json::array({a.generator(g).label, k}));
    terms.push_back({{"mono", mono}, {"coef", c.to_string()}});
  }
  return terms;
}

Json presentation_to_json(const PBWAlgebra& a) {
  Json j;
  j["coefficients"] = a.coef_ctx()->names();
  j["generators"] = Json::array();
  for (int i = 0; i < a.num_generators(); ++i) {
    const auto& g = a.generator(i);
    j["generators"].push_back({{"label", g.label},
                               {"degree", g.degree},
                               {"weight", g.weight},
                               {"central", g.central},
                               {"invertible", g.invertible}});
  }
  j["rewrites"] = Json::array();
  for (int i = 0; i < a.num_generators(); ++i)
    for (int k = 0; k < i; ++k) {
      Element r = a.generator_commutator(i, k);
      if (r.is_zero()) continue;
      j["rewrites"].push_back({{"a", a.generator(i).label}, {"b", a.generator(k).label}, {"rhs", element_to_json(a, r)}});
    }
  return j;
}

namespace {

Json poly_cube(const std::vector<std::vector<std::vector<Poly>>>& v) {
  Json out = Json::array();
  for (const auto& mat : v) {
    Json m = Json::array();
    for (const auto& row : mat) {
      Json r = Json::array();
      for (const auto& p : row) r.push_back(poly_to_json(p));
      m.push_back(r);
    }
    out.push_back(m);
  }
  return out;
}

std::vector<std::vector<std::vector<Poly>>> poly_cube_from(const Json& j, const ContextPtr& ctx, int size) {
  std::vector<std::vector<std::vector<Poly>>> out;
  for (const auto& m : j) {
    if (static_cast<int>(m.size()) != size) throw Error("pairing table: wrong matrix size");
    std::vector<std::vector<Poly>> mat;
    for (const auto& r : m) {
      if (static_cast<int>(r.size()) != size) throw Error("pairing table: wrong row size");
      std::vector<Poly> row;
      for (const auto& p : r) row.push_back(poly_from_json(p, ctx));
      mat.push_back(row);
    }
    out.push_back(mat);
  }
  return out;
}

}  // namespace

Json pairing_table_to_json(const PairingTable& t) {
  Json j;
  j["cache_version"] = kCacheVersion;
  j["object"] = "PairingTable";
  j["kind"] = kind_name(t.kind);
  j["n"] = t.n;
  j["jmax"] = t.jmax;
  j["vars"] = t.ctx->names();
  j["value"] = poly_cube(t.value);
  j["odd"] = poly_cube(t.odd);
  return j;
}

PairingTable pairing_table_from_json(const Json& j) {
  try {
    if (j.at("object").get<std::string>() != "PairingTable") throw Error("not a pairing table");
    PairingTable t;
    t.kind = parse_kind(j.at("kind").get<std::string>());
    t.n = j.at("n").get<int>();
    t.jmax = j.at("jmax").get<int>();
    t.g = build_lie(t.kind, t.n);
    if (j.at("vars").get<std::vector<std::string>>() != t.g->labels()) throw Error("pairing table: basis labels differ");
    t.ctx = make_context(t.g->labels());
    t.value = poly_cube_from(j.at("value"), t.ctx, t.vdim());
    t.odd = poly_cube_from(j.at("odd"), t.ctx, t.vdim());
    if (static_cast<int>(t.value.size()) != t.jmax + 1) throw Error("pairing table: wrong number of degrees");
    return t;
  } catch (const Json::exception& e) {
    throw Error(std::string("pairing table: ") + e.what());
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string default_cache_dir() {
  if (const char* d = std::getenv("CHERW_CACHE_DIR"); d && *d) return d;
  if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/cherw";
  return ".cherw-cache";
}

PairingCache::PairingCache(std::string dir, Log log) : dir_(std::move(dir)), log_(std::move(log)) {}

std::string PairingCache::path_for(LieKind kind, int n, int jmax) const {
  std::string key = "PairingTable|" + kind_name(kind) + "|" + std::to_string(n) + "|" + std::to_string(jmax);
  std::ostringstream name;
  name << "pairings-" << kind_name(kind) << "-" << n << "-" << jmax << "-" << std::hex << fnv1a(key) << ".json";
  return (fs::path(dir_) / name.str()).string();
}

std::shared_ptr<const PairingTable> PairingCache::get(LieKind kind, int n, int jmax) {
  const std::string path = path_for(kind, n, jmax);
  auto say = [&](const std::string& s) {
    if (log_) log_(s);
  };
  Stopwatch sw;
  if (fs::exists(path)) {
    std::string why;
    try {
      std::ifstream in(path);
      Json j = Json::parse(in);
      int v = j.value("cache_version", -1);
      if (v != kCacheVersion) {
        why = "version " + std::to_string(v) + " != " + std::to_string(kCacheVersion) + ", invalidated";
      } else {
        auto t = std::make_shared<PairingTable>(pairing_table_from_json(j));
        if (t->kind != kind || t->n != n || t->jmax != jmax) throw Error("parameters do not match the file name");
        ++hits;
        std::ostringstream os;
        os << "cache hit " << path << " (" << sw.ms() << " ms)";
        say(os.str());
        return t;
      }
    } catch (const std::exception& e) {
      why = std::string("corrupt cache file, recomputing: ") + e.what();
    }
    say("warning: " + path + ": " + why);
  }
  ++misses;
  auto t = std::make_shared<PairingTable>(compute_pairings(kind, n, jmax));
  std::ostringstream os;
  os << "cache miss " << path << " (computed in " << sw.ms() << " ms)";
  say(os.str());
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << pairing_table_to_json(*t).dump() << "\n";
    if (!out) {
      say("warning: could not write " + path);
      return t;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) say("warning: could not write " + path + ": " + ec.message());
  return t;
}

}  // namespace cherw
