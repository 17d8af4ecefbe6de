// cherw: command-line driver for the verification suites.
#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cherw/centers.hpp"
#include "cherw/cherednik.hpp"
#include "cherw/homog.hpp"
#include "cherw/pairings.hpp"
#include "cherw/poisson.hpp"
#include "cherw/serialize.hpp"
#include "cherw/wmin.hpp"

using namespace cherw;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string cache_dir;
  std::string format = "json";
  std::string output;
  bool timings = false;
  int jobs = 1;
  int max_n = 2;
  int max_m = 2;
  int jmax = 4;
  int sym_cap = 8;
};

void check_caps(const RunConfig& c) {
  if (c.jobs < 1) throw UsageError("jobs must be positive");
  if (c.max_n < 1 || c.max_m < 1) throw UsageError("max-n and max-m must be positive");
  if (c.jmax < 1 || c.jmax > kDefaultJmax) throw UsageError("jmax must be in 1.." + std::to_string(kDefaultJmax));
  if (c.sym_cap < 1) throw UsageError("sym-cap must be positive");
}

std::vector<Scalar> parse_list(const std::string& s) {
  std::vector<Scalar> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      Scalar v = parse_scalar(item);
      v.canonicalize();
      out.push_back(v);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

LieKind kind_arg(const std::string& s) {
  try {
    return parse_kind(s);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

VerificationReport consistency_report(const std::string& what, const PBWAlgebra& a, std::map<std::string, std::string> params) {
  VerificationReport rep;
  rep.suite = "pbw.consistency";
  rep.params = std::move(params);
  rep.params["algebra"] = what;
  Stopwatch sw;
  rep.append(a.consistency_check(3));
  if (!rep.entries.empty()) rep.entries.back().wall_ms = sw.ms();
  return rep;
}

std::map<std::string, std::string> knm(LieKind k, int n, int m = -1) {
  std::map<std::string, std::string> p{{"kind", kind_name(k)}, {"n", std::to_string(n)}};
  if (m >= 0) p["m"] = std::to_string(m);
  return p;
}

VerificationReport invariance_report(const PairingTable& t) {
  VerificationReport rep = verify_invariance(t);
  rep.params = knm(t.kind, t.n);
  rep.params["jmax"] = std::to_string(t.jmax);
  return rep;
}

using Task = std::function<std::vector<VerificationReport>()>;

// runs tasks on a small pool; results keep the task order
std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<VerificationReport>> out(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < jobs && k < static_cast<int>(tasks.size()); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<VerificationReport> flat;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) {
      VerificationReport r;
      r.suite = "error";
      r.add("task" + std::to_string(i), "suite ran to completion", false, errors[i]);
      flat.push_back(r);
    }
    for (auto& r : out[i]) flat.push_back(std::move(r));
  }
  return flat;
}

std::vector<Task> all_tasks(const RunConfig& cfg, PairingCache& cache, std::mutex& cache_mu) {
  const int N = cfg.max_n, M = cfg.max_m;
  std::vector<Task> t;
  auto one = [](auto f) -> Task { return [f] { return std::vector<VerificationReport>{f()}; }; };
  for (int n = 1; n <= std::min(N, 3); ++n)
    t.push_back(one([n] { return consistency_report("U(gl_n)", *build_enveloping(LieKind::gl, n), knm(LieKind::gl, n)); }));
  for (int n = 1; n <= std::min(N, 2); ++n)
    t.push_back(one([n] { return consistency_report("U(sp_2n)", *build_enveloping(LieKind::sp, n), knm(LieKind::sp, n)); }));
  for (int n = 1; n <= std::min(N, 2); ++n)
    for (int m = 1; m <= std::min(M, 3); ++m)
      t.push_back(one([n, m] { return consistency_report("H_m(gl_n)", *build_universal(LieKind::gl, n, m).alg, knm(LieKind::gl, n, m)); }));
  for (int n = 1; n <= std::min(N, 2); ++n)
    for (int m = 1; m <= std::min(M, 2); ++m)
      t.push_back(one([n, m] { return consistency_report("H_m(sp_2n)", *build_universal(LieKind::sp, n, m).alg, knm(LieKind::sp, n, m)); }));
  for (auto k : {LieKind::gl, LieKind::sp})
    for (int n = 1; n <= std::min(N, k == LieKind::gl ? 3 : 2); ++n)
      t.push_back(one([&, k, n] {
        std::shared_ptr<const PairingTable> tab;
        {
          std::lock_guard<std::mutex> lock(cache_mu);
          tab = cache.get(k, n, cfg.jmax);
        }
        return invariance_report(*tab);
      }));
  for (int n = 1; n <= std::min(N, 3); ++n)
    for (int m = 1; m <= std::min(M, 4); ++m) t.push_back(one([n, m] { return verify_expansion_identity(n, m); }));
  for (int n = 1; n <= std::min(N, 2); ++n)
    for (int m = 1; m <= std::min(M, 3); ++m) t.push_back(one([n, m] { return poisson_suite(LieKind::gl, n, m); }));
  for (int n = 1; n <= std::min(N, 2); ++n)
    for (int m = 1; m <= std::min(M, 2); ++m) t.push_back(one([n, m] { return poisson_suite(LieKind::sp, n, m); }));
  for (int n = 1; n <= std::min(N, 2); ++n)
    for (int m = 1; m <= std::min(M, 3); ++m) t.push_back(one([n, m] { return verify_casimir_hc(n, m); }));
  for (int n = 1; n <= std::min(N, 3); ++n) t.push_back(one([n] { return verify_newton_identity(n, 4); }));
  for (int n = 1; n <= std::min(N, 3); ++n)
    for (int m = 1; m <= std::min(M, 3); ++m) t.push_back(one([n, m] { return verify_slice_identities(LieKind::gl, n, m); }));
  for (int n = 1; n <= std::min(N, 2); ++n)
    for (int m = 1; m <= std::min(M, 2); ++m) t.push_back(one([n, m] { return verify_slice_identities(LieKind::sp, n, m); }));
  for (int n = 1; n <= std::min(N, 3); ++n) t.push_back(one([n] { return verify_twist_lemma(n, 4); }));
  for (int n = 2; n <= std::max(2, std::min(N, 3)); ++n) {
    t.push_back(one([n] { return verify_minimal_data(LieKind::sl, n); }));
    t.push_back(one([n] { return verify_explicit_gl(n); }));
  }
  for (int n = 1; n <= std::min(N, 2); ++n) {
    t.push_back(one([n] { return verify_minimal_data(LieKind::sp, n); }));
    t.push_back(one([n] { return verify_explicit_sp(n); }));
  }
  for (int n = 2; n <= std::max(2, std::min(N, 3)); ++n)
    for (int c : {-1, 0}) t.push_back(one([n, c] { return verify_psi(c, n); }));
  for (int n = 1; n <= std::min(N, 2); ++n) t.push_back(one([n] { return verify_upsilon(n); }));
  t.push_back(one([] { return verify_inverse_psi0(2); }));
  return t;
}

void emit(const RunConfig& cfg, const Json& j, const std::vector<VerificationReport>& reps) {
  std::string text;
  if (cfg.format == "text") {
    for (const auto& r : reps) text += report_to_text(r);
    for (const auto& [k, v] : j.items())
      if (k != "reports" && k != "schema" && k != "schema_version" && k != "summary") text += k + ": " + v.dump() + "\n";
  } else {
    text = j.dump(2) + "\n";
  }
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output);
    out << text;
    if (!out) throw UsageError("cannot write " + cfg.output);
  }
}

int finish(const RunConfig& cfg, const std::vector<VerificationReport>& reps, Json extra = Json::object()) {
  Json j = reports_to_json(reps, cfg.timings);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(cfg, j, reps);
  for (const auto& r : reps)
    if (!r.ok()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cherw: exact verification of infinitesimal Cherednik algebra identities"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig cfg;
  app.add_option("--cache-dir", cfg.cache_dir, "pairing cache directory (default: $CHERW_CACHE_DIR)");
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", cfg.output, "write the report to this file");
  app.add_flag("--timings", cfg.timings, "include wall times in the report");
  app.add_option("--jobs", cfg.jobs, "worker threads for `all`");
  app.add_option("--max-n", cfg.max_n, "rank cap for `all`");
  app.add_option("--max-m", cfg.max_m, "length cap for `all`");
  app.add_option("--jmax", cfg.jmax, "pairing degree cap");
  app.add_option("--sym-cap", cfg.sym_cap, "symmetrization degree cap");

  std::string kind = "gl", zeta, lambda, order = "y_then_x", which;
  int n = 1, m = 1;

  auto* build = app.add_subcommand("build", "emit the rewrite table of H_m(g) as JSON");
  build->add_option("--kind", kind)->check(CLI::IsMember({"gl", "sp"}));
  build->add_option("--n", n)->required();
  build->add_option("--m", m)->required();
  build->add_option("--zeta", zeta, "comma-separated zeta_0..zeta_m (default: universal)");
  build->add_option("--order", order)->check(CLI::IsMember({"y_then_x", "x_then_y"}));

  auto* pairings = app.add_subcommand("pairings", "alpha_j / beta_2j table (cached) and g-invariance");
  pairings->add_option("--kind", kind)->check(CLI::IsMember({"gl", "sp"}));
  pairings->add_option("--n", n)->required();

  auto* poisson = app.add_subcommand("poisson-check", "Poisson centrality of tau_k + c_k");
  poisson->add_option("--kind", kind)->check(CLI::IsMember({"gl", "sp"}));
  poisson->add_option("--n", n)->required();
  poisson->add_option("--m", m)->required();

  auto* center = app.add_subcommand("center", "Casimir t_1' and its Harish-Chandra image");
  center->add_option("--kind", kind)->check(CLI::IsMember({"gl"}));
  center->add_option("--n", n)->required();
  center->add_option("--m", m)->required();
  center->add_option("--zeta", zeta, "comma-separated zeta_0..zeta_m for a specialized run");

  auto* classify = app.add_subcommand("classify", "finite-dimensional classification test");
  classify->add_option("--n", n)->required();
  classify->add_option("--m", m)->required();
  classify->add_option("--zeta", zeta, "comma-separated zeta_0..zeta_{m-1} (zeta_m = 1)")->required();
  classify->add_option("--lambda", lambda, "comma-separated lambda_1..lambda_n")->required();

  auto* wmin = app.add_subcommand("wmin-check", "minimal W-algebra presentation and explicit isomorphism");
  wmin->add_option("--kind", kind)->check(CLI::IsMember({"gl", "sl", "sp"}));
  wmin->add_option("--n", n)->required();

  auto* completion = app.add_subcommand("completion-check", "homogenized decomposition maps");
  completion->add_option("--case", which)->required()->check(CLI::IsMember({"psi-1", "psi0", "upsilon-1"}));
  completion->add_option("--n", n)->required();

  auto* all = app.add_subcommand("all", "every suite up to --max-n / --max-m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    check_caps(cfg);
    if (cfg.cache_dir.empty()) cfg.cache_dir = default_cache_dir();
    std::mutex cache_mu;
    PairingCache cache(cfg.cache_dir, [](const std::string& s) { std::cerr << s << "\n"; });
    if (n < 1) throw UsageError("--n must be positive");

    if (*build) {
      LieKind k = kind_arg(kind);
      VOrder ord = order == "x_then_y" ? VOrder::x_then_y : VOrder::y_then_x;
      if (m < 0) throw UsageError("--m must be nonnegative");
      CherednikAlgebra h;
      if (zeta.empty()) {
        h = build_universal(k, n, m, ord);
      } else {
        auto z = parse_list(zeta);
        if (static_cast<int>(z.size()) != m + 1) throw UsageError("--zeta needs m + 1 values");
        std::vector<Poly> zp(z.begin(), z.end());
        h = build_cherednik(k, n, zp, nullptr, ord);
      }
      h.alg->set_symmetrization_cap(cfg.sym_cap);
      auto rep = consistency_report("H_m", *h.alg, knm(k, n, m));
      return finish(cfg, {rep}, {{"presentation", presentation_to_json(*h.alg)}});
    }
    if (*pairings) {
      LieKind k = kind_arg(kind);
      auto t = cache.get(k, n, cfg.jmax);
      return finish(cfg, {invariance_report(*t)},
                    {{"table", pairing_table_to_json(*t)}, {"cache", {{"path", cache.path_for(k, n, cfg.jmax)}, {"hit", cache.hits > 0}}}});
    }
    if (*poisson) {
      if (m < 1) throw UsageError("--m must be positive");
      return finish(cfg, {poisson_suite(kind_arg(kind), n, m)});
    }
    if (*center) {
      if (m < 1) throw UsageError("--m must be positive");
      std::vector<VerificationReport> reps{verify_casimir_hc(n, m)};
      Json extra = Json::object();
      if (!zeta.empty()) {
        auto z = parse_list(zeta);
        if (static_cast<int>(z.size()) != m + 1) throw UsageError("--zeta needs m + 1 values");
        std::vector<Poly> zp(z.begin(), z.end());
        CherednikAlgebra h = build_cherednik(LieKind::gl, n, zp, nullptr, VOrder::x_then_y);
        Element t = casimir(h);
        auto central = verify_central_element(*h.alg, t, "t1'.central");
        central.suite = "centers.casimir.specialized";
        central.params = knm(LieKind::gl, n, m);
        central.params["zeta"] = zeta;
        HCImage hc = hc_project(*h.alg, h.g_gen[0], n, phi_H(h, t));
        extra["t1_prime"] = {{"terms", t.num_terms()}, {"filtration_degree", h.alg->filtration_degree(t)},
                             {"hc_image", hc.value.to_string()}};
        reps.push_back(central);
      }
      return finish(cfg, reps, extra);
    }
    if (*classify) {
      auto z = parse_list(zeta);
      // the leading coefficient zeta_m = 1 may be omitted
      if (static_cast<int>(z.size()) == m) z.push_back(1);
      if (static_cast<int>(z.size()) != m + 1) throw UsageError("--zeta needs m or m + 1 values");
      auto l = parse_list(lambda);
      if (static_cast<int>(l.size()) != n) throw UsageError("--lambda needs n values");
      Classification c;
      try {
        c = classify_findim(n, m, z, l);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      Json nu = Json::array();
      for (const auto& v : c.nu) nu.push_back(to_string(v));
      VerificationReport rep;
      rep.suite = "centers.classify";
      rep.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"zeta", zeta}, {"lambda", lambda}};
      std::string witness;
      bool rt = !c.finite || bijection_round_trip(n, m, z, l, &witness);
      rep.add("round_trip", "lambda -> nu -> lambda", rt, witness);
      Json res = {{"finite", c.finite}, {"P", c.p.to_string()}, {"nu", nu}};
      if (c.finite) res["k"] = c.k;
      return finish(cfg, {rep}, {{"classification", res}});
    }
    if (*wmin) {
      LieKind k = kind_arg(kind);
      if (k == LieKind::sp) return finish(cfg, {verify_minimal_data(LieKind::sp, n), verify_explicit_sp(n)});
      return finish(cfg, {verify_minimal_data(LieKind::sl, n), verify_explicit_gl(n)});
    }
    if (*completion) {
      if (which == "upsilon-1") return finish(cfg, {verify_upsilon(n)});
      if (n < 2) throw UsageError("psi cases need --n >= 2");
      if (which == "psi-1") return finish(cfg, {verify_psi(-1, n)});
      return finish(cfg, {verify_psi(0, n), verify_inverse_psi0(n)});
    }
    if (*all) {
      auto reps = run_tasks(all_tasks(cfg, cache, cache_mu), cfg.jobs);
      return finish(cfg, reps);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
