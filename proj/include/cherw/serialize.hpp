#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "cherw/pairings.hpp"
#include "cherw/pbw.hpp"
#include "cherw/report.hpp"

namespace cherw {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

constexpr int kReportSchemaVersion = 1;
constexpr int kCacheVersion = 1;

// report JSON (schema in docs/report-schema.md); wall times only on request
Json report_to_json(const VerificationReport& r, bool timings = false);
Json reports_to_json(const std::vector<VerificationReport>& rs, bool timings = false);
std::string report_to_text(const VerificationReport& r);

// structured Poly: {"vars": [...], "terms": [[[exponents...], "p/q"], ...]}
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, const ContextPtr& ctx);

// presentation: generators and the full rewrite table, canonical labels
Json element_to_json(const PBWAlgebra& a, const Element& e);
Json presentation_to_json(const PBWAlgebra& a);

Json pairing_table_to_json(const PairingTable& t);
PairingTable pairing_table_from_json(const Json& j);  // throws Error on any malformed field

std::uint64_t fnv1a(const std::string& s);

// On-disk cache of pairing tables. Files carry the cache version; a version
// mismatch or a file that fails to parse is recomputed and rewritten.
class PairingCache {
 public:
  using Log = std::function<void(const std::string&)>;
  explicit PairingCache(std::string dir, Log log = {});
  std::string path_for(LieKind kind, int n, int jmax) const;
  std::shared_ptr<const PairingTable> get(LieKind kind, int n, int jmax);

  int hits = 0, misses = 0;

 private:
  std::string dir_;
  Log log_;
};

// CHERW_CACHE_DIR, else $HOME/.cache/cherw, else ./.cherw-cache
std::string default_cache_dir();

}  // namespace cherw
