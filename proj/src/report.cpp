#include "cherw/report.hpp"

#include <sstream>

namespace cherw {

void VerificationReport::add(std::string id, std::string anchor, bool pass, std::string witness, double wall_ms) {
  if (!pass && witness.empty()) witness = "(no witness recorded)";
  if (pass) witness.clear();
  entries.push_back({std::move(id), std::move(anchor), pass, std::move(witness), wall_ms});
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (const auto& e : other.entries) {
    ReportEntry c = e;
    if (!prefix.empty()) c.id = prefix + "/" + c.id;
    entries.push_back(std::move(c));
  }
  for (const auto& n : other.notes) notes.push_back(prefix.empty() ? n : prefix + ": " + n);
}

int VerificationReport::passed() const {
  int c = 0;
  for (const auto& e : entries) c += e.pass;
  return c;
}

int VerificationReport::failed() const { return static_cast<int>(entries.size()) - passed(); }

const ReportEntry* VerificationReport::first_failure() const {
  for (const auto& e : entries)
    if (!e.pass) return &e;
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << suite << ": " << passed() << " passed, " << failed() << " failed";
  if (const auto* f = first_failure()) os << "; first failure " << f->id << ": " << f->witness;
  return os.str();
}

}  // namespace cherw
