#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace cherw {

struct ReportEntry {
  std::string id;
  std::string anchor;  // short name of the identity being checked
  bool pass = false;
  std::string witness;  // nonempty iff !pass
  double wall_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::string> params;
  std::vector<ReportEntry> entries;
  std::vector<std::string> notes;

  void add(std::string id, std::string anchor, bool pass, std::string witness = {}, double wall_ms = 0);
  void append(const VerificationReport& other, const std::string& prefix = {});
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0 && !entries.empty(); }
  const ReportEntry* first_failure() const;
  std::string summary() const;
};

// wall-clock stopwatch in milliseconds
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cherw
