#pragma once

#include <string>
#include <vector>

namespace pturan {

inline constexpr const char* kToolName = "pturan";
inline constexpr const char* kToolVersion = "0.1.0";

// One structured document per run; the plain-text rendering is derived from
// it. Witnesses are graph6 and re-validate against their claimed statuses.
struct ReportItem {
  std::string id;
  std::string params;
  std::string expected;
  std::string computed;
  std::string status;  // PASS | FAIL | INFO | EXTENDED | BUDGET
  std::vector<std::string> witnesses;
  double runtime_ms = 0;
  std::string stats;
  std::string note;
};

struct Report {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::string command;
  std::vector<ReportItem> items;
  std::vector<std::string> notes;

  bool any_fail() const;
  bool any_budget() const;
  bool all_pass() const { return !any_fail() && !any_budget(); }
  void add_note(const std::string& n);

  // 0 all pass, 1 any FAIL, 3 any BUDGET (FAIL wins).
  int exit_code() const;
};

std::string to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace pturan
