#include "pturan/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace pturan {

bool Report::any_fail() const {
  return std::any_of(items.begin(), items.end(),
                     [](const ReportItem& i) { return i.status == "FAIL"; });
}

bool Report::any_budget() const {
  return std::any_of(items.begin(), items.end(),
                     [](const ReportItem& i) { return i.status == "BUDGET"; });
}

void Report::add_note(const std::string& n) {
  if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
}

int Report::exit_code() const {
  if (any_fail()) return 1;
  if (any_budget()) return 3;
  return 0;
}

std::string to_json(const Report& r) {
  nlohmann::json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["command"] = r.command;
  j["notes"] = r.notes;
  j["items"] = nlohmann::json::array();
  for (const ReportItem& it : r.items) {
    nlohmann::json ji;
    ji["id"] = it.id;
    ji["params"] = it.params;
    ji["expected"] = it.expected;
    ji["computed"] = it.computed;
    ji["status"] = it.status;
    ji["witnesses"] = it.witnesses;
    ji["runtime_ms"] = it.runtime_ms;
    ji["stats"] = it.stats;
    ji["note"] = it.note;
    j["items"].push_back(std::move(ji));
  }
  return j.dump(2);
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.tool << " " << r.version << ": " << r.command << "\n";
  for (const ReportItem& it : r.items) {
    os << "  [" << it.status << "] " << it.id;
    if (!it.params.empty()) os << " " << it.params;
    if (!it.expected.empty()) os << " expected=" << it.expected;
    if (!it.computed.empty()) os << " computed=" << it.computed;
    if (!it.witnesses.empty()) {
      os << " witnesses=";
      for (std::size_t i = 0; i < it.witnesses.size(); ++i) {
        if (i) os << ",";
        if (i == 8) {
          os << "...(" << it.witnesses.size() << ")";
          break;
        }
        os << it.witnesses[i];
      }
    }
    if (!it.note.empty()) os << "  # " << it.note;
    os << "\n";
  }
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace pturan
