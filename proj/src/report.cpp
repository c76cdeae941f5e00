#include "hvff/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace hvff {

namespace {

std::vector<ReportItem> sorted(std::vector<ReportItem> items) {
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return items;
}

}  // namespace

void Report::add(std::string id, std::string anchor, bool pass, std::string detail) {
  items.push_back({std::move(id), std::move(anchor), pass, std::move(detail)});
}

void Report::merge(const Report& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }

bool Report::ok() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& it : sorted(items)) {
    j["items"].push_back({{"id", it.id}, {"anchor", it.anchor}, {"status", it.pass ? "pass" : "fail"}, {"detail", it.detail}});
  }
  j["status"] = ok() ? "pass" : "fail";
  return j.dump(2);
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command;
  for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
  os << '\n' << table;
  for (const auto& it : sorted(items)) {
    os << (it.pass ? "  PASS " : "  FAIL ") << it.id << " [" << it.anchor << ']';
    if (!it.detail.empty()) os << ": " << it.detail;
    os << '\n';
  }
  os << (ok() ? "PASS" : "FAIL") << " (" << items.size() << " checks)\n";
  return os.str();
}

}  // namespace hvff
