#pragma once

// Verification reports: a list of checked identities with pass/fail status.

#include <map>
#include <string>
#include <vector>

namespace hvff {

struct ReportItem {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::map<std::string, std::string> params;
  std::vector<ReportItem> items;
  // Free-form block printed by to_text above the items (not part of the JSON).
  std::string table;

  void add(std::string id, std::string anchor, bool pass, std::string detail = {});
  void merge(const Report& o);
  bool ok() const;
  // Items are emitted sorted by id.
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace hvff
