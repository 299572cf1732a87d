#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cech2 {

struct CheckItem {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// Named pass/fail assertions plus a few integer figures (class counts, sizes).
struct Report {
  std::string suite;
  std::vector<CheckItem> checks;
  std::map<std::string, std::int64_t> figures;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.ok; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  const CheckItem* first_failure() const {
    const auto it = std::find_if(checks.begin(), checks.end(), [](const CheckItem& c) { return !c.ok; });
    return it == checks.end() ? nullptr : &*it;
  }
};

}  // namespace cech2
