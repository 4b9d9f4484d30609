#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace cnf {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Itemized pass/fail outcome of a verification routine.
struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, std::string detail = {}) {
    items.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const CheckReport& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }
  bool all_pass() const {
    return !items.empty() && std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
  }
};

}  // namespace cnf
