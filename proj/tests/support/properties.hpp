#pragma once

#include <string>
#include <vector>

namespace fuzzy::testing {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Every module invariant evaluated once at N <= 64 with fixed seeds.
std::vector<PropertyResult> run_properties();

}  // namespace fuzzy::testing
