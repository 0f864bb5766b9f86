#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/integer.hpp"

namespace mobiuslab {

enum class SuiteSize { Small, Full };

struct SuiteOptions {
  SuiteSize size = SuiteSize::Small;
  std::uint64_t seed = 0;
};

/// One row of the verification table. Criteria 1..20 are the numbered
/// acceptance identities; higher ids are supplementary module invariants.
struct SuiteItem {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  Json details = Json::object();
  double seconds = 0;
};

struct SuiteEntry {
  int id;
  const char* name;
};

/// Every item, in run order.
const std::vector<SuiteEntry>& suite_entries();

/// Runs one item. Exceptions inside the item are caught and reported as a
/// failure with the error text.
SuiteItem run_suite_item(int id, const SuiteOptions& options);

/// Runs the listed items (all when empty), in ascending id order.
std::vector<SuiteItem> run_suite(const SuiteOptions& options, const std::vector<int>& ids = {});

Json to_json(const SuiteItem& item);

}  // namespace mobiuslab
