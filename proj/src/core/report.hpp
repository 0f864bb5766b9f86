#pragma once

#include <string>
#include <vector>

#include "core/integer.hpp"

namespace mobiuslab {

/// Outcome of checking one identity: both sides computed independently.
struct Report {
  std::string identity;
  Json lhs;
  Json rhs;
  bool pass = false;
  Json witnesses = Json::array();
  Json details = Json::object();

  Json to_json() const;
};

/// Conjunction of reports, keeping every sub-report under "checks".
Report combine(std::string identity, const std::vector<Report>& parts);

}  // namespace mobiuslab
