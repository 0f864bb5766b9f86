#include "core/report.hpp"

namespace mobiuslab {

Json Report::to_json() const {
  Json j;
  j["identity"] = identity;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["pass"] = pass;
  j["witnesses"] = witnesses;
  if (!details.empty()) j["details"] = details;
  return j;
}

Report combine(std::string identity, const std::vector<Report>& parts) {
  Report r;
  r.identity = std::move(identity);
  r.pass = true;
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& p : parts) {
    r.pass = r.pass && p.pass;
    if (p.pass) ++passed;
    else r.witnesses.push_back(p.identity);
    checks.push_back(p.to_json());
  }
  r.lhs = passed;
  r.rhs = parts.size();
  r.details["checks"] = std::move(checks);
  return r;
}

}  // namespace mobiuslab
