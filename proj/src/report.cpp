#include "defcalc/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace defcalc {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::degenerate:
      return "degenerate";
  }
  return "fail";
}

Json CheckReport::to_json() const {
  if (status == Status::fail && !witness) throw std::logic_error("failing check " + check_name + " has no witness");
  Json j;
  j["check"] = check_name;
  j["parameters"] = parameters;
  j["status"] = std::string(to_string(status));
  if (witness) j["witness"] = *witness;
  return j;
}

CheckReport make_report(std::string name, Json parameters, bool ok, Json witness) {
  CheckReport r;
  r.check_name = std::move(name);
  r.parameters = std::move(parameters);
  r.status = ok ? Status::pass : Status::fail;
  r.witness = std::move(witness);
  return r;
}

Json emit_report(std::vector<CheckReport> results, const Json& config) {
  std::stable_sort(results.begin(), results.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check_name < b.check_name; });
  Json out;
  out["schema"] = std::string(kSchema);
  if (!config.is_null()) out["config"] = config;
  Json checks = Json::array();
  Status overall = Status::pass;
  for (const auto& r : results) {
    checks.push_back(r.to_json());
    if (r.status == Status::fail) {
      overall = Status::fail;
    } else if (r.status == Status::degenerate && overall == Status::pass) {
      overall = Status::degenerate;
    }
  }
  out["checks"] = std::move(checks);
  out["status"] = std::string(to_string(overall));
  return out;
}

}  // namespace defcalc
