#ifndef DEFCALC_REPORT_HPP
#define DEFCALC_REPORT_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace defcalc {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, degenerate };

std::string_view to_string(Status s);

/// Machine-readable outcome of one verification.
///
/// A failing report always carries a witness; passing reports may carry one
/// when the data is informative (solved coefficient tables and the like).
struct CheckReport {
  std::string check_name;
  Json parameters = Json::object();
  Status status = Status::pass;
  std::optional<Json> witness;

  bool passed() const { return status == Status::pass; }
  Json to_json() const;
};

/// Report whose status follows `ok`; the witness is attached in both cases.
CheckReport make_report(std::string name, Json parameters, bool ok, Json witness);

/// Serializes a result set: {"schema", ["config",] "checks", "status"}.
/// Checks are ordered by name so identical inputs give identical bytes.
Json emit_report(std::vector<CheckReport> results, const Json& config = Json());

inline constexpr std::string_view kSchema = "defcalc/1";

}  // namespace defcalc

#endif  // DEFCALC_REPORT_HPP
