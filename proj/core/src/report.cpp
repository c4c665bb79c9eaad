#include "operant/report.hpp"

#include "operant/errors.hpp"

#include <json.hpp>

namespace operant {

std::string render_report(const Report& report, int indent) {
  using json = nlohmann::ordered_json;
  json out{{"schema_version", report.schema_version},
           {"command", report.command},
           {"status", report.status},
           {"message", report.message}};
  if (!report.payload_json.empty()) {
    try {
      out["payload"] = json::parse(report.payload_json);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("report payload is not valid JSON: ") + e.what());
    }
  }
  return out.dump(indent < 0 ? -1 : indent);
}

}  // namespace operant
