#pragma once

#include <string>

namespace operant {

// Machine-readable result envelope shared by all command-line entry points.
// payload_json holds the command-specific body as serialized JSON (or empty);
// render_report embeds it as a structured field, not as a string.
struct Report {
  int schema_version = 1;
  std::string command;
  std::string status;  // "ok" | "error"
  std::string message;
  std::string payload_json;
};

std::string render_report(const Report& report, int indent = 2);

}  // namespace operant
