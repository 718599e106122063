#include "defo/report.hpp"

namespace defo {

std::string Report::full_text() const {
  std::string out = "defo-report v1\n";
  for (const auto& [k, v] : header) out += k + ": " + v + "\n";
  for (const auto& line : details) out += "detail: " + line + "\n";
  for (const auto& line : summary) out += "note: " + line + "\n";
  out += "status: " + status + "\n";
  return out;
}

std::string Report::summary_text() const {
  std::string out;
  for (const auto& [k, v] : header) out += k + ": " + v + "\n";
  for (const auto& line : summary) out += line + "\n";
  out += "status: " + status + "\n";
  return out;
}

}  // namespace defo
