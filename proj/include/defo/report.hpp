#pragma once

#include <string>
#include <utility>
#include <vector>

namespace defo {

// Structured, deterministic verification report. The full text is stable
// byte-for-byte for a fixed (command, configuration, seed); the summary is
// the short form printed to stdout.
struct Report {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::string> details;
  std::vector<std::string> summary;
  std::string status = "pass";  // pass | fail | flagged

  void kv(const std::string& key, const std::string& value) { header.emplace_back(key, value); }
  void detail(const std::string& line) { details.push_back(line); }
  void note(const std::string& line) { summary.push_back(line); }

  void set_fail() { status = "fail"; }
  void set_flagged() {
    if (status != "fail") status = "flagged";
  }

  bool passed() const { return status == "pass"; }
  int exit_code() const { return status == "pass" ? 0 : 1; }

  std::string full_text() const;
  std::string summary_text() const;
};

}  // namespace defo
