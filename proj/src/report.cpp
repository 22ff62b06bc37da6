#include "tractor/report.hpp"

#include <sstream>

#include "json.hpp"

namespace tractor {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return &c;
  return nullptr;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Advisory: return "advisory";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string render_text(const Report& r, bool timings) {
  std::ostringstream out;
  out << "model: " << r.model << "\n";
  out << "suite: " << r.suite << "\n";
  out << "seed: " << r.seed << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << status_name(c.status) << "] " << c.name;
    if (c.battery > 0) out << " (battery " << c.battery << ")";
    if (timings && c.duration_ms >= 0) out << " [" << c.duration_ms << " ms]";
    out << "\n";
    if (!c.anchor.empty()) out << "      checks: " << c.anchor << "\n";
    if (!c.witness.empty()) out << "      witness: " << c.witness << "\n";
  }
  out << (r.all_pass() ? "verdict: PASS" : "verdict: FAIL") << "\n";
  return out.str();
}

std::string render_json(const Report& r, bool timings) {
  nlohmann::json j;
  j["model"] = r.model;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["verdict"] = r.all_pass() ? "pass" : "fail";
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["status"] = status_name(c.status);
    jc["witness"] = c.witness;
    jc["battery"] = c.battery;
    if (timings) jc["duration_ms"] = c.duration_ms;
    j["checks"].push_back(jc);
  }
  return j.dump(2);
}

}  // namespace tractor
