#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tractor {

enum class CheckStatus { Pass, Fail, Advisory, Skipped };

// One verification check. The witness carries the first nonzero residual as a
// complete polynomial expression (or a short explanation for skips).
struct CheckResult {
  std::string name;
  std::string anchor;   // which statement the check realizes
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // empty when the residual battery was all-zero
  size_t battery = 0;   // number of tuples evaluated
  long duration_ms = -1;
};

struct Report {
  std::string model;
  std::string suite;
  uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* first_failure() const;
};

// Human-readable rendering. Timings are opt-in so that default output is
// byte-identical across runs with the same seed.
std::string render_text(const Report& r, bool timings = false);
std::string render_json(const Report& r, bool timings = false);

std::string status_name(CheckStatus s);

}  // namespace tractor
