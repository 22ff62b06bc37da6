#pragma once

#include <optional>

#include "tractor/battery.hpp"
#include "tractor/courant.hpp"
#include "tractor/lie2.hpp"
#include "tractor/modelfile.hpp"
#include "tractor/report.hpp"

namespace tractor {

enum class Suite { Algebra, Precourant, Pontryagin, Twisted, Identities, Lie2, All };

std::optional<Suite> suite_from_name(const std::string& name);
const std::vector<std::string>& suite_names();

struct SuiteOptions {
  uint64_t seed = kDefaultSeed;
};

Report run_suite(const Model& m, Suite suite, const SuiteOptions& opts = {});

// Writes the twisting 4-form components as canonical polynomial text. Refuses
// (returns an error message) unless the twisted-certification checks pass.
std::optional<std::string> emit_h_file(const Model& m, const std::string& path,
                                       uint64_t seed = kDefaultSeed);

}  // namespace tractor
