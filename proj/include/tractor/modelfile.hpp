#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tractor/cartan.hpp"

namespace tractor {

// Outcome of loading a model-spec file. On success `model` is fully validated
// (quadratic algebra, coisotropy, gauge normalization, and the Bianchi
// identity for synthetic curvature). On failure `errors` lists every problem
// found, each with its first witness.
struct LoadResult {
  std::optional<Model> model;
  std::string name;
  std::string description;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty() && model.has_value(); }
};

LoadResult load_model(const std::string& path);
LoadResult load_model_text(const std::string& text, const std::string& origin = "<string>");

}  // namespace tractor
