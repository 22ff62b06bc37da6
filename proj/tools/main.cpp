#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tractor/suites.hpp"

namespace {

int cmd_validate(const std::string& path) {
  tractor::LoadResult r = tractor::load_model(path);
  if (!r.ok()) {
    std::cerr << "validation failed for " << path << ":\n";
    for (const auto& e : r.errors) std::cerr << "  " << e << "\n";
    return 2;
  }
  const tractor::Model& m = *r.model;
  std::cout << "model: " << r.name << "\n";
  if (!r.description.empty()) std::cout << "description: " << r.description << "\n";
  std::cout << "algebra dimension: " << m.dim() << "\n";
  std::cout << "subalgebra dimension: " << m.subalgebra().span.size() << "\n";
  std::cout << "p-orthogonal dimension: " << m.p_perp_basis().size() << "\n";
  std::cout << "chart dimension: " << m.chart_dim() << "\n";
  std::cout << "curvature mode: "
            << (m.mode() == tractor::CurvatureMode::Gauge ? "gauge" : "synthetic") << "\n";
  std::cout << "grading: " << (m.grading() ? "present" : "none") << "\n";
  std::cout << "valid\n";
  return 0;
}

int cmd_run(const std::string& path, const std::string& suite_name, uint64_t seed,
            const std::string& json_path, bool timings) {
  auto suite = tractor::suite_from_name(suite_name);
  if (!suite) {
    std::cerr << "unknown suite '" << suite_name << "'; available:";
    for (const auto& s : tractor::suite_names()) std::cerr << " " << s;
    std::cerr << "\n";
    return 2;
  }
  tractor::LoadResult r = tractor::load_model(path);
  if (!r.ok()) {
    std::cerr << "validation failed for " << path << ":\n";
    for (const auto& e : r.errors) std::cerr << "  " << e << "\n";
    return 2;
  }
  tractor::SuiteOptions opts;
  opts.seed = seed;
  tractor::Report rep = tractor::run_suite(*r.model, *suite, opts);
  std::cout << tractor::render_text(rep, timings);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << tractor::render_json(rep, timings) << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_emit_h(const std::string& path, const std::string& out_path, uint64_t seed) {
  tractor::LoadResult r = tractor::load_model(path);
  if (!r.ok()) {
    std::cerr << "validation failed for " << path << ":\n";
    for (const auto& e : r.errors) std::cerr << "  " << e << "\n";
    return 2;
  }
  auto err = tractor::emit_h_file(*r.model, out_path, seed);
  if (err) {
    std::cerr << "refusing to emit H: " << *err << "\n";
    return 1;
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of twisted Courant structures from Cartan gauges"};
  app.require_subcommand(1);

  std::string model_path, suite_name = "all", json_path, out_path;
  uint64_t seed = tractor::kDefaultSeed;
  bool timings = false;

  auto* validate = app.add_subcommand("validate", "load and validate a model file");
  validate->add_option("file", model_path, "model file")->required();

  auto* run = app.add_subcommand("run", "run a verification suite");
  run->add_option("file", model_path, "model file")->required();
  run->add_option("--suite", suite_name, "suite name (default: all)");
  run->add_option("--seed", seed, "battery seed");
  run->add_option("--json", json_path, "write machine-readable report");
  run->add_flag("--timings", timings, "include wall-clock timings in output");

  auto* emith = app.add_subcommand("emit-h", "extract the twisting 4-form");
  emith->add_option("file", model_path, "model file")->required();
  emith->add_option("out", out_path, "output file")->required();
  emith->add_option("--seed", seed, "battery seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(model_path);
    if (run->parsed()) return cmd_run(model_path, suite_name, seed, json_path, timings);
    if (emith->parsed()) return cmd_emit_h(model_path, out_path, seed);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
