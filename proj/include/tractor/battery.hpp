#pragma once

#include <random>

#include "tractor/cartan.hpp"

namespace tractor {

inline constexpr uint64_t kDefaultSeed = 1729;

// Deterministic generator; raw mt19937_64 outputs only, so streams are
// identical across platforms and standard libraries.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  // small nonzero rational with denominator 1 or 2
  Rational coeff() {
    long num = range(1, 3) * (range(0, 1) == 0 ? 1 : -1);
    long den = range(1, 2);
    return Rational(num, den);
  }

private:
  std::mt19937_64 eng_;
};

struct BatteryConfig {
  uint64_t seed = kDefaultSeed;
  size_t random_sections = 6;
  size_t p_valued = 8;
  size_t perp_valued = 6;
  unsigned max_degree = 2;
};

// The deterministic section battery: all constant basis sections, each basis
// section multiplied by x1 and by x1*x2 (x1^2 on 1-dimensional charts), plus
// seeded pseudo-random sections of degree <= max_degree. Separate pools carry
// random p-valued and p-orthogonal-valued sections for kernel checks.
struct Battery {
  std::vector<Section> constants;
  std::vector<Section> scaled;
  std::vector<Section> random;
  std::vector<Section> p_random;
  std::vector<Section> perp_random;
  std::vector<Section> mains;  // constants + scaled + random
};

Poly random_poly(Rng& rng, const VarListPtr& vars, unsigned max_degree);
Section random_section(Rng& rng, const Model& m, unsigned max_degree);
Section random_in_span(Rng& rng, const Model& m, const std::vector<RatVec>& span,
                       unsigned max_degree);

Battery make_battery(const Model& m, const BatteryConfig& cfg);

// All strictly increasing index tuples from a pool.
std::vector<std::vector<size_t>> increasing_tuples(size_t pool, size_t arity);
// Seeded pseudo-random index tuples (repeats allowed).
std::vector<std::vector<size_t>> sampled_tuples(Rng& rng, size_t pool, size_t arity,
                                                size_t count);

}  // namespace tractor
