#include "tractor/battery.hpp"

namespace tractor {
namespace {

// exponent vectors of total degree <= max_degree, in a fixed enumeration
std::vector<Exponents> monomials_up_to(size_t nvars, unsigned max_degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  // counted enumeration in mixed radix, filtered by total degree
  // (chart dimensions are small, this stays tiny)
  std::function<void(size_t, unsigned)> rec = [&](size_t i, unsigned left) {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, max_degree);
  return out;
}

}  // namespace

Poly random_poly(Rng& rng, const VarListPtr& vars, unsigned max_degree) {
  static thread_local std::map<std::pair<size_t, unsigned>, std::vector<Exponents>> cache;
  auto& monos = cache[{vars->size(), max_degree}];
  if (monos.empty()) monos = monomials_up_to(vars->size(), max_degree);
  Poly p(vars);
  long terms = rng.range(1, 3);
  for (long t = 0; t < terms; ++t) {
    const Exponents& e = monos[static_cast<size_t>(rng.range(0, static_cast<long>(monos.size()) - 1))];
    p.add_term(e, rng.coeff());
  }
  return p;
}

Section random_section(Rng& rng, const Model& m, unsigned max_degree) {
  Section s = m.zero_section();
  // sparse: populate a few basis components
  long picks = rng.range(2, 4);
  for (long t = 0; t < picks; ++t) {
    size_t a = static_cast<size_t>(rng.range(0, static_cast<long>(m.dim()) - 1));
    s.comp[a] += random_poly(rng, m.vars(), max_degree);
  }
  return s;
}

Section random_in_span(Rng& rng, const Model& m, const std::vector<RatVec>& span,
                       unsigned max_degree) {
  Section s = m.zero_section();
  for (const auto& v : span) {
    if (rng.range(0, 2) == 0) continue;  // skip some spanning vectors
    Poly f = random_poly(rng, m.vars(), max_degree);
    s += m.constant_section(v).scaled(f);
  }
  return s;
}

Battery make_battery(const Model& m, const BatteryConfig& cfg) {
  Battery b;
  size_t d = m.dim();
  for (size_t a = 0; a < d; ++a) {
    RatVec v(d);
    v[a] = Rational(1);
    b.constants.push_back(m.constant_section(v));
  }
  Poly x1 = Poly::variable(m.vars(), 0);
  Poly x1x2 = m.chart_dim() >= 2 ? x1 * Poly::variable(m.vars(), 1) : x1 * x1;
  for (const auto& c : b.constants) b.scaled.push_back(c.scaled(x1));
  for (const auto& c : b.constants) b.scaled.push_back(c.scaled(x1x2));

  Rng rng(cfg.seed);
  for (size_t i = 0; i < cfg.random_sections; ++i)
    b.random.push_back(random_section(rng, m, cfg.max_degree));
  for (size_t i = 0; i < cfg.p_valued; ++i)
    b.p_random.push_back(random_in_span(rng, m, m.subalgebra().span, cfg.max_degree));
  for (size_t i = 0; i < cfg.perp_valued; ++i)
    b.perp_random.push_back(random_in_span(rng, m, m.p_perp_basis(), cfg.max_degree));

  b.mains = b.constants;
  b.mains.insert(b.mains.end(), b.scaled.begin(), b.scaled.end());
  b.mains.insert(b.mains.end(), b.random.begin(), b.random.end());
  return b;
}

std::vector<std::vector<size_t>> increasing_tuples(size_t pool, size_t arity) {
  std::vector<std::vector<size_t>> out;
  if (arity > pool) return out;
  std::vector<size_t> cur(arity);
  for (size_t i = 0; i < arity; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    size_t i = arity;
    while (i > 0) {
      --i;
      if (cur[i] != i + pool - arity) break;
      if (i == 0) return out;
    }
    ++cur[i];
    for (size_t j = i + 1; j < arity; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::vector<std::vector<size_t>> sampled_tuples(Rng& rng, size_t pool, size_t arity,
                                                size_t count) {
  std::vector<std::vector<size_t>> out;
  out.reserve(count);
  for (size_t k = 0; k < count; ++k) {
    std::vector<size_t> t(arity);
    for (size_t i = 0; i < arity; ++i)
      t[i] = static_cast<size_t>(rng.range(0, static_cast<long>(pool) - 1));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace tractor
