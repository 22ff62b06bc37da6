#include "tractor/suites.hpp"

#include <chrono>
#include <fstream>

namespace tractor {
namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point t0 = Clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  }
};

using SecRef = const Section*;

template <size_t N>
using Tuple = std::array<SecRef, N>;

template <size_t N>
std::vector<Tuple<N>> make_tuples(const Battery& b, Rng& rng, size_t sampled) {
  std::vector<Tuple<N>> out;
  for (const auto& idx : increasing_tuples(b.constants.size(), N)) {
    Tuple<N> t;
    for (size_t i = 0; i < N; ++i) t[i] = &b.constants[idx[i]];
    out.push_back(t);
  }
  for (const auto& idx : sampled_tuples(rng, b.mains.size(), N, sampled)) {
    Tuple<N> t;
    for (size_t i = 0; i < N; ++i) t[i] = &b.mains[idx[i]];
    out.push_back(t);
  }
  return out;
}

// All ordered constant pairs plus sampled mixed pairs.
std::vector<Tuple<2>> make_pairs(const Battery& b, Rng& rng, size_t sampled) {
  std::vector<Tuple<2>> out;
  for (const auto& x : b.constants)
    for (const auto& y : b.constants) out.push_back({&x, &y});
  for (const auto& idx : sampled_tuples(rng, b.mains.size(), 2, sampled))
    out.push_back({&b.mains[idx[0]], &b.mains[idx[1]]});
  return out;
}

class SuiteRunner {
public:
  SuiteRunner(const Model& m, const SuiteOptions& opts, Report& rep)
      : m_(m), opts_(opts), rep_(rep), tuple_rng_(opts.seed ^ 0x9e3779b97f4a7c15ULL) {
    BatteryConfig cfg;
    cfg.seed = opts.seed;
    bat_ = make_battery(m, cfg);
  }

  void algebra();
  void precourant();
  void pontryagin();
  void twisted();
  void identities();
  void lie2();

private:
  CheckResult& add(const std::string& name, const std::string& anchor) {
    rep_.checks.push_back(CheckResult{name, anchor});
    return rep_.checks.back();
  }

  void finish(CheckResult& r, const Timer& t) { r.duration_ms = t.ms(); }

  void fail_with(CheckResult& r, const std::string& witness) {
    if (r.status == CheckStatus::Pass) {
      r.status = CheckStatus::Fail;
      r.witness = witness;
    }
  }

  std::string sec(const Section& s) const { return m_.section_str(s); }
  static std::string vec(const PolyVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += v[i].str();
    }
    return out + ")";
  }

  bool polyvec_zero(const PolyVec& v) const {
    for (const auto& p : v)
      if (!p.is_zero()) return false;
    return true;
  }

  const Model& m_;
  SuiteOptions opts_;
  Report& rep_;
  Battery bat_;
  Rng tuple_rng_;
};

void SuiteRunner::algebra() {
  {
    Timer t;
    for (auto r : validate_quadratic(m_.algebra())) {
      r.duration_ms = t.ms();
      rep_.checks.push_back(std::move(r));
    }
  }
  {
    Timer t;
    auto& r = add("subalgebra_closed", "[p, p] contained in p");
    if (!is_subalgebra(m_.algebra(), m_.subalgebra())) fail_with(r, "bracket escapes the span");
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("coisotropic", "orthogonal complement of p contained in p");
    if (!check_coisotropic(m_.algebra(), m_.subalgebra())) fail_with(r, "p-orth escapes p");
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("orth_complement_involutive", "(p-orth)-orth = p");
    SubalgebraSpec perp{m_.p_perp_basis()};
    if (!subspace_eq(orthogonal_complement(m_.algebra(), perp), m_.subalgebra().span))
      fail_with(r, "double complement differs from p");
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("b_dual_roundtrip", "B(b_dual(f), x) = f(x)");
    Rng rng(opts_.seed + 1);
    size_t d = m_.dim();
    for (int it = 0; it < 12 && r.status == CheckStatus::Pass; ++it) {
      RatVec f(d);
      for (auto& x : f) x = rng.coeff();
      RatVec s = b_dual(m_.algebra(), f);
      for (size_t j = 0; j < d; ++j) {
        RatVec ej(d);
        ej[j] = Rational(1);
        if (form_pair(m_.algebra(), s, ej) != f[j]) {
          fail_with(r, "functional component " + std::to_string(j));
          break;
        }
      }
    }
    r.battery = 12;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("killing_ad_invariant", "K([x,y],z) = K(x,[y,z])");
    Mat k = killing_form(m_.algebra());
    Rng rng(opts_.seed + 2);
    size_t d = m_.dim();
    auto kpair = [&](const RatVec& a, const RatVec& b) {
      Rational acc(0);
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) acc += a[i] * k.at(i, j) * b[j];
      return acc;
    };
    for (int it = 0; it < 10 && r.status == CheckStatus::Pass; ++it) {
      RatVec x(d), y(d), z(d);
      for (auto& v : x) v = rng.coeff();
      for (auto& v : y) v = rng.coeff();
      for (auto& v : z) v = rng.coeff();
      if (kpair(bracket(m_.algebra(), x, y), z) != kpair(x, bracket(m_.algebra(), y, z)))
        fail_with(r, "random triple " + std::to_string(it));
    }
    r.battery = 10;
    finish(r, t);
  }
  if (m_.grading()) {
    Timer t;
    for (auto r : validate_grading(m_.algebra(), m_.subalgebra(), *m_.grading())) {
      r.duration_ms = t.ms();
      rep_.checks.push_back(std::move(r));
    }
  }
}

void SuiteRunner::precourant() {
  auto pairs = make_pairs(bat_, tuple_rng_, 24);
  auto triples = make_tuples<3>(bat_, tuple_rng_, 20);
  Poly x1 = Poly::variable(m_.vars(), 0);

  {
    Timer t;
    auto& r = add("gauge_normalization", "A_i - X_i is p-valued");
    for (size_t i = 0; i < m_.chart_dim(); ++i) {
      Section diff = m_.gauge()[i] - m_.transversal_section(i);
      if (!is_p_valued(m_, diff)) fail_with(r, "component " + std::to_string(i + 1));
    }
    r.battery = m_.chart_dim();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("bianchi", "d kappa + [A ^ kappa] = 0");
    auto res = bianchi_residuals(m_);
    for (const auto& b : res)
      if (!b.value.is_zero()) {
        fail_with(r, "(" + std::to_string(b.i + 1) + "," + std::to_string(b.j + 1) + "," +
                         std::to_string(b.k + 1) + "): " + sec(b.value));
        break;
      }
    r.battery = res.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("nabla_metric", "X<e1,e2> = <nabla_X e1,e2> + <e1,nabla_X e2>");
    for (const auto& [a, b] : pairs) {
      for (size_t i = 0; i < m_.chart_dim() && r.status == CheckStatus::Pass; ++i) {
        Poly lhs = pairing(m_, *a, *b).diff(i);
        Poly rhs = pairing(m_, nabla_dir(m_, i, *a), *b) + pairing(m_, *a, nabla_dir(m_, i, *b));
        if (lhs != rhs) fail_with(r, "pair with d/dx" + std::to_string(i + 1));
      }
      if (r.status != CheckStatus::Pass) break;
    }
    r.battery = pairs.size() * m_.chart_dim();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("nabla_leibniz", "nabla_X(f e) = f nabla_X e + (Xf) e");
    Rng rng(opts_.seed + 3);
    for (int it = 0; it < 10 && r.status == CheckStatus::Pass; ++it) {
      Poly f = random_poly(rng, m_.vars(), 2);
      Section e = random_section(rng, m_, 2);
      PolyVec x;
      for (size_t i = 0; i < m_.chart_dim(); ++i) x.push_back(random_poly(rng, m_.vars(), 1));
      Section lhs = nabla(m_, x, e.scaled(f));
      Section rhs = nabla(m_, x, e).scaled(f) + e.scaled(field_apply(x, f));
      if (lhs != rhs) fail_with(r, "iteration " + std::to_string(it));
    }
    r.battery = 10;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("nabla_tensorial", "nabla_{fX} e = f nabla_X e");
    Rng rng(opts_.seed + 4);
    for (int it = 0; it < 10 && r.status == CheckStatus::Pass; ++it) {
      Poly f = random_poly(rng, m_.vars(), 2);
      Section e = random_section(rng, m_, 2);
      PolyVec x;
      for (size_t i = 0; i < m_.chart_dim(); ++i) x.push_back(random_poly(rng, m_.vars(), 1));
      PolyVec fx;
      for (const auto& c : x) fx.push_back(c * f);
      if (nabla(m_, fx, e) != nabla(m_, x, e).scaled(f))
        fail_with(r, "iteration " + std::to_string(it));
    }
    r.battery = 10;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("kappa_horizontal", "kappa(e, .) = 0 for p-valued e");
    size_t count = 0;
    for (const auto& ep : bat_.p_random) {
      for (const auto& e : bat_.mains) {
        ++count;
        Section v = kappa_sections(m_, ep, e);
        if (!v.is_zero()) {
          fail_with(r, sec(v));
          break;
        }
      }
      if (r.status != CheckStatus::Pass) break;
    }
    r.battery = count;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("atiyah_antisym", "<e1,e2> + <e2,e1> = 0");
    for (const auto& [a, b] : pairs) {
      if (!(atiyah_bracket(m_, *a, *b) + atiyah_bracket(m_, *b, *a)).is_zero()) {
        fail_with(r, sec(atiyah_bracket(m_, *a, *b) + atiyah_bracket(m_, *b, *a)));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("atiyah_anchor", "rho<e1,e2> = [rho(e1), rho(e2)]");
    for (const auto& [a, b] : pairs) {
      PolyVec lhs = anchor(m_, atiyah_bracket(m_, *a, *b));
      PolyVec rhs = field_bracket(anchor(m_, *a), anchor(m_, *b));
      for (size_t i = 0; i < lhs.size(); ++i) lhs[i] -= rhs[i];
      if (!polyvec_zero(lhs)) {
        fail_with(r, vec(lhs));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("atiyah_leibniz", "<e1, f e2> = f<e1,e2> + (rho(e1)f) e2");
    for (const auto& [a, b] : pairs) {
      Section lhs = atiyah_bracket(m_, *a, b->scaled(x1));
      Section rhs = atiyah_bracket(m_, *a, *b).scaled(x1) +
                    b->scaled(field_apply(anchor(m_, *a), x1));
      if (lhs != rhs) {
        fail_with(r, sec(lhs - rhs));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("atiyah_jacobi", "<e1,<e2,e3>> + cyclic = 0");
    for (const auto& [a, b, c] : triples) {
      Section acc = atiyah_bracket(m_, *a, atiyah_bracket(m_, *b, *c));
      acc += atiyah_bracket(m_, *b, atiyah_bracket(m_, *c, *a));
      acc += atiyah_bracket(m_, *c, atiyah_bracket(m_, *a, *b));
      if (!acc.is_zero()) {
        fail_with(r, sec(acc));
        break;
      }
    }
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("beta_skew", "(e1,e2,e3) -> B(beta(e1,e2),e3) totally skew");
    for (const auto& [a, b, c] : triples) {
      Poly p12 = pairing(m_, beta(m_, *a, *b), *c);
      Poly p21 = pairing(m_, beta(m_, *b, *a), *c);
      Poly p13 = pairing(m_, beta(m_, *a, *c), *b);
      if (!(p12 + p21).is_zero() || !(p12 + p13).is_zero()) {
        fail_with(r, (p12 + p13).is_zero() ? (p12 + p21).str() : (p12 + p13).str());
        break;
      }
    }
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("beta_anchor",
                  "rho(beta(e1,e2)) = [rho e1, rho e2] - rho(nabla_{rho e1}e2 - nabla_{rho e2}e1)");
    for (const auto& [a, b] : pairs) {
      PolyVec lhs = anchor(m_, beta(m_, *a, *b));
      PolyVec rhs = field_bracket(anchor(m_, *a), anchor(m_, *b));
      PolyVec sub = anchor(m_, nabla(m_, anchor(m_, *a), *b) - nabla(m_, anchor(m_, *b), *a));
      for (size_t i = 0; i < lhs.size(); ++i) lhs[i] -= rhs[i] - sub[i];
      if (!polyvec_zero(lhs)) {
        fail_with(r, vec(lhs));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("dorfman_routes_agree", "bracket via (nabla,beta) equals the expanded bracket");
    for (const auto& [a, b] : pairs) {
      if (dorfman(m_, *a, *b) != dorfman_via_beta(m_, *a, *b)) {
        fail_with(r, sec(dorfman(m_, *a, *b) - dorfman_via_beta(m_, *a, *b)));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("dorfman_decomposition",
                  "e1 o e2 = <e1,e2> + B(e2,k(e1,.)) - B(e1,k(e2,.)) + B(nabla e1,e2)");
    for (const auto& [a, b] : pairs) {
      Section rhs = atiyah_bracket(m_, *a, *b) + kappa_dual(m_, *b, *a) -
                    kappa_dual(m_, *a, *b) + nabla_dual(m_, *a, *b);
      if (dorfman(m_, *a, *b) != rhs) {
        fail_with(r, sec(dorfman(m_, *a, *b) - rhs));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }

  BracketFn dorf = dorfman_fn(m_);
  {
    Timer t;
    auto& r = add("axiom_i", "rho(e1 o e2) = [rho(e1), rho(e2)]");
    for (const auto& [a, b] : pairs) {
      PolyVec res = axiom1_residual(m_, dorf, *a, *b);
      if (!polyvec_zero(res)) {
        fail_with(r, vec(res));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("axiom_ii", "e o e = (1/2) d<e,e>");
    size_t count = 0;
    for (const auto& e : bat_.mains) {
      ++count;
      Section res = axiom2_residual(m_, dorf, e);
      if (!res.is_zero()) {
        fail_with(r, sec(res));
        break;
      }
    }
    r.battery = count;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("axiom_iii", "rho(e1)<e2,e3> = <e1 o e2, e3> + <e2, e1 o e3>");
    for (const auto& [a, b, c] : triples) {
      Poly res = axiom3_residual(m_, dorf, *a, *b, *c);
      if (!res.is_zero()) {
        fail_with(r, res.str());
        break;
      }
    }
    r.battery = triples.size();
    finish(r, t);
  }
}

void SuiteRunner::pontryagin() {
  PontryaginTensor p(m_, dorfman_fn(m_));
  auto quads = make_tuples<4>(bat_, tuple_rng_, 8);
  Poly x1 = Poly::variable(m_.vars(), 0);

  {
    Timer t;
    auto& r = add("p_function_linear", "P(f e1, e2, e3, e4) = f P(e1,...,e4)");
    size_t count = 0;
    for (const auto& [a, b, c, d] : quads) {
      ++count;
      Poly direct = p.eval_direct(a->scaled(x1), *b, *c, *d);
      Poly scaled = p.eval_direct(*a, *b, *c, *d) * x1;
      if (direct != scaled) {
        fail_with(r, (direct - scaled).str());
        break;
      }
      Poly multi = p.eval_multilinear(*a, *b, *c, *d);
      if (multi != p.eval_direct(*a, *b, *c, *d)) {
        fail_with(r, "multilinear expansion differs: " +
                         (multi - p.eval_direct(*a, *b, *c, *d)).str());
        break;
      }
    }
    r.battery = count;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("p_antisymmetric", "P flips sign under adjacent transpositions");
    for (const auto& [a, b, c, d] : quads) {
      Poly base = p.eval_direct(*a, *b, *c, *d);
      if (p.eval_direct(*b, *a, *c, *d) != -base ||
          p.eval_direct(*a, *c, *b, *d) != -base ||
          p.eval_direct(*a, *b, *d, *c) != -base) {
        fail_with(r, "tuple with value " + base.str());
        break;
      }
    }
    r.battery = quads.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("dp_zero", "sum_i (-1)^{i+1} rho(e_i) P(...) + sum_{i<j} (-1)^{i+j} P(e_i o e_j, ...) = 0");
    auto quints = make_tuples<5>(bat_, tuple_rng_, 5);
    auto peval = [&](const Section& a, const Section& b, const Section& c, const Section& d) {
      return p.eval_direct(a, b, c, d);
    };
    BracketFn dorf = dorfman_fn(m_);
    for (const auto& q : quints) {
      std::vector<Section> e{*q[0], *q[1], *q[2], *q[3], *q[4]};
      Poly v = dp_value(m_, peval, dorf, e, true);
      if (!v.is_zero()) {
        fail_with(r, v.str());
        break;
      }
    }
    r.battery = quints.size();
    finish(r, t);
  }
}

void SuiteRunner::twisted() {
  PontryaginTensor p(m_, dorfman_fn(m_));
  BracketFn dorf = dorfman_fn(m_);
  auto triples = make_tuples<3>(bat_, tuple_rng_, 20);
  auto quads = make_tuples<4>(bat_, tuple_rng_, 8);

  {
    Timer t;
    auto& r = add("s1_jacobiator_in_perp", "J(e1,e2,e3) is p-orthogonal-valued");
    for (const auto& [a, b, c] : triples) {
      Section j = jacobiator(dorf, *a, *b, *c);
      if (!is_perp_valued(m_, j)) {
        fail_with(r, sec(j));
        break;
      }
    }
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("s2_kernel_jacobiator_zero", "J(e, ., .) = 0 for p-valued e");
    size_t count = 0;
    Rng rng(opts_.seed + 5);
    for (const auto& ep : bat_.p_random) {
      for (const auto& idx : sampled_tuples(rng, bat_.mains.size(), 2, 8)) {
        ++count;
        Section j = jacobiator(dorf, ep, bat_.mains[idx[0]], bat_.mains[idx[1]]);
        if (!j.is_zero()) {
          fail_with(r, sec(j));
          break;
        }
      }
      if (r.status != CheckStatus::Pass) break;
    }
    r.battery = count;
    finish(r, t);
  }

  PolyForm h = extract_h(m_, p);
  {
    Timer t;
    auto& r = add("h_dimension_consistency", "chart dim < 4 forces P = 0");
    if (m_.chart_dim() < 4 && !p.table_is_zero())
      fail_with(r, "nonzero 4-tensor on a chart of dimension " +
                       std::to_string(m_.chart_dim()));
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("h_rho_star_matches", "P(e1..e4) = H(rho e1,...,rho e4)");
    for (const auto& [a, b, c, d] : quads) {
      Poly lhs = p.eval_direct(*a, *b, *c, *d);
      Poly rhs = h.evaluate({anchor(m_, *a), anchor(m_, *b), anchor(m_, *c), anchor(m_, *d)});
      if (lhs != rhs) {
        fail_with(r, (lhs - rhs).str());
        break;
      }
    }
    r.battery = quads.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("h_closed", "dH = 0");
    PolyForm dh = h.d();
    if (!dh.is_zero()) {
      auto it = dh.components().begin();
      fail_with(r, it->second.str());
    }
    finish(r, t);
  }

  auto pairs = make_pairs(bat_, tuple_rng_, 24);
  {
    Timer t;
    auto& r = add("quotient_ideal", "e o s and s o e are p-orthogonal-valued for such s");
    size_t count = 0;
    for (const auto& s : bat_.perp_random) {
      for (const auto& e : bat_.mains) {
        ++count;
        if (!is_perp_valued(m_, dorfman(m_, e, s)) || !is_perp_valued(m_, dorfman(m_, s, e))) {
          fail_with(r, "section " + sec(s));
          break;
        }
      }
      if (r.status != CheckStatus::Pass) break;
    }
    r.battery = count;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("quotient_well_defined",
                  "bracket of representatives is independent of the choice");
    size_t count = 0;
    size_t k = 0;
    for (const auto& [a, b] : pairs) {
      const Section& s1 = bat_.perp_random[k % bat_.perp_random.size()];
      const Section& s2 = bat_.perp_random[(k + 1) % bat_.perp_random.size()];
      ++k;
      ++count;
      std::vector<Poly> lhs = quotient_coords(m_, dorfman(m_, *a + s1, *b + s2));
      std::vector<Poly> rhs = quotient_coords(m_, dorfman(m_, *a, *b));
      if (lhs != rhs) {
        fail_with(r, "pair " + std::to_string(k));
        break;
      }
      if (count >= 40) break;
    }
    r.battery = count;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("quotient_skew", "induced bracket is skew-symmetric");
    for (const auto& [a, b] : pairs) {
      Section sym = dorfman(m_, *a, *b) + dorfman(m_, *b, *a);
      if (!is_perp_valued(m_, sym)) {
        fail_with(r, sec(sym));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("quotient_jacobi", "induced bracket satisfies Jacobi");
    for (const auto& [a, b, c] : triples) {
      std::vector<Poly> q = quotient_coords(m_, jacobiator(dorf, *a, *b, *c));
      bool zero = true;
      for (const auto& f : q)
        if (!f.is_zero()) zero = false;
      if (!zero) {
        fail_with(r, "triple with quotient residual");
        break;
      }
    }
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("quotient_anchor", "anchor descends to the quotient bracket");
    for (const auto& [a, b] : pairs) {
      PolyVec res = axiom1_residual(m_, dorf, *a, *b);
      if (!polyvec_zero(res)) {
        fail_with(r, vec(res));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
}

void SuiteRunner::identities() {
  BracketFn dorf = dorfman_fn(m_);
  auto triples = make_tuples<3>(bat_, tuple_rng_, 20);
  bool gauge_mode = m_.mode() == CurvatureMode::Gauge;

  {
    Timer t;
    auto& r = add("jacobiator_formula_matches",
                  "J = -[e1, B(e3,k(e2,.)) - B(e2,k(e3,.))]_g + nested terms + cyclic");
    std::string first_witness;
    for (const auto& [a, b, c] : triples) {
      Section lhs = jacobiator(dorf, *a, *b, *c);
      Section rhs = jacobiator_formula(m_, *a, *b, *c);
      if (lhs != rhs) {
        first_witness = sec(lhs - rhs);
        break;
      }
    }
    if (!gauge_mode) {
      r.status = CheckStatus::Advisory;
      r.witness = first_witness.empty() ? "synthetic curvature: closed form still agrees"
                                        : "synthetic curvature: closed form differs by " +
                                              first_witness;
    } else if (!first_witness.empty()) {
      fail_with(r, first_witness);
    }
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("curvature_identity_3term",
                  "[e1,B(e3,k(e2,.))-B(e2,k(e3,.))]_g - [e3,B(e1,k(e2,.))]_g "
                  "+ [e2,B(e1,k(e3,.))]_g + B(e1,k(e2,k(e3,.))-k(e3,k(e2,.))) = 0 for p-valued e1");
    if (!gauge_mode) {
      r.status = CheckStatus::Skipped;
      r.witness = "asserted in gauge mode only";
    } else {
      size_t count = 0;
      Rng rng(opts_.seed + 6);
      for (const auto& e1 : bat_.p_random) {
        for (const auto& idx : sampled_tuples(rng, bat_.mains.size(), 2, 6)) {
          ++count;
          const Section& e2 = bat_.mains[idx[0]];
          const Section& e3 = bat_.mains[idx[1]];
          Section inner = kappa_dual(m_, e3, e2) - kappa_dual(m_, e2, e3);
          Section acc = Section(bracket(m_.algebra(), e1.comp, inner.comp));
          acc -= Section(bracket(m_.algebra(), e3.comp, kappa_dual(m_, e1, e2).comp));
          acc += Section(bracket(m_.algebra(), e2.comp, kappa_dual(m_, e1, e3).comp));
          acc += nested_kappa_dual(m_, e1, e2, e3);
          acc -= nested_kappa_dual(m_, e1, e3, e2);
          if (!acc.is_zero()) {
            fail_with(r, sec(acc));
            break;
          }
        }
        if (r.status != CheckStatus::Pass) break;
      }
      r.battery = count;
    }
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("curvature_identity_pair",
                  "[e1, B(e2,k(e3,.))]_g = [e2, B(e1,k(e3,.))]_g for p-valued e1, e2");
    if (!gauge_mode) {
      r.status = CheckStatus::Skipped;
      r.witness = "asserted in gauge mode only";
    } else {
      size_t count = 0;
      size_t k = 0;
      for (const auto& e1 : bat_.p_random) {
        for (const auto& e2 : bat_.p_random) {
          const Section& e3 = bat_.mains[k % bat_.mains.size()];
          ++k;
          ++count;
          Section lhs = Section(bracket(m_.algebra(), e1.comp, kappa_dual(m_, e2, e3).comp));
          Section rhs = Section(bracket(m_.algebra(), e2.comp, kappa_dual(m_, e1, e3).comp));
          if (lhs != rhs) {
            fail_with(r, sec(lhs - rhs));
            break;
          }
        }
        if (r.status != CheckStatus::Pass) break;
      }
      r.battery = count;
    }
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("first_pontryagin_formula",
                  "H against the curvature expression, both cyclic readings");
    PontryaginTensor p(m_, dorf);
    PolyForm h = extract_h(m_, p);
    if (m_.chart_dim() < 4) {
      r.status = CheckStatus::Advisory;
      r.witness = "no 4-forms on this chart; binding definition P = rho*H holds vacuously";
    } else {
      auto summand = [&](const Section& a, const Section& b, const Section& c,
                         const Section& e4) {
        Poly acc = m_.zero_poly();
        Section inner = kappa_dual(m_, c, b) - kappa_dual(m_, b, c);
        acc -= pairing(m_, Section(bracket(m_.algebra(), a.comp, inner.comp)), e4);
        acc += pairing(m_, c, kappa_sections(m_, b, kappa_sections(m_, a, e4)));
        acc -= pairing(m_, b, kappa_sections(m_, c, kappa_sections(m_, a, e4)));
        return acc;
      };
      std::string note;
      size_t count = 0;
      for (const auto& idx : increasing_tuples(m_.chart_dim(), 4)) {
        ++count;
        Section e1 = m_.transversal_section(idx[0]);
        Section e2 = m_.transversal_section(idx[1]);
        Section e3 = m_.transversal_section(idx[2]);
        Section e4 = m_.transversal_section(idx[3]);
        Poly href = h.evaluate({anchor(m_, e1), anchor(m_, e2), anchor(m_, e3), anchor(m_, e4)});
        // reading 1: cyclic over the first three slots
        Poly r1 = summand(e1, e2, e3, e4) + summand(e2, e3, e1, e4) + summand(e3, e1, e2, e4);
        // reading 2: cyclic over all four slots
        Poly r2 = summand(e1, e2, e3, e4) + summand(e2, e3, e4, e1) + summand(e3, e4, e1, e2) +
                  summand(e4, e1, e2, e3);
        if (note.empty()) {
          Poly d1 = r1 - href;
          Poly d2 = r2 - href;
          if (!d1.is_zero() || !d2.is_zero())
            note = "residuals (three-slot, four-slot) = (" + d1.str() + ", " + d2.str() + ")";
        }
      }
      r.status = CheckStatus::Advisory;
      r.witness = note.empty() ? "both readings reproduce H on transversal tuples" : note;
      r.battery = count;
    }
    finish(r, t);
  }
  {
    Timer t;
    auto skew = skew_kappa_violation(m_);
    auto& r = add("skew_kappa", "B(kappa(e1,e2),e3) totally skew-symmetric");
    size_t d = m_.dim();
    r.battery = d * (d - 1) / 2 * d;
    if (skew) {
      r.status = CheckStatus::Skipped;
      r.witness = "hypothesis fails at basis triple (" + m_.algebra().names()[(*skew)[0]] +
                  ", " + m_.algebra().names()[(*skew)[1]] + ", " +
                  m_.algebra().names()[(*skew)[2]] + "); vanishing statement not applicable";
      finish(r, t);
      auto& r2 = add("alt_bracket_jacobi", "alternative bracket has vanishing Jacobiator");
      r2.status = CheckStatus::Skipped;
      r2.witness = "skew hypothesis fails";
      auto& r3 = add("h_class_vanishes", "twisting 4-form is exact");
      r3.status = CheckStatus::Skipped;
      r3.witness = "skew hypothesis fails";
    } else {
      finish(r, t);
      {
        Timer t2;
        auto& r2 = add("alt_bracket_jacobi", "alternative bracket has vanishing Jacobiator");
        BracketFn alt = alt_bracket_fn(m_);
        for (const auto& [a, b, c] : triples) {
          Section j = jacobiator(alt, *a, *b, *c);
          if (!j.is_zero()) {
            fail_with(r2, sec(j));
            break;
          }
        }
        r2.battery = triples.size();
        finish(r2, t2);
      }
      {
        Timer t3;
        auto& r3 = add("h_class_vanishes", "twisting 4-form is exact");
        PontryaginTensor p(m_, dorf);
        PolyForm h = extract_h(m_, p);
        if (h.is_zero()) {
          r3.witness = "H = 0";
        } else {
          PolyForm g = h.homotopy();
          if (g.d() == h) {
            r3.witness = "H = dG with G from the homotopy operator";
          } else {
            fail_with(r3, "closed H without an exactness witness");
          }
        }
        finish(r3, t3);
      }
    }
  }
}

void SuiteRunner::lie2() {
  auto pairs = make_pairs(bat_, tuple_rng_, 24);
  auto triples = make_tuples<3>(bat_, tuple_rng_, 16);
  auto quads = make_tuples<4>(bat_, tuple_rng_, 6);
  Poly x1 = Poly::variable(m_.vars(), 0);

  {
    Timer t;
    auto& r = add("skew_bracket_forms_agree",
                  "(e1 o e2 - e2 o e1)/2 = e1 o e2 - (1/2) d<e1,e2>");
    for (const auto& [a, b] : pairs) {
      if (skew_bracket(m_, *a, *b) != skew_bracket_via_d(m_, *a, *b)) {
        fail_with(r, sec(skew_bracket(m_, *a, *b) - skew_bracket_via_d(m_, *a, *b)));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("t_form_antisymmetric", "T flips sign under transpositions");
    for (const auto& [a, b, c] : triples) {
      Poly base = t_form(m_, *a, *b, *c);
      if (t_form(m_, *b, *a, *c) != -base || t_form(m_, *a, *c, *b) != -base) {
        fail_with(r, base.str());
        break;
      }
    }
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("script_jacobiator_routes", "[[e1,[[e2,e3]]]] + cyclic = J - dT");
    for (const auto& [a, b, c] : triples) {
      Section lhs = script_jacobiator(m_, *a, *b, *c);
      Section rhs = script_jacobiator_jdt(m_, *a, *b, *c);
      if (lhs != rhs) {
        fail_with(r, sec(lhs - rhs));
        break;
      }
    }
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("l2_expanded_formula", "expanded degree-0 l2 equals the skew bracket");
    for (const auto& [a, b] : pairs) {
      Section rhs = nabla(m_, anchor(m_, *a), *b) - nabla(m_, anchor(m_, *b), *a);
      rhs -= Section(bracket(m_.algebra(), a->comp, b->comp));
      rhs -= kappa_sections(m_, *a, *b);
      rhs += kappa_dual(m_, *b, *a) - kappa_dual(m_, *a, *b);
      rhs += nabla_dual(m_, *a, *b).scaled(Rational(1, 2));
      rhs -= nabla_dual(m_, *b, *a).scaled(Rational(1, 2));
      if (skew_bracket(m_, *a, *b) != rhs) {
        fail_with(r, sec(skew_bracket(m_, *a, *b) - rhs));
        break;
      }
    }
    r.battery = pairs.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("l3_explicit_matches", "printed l3 formula equals the script Jacobiator");
    std::string outcome;
    for (const auto& [a, b, c] : triples) {
      Section ref = script_jacobiator(m_, *a, *b, *c);
      Section tcons = l3_explicit_section(m_, *a, *b, *c, L3Reading::TConsistent);
      if (tcons != ref) {
        Section printed = l3_explicit_section(m_, *a, *b, *c, L3Reading::AsPrinted);
        if (printed == ref) {
          outcome = "as-printed bracket sign matched where the T-expansion sign did not";
        } else {
          fail_with(r, sec(tcons - ref));
        }
        break;
      }
    }
    if (r.status == CheckStatus::Pass && outcome.empty())
      r.witness = "matches with the bracket-term sign from the T-expansion "
                  "(printed sign differs, see l3_printed_sign)";
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("l3_printed_sign", "sign of B([e1,e2]_g,e3) inside the braced term");
    bool printed_matches = true;
    std::string wit;
    for (const auto& [a, b, c] : triples) {
      Section ref = script_jacobiator(m_, *a, *b, *c);
      Section printed = l3_explicit_section(m_, *a, *b, *c, L3Reading::AsPrinted);
      if (printed != ref) {
        printed_matches = false;
        wit = sec(printed - ref);
        break;
      }
    }
    r.status = CheckStatus::Advisory;
    r.witness = printed_matches
                    ? "as-printed sign agrees on this model's battery"
                    : "as-printed sign disagrees; first residual " + wit;
    r.battery = triples.size();
    finish(r, t);
  }

  // degree-1 battery: dx_j and x1 dx_j
  std::vector<PolyForm> forms;
  for (size_t j = 0; j < m_.chart_dim(); ++j) {
    PolyVec comps(m_.chart_dim(), m_.zero_poly());
    comps[j] = m_.poly_const(Rational(1));
    forms.push_back(PolyForm::one_form(m_.vars(), comps));
    comps[j] = x1;
    forms.push_back(PolyForm::one_form(m_.vars(), comps));
  }

  {
    Timer t;
    auto& r = add("l2_mixed_in_image", "[[e, rho* a]] stays in the image of rho*");
    size_t count = 0;
    for (const auto& e : bat_.mains) {
      for (const auto& a : forms) {
        ++count;
        if (!l2_mixed(m_, e, a)) {
          fail_with(r, "mixed bracket left the image");
          break;
        }
      }
      if (r.status != CheckStatus::Pass) break;
    }
    r.battery = count;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("l3_in_image", "script Jacobiator stays in the image of rho*");
    for (const auto& [a, b, c] : triples) {
      if (!l3(m_, *a, *b, *c)) {
        fail_with(r, sec(script_jacobiator(m_, *a, *b, *c)));
        break;
      }
    }
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("linf_chain_rule", "rho*(l2(e, a)) = [[e, rho* a]] and l2(rho* a, b) = l2(a, rho* b)");
    size_t count = 0;
    for (size_t i = 0; i + 1 < forms.size() && r.status == CheckStatus::Pass; i += 2) {
      const PolyForm& alpha = forms[i];
      const PolyForm& beta = forms[i + 1];
      for (const auto& e : bat_.mains) {
        ++count;
        auto mixed = l2_mixed(m_, e, alpha);
        if (!mixed || rho_star(m_, *mixed) != skew_bracket(m_, e, rho_star(m_, alpha))) {
          fail_with(r, "chain compatibility failed");
          break;
        }
      }
      // l2(rho* a, b) = l2(a, rho* b) = -l2(rho* b, a)
      auto lhs = l2_mixed(m_, rho_star(m_, alpha), beta);
      auto rhs = l2_mixed(m_, rho_star(m_, beta), alpha);
      ++count;
      if (!lhs || !rhs || !(*lhs + *rhs).is_zero())
        fail_with(r, "degree-1 chain identity failed");
    }
    r.battery = count;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("linf_jacobi_deg0", "l2(e1,l2(e2,e3)) + cyclic = rho*(l3(e1,e2,e3))");
    for (const auto& [a, b, c] : triples) {
      Section lhs = script_jacobiator(m_, *a, *b, *c);
      auto el3 = l3(m_, *a, *b, *c);
      if (!el3 || rho_star(m_, *el3) != lhs) {
        fail_with(r, sec(lhs));
        break;
      }
    }
    r.battery = triples.size();
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("linf_jacobi_mixed",
                  "l2(e1,l2(e2,a)) - l2(e2,l2(e1,a)) - l2(l2(e1,e2),a) = l3(e1,e2,rho* a)");
    size_t count = 0;
    size_t k = 0;
    for (const auto& [a, b] : pairs) {
      const PolyForm& alpha = forms[k % forms.size()];
      ++k;
      ++count;
      auto l2b = l2_mixed(m_, *b, alpha);
      auto l2a = l2_mixed(m_, *a, alpha);
      if (!l2b || !l2a) {
        fail_with(r, "intermediate left the image");
        break;
      }
      auto term1 = l2_mixed(m_, *a, *l2b);
      auto term2 = l2_mixed(m_, *b, *l2a);
      auto term3 = l2_mixed(m_, skew_bracket(m_, *a, *b), alpha);
      auto rhs = l3(m_, *a, *b, rho_star(m_, alpha));
      if (!term1 || !term2 || !term3 || !rhs) {
        fail_with(r, "intermediate left the image");
        break;
      }
      PolyForm res = *term1 - *term2 - *term3 - *rhs;
      if (!res.is_zero()) {
        fail_with(r, "1-form residual with component " +
                         res.components().begin()->second.str());
        break;
      }
      if (count >= 60) break;
    }
    r.battery = count;
    finish(r, t);
  }
  {
    Timer t;
    auto& r = add("linf_l4_coherence",
                  "sum of l3(l2(.,.),.,.) terms equals sum of l2(.,l3(.,.,.)) terms over 4-tuples");
    // standard convention first; the flipped global sign is tried and recorded
    // if the default fails exactly
    auto run = [&](int sign) -> std::optional<std::string> {
      for (const auto& [w, x, y, z] : quads) {
        auto lhs_term = [&](const Section& a, const Section& b, const Section& c,
                            const Section& d4) { return l3(m_, skew_bracket(m_, a, b), c, d4); };
        auto t1 = lhs_term(*w, *x, *y, *z);
        auto t2 = lhs_term(*w, *y, *x, *z);
        auto t3 = lhs_term(*w, *z, *x, *y);
        auto t4 = lhs_term(*x, *y, *w, *z);
        auto t5 = lhs_term(*x, *z, *w, *y);
        auto t6 = lhs_term(*y, *z, *w, *x);
        auto u1 = l3(m_, *w, *x, *y);
        auto u2 = l3(m_, *w, *x, *z);
        auto u3 = l3(m_, *w, *y, *z);
        auto u4 = l3(m_, *x, *y, *z);
        if (!(t1 && t2 && t3 && t4 && t5 && t6 && u1 && u2 && u3 && u4))
          return std::string("an l3 value left the image of rho*");
        auto m1 = l2_mixed(m_, *z, *u1);
        auto m2 = l2_mixed(m_, *y, *u2);
        auto m3 = l2_mixed(m_, *x, *u3);
        auto m4 = l2_mixed(m_, *w, *u4);
        if (!(m1 && m2 && m3 && m4)) return std::string("a mixed l2 value left the image");
        PolyForm lhs = *t1 - *t2 + *t3 + *t4 - *t5 + *t6;
        // l2(l3(...), e) = -l2(e, l3(...)) for degree-1 first argument
        PolyForm rhs = (-*m1) - (-*m2) + (-*m3) - (-*m4);
        PolyForm res = sign > 0 ? lhs - rhs : lhs + rhs;
        if (!res.is_zero())
          return "1-form residual with component " + res.components().begin()->second.str();
      }
      return std::nullopt;
    };
    auto def = run(+1);
    if (!def) {
      r.witness = "standard sign convention";
    } else {
      auto flipped = run(-1);
      if (!flipped) {
        r.witness = "holds with the globally flipped sign convention";
      } else {
        fail_with(r, *def);
      }
    }
    r.battery = quads.size();
    finish(r, t);
  }
}

}  // namespace

std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "algebra") return Suite::Algebra;
  if (name == "precourant") return Suite::Precourant;
  if (name == "pontryagin") return Suite::Pontryagin;
  if (name == "twisted") return Suite::Twisted;
  if (name == "identities") return Suite::Identities;
  if (name == "lie2") return Suite::Lie2;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra",  "precourant", "pontryagin",
                                              "twisted",  "identities", "lie2",
                                              "all"};
  return names;
}

Report run_suite(const Model& m, Suite suite, const SuiteOptions& opts) {
  Report rep;
  rep.model = m.name();
  rep.seed = opts.seed;
  SuiteRunner runner(m, opts, rep);
  switch (suite) {
    case Suite::Algebra: rep.suite = "algebra"; runner.algebra(); break;
    case Suite::Precourant: rep.suite = "precourant"; runner.precourant(); break;
    case Suite::Pontryagin: rep.suite = "pontryagin"; runner.pontryagin(); break;
    case Suite::Twisted: rep.suite = "twisted"; runner.twisted(); break;
    case Suite::Identities: rep.suite = "identities"; runner.identities(); break;
    case Suite::Lie2: rep.suite = "lie2"; runner.lie2(); break;
    case Suite::All:
      rep.suite = "all";
      runner.algebra();
      runner.precourant();
      runner.pontryagin();
      runner.twisted();
      runner.identities();
      runner.lie2();
      break;
  }
  return rep;
}

std::optional<std::string> emit_h_file(const Model& m, const std::string& path, uint64_t seed) {
  SuiteOptions opts;
  opts.seed = seed;
  Report rep = run_suite(m, Suite::Twisted, opts);
  if (!rep.all_pass()) {
    const CheckResult* f = rep.first_failure();
    return "twisted certification failed at check '" + (f ? f->name : "?") + "'";
  }
  PontryaginTensor p(m, dorfman_fn(m));
  PolyForm h = extract_h(m, p);
  std::ofstream out(path);
  if (!out) return "cannot open output file " + path;
  out << "# twisting 4-form components, model " << m.name() << "\n";
  out << "# H i j k l = polynomial in the chart coordinates\n";
  size_t n = m.chart_dim();
  for (const auto& idx : increasing_tuples(n, 4)) {
    Poly c = h.component({static_cast<unsigned>(idx[0]), static_cast<unsigned>(idx[1]),
                          static_cast<unsigned>(idx[2]), static_cast<unsigned>(idx[3])});
    out << "H " << idx[0] + 1 << " " << idx[1] + 1 << " " << idx[2] + 1 << " " << idx[3] + 1
        << " = " << c.str() << "\n";
  }
  return std::nullopt;
}

}  // namespace tractor
