#include "tractor/liealg.hpp"

#include <sstream>

namespace tractor {

LieAlgebraSpec::LieAlgebraSpec(std::vector<std::string> names, Mat form)
    : names_(std::move(names)), form_(std::move(form)) {
  if (form_.rows() != names_.size() || form_.cols() != names_.size())
    throw structural_error("LieAlgebraSpec: form shape does not match basis");
  table_.assign(dim() * dim() * dim(), Rational(0));
}

void LieAlgebraSpec::add_bracket(size_t i, size_t j, size_t k, const Rational& c) {
  if (i >= dim() || j >= dim() || k >= dim())
    throw structural_error("LieAlgebraSpec: basis index out of range");
  if (i == j) throw structural_error("LieAlgebraSpec: bracket of a basis vector with itself");
  table_[(i * dim() + j) * dim() + k] += c;
  table_[(j * dim() + i) * dim() + k] -= c;
  rebuild_sparse();
}

void LieAlgebraSpec::set_c(size_t i, size_t j, size_t k, const Rational& c) {
  table_[(i * dim() + j) * dim() + k] = c;
  rebuild_sparse();
}

void LieAlgebraSpec::rebuild_sparse() {
  nonzero_.clear();
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j)
      for (size_t k = 0; k < dim(); ++k)
        if (!c(i, j, k).is_zero()) nonzero_.push_back({i, j, k, c(i, j, k)});
}

size_t LieAlgebraSpec::name_index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw structural_error("LieAlgebraSpec: unknown basis name '" + name + "'");
}

RatVec bracket(const LieAlgebraSpec& g, const RatVec& x, const RatVec& y) {
  if (x.size() != g.dim() || y.size() != g.dim())
    throw structural_error("bracket: dimension mismatch");
  RatVec out(g.dim());
  for (const auto& s : g.nonzero()) {
    if (x[s.i].is_zero() || y[s.j].is_zero()) continue;
    out[s.k] += x[s.i] * y[s.j] * s.c;
  }
  return out;
}

std::vector<Poly> bracket(const LieAlgebraSpec& g, const std::vector<Poly>& x,
                          const std::vector<Poly>& y) {
  if (x.size() != g.dim() || y.size() != g.dim())
    throw structural_error("bracket: dimension mismatch");
  std::vector<Poly> out;
  out.reserve(g.dim());
  VarListPtr vars;
  for (const auto& p : x)
    if (p.vars()) vars = p.vars();
  for (size_t k = 0; k < g.dim(); ++k) out.emplace_back(vars);
  for (const auto& s : g.nonzero()) {
    if (x[s.i].is_zero() || y[s.j].is_zero()) continue;
    out[s.k] += (x[s.i] * y[s.j]).scaled(s.c);
  }
  return out;
}

Rational form_pair(const LieAlgebraSpec& g, const RatVec& x, const RatVec& y) {
  Rational acc(0);
  for (size_t i = 0; i < g.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < g.dim(); ++j) {
      if (y[j].is_zero() || g.form().at(i, j).is_zero()) continue;
      acc += x[i] * g.form().at(i, j) * y[j];
    }
  }
  return acc;
}

Poly form_pair(const LieAlgebraSpec& g, const std::vector<Poly>& x,
               const std::vector<Poly>& y) {
  VarListPtr vars;
  for (const auto& p : x)
    if (p.vars()) vars = p.vars();
  if (!vars)
    for (const auto& p : y)
      if (p.vars()) vars = p.vars();
  Poly acc(vars);
  for (size_t i = 0; i < g.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < g.dim(); ++j) {
      if (y[j].is_zero() || g.form().at(i, j).is_zero()) continue;
      acc += (x[i] * y[j]).scaled(g.form().at(i, j));
    }
  }
  return acc;
}

Mat killing_form(const LieAlgebraSpec& g) {
  size_t d = g.dim();
  // ad X_i as a matrix: (ad X_i)_{k a} = c(i, a, k)
  Mat k(d, d);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      Rational tr(0);
      for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) tr += g.c(i, a, b) * g.c(j, b, a);
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  }
  return k;
}

namespace {

std::string triple_name(const LieAlgebraSpec& g, size_t i, size_t j, size_t k) {
  return "(" + g.names()[i] + ", " + g.names()[j] + ", " + g.names()[k] + ")";
}

}  // namespace

std::vector<CheckResult> validate_quadratic(const LieAlgebraSpec& g) {
  std::vector<CheckResult> out;
  size_t d = g.dim();

  {
    CheckResult r{"antisymmetry", "c[i][j][k] = -c[j][i][k]"};
    for (size_t i = 0; i < d && r.status == CheckStatus::Pass; ++i)
      for (size_t j = 0; j < d && r.status == CheckStatus::Pass; ++j)
        for (size_t k = 0; k < d; ++k)
          if (g.c(i, j, k) != -g.c(j, i, k)) {
            r.status = CheckStatus::Fail;
            r.witness = triple_name(g, i, j, k);
            break;
          }
    r.battery = d * d * d;
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0"};
    for (size_t i = 0; i < d && r.status == CheckStatus::Pass; ++i) {
      for (size_t j = i + 1; j < d && r.status == CheckStatus::Pass; ++j) {
        for (size_t k = j + 1; k < d; ++k) {
          RatVec res(d);
          for (size_t m = 0; m < d; ++m)
            for (size_t l = 0; l < d; ++l) {
              res[l] += g.c(i, j, m) * g.c(m, k, l);
              res[l] += g.c(j, k, m) * g.c(m, i, l);
              res[l] += g.c(k, i, m) * g.c(m, j, l);
            }
          for (const auto& x : res)
            if (!x.is_zero()) {
              r.status = CheckStatus::Fail;
              r.witness = triple_name(g, i, j, k);
              break;
            }
          if (r.status == CheckStatus::Fail) break;
        }
      }
    }
    r.battery = d * (d - 1) * (d - 2) / 6;
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"form_symmetric", "B(x,y) = B(y,x)"};
    if (!g.form().is_symmetric()) {
      r.status = CheckStatus::Fail;
      r.witness = "form matrix is not symmetric";
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"form_nondegenerate", "det B != 0"};
    if (g.form().rank() != d) {
      r.status = CheckStatus::Fail;
      r.witness = "rank " + std::to_string(g.form().rank()) + " < " + std::to_string(d);
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"form_ad_invariant", "B([x,y],z) = B(x,[y,z])"};
    for (size_t i = 0; i < d && r.status == CheckStatus::Pass; ++i)
      for (size_t j = 0; j < d && r.status == CheckStatus::Pass; ++j)
        for (size_t k = 0; k < d; ++k) {
          Rational lhs(0), rhs(0);
          for (size_t m = 0; m < d; ++m) {
            lhs += g.c(i, j, m) * g.form().at(m, k);
            rhs += g.c(j, k, m) * g.form().at(i, m);
          }
          if (lhs != rhs) {
            r.status = CheckStatus::Fail;
            r.witness = triple_name(g, i, j, k);
            break;
          }
        }
    r.battery = d * d * d;
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<RatVec> orthogonal_complement(const LieAlgebraSpec& g, const SubalgebraSpec& p) {
  if (p.span.empty()) {
    // everything is orthogonal to the zero subspace
    std::vector<RatVec> full;
    for (size_t i = 0; i < g.dim(); ++i) {
      RatVec e(g.dim());
      e[i] = Rational(1);
      full.push_back(std::move(e));
    }
    return full;
  }
  // rows: x -> B(p_r, x)
  std::vector<RatVec> rows;
  for (const auto& pr : p.span) {
    RatVec row(g.dim());
    for (size_t j = 0; j < g.dim(); ++j) {
      Rational acc(0);
      for (size_t i = 0; i < g.dim(); ++i) acc += pr[i] * g.form().at(i, j);
      row[j] = acc;
    }
    rows.push_back(std::move(row));
  }
  return Mat::from_rows(rows).kernel_basis();
}

bool is_subalgebra(const LieAlgebraSpec& g, const SubalgebraSpec& p) {
  for (size_t a = 0; a < p.span.size(); ++a)
    for (size_t b = a + 1; b < p.span.size(); ++b)
      if (!in_span(p.span, bracket(g, p.span[a], p.span[b]))) return false;
  return true;
}

bool check_coisotropic(const LieAlgebraSpec& g, const SubalgebraSpec& p) {
  return subspace_leq(orthogonal_complement(g, p), p.span);
}

std::vector<CheckResult> validate_grading(const LieAlgebraSpec& g, const SubalgebraSpec& p,
                                          const GradingSpec& gr) {
  std::vector<CheckResult> out;
  size_t d = g.dim();
  if (gr.degree.size() != d) throw structural_error("GradingSpec: degree map arity mismatch");

  {
    CheckResult r{"grading_bracket_compat", "[g_i, g_j] in g_{i+j}"};
    for (size_t i = 0; i < d && r.status == CheckStatus::Pass; ++i)
      for (size_t j = 0; j < d && r.status == CheckStatus::Pass; ++j)
        for (size_t k = 0; k < d; ++k)
          if (!g.c(i, j, k).is_zero() && gr.degree[k] != gr.degree[i] + gr.degree[j]) {
            r.status = CheckStatus::Fail;
            r.witness = triple_name(g, i, j, k);
            break;
          }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"grading_element", "[E, A] = i A for A in g_i"};
    if (!gr.element) {
      r.status = CheckStatus::Skipped;
      r.witness = "no grading element supplied";
    } else {
      for (size_t a = 0; a < d; ++a) {
        RatVec ea(d);
        ea[a] = Rational(1);
        RatVec lhs = bracket(g, *gr.element, ea);
        RatVec rhs(d);
        rhs[a] = Rational(gr.degree[a]);
        if (lhs != rhs) {
          r.status = CheckStatus::Fail;
          r.witness = "basis vector " + g.names()[a];
          break;
        }
      }
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"grading_form_orthogonality", "B(g_i, g_j) = 0 for j != -i"};
    for (size_t i = 0; i < d && r.status == CheckStatus::Pass; ++i)
      for (size_t j = 0; j < d; ++j)
        if (gr.degree[i] + gr.degree[j] != 0 && !g.form().at(i, j).is_zero()) {
          r.status = CheckStatus::Fail;
          r.witness = "(" + g.names()[i] + ", " + g.names()[j] + ")";
          break;
        }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"grading_matches_subalgebra", "p = sum of g_i, i >= 0"};
    std::vector<RatVec> nonneg;
    for (size_t a = 0; a < d; ++a) {
      if (gr.degree[a] < 0) continue;
      RatVec e(d);
      e[a] = Rational(1);
      nonneg.push_back(std::move(e));
    }
    if (!subspace_eq(nonneg, p.span)) {
      r.status = CheckStatus::Fail;
      r.witness = "nonnegative part has dimension " + std::to_string(nonneg.size()) +
                  ", subalgebra has " + std::to_string(p.span.size());
    }
    out.push_back(std::move(r));
  }

  return out;
}

RatVec b_dual(const LieAlgebraSpec& g, const RatVec& functional) {
  // B(s, x) = s^T B x, so solve B^T s = functional; B is symmetric.
  auto s = g.form().solve(functional);
  if (!s) throw structural_error("b_dual: singular form");
  return *s;
}

}  // namespace tractor
