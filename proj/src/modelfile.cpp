#include "tractor/modelfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tractor/parse.hpp"

namespace tractor {
namespace {

struct Line {
  size_t number;
  std::string text;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

struct RawSpec {
  std::string name = "unnamed";
  std::string description;
  std::vector<std::string> basis;
  // bracket lines (i name, j name, k name, value), form lines (i, j, value)
  std::vector<std::array<std::string, 4>> brackets;
  std::vector<std::array<std::string, 3>> forms;
  std::vector<std::string> sub_span_names;
  std::vector<std::string> sub_columns;
  std::map<std::string, int> grading_degrees;
  std::optional<std::string> grading_element;
  bool has_grading = false;
  std::vector<std::string> coords;
  std::vector<std::string> trans_span_names;
  std::vector<std::string> trans_columns;
  std::map<size_t, std::string> gauge_exprs;       // 1-based index -> expr
  std::map<std::pair<size_t, size_t>, std::string> kappa_exprs;  // (i,j), i<j
  bool has_curvature = false;
};

class Loader {
public:
  LoadResult run(const std::string& text, const std::string& origin) {
    origin_ = origin;
    parse_lines(text);
    if (!errors_.empty()) return finish();
    build();
    return finish();
  }

private:
  void fail(size_t line, const std::string& msg) {
    errors_.push_back(origin_ + ":" + std::to_string(line) + ": " + msg);
  }
  void fail(const std::string& msg) { errors_.push_back(origin_ + ": " + msg); }

  LoadResult finish() {
    LoadResult r;
    r.name = spec_.name;
    r.description = spec_.description;
    r.errors = errors_;
    if (errors_.empty() && model_) r.model = std::move(model_);
    return r;
  }

  void parse_lines(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    std::string section;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = raw;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') {
          fail(lineno, "malformed section header");
          continue;
        }
        section = line.substr(1, line.size() - 2);
        if (section == "grading") spec_.has_grading = true;
        if (section == "curvature") spec_.has_curvature = true;
        continue;
      }
      parse_line(section, line, lineno);
    }
  }

  void parse_line(const std::string& section, const std::string& line, size_t n) {
    auto toks = split_ws(line);
    if (section.empty()) {
      if (toks[0] == "name" && toks.size() >= 2) {
        spec_.name = trim(line.substr(4));
      } else if (toks[0] == "description") {
        spec_.description = toks.size() >= 2 ? trim(line.substr(11)) : "";
      } else {
        fail(n, "expected 'name', 'description' or a [section] header");
      }
      return;
    }
    if (section == "algebra") {
      if (toks[0] == "basis") {
        spec_.basis.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "bracket" && toks.size() == 5) {
        spec_.brackets.push_back({toks[1], toks[2], toks[3], toks[4]});
      } else if (toks[0] == "form" && toks.size() == 4) {
        spec_.forms.push_back({toks[1], toks[2], toks[3]});
      } else {
        fail(n, "algebra section expects 'basis', 'bracket i j k value' or 'form i j value'");
      }
      return;
    }
    if (section == "subalgebra" || section == "transversal") {
      auto& span_names = section == "subalgebra" ? spec_.sub_span_names : spec_.trans_span_names;
      auto& columns = section == "subalgebra" ? spec_.sub_columns : spec_.trans_columns;
      if (toks[0] == "span") {
        span_names.insert(span_names.end(), toks.begin() + 1, toks.end());
      } else if (toks[0] == "column") {
        columns.push_back(trim(line.substr(6)));
      } else {
        fail(n, section + " section expects 'span names...' or 'column expr'");
      }
      return;
    }
    if (section == "grading") {
      if (toks[0] == "degree" && toks.size() == 3) {
        try {
          spec_.grading_degrees[toks[1]] = std::stoi(toks[2]);
        } catch (...) {
          fail(n, "bad grading degree '" + toks[2] + "'");
        }
      } else if (toks[0] == "element") {
        spec_.grading_element = trim(line.substr(7));
      } else {
        fail(n, "grading section expects 'degree name int' or 'element expr'");
      }
      return;
    }
    if (section == "chart") {
      if (toks[0] == "coords") {
        spec_.coords.assign(toks.begin() + 1, toks.end());
      } else {
        fail(n, "chart section expects 'coords x1 x2 ...'");
      }
      return;
    }
    if (section == "gauge") {
      size_t eq = line.find('=');
      if (toks[0].size() < 2 || toks[0][0] != 'A' || eq == std::string::npos) {
        fail(n, "gauge section expects 'A<i> = expr'");
        return;
      }
      size_t idx = 0;
      try {
        idx = std::stoul(toks[0].substr(1));
      } catch (...) {
        fail(n, "bad gauge index in '" + toks[0] + "'");
        return;
      }
      if (spec_.gauge_exprs.count(idx)) {
        fail(n, "duplicate gauge component A" + std::to_string(idx));
        return;
      }
      spec_.gauge_exprs[idx] = trim(line.substr(eq + 1));
      return;
    }
    if (section == "curvature") {
      size_t eq = line.find('=');
      if (toks[0] != "kappa" || toks.size() < 4 || eq == std::string::npos) {
        fail(n, "curvature section expects 'kappa i j = expr'");
        return;
      }
      size_t i = 0, j = 0;
      try {
        i = std::stoul(toks[1]);
        j = std::stoul(toks[2]);
      } catch (...) {
        fail(n, "bad curvature indices");
        return;
      }
      if (i == 0 || j == 0 || i >= j) {
        fail(n, "curvature indices must satisfy 1 <= i < j");
        return;
      }
      spec_.kappa_exprs[{i, j}] = trim(line.substr(eq + 1));
      return;
    }
    fail(n, "unknown section '" + section + "'");
  }

  size_t basis_index(const std::string& name) {
    for (size_t i = 0; i < spec_.basis.size(); ++i)
      if (spec_.basis[i] == name) return i;
    throw structural_error("unknown basis name '" + name + "'");
  }

  RatVec constant_column(const std::string& expr, const VarListPtr& vars) {
    std::vector<Poly> comps = parse_gvector(expr, vars, spec_.basis);
    RatVec v(spec_.basis.size());
    for (size_t a = 0; a < comps.size(); ++a) {
      if (!comps[a].is_constant())
        throw structural_error("column expression must be constant: '" + expr + "'");
      v[a] = comps[a].constant_term();
    }
    return v;
  }

  void build() {
    if (spec_.basis.empty()) {
      fail("no basis declared in [algebra]");
      return;
    }
    if (spec_.coords.empty()) {
      fail("no coordinates declared in [chart]");
      return;
    }
    size_t d = spec_.basis.size();
    VarListPtr vars = make_vars(spec_.coords);

    Mat form(d, d);
    LieAlgebraSpec alg;
    try {
      for (const auto& [si, sj, sv] : [&] {
        std::vector<std::tuple<std::string, std::string, std::string>> fs;
        for (const auto& f : spec_.forms) fs.emplace_back(f[0], f[1], f[2]);
        return fs;
      }()) {
        size_t i = basis_index(si), j = basis_index(sj);
        Rational v = Rational::from_string(sv);
        form.at(i, j) = v;
        form.at(j, i) = v;
      }
      alg = LieAlgebraSpec(spec_.basis, form);
      for (const auto& b : spec_.brackets) {
        size_t i = basis_index(b[0]), j = basis_index(b[1]), k = basis_index(b[2]);
        alg.add_bracket(i, j, k, Rational::from_string(b[3]));
      }
    } catch (const std::exception& ex) {
      fail(std::string("algebra: ") + ex.what());
      return;
    }

    // quadratic Lie algebra validation
    for (const auto& c : validate_quadratic(alg)) {
      if (c.status == CheckStatus::Fail)
        fail("algebra check '" + c.name + "' failed, witness " + c.witness);
    }
    if (!errors_.empty()) return;

    SubalgebraSpec sub;
    std::vector<RatVec> transversal;
    try {
      for (const auto& nm : spec_.sub_span_names) {
        RatVec e(d);
        e[basis_index(nm)] = Rational(1);
        sub.span.push_back(std::move(e));
      }
      for (const auto& expr : spec_.sub_columns) sub.span.push_back(constant_column(expr, vars));
      for (const auto& nm : spec_.trans_span_names) {
        RatVec e(d);
        e[basis_index(nm)] = Rational(1);
        transversal.push_back(std::move(e));
      }
      for (const auto& expr : spec_.trans_columns)
        transversal.push_back(constant_column(expr, vars));
    } catch (const std::exception& ex) {
      fail(std::string("subspace data: ") + ex.what());
      return;
    }
    if (sub.span.empty()) {
      fail("no subalgebra given");
      return;
    }
    if (Mat::from_columns(sub.span).rank() != sub.span.size()) {
      fail("subalgebra span is linearly dependent");
      return;
    }
    if (!is_subalgebra(alg, sub)) {
      fail("subalgebra is not closed under the bracket");
      return;
    }
    if (!check_coisotropic(alg, sub)) {
      fail("subalgebra is not coisotropic");
      return;
    }

    std::optional<GradingSpec> grading;
    if (spec_.has_grading) {
      GradingSpec gr;
      gr.degree.assign(d, 0);
      try {
        for (const auto& [nm, deg] : spec_.grading_degrees) gr.degree[basis_index(nm)] = deg;
        if (spec_.grading_element) gr.element = constant_column(*spec_.grading_element, vars);
      } catch (const std::exception& ex) {
        fail(std::string("grading: ") + ex.what());
        return;
      }
      for (const auto& c : validate_grading(alg, sub, gr)) {
        if (c.status == CheckStatus::Fail)
          fail("grading check '" + c.name + "' failed, witness " + c.witness);
      }
      if (!errors_.empty()) return;
      grading = std::move(gr);
    }

    size_t n = spec_.coords.size();
    std::vector<Section> gauge;
    try {
      for (size_t i = 1; i <= n; ++i) {
        auto it = spec_.gauge_exprs.find(i);
        if (it == spec_.gauge_exprs.end())
          throw structural_error("missing gauge component A" + std::to_string(i));
        gauge.emplace_back(parse_gvector(it->second, vars, spec_.basis));
      }
      for (const auto& [idx, expr] : spec_.gauge_exprs)
        if (idx == 0 || idx > n)
          throw structural_error("gauge component A" + std::to_string(idx) +
                                 " out of chart range");
    } catch (const std::exception& ex) {
      fail(std::string("gauge: ") + ex.what());
      return;
    }

    std::optional<std::vector<Section>> synthetic;
    if (spec_.has_curvature) {
      std::vector<Section> kap;
      try {
        for (size_t i = 1; i <= n; ++i)
          for (size_t j = i + 1; j <= n; ++j) {
            auto it = spec_.kappa_exprs.find({i, j});
            if (it == spec_.kappa_exprs.end()) {
              Section z;
              z.comp.assign(d, Poly(vars));
              kap.push_back(std::move(z));
            } else {
              kap.emplace_back(parse_gvector(it->second, vars, spec_.basis));
            }
          }
        for (const auto& [ij, expr] : spec_.kappa_exprs)
          if (ij.second > n)
            throw structural_error("curvature index out of chart range");
      } catch (const std::exception& ex) {
        fail(std::string("curvature: ") + ex.what());
        return;
      }
      synthetic = std::move(kap);
    }

    try {
      model_.emplace(spec_.name, std::move(alg), std::move(sub), std::move(grading),
                     spec_.coords, std::move(transversal), std::move(gauge),
                     std::move(synthetic));
    } catch (const std::exception& ex) {
      fail(ex.what());
      return;
    }

    if (model_->mode() == CurvatureMode::Synthetic) {
      for (const auto& r : bianchi_residuals(*model_)) {
        if (!r.value.is_zero()) {
          fail("synthetic curvature violates the Bianchi identity at (" +
               std::to_string(r.i + 1) + "," + std::to_string(r.j + 1) + "," +
               std::to_string(r.k + 1) + "): " + model_->section_str(r.value));
          model_.reset();
          return;
        }
      }
    }
  }

  std::string origin_;
  RawSpec spec_;
  std::vector<std::string> errors_;
  std::optional<Model> model_;
};

}  // namespace

LoadResult load_model_text(const std::string& text, const std::string& origin) {
  return Loader().run(text, origin);
}

LoadResult load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    LoadResult r;
    r.errors.push_back(path + ": cannot open file");
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model_text(buf.str(), path);
}

}  // namespace tractor
