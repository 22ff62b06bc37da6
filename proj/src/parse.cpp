#include "tractor/parse.hpp"

#include <cctype>

namespace tractor {
namespace {

struct Lexer {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  struct Token {
    Kind kind;
    std::string text;
    size_t pos;
  };

  explicit Lexer(const std::string& s) : src(s) { advance(); }

  const Token& peek() const { return tok; }

  Token take() {
    Token t = tok;
    advance();
    return t;
  }

  void advance() {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    tok.pos = i;
    if (i >= src.size()) {
      tok.kind = Kind::End;
      tok.text.clear();
      return;
    }
    char c = src[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '/') {
        size_t k = j + 1;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
        if (k == j + 1) throw parse_error("malformed rational literal", j);
        j = k;
      }
      tok.kind = Kind::Number;
      tok.text = src.substr(i, j - i);
      i = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      tok.kind = Kind::Ident;
      tok.text = src.substr(i, j - i);
      i = j;
      return;
    }
    switch (c) {
      case '+': tok.kind = Kind::Plus; break;
      case '-': tok.kind = Kind::Minus; break;
      case '*': tok.kind = Kind::Star; break;
      case '^': tok.kind = Kind::Caret; break;
      case '(': tok.kind = Kind::LParen; break;
      case ')': tok.kind = Kind::RParen; break;
      default: throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
    tok.text = c;
    ++i;
  }

  const std::string& src;
  size_t i = 0;
  Token tok;
};

class Parser {
public:
  Parser(const std::string& text, const VarListPtr& vars) : lex(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    if (lex.peek().kind != Lexer::Kind::End)
      throw parse_error("unexpected trailing input", lex.peek().pos);
    return p;
  }

private:
  using Kind = Lexer::Kind;

  Poly expr() {
    Poly acc = term();
    while (lex.peek().kind == Kind::Plus || lex.peek().kind == Kind::Minus) {
      bool minus = lex.take().kind == Kind::Minus;
      Poly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (lex.peek().kind == Kind::Star) {
      lex.take();
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    int sign = 1;
    while (lex.peek().kind == Kind::Plus || lex.peek().kind == Kind::Minus) {
      if (lex.take().kind == Kind::Minus) sign = -sign;
    }
    Poly a = atom();
    if (lex.peek().kind == Kind::Caret) {
      size_t cpos = lex.take().pos;
      if (lex.peek().kind != Kind::Number)
        throw parse_error("expected exponent", lex.peek().pos);
      Lexer::Token t = lex.take();
      if (t.text.find('/') != std::string::npos)
        throw parse_error("exponent must be a nonnegative integer", cpos + 1);
      unsigned long n = std::stoul(t.text);
      Poly r = Poly::constant(vars_, Rational(1));
      for (unsigned long k = 0; k < n; ++k) r = r * a;
      a = r;
    }
    return sign < 0 ? -a : a;
  }

  Poly atom() {
    const auto& t = lex.peek();
    switch (t.kind) {
      case Kind::Number: {
        auto tk = lex.take();
        return Poly::constant(vars_, Rational::from_string(tk.text));
      }
      case Kind::Ident: {
        auto tk = lex.take();
        for (size_t i = 0; i < vars_->size(); ++i)
          if ((*vars_)[i] == tk.text) return Poly::variable(vars_, i);
        throw parse_error("unknown variable '" + tk.text + "'", tk.pos);
      }
      case Kind::LParen: {
        lex.take();
        Poly p = expr();
        if (lex.peek().kind != Kind::RParen)
          throw parse_error("expected ')'", lex.peek().pos);
        lex.take();
        return p;
      }
      default:
        throw parse_error("expected operand", t.pos);
    }
  }

  Lexer lex;
  const VarListPtr& vars_;
};

}  // namespace

Poly parse_poly(const std::string& text, const VarListPtr& vars) {
  return Parser(text, vars).parse();
}

std::vector<Poly> parse_gvector(const std::string& text, const VarListPtr& chart_vars,
                                const std::vector<std::string>& basis_names) {
  VarList ext = *chart_vars;
  size_t n = chart_vars->size();
  for (const auto& b : basis_names) ext.push_back(b);
  auto ext_vars = make_vars(std::move(ext));
  Poly p = parse_poly(text, ext_vars);

  std::vector<Poly> out(basis_names.size(), Poly(chart_vars));
  for (const auto& [e, c] : p.terms()) {
    size_t basis_index = basis_names.size();
    unsigned basis_degree = 0;
    for (size_t i = n; i < e.size(); ++i) {
      basis_degree += e[i];
      if (e[i] > 0) basis_index = i - n;
    }
    if (basis_degree != 1)
      throw parse_error(basis_degree == 0
                            ? "scalar term in algebra-valued expression"
                            : "expression is nonlinear in basis names",
                        0);
    Exponents chart_exp(e.begin(), e.begin() + n);
    out[basis_index].add_term(chart_exp, c);
  }
  return out;
}

}  // namespace tractor
