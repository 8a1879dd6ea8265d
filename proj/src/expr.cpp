#include "ccjac/expr.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace ccjac {

namespace {

std::string at(SourcePos p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column);
}

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  SourcePos pos;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourcePos p = pos_;
      if (i_ >= text_.size()) {
        out.push_back({Tok::End, p, ""});
        return out;
      }
      char c = text_[i_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          digits += text_[i_];
          advance();
        }
        out.push_back({Tok::Int, p, digits});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string ident;
        while (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_]))) {
          ident += text_[i_];
          advance();
        }
        if (ident.size() != 1) {
          throw Error(Errc::SyntaxError,
                      "SyntaxError at " + at(p) + ": identifier '" + ident +
                          "' (variables are single letters; write products with '*')");
        }
        out.push_back({Tok::Ident, p, ident});
        continue;
      }
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
          throw Error(Errc::SyntaxError,
                      "SyntaxError at " + at(p) + ": unexpected character '" + c + "'");
      }
      advance();
      out.push_back({k, p, std::string(1, c)});
    }
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance();
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, ExprContext ctx, Domain domain)
      : toks_(std::move(toks)), ctx_(ctx), domain_(domain) {}

  ExprAst run() {
    ExprAst e = expr();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& take() { return toks_[k_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw Error(Errc::SyntaxError, "SyntaxError at " + at(t.pos) + ": " +
                                       (t.kind == Tok::End ? "unexpected end of input; " : "") +
                                       what);
  }

  static ExprAst node(ExprAst::Kind kind, SourcePos pos, std::vector<ExprAst> children) {
    ExprAst a;
    a.kind = kind;
    a.pos = pos;
    a.children = std::move(children);
    return a;
  }

  ExprAst expr() {
    ExprAst left = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      ExprAst right = term();
      auto kind = op.kind == Tok::Plus ? ExprAst::Kind::Sum : ExprAst::Kind::Difference;
      left = node(kind, op.pos, {std::move(left), std::move(right)});
    }
    return left;
  }

  ExprAst term() {
    ExprAst left = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = take();
      ExprAst right = unary();
      if (op.kind == Tok::Slash && left.kind == ExprAst::Kind::Literal &&
          right.kind == ExprAst::Kind::Literal && left.value.get_den() == 1) {
        if (right.value == 0) fail(op, "division by zero");
        left.value /= right.value;
        continue;
      }
      auto kind = op.kind == Tok::Star ? ExprAst::Kind::Product : ExprAst::Kind::Quotient;
      left = node(kind, op.pos, {std::move(left), std::move(right)});
    }
    return left;
  }

  ExprAst unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = take();
      return node(ExprAst::Kind::Negation, op.pos, {unary()});
    }
    return power();
  }

  ExprAst power() {
    ExprAst base = primary();
    if (peek().kind != Tok::Caret) return base;
    const Token& op = take();
    if (peek().kind == Tok::Minus) {
      throw Error(Errc::ExponentNegative,
                  "ExponentNegative at " + at(peek().pos) + ": exponents must be non-negative");
    }
    if (peek().kind != Tok::Int) fail(peek(), "expected an integer exponent");
    const Token& e = take();
    if (e.text.size() > 6) fail(e, "exponent too large");
    ExprAst p = node(ExprAst::Kind::Power, op.pos, {std::move(base)});
    p.exponent = static_cast<unsigned>(std::stoul(e.text));
    if (peek().kind == Tok::Caret) fail(peek(), "chained '^' needs parentheses");
    return p;
  }

  ExprAst primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        take();
        ExprAst a;
        a.kind = ExprAst::Kind::Literal;
        a.pos = t.pos;
        a.value = Rational(Integer(t.text));
        return a;
      }
      case Tok::Ident: {
        take();
        check_variable(t);
        ExprAst a;
        a.kind = ExprAst::Kind::Variable;
        a.pos = t.pos;
        a.variable = t.text[0];
        return a;
      }
      case Tok::LParen: {
        take();
        ExprAst inner = expr();
        if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
        take();
        return node(ExprAst::Kind::Group, t.pos, {std::move(inner)});
      }
      default: fail(t, "expected a number, a variable or '('");
    }
  }

  void check_variable(const Token& t) const {
    const char v = t.text[0];
    if (v == 'a' || v == 'b') {
      if (!domain_.has_parameters()) {
        throw Error(Errc::VariableNotAllowed,
                    "VariableNotAllowed at " + at(t.pos) + ": parameter '" + t.text +
                        "' needs domain d0 or frac-d0");
      }
      return;
    }
    bool ok = false;
    const char* what = "";
    switch (ctx_) {
      case ExprContext::Commutative: ok = v == 'x' || v == 'y'; what = "x, y"; break;
      case ExprContext::Weyl: ok = v == 'X' || v == 'Y'; what = "X, Y"; break;
      case ExprContext::Univariate: ok = v == 't'; what = "t"; break;
    }
    if (!ok) {
      throw Error(Errc::VariableNotAllowed, "VariableNotAllowed at " + at(t.pos) +
                                                ": variable '" + t.text +
                                                "' not allowed here (expected " + what + ")");
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  ExprContext ctx_;
  Domain domain_;
};

// ---------------------------------------------------------------- lowering

Scalar param(char v) {
  return Scalar(ParamFraction(v == 'a' ? ParamPoly::a() : ParamPoly::b()));
}

template <class Value>
struct Ops;

template <>
struct Ops<BiPoly> {
  static BiPoly constant(const Scalar& c) { return BiPoly::constant(c); }
  static BiPoly variable(Domain d, char v) {
    return (v == 'y') ? BiPoly::y(d) : BiPoly::x(d);  // 't' lowers to x
  }
  static bool is_constant(const BiPoly& p) { return p.is_constant(); }
  static Scalar constant_of(const BiPoly& p) { return eval_at_origin(p); }
};

template <>
struct Ops<WeylElement> {
  static WeylElement constant(const Scalar& c) { return WeylElement::constant(c); }
  static WeylElement variable(Domain d, char v) {
    return v == 'Y' ? WeylElement::Y(d) : WeylElement::X(d);
  }
  static bool is_constant(const WeylElement& p) { return p.is_constant(); }
  static Scalar constant_of(const WeylElement& p) { return p.coeff(0, 0); }
};

template <class Value>
Value evaluate(const ExprAst& a, Domain ambient) {
  using O = Ops<Value>;
  using K = ExprAst::Kind;
  switch (a.kind) {
    case K::Literal: return O::constant(Scalar::from_rational(ambient, a.value));
    case K::Variable:
      if (a.variable == 'a' || a.variable == 'b') {
        return O::constant(param(a.variable));
      }
      return O::variable(ambient, a.variable);
    case K::Group: return evaluate<Value>(a.children[0], ambient);
    case K::Negation: return -evaluate<Value>(a.children[0], ambient);
    case K::Sum:
      return evaluate<Value>(a.children[0], ambient) + evaluate<Value>(a.children[1], ambient);
    case K::Difference:
      return evaluate<Value>(a.children[0], ambient) - evaluate<Value>(a.children[1], ambient);
    case K::Product:
      return evaluate<Value>(a.children[0], ambient) * evaluate<Value>(a.children[1], ambient);
    case K::Quotient: {
      Value num = evaluate<Value>(a.children[0], ambient);
      Value den = evaluate<Value>(a.children[1], ambient);
      if (!O::is_constant(den)) {
        throw Error(Errc::SyntaxError,
                    "SyntaxError at " + at(a.pos) + ": division by a non-constant expression");
      }
      if (den.is_zero()) {
        throw Error(Errc::DivisionNotExact, "division by zero at " + at(a.pos));
      }
      return num.scaled(divide_exact(Scalar::one(ambient), O::constant_of(den)));
    }
    case K::Power: return evaluate<Value>(a.children[0], ambient).pow(a.exponent);
  }
  return O::constant(Scalar::zero(ambient));
}

Scalar to_target(const Scalar& c, Domain target) {
  if (c.domain() == target) return c;
  auto v = fraction_in_domain(c);
  if (!v || v->domain() != target) {
    throw Error(Errc::CoefficientNotInDomain,
                "CoefficientNotInDomain: " + c.to_string() + " is not in " +
                    std::string(target.tag()));
  }
  return *v;
}

TermMap restrict_to(const TermMap& t, Domain target) {
  TermMap out(target);
  for (const auto& [m, c] : t.terms()) {
    out.add_term(m, to_target(c, target));
  }
  return out;
}

}  // namespace

ExprAst parse(std::string_view text, ExprContext context, Domain domain) {
  return Parser(Lexer(text).run(), context, domain).run();
}

BiPoly lower_commutative(const ExprAst& ast, Domain domain) {
  const Domain ambient = domain.fraction_field();
  return BiPoly(restrict_to(evaluate<BiPoly>(ast, ambient).term_map(), domain));
}

WeylElement lower_weyl(const ExprAst& ast, Domain domain) {
  const Domain ambient = domain.fraction_field();
  return WeylElement(restrict_to(evaluate<WeylElement>(ast, ambient).term_map(), domain));
}

UniPoly lower_univariate(const ExprAst& ast, Domain domain) {
  BiPoly p = lower_commutative(ast, domain);
  std::vector<Scalar> cs;
  for (const auto& [m, c] : p.terms()) {
    if (cs.size() <= m.first) cs.resize(m.first + 1, Scalar::zero(domain));
    cs[m.first] = c;
  }
  return UniPoly(domain, std::move(cs));
}

BiPoly parse_bipoly(std::string_view text, Domain domain) {
  return lower_commutative(parse(text, ExprContext::Commutative, domain), domain);
}

WeylElement parse_weyl(std::string_view text, Domain domain) {
  return lower_weyl(parse(text, ExprContext::Weyl, domain), domain);
}

UniPoly parse_unipoly(std::string_view text, Domain domain) {
  return lower_univariate(parse(text, ExprContext::Univariate, domain), domain);
}

Scalar parse_scalar(std::string_view text, Domain domain) {
  BiPoly p = parse_bipoly(text, domain);
  if (!p.is_constant()) {
    throw Error(Errc::SyntaxError, "expected a constant, got " + p.to_string());
  }
  return eval_at_origin(p);
}

}  // namespace ccjac
