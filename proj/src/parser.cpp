#include "resmith/parser.hpp"

#include <cctype>

#include "resmith/error.hpp"

namespace resmith {

namespace {

class Parser {
 public:
  Parser(std::string_view text, char vx, char vy) : text_(text), vx_(vx), vy_(vy) {}

  std::unique_ptr<ExprAst> run() {
    skip_space();
    if (at_end()) fail("empty expression");
    auto e = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_ + 1), pos_ + 1);
  }

  static std::unique_ptr<ExprAst> node(ExprAst::Kind kind, std::size_t at) {
    auto n = std::make_unique<ExprAst>();
    n->kind = kind;
    n->position = at;
    return n;
  }

  std::unique_ptr<ExprAst> expr() {
    auto left = term();
    while (true) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return left;
      auto n = node(c == '+' ? ExprAst::Kind::Add : ExprAst::Kind::Sub, pos_ + 1);
      ++pos_;
      n->children.push_back(std::move(left));
      n->children.push_back(term());
      left = std::move(n);
    }
  }

  std::unique_ptr<ExprAst> term() {
    auto left = factor();
    while (true) {
      skip_space();
      if (peek() != '*') return left;
      auto n = node(ExprAst::Kind::Mul, pos_ + 1);
      ++pos_;
      n->children.push_back(std::move(left));
      n->children.push_back(factor());
      left = std::move(n);
    }
  }

  std::unique_ptr<ExprAst> factor() {
    skip_space();
    if (peek() == '-') {
      auto n = node(ExprAst::Kind::Neg, pos_ + 1);
      ++pos_;
      n->children.push_back(factor());
      return n;
    }
    auto b = base();
    skip_space();
    if (peek() != '^') return b;
    auto n = node(ExprAst::Kind::Pow, pos_ + 1);
    ++pos_;
    skip_space();
    if (peek() == '-') {
      throw Error(ErrorCode::NegativeExponent, "negative exponent at offset " + std::to_string(pos_ + 1),
                  pos_ + 1);
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    mpz_class e(digits());
    if (e > 1000000) fail("exponent too large");
    n->exponent = static_cast<unsigned>(e.get_ui());
    n->children.push_back(std::move(b));
    return n;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::unique_ptr<ExprAst> base() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      auto e = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = node(ExprAst::Kind::Literal, pos_ + 1);
      mpz_class num(digits());
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      n->literal = mpq_class(num, den);
      n->literal.canonicalize();
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(') {
        fail("implicit multiplication is not supported");
      }
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name.size() != 1 || (name[0] != vx_ && name[0] != vy_)) {
        throw Error(ErrorCode::UnknownVariable,
                    "unknown variable '" + std::string(name) + "' at offset " + std::to_string(start + 1),
                    start + 1);
      }
      auto n = node(ExprAst::Kind::Variable, start + 1);
      n->variable = name[0];
      return n;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  char vx_, vy_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<ExprAst> parse_expr(std::string_view text, char var_x, char var_y) {
  return Parser(text, var_x, var_y).run();
}

BiPoly expand(const ExprAst& ast, const Field& field, char var_x, char var_y) {
  using K = ExprAst::Kind;
  switch (ast.kind) {
    case K::Literal: {
      try {
        return BiPoly::constant(field.from_fraction(ast.literal.get_num(), ast.literal.get_den()));
      } catch (const Error& e) {
        throw Error(ErrorCode::LiteralNotInField,
                    ast.literal.get_str() + " is not in " + field.name() + " at offset " +
                        std::to_string(ast.position),
                    ast.position);
      }
    }
    case K::Variable:
      return ast.variable == var_x ? BiPoly::x(field) : BiPoly::y(field);
    case K::Add:
      return expand(*ast.children[0], field, var_x, var_y) + expand(*ast.children[1], field, var_x, var_y);
    case K::Sub:
      return expand(*ast.children[0], field, var_x, var_y) - expand(*ast.children[1], field, var_x, var_y);
    case K::Mul:
      return expand(*ast.children[0], field, var_x, var_y) * expand(*ast.children[1], field, var_x, var_y);
    case K::Neg:
      return -expand(*ast.children[0], field, var_x, var_y);
    case K::Pow:
      return expand(*ast.children[0], field, var_x, var_y).pow(ast.exponent);
  }
  return BiPoly(field);
}

BiPoly parse_poly(std::string_view text, const Field& field) {
  auto ast = parse_expr(text);
  return expand(*ast, field);
}

}  // namespace resmith
