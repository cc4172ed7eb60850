#include "pushkit/expr.hpp"

#include <cctype>
#include <optional>

#include "pushkit/error.hpp"

namespace pushkit {

namespace {

constexpr unsigned max_depth = 200;

ExprNode make_node(ExprNode::Kind kind, std::size_t offset) {
  ExprNode node;
  node.kind = kind;
  node.offset = offset;
  return node;
}

struct Token {
  enum class Kind { end, number, variable, inv, plus, minus, star, slash, caret, lparen, rparen };
  Kind kind;
  std::size_t offset;
  std::string text; // digits for numbers, name for variables
};

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto digits_from = [&](std::size_t start) {
    std::size_t end = start;
    while (end < text.size() && is_digit(text[end]))
      ++end;
    return end;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      ++i;
      continue;
    }
    using K = Token::Kind;
    if (is_digit(ch)) {
      const auto end = digits_from(i);
      tokens.push_back({K::number, i, std::string(text.substr(i, end - i))});
      i = end;
      continue;
    }
    if (ch == 'x' || ch == 'y') {
      tokens.push_back({K::variable, i, std::string(1, ch)});
      ++i;
      continue;
    }
    if (ch == 'c' || ch == 'q' || ch == 'u') {
      const auto end = digits_from(i + 1);
      if (end == i + 1)
        throw ParseError(i, std::string("generator '") + ch + "' needs a numeric subscript");
      tokens.push_back({K::variable, i, std::string(text.substr(i, end - i))});
      i = end;
      continue;
    }
    if (text.substr(i, 3) == "inv") {
      tokens.push_back({K::inv, i, "inv"});
      i += 3;
      continue;
    }
    K kind;
    switch (ch) {
    case '+': kind = K::plus; break;
    case '-': kind = K::minus; break;
    case '*': kind = K::star; break;
    case '/': kind = K::slash; break;
    case '^': kind = K::caret; break;
    case '(': kind = K::lparen; break;
    case ')': kind = K::rparen; break;
    default: {
      const auto byte = static_cast<unsigned char>(ch);
      std::string shown = std::isprint(byte) ? std::string("'") + ch + "'" : "byte " + std::to_string(byte);
      throw ParseError(i, "unexpected character " + shown);
    }
    }
    tokens.push_back({kind, i, std::string(1, ch)});
    ++i;
  }
  tokens.push_back({Token::Kind::end, text.size(), ""});
  return tokens;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, unsigned rank) : tokens_(std::move(tokens)), rank_(rank) {}

  ExprNode parse() {
    auto root = expr();
    if (peek().kind != Token::Kind::end)
      throw ParseError(peek().offset, "unexpected '" + peek().text + "' after complete expression");
    return root;
  }

private:
  using K = Token::Kind;

  const Token &peek() const { return tokens_[pos_]; }
  const Token &take() { return tokens_[pos_++]; }

  void expect(K kind, const char *what) {
    if (peek().kind != kind)
      throw ParseError(peek().offset, std::string("expected ") + what + describe_found());
    ++pos_;
  }

  std::string describe_found() const {
    return peek().kind == K::end ? ", found end of input" : ", found '" + peek().text + "'";
  }

  struct DepthGuard {
    DepthGuard(unsigned &depth, std::size_t offset) : depth_(depth) {
      if (++depth_ > max_depth)
        throw ParseError(offset, "expression nested too deeply");
    }
    ~DepthGuard() { --depth_; }
    unsigned &depth_;
  };

  static ExprNode binary(ExprNode::Kind kind, ExprNode lhs, ExprNode rhs) {
    auto node = make_node(kind, lhs.offset);
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  ExprNode expr() {
    DepthGuard guard(depth_, peek().offset);
    auto lhs = term();
    while (peek().kind == K::plus || peek().kind == K::minus) {
      const auto kind = take().kind == K::plus ? ExprNode::Kind::add : ExprNode::Kind::sub;
      lhs = binary(kind, std::move(lhs), term());
    }
    return lhs;
  }

  static bool starts_factor(K kind) {
    return kind == K::number || kind == K::variable || kind == K::lparen || kind == K::inv;
  }

  ExprNode term() {
    auto lhs = factor();
    for (;;) {
      if (peek().kind == K::star) {
        ++pos_;
        lhs = binary(ExprNode::Kind::mul, std::move(lhs), factor());
      } else if (starts_factor(peek().kind)) {
        lhs = binary(ExprNode::Kind::mul, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  ExprNode factor() {
    DepthGuard guard(depth_, peek().offset);
    auto b = base();
    if (peek().kind != K::caret)
      return b;
    ++pos_;
    const auto &tok = peek();
    if (tok.kind == K::minus)
      throw ExponentError(tok.offset, "negative exponents are not allowed");
    if (tok.kind != K::number)
      throw ExponentError(tok.offset, "exponent must be a non-negative integer literal" + describe_found());
    ++pos_;
    if (peek().kind == K::slash)
      throw ExponentError(peek().offset, "exponent must be an integer, not a fraction");
    if (tok.text.size() > 6 || std::stoul(tok.text) > max_exponent)
      throw ExponentError(tok.offset, "exponent exceeds " + std::to_string(max_exponent));
    auto node = make_node(ExprNode::Kind::pow, b.offset);
    node.exponent = static_cast<unsigned>(std::stoul(tok.text));
    node.children.push_back(std::move(b));
    return node;
  }

  ExprNode base() {
    const auto &tok = peek();
    switch (tok.kind) {
    case K::number: {
      ++pos_;
      auto node = make_node(ExprNode::Kind::number, tok.offset);
      mpz_class numerator(tok.text, 10);
      if (peek().kind == K::slash) {
        ++pos_;
        const auto &den = peek();
        if (den.kind != K::number)
          throw ParseError(den.offset, "expected denominator after '/'" + describe_found());
        ++pos_;
        mpz_class denominator(den.text, 10);
        if (denominator == 0)
          throw ParseError(den.offset, "zero denominator");
        node.value = Rational(numerator, denominator);
        node.value.canonicalize();
      } else {
        node.value = Rational(numerator);
      }
      return node;
    }
    case K::variable: {
      ++pos_;
      check_subscript(tok);
      auto node = make_node(ExprNode::Kind::variable, tok.offset);
      node.name = tok.text;
      return node;
    }
    case K::lparen: {
      ++pos_;
      auto inner = expr();
      expect(K::rparen, "')'");
      return inner;
    }
    case K::minus: {
      ++pos_;
      auto node = make_node(ExprNode::Kind::neg, tok.offset);
      node.children.push_back(factor());
      return node;
    }
    case K::inv: {
      ++pos_;
      expect(K::lparen, "'(' after inv");
      auto node = make_node(ExprNode::Kind::inv, tok.offset);
      node.children.push_back(expr());
      expect(K::rparen, "')'");
      return node;
    }
    default:
      throw ParseError(tok.offset, "expected a number, generator, '(' or inv(...)" + describe_found());
    }
  }

  void check_subscript(const Token &tok) const {
    if (tok.text.size() == 1)
      return; // x or y
    const char prefix = tok.text[0];
    const std::string digits = tok.text.substr(1);
    const unsigned limit = prefix == 'q' ? rank_ - 1 : rank_;
    const bool leading_zero = digits.size() > 1 && digits[0] == '0';
    if (leading_zero || digits.size() > 6 || std::stoul(digits) < 1 || std::stoul(digits) > limit) {
      const std::string range =
          limit == 0 ? "none at this rank" : std::string(1, prefix) + "1.." + prefix + std::to_string(limit);
      throw ParseArityError(tok.offset, "generator " + tok.text + " is out of range at rank " +
                                            std::to_string(rank_) + " (allowed: " + range + ")");
    }
  }

  std::vector<Token> tokens_;
  unsigned rank_;
  std::size_t pos_ = 0;
  unsigned depth_ = 0;
};

} // namespace

ExprAst parse_expression(std::string_view text, unsigned r) {
  if (r < 1)
    throw ParseError(0, "rank must be at least 1");
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw ParseError(0, "empty expression");
  return Parser(lex(text), r).parse();
}

Polynomial evaluate(const ExprAst &ast, unsigned r, Cutoff cutoff) {
  const auto &table = BundleVariables::of_rank(r).table();
  auto mul = [&](const Polynomial &a, const Polynomial &b) { return cutoff ? truncated_mul(a, b, *cutoff) : a * b; };
  auto cut = [&](Polynomial p) { return cutoff ? truncate(p, *cutoff) : p; };
  auto rec = [&](auto &&self, const ExprNode &node) -> Polynomial {
    using Kind = ExprNode::Kind;
    switch (node.kind) {
    case Kind::number:
      return cut(Polynomial::constant(table, node.value));
    case Kind::variable: {
      auto var = table->find(node.name);
      if (!var)
        throw ArityError("generator " + node.name + " does not exist at rank " + std::to_string(r));
      return cut(Polynomial::variable(table, *var));
    }
    case Kind::add:
      return self(self, node.children[0]) + self(self, node.children[1]);
    case Kind::sub:
      return self(self, node.children[0]) - self(self, node.children[1]);
    case Kind::mul:
      return mul(self(self, node.children[0]), self(self, node.children[1]));
    case Kind::neg:
      return -self(self, node.children[0]);
    case Kind::pow:
      return truncated_pow(self(self, node.children[0]), node.exponent, cutoff);
    case Kind::inv: {
      if (!cutoff)
        throw NotInvertibleError("inv(...) needs a truncation degree");
      auto arg = self(self, node.children[0]);
      try {
        return series_inverse(arg, static_cast<unsigned>(*cutoff));
      } catch (const NotInvertibleError &) {
        throw NotInvertibleError("at offset " + std::to_string(node.offset) + ": inv of " + to_string(arg) +
                                 " has zero constant term");
      }
    }
    }
    throw DomainError("unknown expression node");
  };
  return rec(rec, ast);
}

ClassExpr elaborate(const ExprAst &ast, unsigned r, unsigned cutoff, SignConvention convention) {
  const auto &vars = BundleVariables::of_rank(r);
  const auto &table = vars.table();
  Polynomial payload = evaluate(ast, r, static_cast<long>(cutoff));

  const auto x = Polynomial::variable(table, vars.x());
  const auto y = Polynomial::variable(table, vars.y());
  std::optional<Substitution> rewrite;
  switch (convention) {
  case SignConvention::to_x:
    rewrite.emplace(Substitution::identity(table)).bind(vars.y(), -x);
    break;
  case SignConvention::to_y:
    rewrite.emplace(Substitution::identity(table)).bind(vars.x(), -y);
    break;
  case SignConvention::mixed_to_y:
    if (payload.involves(vars.x()) && payload.involves(vars.y()))
      rewrite.emplace(Substitution::identity(table)).bind(vars.x(), -y);
    break;
  }
  if (rewrite)
    payload = substitute(payload, *rewrite);
  return {std::move(payload), static_cast<long>(cutoff)};
}

std::string to_string(const ExprAst &ast) {
  using Kind = ExprNode::Kind;
  switch (ast.kind) {
  case Kind::number:
    return ast.value.get_str();
  case Kind::variable:
    return ast.name;
  case Kind::add:
    return "(" + to_string(ast.children[0]) + " + " + to_string(ast.children[1]) + ")";
  case Kind::sub:
    return "(" + to_string(ast.children[0]) + " - " + to_string(ast.children[1]) + ")";
  case Kind::mul:
    return "(" + to_string(ast.children[0]) + " * " + to_string(ast.children[1]) + ")";
  case Kind::neg:
    return "(-" + to_string(ast.children[0]) + ")";
  case Kind::pow:
    return "(" + to_string(ast.children[0]) + ")^" + std::to_string(ast.exponent);
  case Kind::inv:
    return "inv(" + to_string(ast.children[0]) + ")";
  }
  return "?";
}

} // namespace pushkit
