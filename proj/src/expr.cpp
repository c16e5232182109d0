#include "heckeforge/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace hf::expr {

ExprPtr make_int(long v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::IntLit;
  e->lit = v;
  return e;
}

ExprPtr make_gen(Kind k, int index) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->index = index;
  return e;
}

ExprPtr make_lattice(int a, int b) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::LatticeX;
  e->lam = {a, b};
  return e;
}

ExprPtr make_node(Kind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

namespace {

struct Token {
  enum Type { Atom, Int, Plus, Minus, Star, LParen, RParen, End } type;
  ExprPtr atom;  // Atom
  long value = 0;
  size_t pos;
};

[[noreturn]] void fail(size_t pos, const std::string& what) {
  throw std::runtime_error("parse error at offset " + std::to_string(pos) +
                           ": " + what);
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    size_t pos = i;
    char c = s[i];
    if (c == '+' || c == '-' || c == '*' || c == '(' || c == ')') {
      Token::Type t = c == '+'   ? Token::Plus
                      : c == '-' ? Token::Minus
                      : c == '*' ? Token::Star
                      : c == '(' ? Token::LParen
                                 : Token::RParen;
      out.push_back({t, nullptr, 0, pos});
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        v = v * 10 + (s[i++] - '0');
      out.push_back({Token::Int, nullptr, v, pos});
      continue;
    }
    if (c == 's' || c == 'D' || c == 'q') {
      if (i + 1 >= s.size() || (s[i + 1] != '1' && s[i + 1] != '2'))
        fail(pos, std::string("expected 1 or 2 after '") + c + "'");
      Kind k = c == 's' ? Kind::GenS : c == 'D' ? Kind::GenD : Kind::GenQ;
      out.push_back({Token::Atom, make_gen(k, s[i + 1] - '0'), 0, pos});
      i += 2;
      continue;
    }
    if (c == 'X') {
      if (i + 1 >= s.size() || s[i + 1] != '[') fail(pos, "expected '[' after X");
      i += 2;
      auto read_int = [&]() {
        bool neg = i < s.size() && s[i] == '-';
        if (neg) ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          fail(i, "expected integer in X[..]");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
      };
      long a = read_int();
      if (i >= s.size() || s[i] != ',') fail(i, "expected ',' in X[..]");
      ++i;
      long b = read_int();
      if (i >= s.size() || s[i] != ']') fail(i, "expected ']' in X[..]");
      ++i;
      out.push_back({Token::Atom, make_lattice(int(a), int(b)), 0, pos});
      continue;
    }
    fail(pos, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::End, nullptr, 0, s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = sum();
    if (cur().type != Token::End) fail(cur().pos, "trailing input");
    return e;
  }

 private:
  const Token& cur() const { return toks_[at_]; }
  void advance() { ++at_; }

  ExprPtr sum() {
    ExprPtr e = product();
    while (cur().type == Token::Plus || cur().type == Token::Minus) {
      Kind k = cur().type == Token::Plus ? Kind::Sum : Kind::Diff;
      advance();
      e = make_node(k, e, product());
    }
    return e;
  }

  // Juxtaposition: factors follow each other with optional '*'.
  ExprPtr product() {
    ExprPtr e = factor();
    for (;;) {
      if (cur().type == Token::Star) {
        advance();
        e = make_node(Kind::Prod, e, factor());
      } else if (cur().type == Token::Atom || cur().type == Token::Int ||
                 cur().type == Token::LParen) {
        e = make_node(Kind::Prod, e, factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    switch (cur().type) {
      case Token::Minus: {
        size_t p = cur().pos;
        advance();
        (void)p;
        return make_node(Kind::Prod, make_int(-1), factor());
      }
      case Token::Int: {
        long v = cur().value;
        advance();
        return make_int(v);
      }
      case Token::Atom: {
        ExprPtr a = cur().atom;
        advance();
        return a;
      }
      case Token::LParen: {
        advance();
        ExprPtr e = sum();
        if (cur().type != Token::RParen) fail(cur().pos, "expected ')'");
        advance();
        return e;
      }
      default:
        fail(cur().pos, "expected a factor");
    }
  }

  std::vector<Token> toks_;
  size_t at_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view src) { return Parser(lex(src)).run(); }

std::string to_string(const ExprPtr& e) {
  switch (e->kind) {
    case Kind::Sum:
      return "(" + to_string(e->lhs) + " + " + to_string(e->rhs) + ")";
    case Kind::Diff:
      return "(" + to_string(e->lhs) + " - " + to_string(e->rhs) + ")";
    case Kind::Prod:
      return to_string(e->lhs) + " " + to_string(e->rhs);
    case Kind::IntLit:
      return std::to_string(e->lit);
    case Kind::GenS:
      return "s" + std::to_string(e->index);
    case Kind::GenD:
      return "D" + std::to_string(e->index);
    case Kind::GenQ:
      return "q" + std::to_string(e->index);
    case Kind::LatticeX:
      return "X[" + std::to_string(e->lam[0]) + "," +
             std::to_string(e->lam[1]) + "]";
  }
  return "?";
}

}  // namespace hf::expr
