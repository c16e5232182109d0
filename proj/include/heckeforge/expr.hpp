// Expression trees over the generators s_i, D_i, X^lambda, q_i.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace hf::expr {

enum class Kind { Sum, Diff, Prod, IntLit, GenS, GenD, GenQ, LatticeX };

// Immutable tree; products are ordered (the algebras are noncommutative).
struct Expr {
  Kind kind;
  std::shared_ptr<const Expr> lhs, rhs;  // Sum, Diff, Prod
  long lit = 0;                          // IntLit
  int index = 0;                         // GenS, GenD, GenQ: 1 or 2
  std::array<int, 2> lam{0, 0};          // LatticeX
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr make_int(long v);
ExprPtr make_gen(Kind k, int index);
ExprPtr make_lattice(int a, int b);
ExprPtr make_node(Kind k, ExprPtr a, ExprPtr b);

// Grammar: atoms "s1 s2 D1 D2 q1 q2 X[a,b]" and integer literals combined
// with infix + and -, products by juxtaposition or *, and parentheses.
// Unary minus is accepted.  Throws std::runtime_error naming the offset
// of the first bad token.
ExprPtr parse(std::string_view src);

std::string to_string(const ExprPtr& e);

}  // namespace hf::expr
