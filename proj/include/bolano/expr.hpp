#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "bolano/ladder.hpp"

namespace bolano {

struct ExprNode;
/// Raw (unexpanded) expression tree as produced by the parser.
using Expr = std::shared_ptr<const ExprNode>;

namespace ast {

struct Number {
  Rational value;
};
struct Imaginary {};
/// A scalar symbol "base" or "base_subscript". hbar is an ordinary symbol.
struct Symbol {
  std::string base;
  std::string subscript;
  bool has_subscript = false;
};
struct Ladder {
  OpKind kind = OpKind::Annihilate;
  std::string subscript;  // empty: unsubscripted mode
};
struct Sum {
  std::vector<Expr> terms;
};
struct Product {
  std::vector<Expr> factors;
};
struct Negate {
  Expr operand;
};
struct Quotient {
  Expr numerator;
  Expr denominator;
};
struct Power {
  Expr base;
  Expr exponent;
};
/// exp(argument); the argument must reduce to i * rational * symbol terms.
struct Exponential {
  Expr argument;
};
enum class RangeMode { Sum, Product };
struct IndexedRange {
  RangeMode mode = RangeMode::Sum;
  std::string index;
  Expr lo;
  Expr hi;
  Expr body;
};

}  // namespace ast

struct ExprNode {
  using Variant =
      std::variant<ast::Number, ast::Imaginary, ast::Symbol, ast::Ladder,
                   ast::Sum, ast::Product, ast::Negate, ast::Quotient,
                   ast::Power, ast::Exponential, ast::IndexedRange>;
  Variant value;
  std::size_t offset = 0;
};

template <class Node>
Expr make_expr(Node node, std::size_t offset = 0) {
  return std::make_shared<const ExprNode>(ExprNode{std::move(node), offset});
}

/// Distributes products over sums, expands integer powers, folds scalar
/// factors into coefficients and unrolls finite sums/products. Throws
/// NonIntegerLadderPower, UnsupportedScalarPower, UnsupportedBounds or
/// UnsupportedExpression.
LadderPoly expand(const Expr& expr);

/// Substitutes index = lo..hi into body and combines the results by + or by
/// ordered multiplication (lo first). An empty range gives 0 or 1.
LadderPoly expand_finite_range(const Expr& body, const std::string& index,
                               long long lo, long long hi, ast::RangeMode mode);

}  // namespace bolano
