#include "bolano/expr.hpp"

#include <map>
#include <optional>

#include "bolano/errors.hpp"

namespace bolano {

namespace {

using Bindings = std::map<std::string, long long>;

std::optional<Rational> constant_value(const LadderPoly& p) {
  if (!p.is_scalar()) return std::nullopt;
  return p.scalar_part().as_rational();
}

class Expander {
 public:
  explicit Expander(Bindings bindings) : bindings_(std::move(bindings)) {}

  LadderPoly operator()(const Expr& e) {
    return std::visit([&](const auto& node) { return visit(node, e->offset); },
                      e->value);
  }

 private:
  std::string resolve_subscript(const std::string& sub) const {
    auto it = bindings_.find(sub);
    return it == bindings_.end() ? sub : std::to_string(it->second);
  }

  LadderPoly visit(const ast::Number& n, std::size_t) { return Scalar(n.value); }

  LadderPoly visit(const ast::Imaginary&, std::size_t) {
    return Scalar::imaginary_unit();
  }

  LadderPoly visit(const ast::Symbol& s, std::size_t) {
    if (!s.has_subscript) {
      if (auto it = bindings_.find(s.base); it != bindings_.end()) {
        return Scalar(it->second);
      }
      return Scalar::symbol(s.base);
    }
    return Scalar::symbol(s.base + "_" + resolve_subscript(s.subscript));
  }

  LadderPoly visit(const ast::Ladder& l, std::size_t) {
    return LadderPoly(LadderOp{l.kind, ModeLabel(resolve_subscript(l.subscript))});
  }

  LadderPoly visit(const ast::Sum& s, std::size_t) {
    LadderPoly out;
    for (const auto& t : s.terms) out += (*this)(t);
    return out;
  }

  LadderPoly visit(const ast::Product& p, std::size_t) {
    LadderPoly out(Scalar(1));
    for (const auto& f : p.factors) {
      out = out * (*this)(f);
      if (out.is_zero()) break;
    }
    return out;
  }

  LadderPoly visit(const ast::Negate& n, std::size_t) { return -(*this)(n.operand); }

  LadderPoly visit(const ast::Quotient& q, std::size_t) {
    LadderPoly den = (*this)(q.denominator);
    if (!den.is_scalar()) {
      throw NonIntegerLadderPower("division by an expression containing ladder operators");
    }
    LadderPoly num = (*this)(q.numerator);
    return den.scalar_part().pow(-1) * num;
  }

  LadderPoly visit(const ast::Power& p, std::size_t) {
    LadderPoly base = (*this)(p.base);
    LadderPoly exponent = (*this)(p.exponent);
    auto e = constant_value(exponent);
    if (!base.is_scalar()) {
      if (!e || !is_integer(*e) || *e < 0) {
        throw NonIntegerLadderPower(
            "ladder operators may only be raised to nonnegative integer powers");
      }
      return base.pow(static_cast<unsigned>(boost::multiprecision::numerator(*e)));
    }
    if (!e) throw UnsupportedScalarPower("exponent must be a rational constant");
    return base.scalar_part().pow(*e);
  }

  LadderPoly visit(const ast::Exponential& x, std::size_t) {
    LadderPoly arg = (*this)(x.argument);
    if (!arg.is_scalar()) {
      throw UnsupportedExpression("exp() of an operator expression");
    }
    const Scalar value = arg.scalar_part();
    Scalar out(1);
    for (const auto& [key, coeff] : value.terms()) {
      if (!key.imaginary || key.powers.size() != 1 || !key.phases.empty() ||
          key.powers.front().second != 1) {
        throw UnsupportedExpression(
            "exp() argument must be a sum of I*rational*symbol terms");
      }
      out *= Scalar::phase(key.powers.front().first, coeff);
    }
    return out;
  }

  LadderPoly visit(const ast::IndexedRange& r, std::size_t) {
    auto lo = constant_value((*this)(r.lo));
    auto hi = constant_value((*this)(r.hi));
    if (!lo || !hi || !is_integer(*lo) || !is_integer(*hi)) {
      throw UnsupportedBounds("range bounds of '" + r.index +
                              "' must be integer constants");
    }
    const auto l = static_cast<long long>(boost::multiprecision::numerator(*lo));
    const auto h = static_cast<long long>(boost::multiprecision::numerator(*hi));
    LadderPoly out = r.mode == ast::RangeMode::Sum ? LadderPoly{} : LadderPoly(Scalar(1));
    for (long long v = l; v <= h; ++v) {
      Bindings inner = bindings_;
      inner[r.index] = v;
      LadderPoly term = Expander(std::move(inner))(r.body);
      if (r.mode == ast::RangeMode::Sum) {
        out += term;
      } else {
        out = out * term;
      }
    }
    return out;
  }

  Bindings bindings_;
};

}  // namespace

LadderPoly expand(const Expr& expr) { return Expander({})(expr); }

LadderPoly expand_finite_range(const Expr& body, const std::string& index,
                               long long lo, long long hi, ast::RangeMode mode) {
  ast::IndexedRange range{mode, index, make_expr(ast::Number{lo}),
                          make_expr(ast::Number{hi}), body};
  return expand(make_expr(std::move(range)));
}

}  // namespace bolano
