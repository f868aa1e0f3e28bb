#pragma once

#include <memory>
#include <string>

#include "cfpoly/interval.hpp"
#include "cfpoly/jet.hpp"
#include "cfpoly/rational.hpp"

namespace cfpoly {

enum class UnaryOp { Neg, Exp, Log, Sin, Cos, Sqrt, Erf };
enum class BinaryOp { Add, Sub, Mul, Div };

// Immutable expression tree over: the variable x, exact rational constants,
// pi, the unary functions above, +,-,*,/ and ^ with integer exponent.
// Builders fold rational subexpressions and drop arithmetic neutral elements;
// nothing beyond that is simplified.
class Expr {
 public:
  enum class Kind { Variable, Constant, Pi, Unary, Binary, Power };
  using Ptr = std::shared_ptr<const Expr>;

  static Ptr variable();
  static Ptr constant(Rational value);
  static Ptr integer(long value) { return constant(Rational(value, 1)); }
  static Ptr pi();
  static Ptr unary(UnaryOp op, Ptr operand);
  static Ptr binary(BinaryOp op, Ptr lhs, Ptr rhs);
  static Ptr power(Ptr base, long exponent);

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }
  UnaryOp unary_op() const { return uop_; }
  BinaryOp binary_op() const { return bop_; }
  const Ptr& operand() const { return lhs_; }
  const Ptr& lhs() const { return lhs_; }
  const Ptr& rhs() const { return rhs_; }
  long exponent() const { return exponent_; }

  // Interval evaluation of the tree at x over the box, outward at prec.
  IvBox eval(const IvBox& x, long prec) const;

  // Validated Taylor coefficients of the tree over the box, to the given
  // order, via the standard series recurrences.
  Jet jet_eval(const IvBox& x, long prec, int order) const;

  std::string to_string() const;

 private:
  Expr() = default;
  Kind kind_ = Kind::Variable;
  Rational value_;
  UnaryOp uop_ = UnaryOp::Neg;
  BinaryOp bop_ = BinaryOp::Add;
  Ptr lhs_, rhs_;
  long exponent_ = 0;
};

// Parses the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := number | 'pi' | 'x' | fn '(' expr ')' | '(' expr ')' | '-' factor
//   fn     := exp | log | sin | cos | sqrt | erf
// Numbers are decimal ("0.049", "3e-2"), hex-float ("0x1.8p-3") or reachable
// as 2^k through the power rule. '^' binds tighter than unary minus.
Expr::Ptr parse(const std::string& text);

// Exact symbolic derivative. No simplification guarantees beyond the
// builders' rational constant folding.
Expr::Ptr differentiate(const Expr::Ptr& e);

// Decidable structural equality (same shape, equal constants).
bool structurally_equal(const Expr::Ptr& a, const Expr::Ptr& b);

}  // namespace cfpoly
