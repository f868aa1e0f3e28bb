#include "cfpoly/expr.hpp"

#include <cctype>
#include <map>

#include "cfpoly/errors.hpp"

namespace cfpoly {

Expr::Ptr Expr::variable() {
  auto e = Ptr(new Expr());
  const_cast<Expr&>(*e).kind_ = Kind::Variable;
  return e;
}

Expr::Ptr Expr::constant(Rational value) {
  auto e = new Expr();
  e->kind_ = Kind::Constant;
  e->value_ = std::move(value);
  return Ptr(e);
}

Expr::Ptr Expr::pi() {
  auto e = new Expr();
  e->kind_ = Kind::Pi;
  return Ptr(e);
}

namespace {
bool is_const(const Expr::Ptr& e, long num, long den = 1) {
  return e->kind() == Expr::Kind::Constant &&
         e->value() == Rational(num, den);
}
}  // namespace

Expr::Ptr Expr::unary(UnaryOp op, Ptr operand) {
  if (op == UnaryOp::Neg && operand->kind_ == Kind::Constant)
    return constant(-operand->value_);
  auto e = new Expr();
  e->kind_ = Kind::Unary;
  e->uop_ = op;
  e->lhs_ = std::move(operand);
  return Ptr(e);
}

Expr::Ptr Expr::binary(BinaryOp op, Ptr lhs, Ptr rhs) {
  if (lhs->kind_ == Kind::Constant && rhs->kind_ == Kind::Constant) {
    switch (op) {
      case BinaryOp::Add: return constant(lhs->value_ + rhs->value_);
      case BinaryOp::Sub: return constant(lhs->value_ - rhs->value_);
      case BinaryOp::Mul: return constant(lhs->value_ * rhs->value_);
      case BinaryOp::Div:
        if (!rhs->value_.is_zero())
          return constant(lhs->value_ / rhs->value_);
        break;
    }
  }
  // neutral elements
  switch (op) {
    case BinaryOp::Add:
      if (is_const(lhs, 0)) return rhs;
      if (is_const(rhs, 0)) return lhs;
      break;
    case BinaryOp::Sub:
      if (is_const(rhs, 0)) return lhs;
      if (is_const(lhs, 0)) return unary(UnaryOp::Neg, rhs);
      break;
    case BinaryOp::Mul:
      if (is_const(lhs, 0) || is_const(rhs, 0)) return integer(0);
      if (is_const(lhs, 1)) return rhs;
      if (is_const(rhs, 1)) return lhs;
      break;
    case BinaryOp::Div:
      if (is_const(lhs, 0) && !is_const(rhs, 0)) return integer(0);
      if (is_const(rhs, 1)) return lhs;
      break;
  }
  auto e = new Expr();
  e->kind_ = Kind::Binary;
  e->bop_ = op;
  e->lhs_ = std::move(lhs);
  e->rhs_ = std::move(rhs);
  return Ptr(e);
}

Expr::Ptr Expr::power(Ptr base, long exponent) {
  if (exponent == 1) return base;
  if (exponent == 0) return integer(1);
  if (base->kind_ == Kind::Constant &&
      (exponent > 0 || !base->value_.is_zero()))
    return constant(base->value_.pow(exponent));
  auto e = new Expr();
  e->kind_ = Kind::Power;
  e->lhs_ = std::move(base);
  e->exponent_ = exponent;
  return Ptr(e);
}

IvBox Expr::eval(const IvBox& x, long prec) const {
  switch (kind_) {
    case Kind::Variable:
      return x;
    case Kind::Constant:
      return value_.to_interval(prec);
    case Kind::Pi:
      return iv_pi(prec);
    case Kind::Power:
      return iv_pow(lhs_->eval(x, prec), exponent_, prec);
    case Kind::Unary: {
      IvBox v = lhs_->eval(x, prec);
      switch (uop_) {
        case UnaryOp::Neg: return iv_neg(v);
        case UnaryOp::Exp: return iv_elem(IvFn::Exp, v, prec);
        case UnaryOp::Log: return iv_elem(IvFn::Log, v, prec);
        case UnaryOp::Sin: return iv_elem(IvFn::Sin, v, prec);
        case UnaryOp::Cos: return iv_elem(IvFn::Cos, v, prec);
        case UnaryOp::Sqrt: return iv_elem(IvFn::Sqrt, v, prec);
        case UnaryOp::Erf: return iv_elem(IvFn::Erf, v, prec);
      }
      break;
    }
    case Kind::Binary: {
      IvBox a = lhs_->eval(x, prec);
      IvBox b = rhs_->eval(x, prec);
      switch (bop_) {
        case BinaryOp::Add: return iv_add(a, b, prec);
        case BinaryOp::Sub: return iv_sub(a, b, prec);
        case BinaryOp::Mul: return iv_mul(a, b, prec);
        case BinaryOp::Div: return iv_div(a, b, prec);
      }
      break;
    }
  }
  throw std::logic_error("unreachable");
}

Jet Expr::jet_eval(const IvBox& x, long prec, int order) const {
  switch (kind_) {
    case Kind::Variable:
      return Jet::variable(x, order, prec);
    case Kind::Constant:
      return Jet::constant(value_.to_interval(prec), order, prec);
    case Kind::Pi:
      return Jet::constant(iv_pi(prec), order, prec);
    case Kind::Power:
      return jet_pow_si(lhs_->jet_eval(x, prec, order), exponent_);
    case Kind::Unary: {
      Jet v = lhs_->jet_eval(x, prec, order);
      switch (uop_) {
        case UnaryOp::Neg: return jet_neg(v);
        case UnaryOp::Exp: return jet_exp(v);
        case UnaryOp::Log: return jet_log(v);
        case UnaryOp::Sin: return jet_sin(v);
        case UnaryOp::Cos: return jet_cos(v);
        case UnaryOp::Sqrt: return jet_sqrt(v);
        case UnaryOp::Erf: return jet_erf(v);
      }
      break;
    }
    case Kind::Binary: {
      Jet a = lhs_->jet_eval(x, prec, order);
      Jet b = rhs_->jet_eval(x, prec, order);
      switch (bop_) {
        case BinaryOp::Add: return jet_add(a, b);
        case BinaryOp::Sub: return jet_sub(a, b);
        case BinaryOp::Mul: return jet_mul(a, b);
        case BinaryOp::Div: return jet_div(a, b);
      }
      break;
    }
  }
  throw std::logic_error("unreachable");
}

std::string Expr::to_string() const {
  switch (kind_) {
    case Kind::Variable:
      return "x";
    case Kind::Constant:
      return value_.sgn() < 0 ? "(" + value_.to_string() + ")"
                              : value_.to_string();
    case Kind::Pi:
      return "pi";
    case Kind::Power:
      return "(" + lhs_->to_string() + ")^" + std::to_string(exponent_);
    case Kind::Unary: {
      static const std::map<UnaryOp, std::string> names = {
          {UnaryOp::Neg, "-"},   {UnaryOp::Exp, "exp"}, {UnaryOp::Log, "log"},
          {UnaryOp::Sin, "sin"}, {UnaryOp::Cos, "cos"}, {UnaryOp::Sqrt, "sqrt"},
          {UnaryOp::Erf, "erf"}};
      if (uop_ == UnaryOp::Neg) return "(-" + lhs_->to_string() + ")";
      return names.at(uop_) + "(" + lhs_->to_string() + ")";
    }
    case Kind::Binary: {
      static const std::map<BinaryOp, std::string> names = {
          {BinaryOp::Add, " + "},
          {BinaryOp::Sub, " - "},
          {BinaryOp::Mul, " * "},
          {BinaryOp::Div, " / "}};
      return "(" + lhs_->to_string() + names.at(bop_) + rhs_->to_string() + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------- parser --

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Expr::Ptr run() {
    Expr::Ptr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Expr::Ptr parse_expr() {
    Expr::Ptr e = parse_term();
    while (true) {
      if (eat('+'))
        e = Expr::binary(BinaryOp::Add, e, parse_term());
      else if (eat('-'))
        e = Expr::binary(BinaryOp::Sub, e, parse_term());
      else
        return e;
    }
  }

  Expr::Ptr parse_term() {
    Expr::Ptr e = parse_factor();
    while (true) {
      if (eat('*'))
        e = Expr::binary(BinaryOp::Mul, e, parse_factor());
      else if (eat('/'))
        e = Expr::binary(BinaryOp::Div, e, parse_factor());
      else
        return e;
    }
  }

  Expr::Ptr parse_factor() {
    // '^' binds tighter than unary minus: -2^-8 is -(2^-8).
    if (eat('-')) return Expr::unary(UnaryOp::Neg, parse_factor());
    Expr::Ptr base = parse_base();
    if (eat('^')) return Expr::power(base, parse_integer());
    return base;
  }

  long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
      neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer exponent");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) fail("exponent too large");
    }
    if (pos_ < s_.size() && (s_[pos_] == '.' ||
                             s_[pos_] == 'e' || s_[pos_] == 'E'))
      fail("exponent must be an integer");
    (void)start;
    return neg ? -v : v;
  }

  Expr::Ptr parse_base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (eat('(')) {
      Expr::Ptr e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr::Ptr parse_number() {
    std::size_t start = pos_;
    bool hex = s_.compare(pos_, 2, "0x") == 0 || s_.compare(pos_, 2, "0X") == 0;
    if (hex) {
      pos_ += 2;
      while (pos_ < s_.size() &&
             (std::isxdigit(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '.'))
        ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'p' || s_[pos_] == 'P')) {
        ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_])))
          ++pos_;
      }
      try {
        return Expr::constant(
            Rational::from_hex_float(s_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '.'))
      ++pos_;
    // decimal exponent, but not the 'e' of a following name
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_])))
          ++pos_;
      } else {
        pos_ = save;
      }
    }
    try {
      return Expr::constant(
          Rational::from_decimal(s_.substr(start, pos_ - start)));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  Expr::Ptr parse_name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isalpha(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "x") return Expr::variable();
    if (name == "pi") return Expr::pi();
    static const std::map<std::string, UnaryOp> fns = {
        {"exp", UnaryOp::Exp}, {"log", UnaryOp::Log},   {"sin", UnaryOp::Sin},
        {"cos", UnaryOp::Cos}, {"sqrt", UnaryOp::Sqrt}, {"erf", UnaryOp::Erf}};
    auto it = fns.find(name);
    if (it == fns.end()) {
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    if (!eat('(')) fail("expected '(' after '" + name + "'");
    Expr::Ptr arg = parse_expr();
    if (!eat(')')) fail("expected ')'");
    return Expr::unary(it->second, arg);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr::Ptr parse(const std::string& text) { return Parser(text).run(); }

// ------------------------------------------------------------ derivative --

Expr::Ptr differentiate(const Expr::Ptr& e) {
  using K = Expr::Kind;
  switch (e->kind()) {
    case K::Variable:
      return Expr::integer(1);
    case K::Constant:
    case K::Pi:
      return Expr::integer(0);
    case K::Power: {
      // (u^k)' = k * u^(k-1) * u'
      Expr::Ptr u = e->operand();
      Expr::Ptr inner = differentiate(u);
      return Expr::binary(
          BinaryOp::Mul, Expr::integer(e->exponent()),
          Expr::binary(BinaryOp::Mul, Expr::power(u, e->exponent() - 1),
                       inner));
    }
    case K::Unary: {
      Expr::Ptr u = e->operand();
      Expr::Ptr du = differentiate(u);
      switch (e->unary_op()) {
        case UnaryOp::Neg:
          return Expr::unary(UnaryOp::Neg, du);
        case UnaryOp::Exp:
          return Expr::binary(BinaryOp::Mul, e, du);
        case UnaryOp::Log:
          return Expr::binary(BinaryOp::Div, du, u);
        case UnaryOp::Sin:
          return Expr::binary(BinaryOp::Mul, Expr::unary(UnaryOp::Cos, u), du);
        case UnaryOp::Cos:
          return Expr::binary(
              BinaryOp::Mul,
              Expr::unary(UnaryOp::Neg, Expr::unary(UnaryOp::Sin, u)), du);
        case UnaryOp::Sqrt:
          return Expr::binary(
              BinaryOp::Div, du,
              Expr::binary(BinaryOp::Mul, Expr::integer(2), e));
        case UnaryOp::Erf: {
          // erf'(u) = 2/sqrt(pi) * exp(-u^2) * u'
          Expr::Ptr gauss = Expr::unary(
              UnaryOp::Exp, Expr::unary(UnaryOp::Neg, Expr::power(u, 2)));
          Expr::Ptr factor = Expr::binary(
              BinaryOp::Div, Expr::integer(2),
              Expr::unary(UnaryOp::Sqrt, Expr::pi()));
          return Expr::binary(BinaryOp::Mul, factor,
                              Expr::binary(BinaryOp::Mul, gauss, du));
        }
      }
      break;
    }
    case K::Binary: {
      Expr::Ptr a = e->lhs(), b = e->rhs();
      Expr::Ptr da = differentiate(a), db = differentiate(b);
      switch (e->binary_op()) {
        case BinaryOp::Add:
          return Expr::binary(BinaryOp::Add, da, db);
        case BinaryOp::Sub:
          return Expr::binary(BinaryOp::Sub, da, db);
        case BinaryOp::Mul:
          return Expr::binary(BinaryOp::Add,
                              Expr::binary(BinaryOp::Mul, da, b),
                              Expr::binary(BinaryOp::Mul, a, db));
        case BinaryOp::Div:
          return Expr::binary(
              BinaryOp::Div,
              Expr::binary(BinaryOp::Sub, Expr::binary(BinaryOp::Mul, da, b),
                           Expr::binary(BinaryOp::Mul, a, db)),
              Expr::power(b, 2));
      }
      break;
    }
  }
  throw std::logic_error("unreachable");
}

bool structurally_equal(const Expr::Ptr& a, const Expr::Ptr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  using K = Expr::Kind;
  switch (a->kind()) {
    case K::Variable:
    case K::Pi:
      return true;
    case K::Constant:
      return a->value() == b->value();
    case K::Power:
      return a->exponent() == b->exponent() &&
             structurally_equal(a->operand(), b->operand());
    case K::Unary:
      return a->unary_op() == b->unary_op() &&
             structurally_equal(a->operand(), b->operand());
    case K::Binary:
      return a->binary_op() == b->binary_op() &&
             structurally_equal(a->lhs(), b->lhs()) &&
             structurally_equal(a->rhs(), b->rhs());
  }
  return false;
}

}  // namespace cfpoly
