#include "cfpoly/expr.hpp"

#include "cfpoly/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cfpoly;

TEST_CASE("parse basics") {
  Expr::Ptr v = parse("x");
  CHECK(v->kind() == Expr::Kind::Variable);

  Expr::Ptr e = parse("exp(sin(x)-cos(x^2))");
  CHECK(e->kind() == Expr::Kind::Unary);
  CHECK(e->unary_op() == UnaryOp::Exp);
  CHECK(e->operand()->kind() == Expr::Kind::Binary);
  CHECK(e->operand()->binary_op() == BinaryOp::Sub);

  Expr::Ptr s = parse("sin(x)+cos(x^2)");
  CHECK(s->kind() == Expr::Kind::Binary);
  CHECK(s->binary_op() == BinaryOp::Add);
}

TEST_CASE("number forms") {
  // 2^-8 goes through the power rule and folds to an exact rational
  Expr::Ptr a = parse("2^-8");
  REQUIRE(a->kind() == Expr::Kind::Constant);
  CHECK(a->value() == Rational(1, 256));

  Expr::Ptr b = parse("0x1.8p-3");
  REQUIRE(b->kind() == Expr::Kind::Constant);
  CHECK(b->value() == Rational(3, 16));

  Expr::Ptr c = parse("0.049");
  REQUIRE(c->kind() == Expr::Kind::Constant);
  CHECK(c->value() == Rational(49, 1000));

  Expr::Ptr d = parse("3e-2");
  REQUIRE(d->kind() == Expr::Kind::Constant);
  CHECK(d->value() == Rational(3, 100));

  // '^' binds tighter than unary minus
  Expr::Ptr m = parse("-2^-8");
  REQUIRE(m->kind() == Expr::Kind::Constant);
  CHECK(m->value() == Rational(-1, 256));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse("sin(x"), ParseError);
  CHECK_THROWS_AS(parse("x + "), ParseError);
  CHECK_THROWS_AS(parse("x^0.5"), ParseError);
  CHECK_THROWS_AS(parse("foo(x)"), ParseError);
  CHECK_THROWS_AS(parse("x x"), ParseError);
  try {
    parse("exp(y)");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("differentiate power and trig rules") {
  Expr::Ptr dx2 = differentiate(parse("x^2"));
  CHECK(structurally_equal(dx2, parse("2*x")));

  Expr::Ptr dsin = differentiate(parse("sin(x)"));
  CHECK(structurally_equal(dsin, parse("cos(x)")));
}

TEST_CASE("derivative of the composite matches finite differences") {
  Expr::Ptr f = parse("exp(sin(x)-cos(x^2))");
  Expr::Ptr df = differentiate(f);
  oracles::Rng rng(123);
  long p = 200;
  BigNum h = pow2(-40);
  for (int i = 0; i < 20; ++i) {
    BigNum x = BigNum::from_double(rng.uniform(-1.0, 1.0), p);
    IvBox xp = IvBox::point(add(x, h, p, Rnd::Nearest));
    IvBox xm = IvBox::point(sub(x, h, p, Rnd::Nearest));
    BigNum fd = div(sub(f->eval(xp, p).mid(p), f->eval(xm, p).mid(p), p,
                        Rnd::Nearest),
                    ldexp(h, 1), p, Rnd::Nearest);
    BigNum sym = df->eval(IvBox::point(x), p).mid(p);
    BigNum rel = div(abs(sub(sym, fd, p, Rnd::Nearest)),
                     max(abs(sym), pow2(-10)), p, Rnd::Nearest);
    CHECK(rel <= pow2(-25));
  }
}

TEST_CASE("differentiate is linear") {
  oracles::Rng rng(7);
  Expr::Ptr e1 = parse("sin(x^2)");
  Expr::Ptr e2 = parse("exp(x)-x^3");
  Rational a(7, 3);
  Expr::Ptr combo = Expr::binary(
      BinaryOp::Add,
      Expr::binary(BinaryOp::Mul, Expr::constant(a), e1), e2);
  Expr::Ptr d_combo = differentiate(combo);
  Expr::Ptr d_split = Expr::binary(
      BinaryOp::Add,
      Expr::binary(BinaryOp::Mul, Expr::constant(a), differentiate(e1)),
      differentiate(e2));
  long p = 120;
  for (int i = 0; i < 20; ++i) {
    IvBox x = IvBox::point(rng.uniform(-1.5, 1.5), p);
    BigNum lhs = d_combo->eval(x, p).mid(p);
    BigNum rhs = d_split->eval(x, p).mid(p);
    CHECK(abs(sub(lhs, rhs, p, Rnd::Nearest)) <=
          mul(pow2(-60), max(abs(lhs), BigNum::from_long(1, 8)), p, Rnd::Up));
  }
}

TEST_CASE("evaluation agrees with a 200-bit scalar oracle on random points") {
  struct Case {
    const char* text;
    BigNum (*ref)(const BigNum&, long, Rnd);
    double lo, hi;
  };
  const Case cases[] = {
      {"exp(x)", cfpoly::exp, -2, 2},  {"log(x)", cfpoly::log, 0.1, 3},
      {"sin(x)", cfpoly::sin, -3, 3},  {"cos(x)", cfpoly::cos, -3, 3},
      {"sqrt(x)", cfpoly::sqrt, 0.01, 4}, {"erf(x)", cfpoly::erf, -2, 2},
  };
  oracles::Rng rng(99);
  for (const auto& c : cases) {
    Expr::Ptr e = parse(c.text);
    for (int i = 0; i < 170; ++i) {
      double xd = rng.uniform(c.lo, c.hi);
      BigNum x = BigNum::from_double(xd, 100);
      IvBox got = e->eval(IvBox::point(x), 100);
      BigNum ref = c.ref(BigNum::from_double(xd, 200), 200, Rnd::Nearest);
      CHECK(got.contains(ref));
    }
  }
}

TEST_CASE("constant folding keeps rationals exact") {
  Expr::Ptr e = parse("(1/3 + 1/6) * 2");
  REQUIRE(e->kind() == Expr::Kind::Constant);
  CHECK(e->value() == Rational(1, 1));
  // pi is not folded
  CHECK(parse("2*pi")->kind() == Expr::Kind::Binary);
}

TEST_CASE("pi evaluates to an enclosure of pi") {
  IvBox v = parse("pi")->eval(IvBox::point(0.0, 80), 80);
  CHECK(v.lo() < v.hi());
  CHECK(v.contains(const_pi(200, Rnd::Nearest)));
}
