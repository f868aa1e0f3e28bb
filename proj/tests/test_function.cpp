#include "cfpoly/function.hpp"

#include <cstdlib>

#include "cfpoly/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cfpoly;

TEST_CASE("to_handle evaluation and derivatives") {
  FunctionHandle id = to_handle(parse("x"));
  IvBox r = id.eval(IvBox::point(2.0, 53), 53);
  CHECK(r.lo().to_double() == 2.0);
  CHECK(r.hi().to_double() == 2.0);

  FunctionHandle e = to_handle(parse("exp(x)"));
  IvBox v = e.eval(IvBox::point(0.0, 100), 100);
  CHECK(v.contains(BigNum::from_long(1, 8)));
  CHECK(v.width(64) <= pow2(-95));

  FunctionHandle dsin = to_handle(parse("sin(x)")).derivative();
  IvBox d = dsin.eval(IvBox::point(0.0, 100), 100);
  CHECK(d.contains(BigNum::from_long(1, 8)));
}

TEST_CASE("third derivative is refused") {
  FunctionHandle f = to_handle(parse("exp(x)"));
  FunctionHandle d2 = f.derivative().derivative();
  CHECK(d2.order() == 2);
  CHECK_FALSE(d2.derivative_available());
  CHECK_THROWS_AS(d2.derivative(), DomainError);
}

TEST_CASE("poly handle evaluates via dense Horner") {
  // p(x) = 1 + x^2 over basis {0, 2}
  Poly p(MonomialBasis({0, 2}),
         {BigNum::from_long(1, 64), BigNum::from_long(1, 64)});
  FunctionHandle h = poly_handle(p);
  IvBox v = h.eval(IvBox::of(1, 2, 64), 64);
  CHECK(v.contains(BigNum::from_long(2, 8)));
  CHECK(v.contains(BigNum::from_long(5, 8)));
  IvBox dv = h.derivative().eval(IvBox::point(3.0, 64), 64);
  CHECK(dv.contains(BigNum::from_long(6, 8)));
}

TEST_CASE("newton_inverse of erf: argerf") {
  FunctionHandle erf_h = to_handle(parse("erf(x)"));
  IvBox dom = IvBox::of(-0.3, 0.3, 120);
  IvBox seed = IvBox::of(-1.0, 1.0, 120);
  FunctionHandle argerf = newton_inverse(erf_h, dom, seed);

  // odd function fixed point
  IvBox at0 = argerf.eval(IvBox::point(0.0, 120), 120);
  CHECK(at0.contains(BigNum::zero(2)));
  CHECK(at0.width(64) <= pow2(-100));

  // round-trip identity: argerf(erf(0.1)) encloses 0.1 tightly
  BigNum y = erf(BigNum::from_double(0.1, 200), 200, Rnd::Nearest);
  IvBox back = argerf.eval(IvBox::point(y), 120);
  CHECK(back.contains(BigNum::from_double(0.1, 64)));
  CHECK(back.width(64) <= pow2(-90));

  // argerf(0.2763263902) is approximately 0.25: oracle inverts the series
  IvBox quarter_img = oracles::erf_series(BigNum::from_double(0.25, 200), 260);
  IvBox x25 = argerf.eval(IvBox::point(quarter_img.mid(200)), 120);
  CHECK(abs(sub(x25.mid(64), BigNum::from_double(0.25, 64), 64, Rnd::Nearest))
        <= pow2(-60));
  IvBox named = argerf.eval(
      IvBox::point(BigNum::from_string("0.2763263902", 120, Rnd::Nearest)),
      120);
  CHECK(abs(sub(named.mid(64), BigNum::from_double(0.25, 64), 64,
                Rnd::Nearest)) <= pow2(-30));
}

TEST_CASE("newton_inverse round-trip property") {
  FunctionHandle erf_h = to_handle(parse("erf(x)"));
  IvBox dom = IvBox::of(-0.28, 0.28, 140);
  FunctionHandle argerf = newton_inverse(erf_h, dom, IvBox::of(-1, 1, 140));
  oracles::Rng rng(2024);
  long prec = 140;
  for (int i = 0; i < 25; ++i) {
    BigNum y = BigNum::from_double(rng.uniform(-0.27, 0.27), prec);
    IvBox g = argerf.eval(IvBox::point(y), prec);
    IvBox fg = erf_h.eval(g, prec);
    // f(g(y)) must be within y +- 2^(-prec+4)
    CHECK(fg.lo() >= sub(y, ldexp(max(abs(y), pow2(-20)), -prec + 4), prec, Rnd::Down));
    CHECK(fg.hi() <= add(y, ldexp(max(abs(y), pow2(-20)), -prec + 4), prec, Rnd::Up));
  }
}

TEST_CASE("newton_inverse derivatives follow the inverse-function rule") {
  FunctionHandle erf_h = to_handle(parse("erf(x)"));
  IvBox dom = IvBox::of(-0.3, 0.3, 140);
  FunctionHandle argerf = newton_inverse(erf_h, dom, IvBox::of(-1, 1, 140));
  FunctionHandle d1 = argerf.derivative();
  FunctionHandle d2 = d1.derivative();
  CHECK_THROWS_AS(d2.derivative(), DomainError);

  // at y = 0: g'(0) = 1/erf'(0) = sqrt(pi)/2, g''(0) = 0 (odd function)
  long p = 140;
  IvBox g1 = d1.eval(IvBox::point(0.0, p), p);
  BigNum ref = ldexp(sqrt(const_pi(200, Rnd::Nearest), 200, Rnd::Nearest), -1);
  CHECK(g1.contains(ref));
  IvBox g2 = d2.eval(IvBox::point(0.0, p), p);
  CHECK(g2.contains(BigNum::zero(2)));

  // numerically: g'(y) vs finite difference at a generic point
  BigNum y = BigNum::from_double(0.21, p);
  BigNum h = pow2(-45);
  IvBox gp = argerf.eval(IvBox::point(add(y, h, p, Rnd::Nearest)), p);
  IvBox gm = argerf.eval(IvBox::point(sub(y, h, p, Rnd::Nearest)), p);
  BigNum fd = div(sub(gp.mid(p), gm.mid(p), p, Rnd::Nearest), ldexp(h, 1), p,
                  Rnd::Nearest);
  IvBox an = d1.eval(IvBox::point(y), p);
  CHECK(abs(sub(an.mid(p), fd, p, Rnd::Nearest)) <= pow2(-40));
}

TEST_CASE("finite-difference fallback approximates the derivative") {
  // a handle with no analytic derivative
  Expr::Ptr e = parse("exp(x)*sin(x)+2");
  FunctionHandle raw = make_handle(
      "blackbox", [e](const IvBox& x, long prec) { return e->eval(x, prec); });
  FunctionHandle d = raw.derivative();
  Expr::Ptr de = differentiate(e);
  long p = 120;
  for (double x : {-0.7, 0.0, 0.4, 1.3}) {
    IvBox got = d.eval(IvBox::point(x, p), p);
    BigNum ref = de->eval(IvBox::point(x, 200), 200).mid(200);
    CHECK(got.contains(ref));
    CHECK(got.width(64) <= BigNum::from_double(1e-8, 64));
  }
}

TEST_CASE("plugin handle speaks the textual enclosure protocol") {
  const char* exe = std::getenv("CFPOLY_TEST_PLUGIN");
  REQUIRE(exe != nullptr);
  FunctionHandle f = plugin_handle(exe);
  long p = 90;
  // order 0: exp over an interval
  IvBox v = f.eval(IvBox::of(0.0, 0.5, p), p);
  CHECK(v.contains(BigNum::from_long(1, 8)));
  CHECK(v.contains(exp(BigNum::from_double(0.5, 200), 200, Rnd::Nearest)));
  // order 1 supported natively by the test plugin
  IvBox d = f.derivative().eval(IvBox::point(1.0, p), p);
  CHECK(d.contains(exp(BigNum::from_long(1, 200), 200, Rnd::Nearest)));
  CHECK(d.width(64) <= pow2(-40));
  // order 2 is declared unsupported: falls back to finite differences
  IvBox dd = f.derivative().derivative().eval(IvBox::point(0.0, p), p);
  CHECK(dd.contains(BigNum::from_long(1, 8)));
  CHECK(dd.width(64) <= BigNum::from_double(1e-6, 64));
}
