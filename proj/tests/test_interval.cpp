#include "cfpoly/interval.hpp"

#include <cmath>

#include "cfpoly/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cfpoly;

namespace {
IvBox pt(double x, long prec = 64) { return IvBox::point(x, prec); }
}  // namespace

TEST_CASE("iv_arith basic examples") {
  IvBox r = iv_arith(IvOp::Add, pt(1), pt(2), 64);
  CHECK(r.lo().to_double() == 3.0);
  CHECK(r.hi().to_double() == 3.0);

  IvBox m = iv_arith(IvOp::Mul, IvBox::of(-1, 1, 64), IvBox::of(-1, 1, 64), 64);
  CHECK(m.lo().to_double() == -1.0);
  CHECK(m.hi().to_double() == 1.0);

  // [1,1]/[3,3] at prec 53: width <= 2^-51, containing the 200-bit 1/3.
  IvBox d = iv_arith(IvOp::Div, pt(1, 53), pt(3, 53), 53);
  BigNum third = div(BigNum::from_long(1, 200), BigNum::from_long(3, 200), 200,
                     Rnd::Nearest);
  CHECK(d.contains(third));
  CHECK(d.width(53) <= pow2(-51));
}

TEST_CASE("division by interval containing zero") {
  CHECK_THROWS_AS(iv_div(pt(1), IvBox::of(-1, 1, 64), 64), DomainError);
  CHECK_THROWS_AS(iv_div(pt(1), IvBox::of(0, 1, 64), 64), DomainError);
}

TEST_CASE("integer powers") {
  IvBox x = IvBox::of(-2, 3, 64);
  IvBox sq = iv_pow(x, 2, 64);
  CHECK(sq.lo().to_double() == 0.0);
  CHECK(sq.hi().to_double() == 9.0);
  IvBox cu = iv_pow(x, 3, 64);
  CHECK(cu.lo().to_double() == -8.0);
  CHECK(cu.hi().to_double() == 27.0);
  CHECK(iv_pow(x, 0, 64).lo().to_double() == 1.0);
  IvBox inv = iv_pow(IvBox::of(2, 4, 64), -1, 64);
  CHECK(inv.contains(BigNum::from_double(0.3, 64)));
  CHECK_THROWS_AS(iv_pow(x, -2, 64), DomainError);
}

TEST_CASE("iv_elem point identities") {
  IvBox s = iv_elem(IvFn::Sin, pt(0), 64);
  CHECK(s.lo().is_zero());
  CHECK(s.hi().is_zero());
  IvBox e = iv_elem(IvFn::Exp, pt(0), 64);
  CHECK(e.lo().to_double() == 1.0);
  CHECK(e.hi().to_double() == 1.0);
}

TEST_CASE("erf enclosure against the series oracle") {
  BigNum quarter = BigNum::from_double(0.25, 120);
  IvBox got = iv_elem(IvFn::Erf, IvBox::point(quarter), 120);
  IvBox oracle = oracles::erf_series(quarter, 300);
  // The implementation enclosure must overlap the rigorous oracle enclosure,
  // and be very tight at prec 120.
  CHECK(got.lo() <= oracle.hi());
  CHECK(oracle.lo() <= got.hi());
  CHECK(got.width(64) <= pow2(-110));

  // A few more points across the oracle's validity range.
  for (double x : {-1.75, -0.5, 0.03125, 1.0, 1.9375}) {
    BigNum bx = BigNum::from_double(x, 200);
    IvBox a = iv_elem(IvFn::Erf, IvBox::point(bx), 200);
    IvBox b = oracles::erf_series(bx, 260);
    CHECK(a.lo() <= b.hi());
    CHECK(b.lo() <= a.hi());
  }
}

TEST_CASE("sin/cos enclosures handle interior extrema") {
  // sin over [0, pi] reaches 1 at pi/2; endpoints are 0 and ~0.
  IvBox I(BigNum::zero(64), const_pi(64, Rnd::Up));
  IvBox s = iv_elem(IvFn::Sin, I, 64);
  CHECK(s.hi().to_double() == 1.0);
  CHECK(s.lo().to_double() <= 0.0);

  // cos over [-1, 1] attains its max 1 at 0.
  IvBox c = iv_elem(IvFn::Cos, IvBox::of(-1, 1, 64), 64);
  CHECK(c.hi().to_double() == 1.0);
  CHECK(c.lo().to_double() == doctest::Approx(std::cos(1.0)));

  // A full period collapses to [-1, 1].
  IvBox w = iv_elem(IvFn::Sin, IvBox::of(0, 7, 64), 64);
  CHECK(w.lo().to_double() == -1.0);
  CHECK(w.hi().to_double() == 1.0);

  // No spurious extremum: sin over [0.1, 0.2] is monotone.
  IvBox n = iv_elem(IvFn::Sin, IvBox::of(0.1, 0.2, 64), 64);
  CHECK(n.hi().to_double() < 0.21);
  CHECK(n.lo().to_double() > 0.09);
}

TEST_CASE("domain violations") {
  CHECK_THROWS_AS(iv_elem(IvFn::Log, IvBox::of(0, 1, 64), 64), DomainError);
  CHECK_THROWS_AS(iv_elem(IvFn::Sqrt, IvBox::of(-0.5, 1, 64), 64), DomainError);
}

TEST_CASE("enclosure width shrinks with precision and stays nested") {
  oracles::Rng rng(0xC0FFEE);
  for (int i = 0; i < 200; ++i) {
    double x = rng.uniform(-1.5, 1.5);
    auto fn = static_cast<IvFn>(rng.integer(0, 5));
    if (fn == IvFn::Log || fn == IvFn::Sqrt) x = std::abs(x) + 0.25;
    IvBox X60 = IvBox::point(x, 60);
    IvBox lo_prec = iv_elem(fn, X60, 60);
    IvBox hi_prec = iv_elem(fn, X60, 120);
    CHECK(hi_prec.subset_of(iv_widen(lo_prec, 60, 2)));
    // width(result) <= 4 * 2^-p * max(|lo|,|hi|) for point inputs away from
    // zeros of fn
    if (!hi_prec.contains_zero()) {
      BigNum bound = mul(pow2(-120 + 2), hi_prec.mag(), 64, Rnd::Up);
      CHECK(hi_prec.width(64) <= bound);
    }
  }
}

TEST_CASE("inclusion isotonicity on random boxes") {
  oracles::Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    double a = rng.uniform(0.3, 2.0);
    double w = rng.uniform(0.0, 0.5);
    IvBox inner = IvBox::of(a, a + w, 80);
    IvBox outer = IvBox::of(a - rng.uniform(0.0, 0.2),
                            a + w + rng.uniform(0.0, 0.2), 80);
    auto fn = static_cast<IvFn>(rng.integer(0, 5));
    IvBox fi = iv_elem(fn, inner, 80);
    IvBox fo = iv_elem(fn, outer, 80);
    CHECK(fi.subset_of(iv_widen(fo, 80, 1)));
  }
}

TEST_CASE("point arithmetic agrees with the scalar backend on random inputs") {
  oracles::Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    double a = rng.uniform(-8, 8);
    double b = rng.uniform(-8, 8);
    if (std::abs(b) < 1e-3) b = 1.0;
    long prec = 70;
    IvBox r = iv_mul(IvBox::point(a, prec), IvBox::point(b, prec), prec);
    BigNum exact = mul(BigNum::from_double(a, 200), BigNum::from_double(b, 200),
                       200, Rnd::Nearest);
    CHECK(r.contains(exact));
    CHECK(r.width(70) <= ldexp(max(r.mag(), pow2(-60)), -prec + 1));
    IvBox q = iv_div(IvBox::point(a, prec), IvBox::point(b, prec), prec);
    BigNum qe = div(BigNum::from_double(a, 200), BigNum::from_double(b, 200),
                    200, Rnd::Nearest);
    CHECK(q.contains(qe));
  }
}

TEST_CASE("hull, meet, widen") {
  IvBox a = IvBox::of(0, 1, 64);
  IvBox b = IvBox::of(0.5, 2, 64);
  CHECK(iv_hull(a, b).hi().to_double() == 2.0);
  CHECK(iv_meet(a, b).lo().to_double() == 0.5);
  CHECK_THROWS_AS(iv_meet(IvBox::of(0, 1, 64), IvBox::of(2, 3, 64)),
                  NumericalError);
  IvBox w = iv_widen(a, 64, 1);
  CHECK(w.lo() < a.lo());
  CHECK(w.hi() > a.hi());
}
