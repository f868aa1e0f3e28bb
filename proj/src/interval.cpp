#include "cfpoly/interval.hpp"

#include <stdexcept>

#include "cfpoly/errors.hpp"

namespace cfpoly {

IvBox::IvBox(BigNum lo, BigNum hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.is_nan() || hi_.is_nan() || lo_ > hi_)
    throw std::invalid_argument("invalid interval [" + lo_.to_decimal(8) +
                                ", " + hi_.to_decimal(8) + "]");
}

BigNum IvBox::mid(long prec) const {
  BigNum s = add(lo_, hi_, prec + 2, Rnd::Nearest);
  BigNum m = ldexp(s, -1);
  // Clamp into the interval so callers can rely on mid being a member.
  if (m < lo_) return lo_;
  if (m > hi_) return hi_;
  BigNum out(prec);
  mpfr_set(out.raw(), m.raw(), MPFR_RNDN);
  if (out < lo_) return lo_;
  if (out > hi_) return hi_;
  return out;
}

BigNum IvBox::mig() const {
  if (contains_zero()) return BigNum::zero(2);
  return min(abs(lo_), abs(hi_));
}

std::string IvBox::to_string(int digits) const {
  return "[" + lo_.to_decimal(digits) + ", " + hi_.to_decimal(digits) + "]";
}

IvBox iv_add(const IvBox& a, const IvBox& b, long prec) {
  return IvBox(add(a.lo(), b.lo(), prec, Rnd::Down),
               add(a.hi(), b.hi(), prec, Rnd::Up));
}

IvBox iv_sub(const IvBox& a, const IvBox& b, long prec) {
  return IvBox(sub(a.lo(), b.hi(), prec, Rnd::Down),
               sub(a.hi(), b.lo(), prec, Rnd::Up));
}

IvBox iv_mul(const IvBox& a, const IvBox& b, long prec) {
  const BigNum* as[2] = {&a.lo(), &a.hi()};
  const BigNum* bs[2] = {&b.lo(), &b.hi()};
  BigNum lo = mul(a.lo(), b.lo(), prec, Rnd::Down);
  BigNum hi = mul(a.lo(), b.lo(), prec, Rnd::Up);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      lo = min(lo, mul(*as[i], *bs[j], prec, Rnd::Down));
      hi = max(hi, mul(*as[i], *bs[j], prec, Rnd::Up));
    }
  return IvBox(lo, hi);
}

IvBox iv_div(const IvBox& a, const IvBox& b, long prec) {
  if (b.contains_zero())
    throw DomainError("interval division by an interval containing zero");
  const BigNum* as[2] = {&a.lo(), &a.hi()};
  const BigNum* bs[2] = {&b.lo(), &b.hi()};
  BigNum lo = div(a.lo(), b.lo(), prec, Rnd::Down);
  BigNum hi = div(a.lo(), b.lo(), prec, Rnd::Up);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      lo = min(lo, div(*as[i], *bs[j], prec, Rnd::Down));
      hi = max(hi, div(*as[i], *bs[j], prec, Rnd::Up));
    }
  return IvBox(lo, hi);
}

IvBox iv_pow(const IvBox& a, long k, long prec) {
  if (k == 0) return IvBox::point(BigNum::from_long(1, prec));
  if (k < 0) {
    if (a.contains_zero())
      throw DomainError("negative power of an interval containing zero");
    return iv_div(IvBox::point(BigNum::from_long(1, prec)), iv_pow(a, -k, prec),
                  prec);
  }
  if (k % 2 == 1) {
    // odd power: monotone increasing
    return IvBox(pow_si(a.lo(), k, prec, Rnd::Down),
                 pow_si(a.hi(), k, prec, Rnd::Up));
  }
  // even power: |.|^k
  if (a.contains_zero())
    return IvBox(BigNum::zero(prec), pow_si(a.mag(), k, prec, Rnd::Up));
  return IvBox(pow_si(a.mig(), k, prec, Rnd::Down),
               pow_si(a.mag(), k, prec, Rnd::Up));
}

IvBox iv_neg(const IvBox& a) { return IvBox(neg(a.hi()), neg(a.lo())); }

IvBox iv_abs(const IvBox& a) {
  if (a.contains_zero()) return IvBox(BigNum::zero(2), a.mag());
  return IvBox(a.mig(), a.mag());
}

IvBox iv_hull(const IvBox& a, const IvBox& b) {
  return IvBox(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

IvBox iv_meet(const IvBox& a, const IvBox& b) {
  BigNum lo = max(a.lo(), b.lo());
  BigNum hi = min(a.hi(), b.hi());
  if (lo > hi) throw NumericalError("empty interval intersection");
  return IvBox(lo, hi);
}

IvBox iv_widen(const IvBox& a, long prec, long ulps) {
  BigNum lo(prec), hi(prec);
  mpfr_set(lo.raw(), a.lo().raw(), MPFR_RNDD);
  mpfr_set(hi.raw(), a.hi().raw(), MPFR_RNDU);
  for (long i = 0; i < ulps; ++i) {
    mpfr_nextbelow(lo.raw());
    mpfr_nextabove(hi.raw());
  }
  return IvBox(lo, hi);
}

IvBox iv_arith(IvOp op, const IvBox& a, const IvBox& b, long prec) {
  if (prec < 2) throw std::invalid_argument("precision must be >= 2");
  switch (op) {
    case IvOp::Add: return iv_add(a, b, prec);
    case IvOp::Sub: return iv_sub(a, b, prec);
    case IvOp::Mul: return iv_mul(a, b, prec);
    case IvOp::Div: return iv_div(a, b, prec);
    case IvOp::PowInt: {
      if (!b.is_point() || mpfr_integer_p(b.lo().raw()) == 0)
        throw DomainError("power exponent must be an exact integer point");
      return iv_pow(a, mpfr_get_si(b.lo().raw(), MPFR_RNDN), prec);
    }
  }
  throw std::logic_error("unreachable");
}

IvBox iv_pi(long prec) {
  return IvBox(const_pi(prec, Rnd::Down), const_pi(prec, Rnd::Up));
}

namespace {

using fn1 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

IvBox endpoints_increasing(fn1 f, const IvBox& x, long prec) {
  BigNum lo(prec), hi(prec);
  f(lo.raw(), x.lo().raw(), MPFR_RNDD);
  f(hi.raw(), x.hi().raw(), MPFR_RNDU);
  return IvBox(lo, hi);
}

// True if an integer k exists with t.lo <= k <= t.hi. Exact on BigNums.
bool contains_integer(const IvBox& t) {
  BigNum f(t.hi().precision() + 4);
  mpfr_floor(f.raw(), t.hi().raw());
  return f >= t.lo();
}

// Does [x] contain a point c + k*step for integer k? c and step are given as
// enclosures; the test is conservative (may answer yes when the true point is
// just outside, never no when one is inside).
bool hits_lattice(const IvBox& x, const IvBox& c, const IvBox& step,
                  long prec) {
  IvBox t = iv_div(iv_sub(x, c, prec), step, prec);
  return contains_integer(t);
}

IvBox sin_cos_enclosure(bool is_sin, const IvBox& x, long prec) {
  long p = prec + 32;
  IvBox pi = iv_pi(p);
  IvBox two_pi = iv_add(pi, pi, p);
  // Wider than a full period: the image is exactly [-1, 1].
  if (x.width(p) > two_pi.hi())
    return IvBox(BigNum::from_long(-1, prec), BigNum::from_long(1, prec));

  BigNum lo(prec), hi(prec);
  if (is_sin) {
    mpfr_sin(lo.raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_sin(hi.raw(), x.lo().raw(), MPFR_RNDU);
    BigNum l2(prec), h2(prec);
    mpfr_sin(l2.raw(), x.hi().raw(), MPFR_RNDD);
    mpfr_sin(h2.raw(), x.hi().raw(), MPFR_RNDU);
    lo = min(lo, l2);
    hi = max(hi, h2);
  } else {
    mpfr_cos(lo.raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_cos(hi.raw(), x.lo().raw(), MPFR_RNDU);
    BigNum l2(prec), h2(prec);
    mpfr_cos(l2.raw(), x.hi().raw(), MPFR_RNDD);
    mpfr_cos(h2.raw(), x.hi().raw(), MPFR_RNDU);
    lo = min(lo, l2);
    hi = max(hi, h2);
  }

  // Maxima of sin at pi/2 + 2k*pi, minima at -pi/2 + 2k*pi.
  // Maxima of cos at 2k*pi, minima at pi + 2k*pi.
  IvBox half_pi(ldexp(pi.lo(), -1), ldexp(pi.hi(), -1));
  IvBox zero = IvBox::point(BigNum::zero(2));
  const IvBox& max_at = is_sin ? half_pi : zero;
  IvBox min_at = is_sin ? iv_neg(half_pi) : pi;
  if (hits_lattice(x, max_at, two_pi, p)) hi = BigNum::from_long(1, prec);
  if (hits_lattice(x, min_at, two_pi, p)) lo = BigNum::from_long(-1, prec);
  return IvBox(lo, hi);
}

}  // namespace

IvBox iv_elem(IvFn fn, const IvBox& x, long prec) {
  switch (fn) {
    case IvFn::Exp:
      return endpoints_increasing(mpfr_exp, x, prec);
    case IvFn::Erf:
      return endpoints_increasing(mpfr_erf, x, prec);
    case IvFn::Log:
      if (x.lo().sgn() <= 0)
        throw DomainError("log of an interval reaching x <= 0");
      return endpoints_increasing(mpfr_log, x, prec);
    case IvFn::Sqrt:
      if (x.lo().sgn() < 0)
        throw DomainError("sqrt of an interval reaching x < 0");
      return endpoints_increasing(mpfr_sqrt, x, prec);
    case IvFn::Sin:
      return sin_cos_enclosure(true, x, prec);
    case IvFn::Cos:
      return sin_cos_enclosure(false, x, prec);
  }
  throw std::logic_error("unreachable");
}

}  // namespace cfpoly
