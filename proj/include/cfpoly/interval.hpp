#pragma once

#include <string>

#include "cfpoly/bignum.hpp"

namespace cfpoly {

// Interval enclosure [lo, hi]. Every operation returns an outer enclosure of
// the exact image set: endpoints are rounded outward at the stated precision.
class IvBox {
 public:
  IvBox() : lo_(2L), hi_(2L) {}
  IvBox(BigNum lo, BigNum hi);

  static IvBox point(const BigNum& x) { return IvBox(x, x); }
  static IvBox point(double x, long prec) {
    return point(BigNum::from_double(x, prec));
  }
  static IvBox of(double lo, double hi, long prec) {
    return IvBox(BigNum::from_double(lo, prec), BigNum::from_double(hi, prec));
  }

  const BigNum& lo() const { return lo_; }
  const BigNum& hi() const { return hi_; }

  bool is_point() const { return lo_ == hi_; }
  bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
  bool strictly_contains_zero() const { return lo_.sgn() < 0 && hi_.sgn() > 0; }
  bool contains(const BigNum& x) const { return lo_ <= x && x <= hi_; }
  bool subset_of(const IvBox& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }

  BigNum width(long prec) const { return sub(hi_, lo_, prec, Rnd::Up); }
  BigNum mid(long prec) const;
  // max(|lo|, |hi|): magnitude bound of the interval.
  BigNum mag() const { return max(abs(lo_), abs(hi_)); }
  // min |x| over the interval (0 if it contains zero).
  BigNum mig() const;

  std::string to_string(int digits = 17) const;

 private:
  BigNum lo_, hi_;
};

enum class IvOp { Add, Sub, Mul, Div, PowInt };
enum class IvFn { Exp, Log, Sin, Cos, Sqrt, Erf };

// Basic interval arithmetic with outward rounding at prec. For PowInt the
// second operand must be an exact integer point interval (the exponent k).
IvBox iv_arith(IvOp op, const IvBox& a, const IvBox& b, long prec);

IvBox iv_add(const IvBox& a, const IvBox& b, long prec);
IvBox iv_sub(const IvBox& a, const IvBox& b, long prec);
IvBox iv_mul(const IvBox& a, const IvBox& b, long prec);
IvBox iv_div(const IvBox& a, const IvBox& b, long prec);
IvBox iv_pow(const IvBox& a, long k, long prec);
IvBox iv_neg(const IvBox& a);
IvBox iv_abs(const IvBox& a);
// Convex hull of two intervals.
IvBox iv_hull(const IvBox& a, const IvBox& b);
// Intersection; requires the intervals to overlap.
IvBox iv_meet(const IvBox& a, const IvBox& b);
// Widen both endpoints outward by 2^k_ulps units in the last place.
IvBox iv_widen(const IvBox& a, long prec, long ulps);

// Enclosure of an elementary function's exact image, by endpoint evaluation
// with directed rounding plus critical-point analysis (sin, cos).
IvBox iv_elem(IvFn fn, const IvBox& x, long prec);

// Enclosure of pi at prec.
IvBox iv_pi(long prec);

}  // namespace cfpoly
