#include "cfpoly/bignum.hpp"

#include "doctest.h"

using namespace cfpoly;

TEST_CASE("construction and exact round-trips") {
  BigNum a = BigNum::from_double(0.75, 53);
  CHECK(a.to_double() == 0.75);
  CHECK(a.to_hex() == BigNum::from_string(a.to_hex(), 53, Rnd::Nearest).to_hex());

  BigNum b = BigNum::from_string("0x1.8p-3", 53, Rnd::Nearest);
  CHECK(b.to_double() == 0.1875);

  BigNum c = BigNum::from_int2k("4970345142530923", -55);
  CHECK(c.to_double() == 4970345142530923.0 * 0x1.0p-55);
  CHECK(c.precision() == 53);

  BigNum d = BigNum::from_int2k("119383704169626743428469396878343", -108);
  CHECK(d.precision() == 107);
  CHECK(d > BigNum::zero(2));
}

TEST_CASE("directed rounding brackets the exact value") {
  BigNum one = BigNum::from_long(1, 60);
  BigNum three = BigNum::from_long(3, 60);
  BigNum lo = div(one, three, 60, Rnd::Down);
  BigNum hi = div(one, three, 60, Rnd::Up);
  CHECK(lo < hi);
  // 1/3 at 200 bits sits strictly between the 60-bit brackets.
  BigNum ref = div(BigNum::from_long(1, 200), BigNum::from_long(3, 200), 200,
                   Rnd::Nearest);
  CHECK(lo < ref);
  CHECK(ref < hi);
  // and the brackets are one ulp apart
  BigNum w = sub(hi, lo, 60, Rnd::Up);
  CHECK(w <= ldexp(BigNum::from_long(1, 8), -60 - 1));
}

TEST_CASE("exact helpers") {
  BigNum x = BigNum::from_double(-1.5, 53);
  CHECK(neg(x).to_double() == 1.5);
  CHECK(abs(x).to_double() == 1.5);
  CHECK(ldexp(x, 3).to_double() == -12.0);
  CHECK(pow2(-8).to_double() == 0x1.0p-8);
  CHECK(pow2(0).to_double() == 1.0);
  CHECK(min(x, neg(x)).to_double() == -1.5);
  CHECK(max(x, neg(x)).to_double() == 1.5);
  CHECK(log2_abs(pow2(-90)) == doctest::Approx(-90.0));
}

TEST_CASE("comparisons and properties") {
  CHECK(BigNum::zero(10).is_zero());
  CHECK(BigNum::from_long(-7, 20).sgn() == -1);
  CHECK(BigNum::from_double(6.0, 53).exponent() == 3);  // 6 in [4, 8)
  CHECK(cmp(BigNum::from_long(2, 10), BigNum::from_long(3, 200)) < 0);
}

TEST_CASE("decimal parsing is correctly rounded") {
  // 0.1 is not a binary float; Down/Up must bracket it.
  BigNum lo = BigNum::from_string("0.1", 53, Rnd::Down);
  BigNum hi = BigNum::from_string("0.1", 53, Rnd::Up);
  CHECK(lo < hi);
  BigNum fine = BigNum::from_string("0.1", 300, Rnd::Nearest);
  CHECK(lo < fine);
  CHECK(fine < hi);
}
