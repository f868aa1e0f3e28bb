#pragma once

#include <gmp.h>

#include <string>

#include "cfpoly/bignum.hpp"
#include "cfpoly/interval.hpp"

namespace cfpoly {

// Exact rational number (GMP mpq wrapper). Used for literal constants in
// expressions: decimal, hex-float and 2^k literals are all exact rationals.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long num, long den);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(Rational o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  // Parses a decimal literal ("1.25", "3", "0.31e2") exactly.
  static Rational from_decimal(const std::string& s);
  // Parses a hexadecimal float literal ("0x1.8p-3") exactly.
  static Rational from_hex_float(const std::string& s);
  static Rational pow2(long k);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sgn() const { return mpq_sgn(q_); }
  long to_long() const;  // requires an integer that fits

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // o must be nonzero
  Rational pow(long k) const;                   // k < 0 requires nonzero
  bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }

  // Correctly rounded conversion at prec, and an outward enclosure.
  BigNum to_bignum(long prec, Rnd r) const;
  IvBox to_interval(long prec) const;

  std::string to_string() const;

 private:
  mpq_t q_;
};

}  // namespace cfpoly
