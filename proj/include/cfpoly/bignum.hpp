#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace cfpoly {

// Rounding direction of an operation.
enum class Rnd { Nearest, Down, Up, Zero };

inline mpfr_rnd_t to_mpfr(Rnd r) {
  switch (r) {
    case Rnd::Nearest: return MPFR_RNDN;
    case Rnd::Down: return MPFR_RNDD;
    case Rnd::Up: return MPFR_RNDU;
    case Rnd::Zero: return MPFR_RNDZ;
  }
  return MPFR_RNDN;
}

// Configurable-precision binary floating-point number. Value semantics;
// precision is a property of the value, and every operation states the
// precision and rounding direction of its result. MPFR guarantees correct
// rounding at that precision for all operations used here.
class BigNum {
 public:
  BigNum() { mpfr_init2(v_, 2); mpfr_set_zero(v_, 1); }
  explicit BigNum(long prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigNum(const BigNum& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigNum(BigNum&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  BigNum& operator=(BigNum o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigNum() { mpfr_clear(v_); }

  long precision() const { return mpfr_get_prec(v_); }

  static BigNum zero(long prec) { return BigNum(prec); }
  static BigNum from_double(double x, long prec);
  static BigNum from_long(long x, long prec);
  // Decimal or hexadecimal ("0x...") literal, correctly rounded at prec.
  static BigNum from_string(const std::string& s, long prec, Rnd r);
  // Exact value mantissa * 2^e; mantissa is a decimal integer string of
  // arbitrary length. The result carries exactly enough precision.
  static BigNum from_int2k(const std::string& mantissa, long e);

  double to_double(Rnd r = Rnd::Nearest) const {
    return mpfr_get_d(v_, to_mpfr(r));
  }
  // Exact hexadecimal float ("0x1.8p-3" style); round-trips bit-exactly.
  std::string to_hex() const;
  std::string to_decimal(int significant_digits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  // Exponent e such that |x| in [2^(e-1), 2^e); only valid for nonzero values.
  long exponent() const { return mpfr_get_exp(v_); }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

// ---- arithmetic, result correctly rounded at prec in direction r ----

BigNum add(const BigNum& a, const BigNum& b, long prec, Rnd r);
BigNum sub(const BigNum& a, const BigNum& b, long prec, Rnd r);
BigNum mul(const BigNum& a, const BigNum& b, long prec, Rnd r);
BigNum div(const BigNum& a, const BigNum& b, long prec, Rnd r);
BigNum pow_si(const BigNum& a, long k, long prec, Rnd r);
BigNum sqrt(const BigNum& a, long prec, Rnd r);
BigNum exp(const BigNum& a, long prec, Rnd r);
BigNum log(const BigNum& a, long prec, Rnd r);
BigNum sin(const BigNum& a, long prec, Rnd r);
BigNum cos(const BigNum& a, long prec, Rnd r);
BigNum erf(const BigNum& a, long prec, Rnd r);
BigNum const_pi(long prec, Rnd r);

// Exact operations (no rounding).
BigNum neg(const BigNum& a);
BigNum abs(const BigNum& a);
BigNum ldexp(const BigNum& a, long k);
// 2^k as an exact BigNum.
BigNum pow2(long k);

int cmp(const BigNum& a, const BigNum& b);
inline bool operator<(const BigNum& a, const BigNum& b) { return cmp(a, b) < 0; }
inline bool operator>(const BigNum& a, const BigNum& b) { return cmp(a, b) > 0; }
inline bool operator<=(const BigNum& a, const BigNum& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const BigNum& a, const BigNum& b) { return cmp(a, b) >= 0; }
inline bool operator==(const BigNum& a, const BigNum& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const BigNum& a, const BigNum& b) { return !(a == b); }

BigNum min(const BigNum& a, const BigNum& b);
BigNum max(const BigNum& a, const BigNum& b);

// log2(|a|) as a double; -inf for zero. Used for reporting error exponents.
double log2_abs(const BigNum& a);

}  // namespace cfpoly
