#include "cfpoly/bignum.hpp"

#include <gmp.h>

#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <vector>

namespace cfpoly {

BigNum BigNum::from_double(double x, long prec) {
  BigNum n(prec);
  mpfr_set_d(n.v_, x, MPFR_RNDN);  // exact whenever prec >= 53
  return n;
}

BigNum BigNum::from_long(long x, long prec) {
  BigNum n(prec);
  mpfr_set_si(n.v_, x, MPFR_RNDN);
  return n;
}

BigNum BigNum::from_string(const std::string& s, long prec, Rnd r) {
  BigNum n(prec);
  int base = 10;
  std::string t = s;
  std::size_t at = t.find("0x");
  if (at == std::string::npos) at = t.find("0X");
  if (at != std::string::npos && (at == 0 || (at == 1 && (t[0] == '-' || t[0] == '+')))) {
    base = 16;
    t.erase(at, 2);
  }
  if (mpfr_set_str(n.v_, t.c_str(), base, to_mpfr(r)) != 0)
    throw std::invalid_argument("not a valid number literal: " + s);
  return n;
}

BigNum BigNum::from_int2k(const std::string& mantissa, long e) {
  mpz_t z;
  mpz_init(z);
  if (mpz_set_str(z, mantissa.c_str(), 10) != 0) {
    mpz_clear(z);
    throw std::invalid_argument("not an integer: " + mantissa);
  }
  long bits = static_cast<long>(mpz_sizeinbase(z, 2));
  BigNum n(bits < 2 ? 2 : bits);
  mpfr_set_z_2exp(n.raw(), z, e, MPFR_RNDN);  // exact at this precision
  mpz_clear(z);
  return n;
}

std::string BigNum::to_hex() const {
  char* s = nullptr;
  // %Ra prints the exact value with as many hex digits as needed.
  if (mpfr_asprintf(&s, "%Ra", v_) < 0) throw std::bad_alloc();
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string BigNum::to_decimal(int significant_digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", significant_digits, v_) < 0)
    throw std::bad_alloc();
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {
using unary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
using binary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

BigNum apply1(unary_fn f, const BigNum& a, long prec, Rnd r) {
  BigNum out(prec);
  f(out.raw(), a.raw(), to_mpfr(r));
  return out;
}

BigNum apply2(binary_fn f, const BigNum& a, const BigNum& b, long prec, Rnd r) {
  BigNum out(prec);
  f(out.raw(), a.raw(), b.raw(), to_mpfr(r));
  return out;
}
}  // namespace

BigNum add(const BigNum& a, const BigNum& b, long prec, Rnd r) { return apply2(mpfr_add, a, b, prec, r); }
BigNum sub(const BigNum& a, const BigNum& b, long prec, Rnd r) { return apply2(mpfr_sub, a, b, prec, r); }
BigNum mul(const BigNum& a, const BigNum& b, long prec, Rnd r) { return apply2(mpfr_mul, a, b, prec, r); }
BigNum div(const BigNum& a, const BigNum& b, long prec, Rnd r) { return apply2(mpfr_div, a, b, prec, r); }
BigNum sqrt(const BigNum& a, long prec, Rnd r) { return apply1(mpfr_sqrt, a, prec, r); }
BigNum exp(const BigNum& a, long prec, Rnd r) { return apply1(mpfr_exp, a, prec, r); }
BigNum log(const BigNum& a, long prec, Rnd r) { return apply1(mpfr_log, a, prec, r); }
BigNum sin(const BigNum& a, long prec, Rnd r) { return apply1(mpfr_sin, a, prec, r); }
BigNum cos(const BigNum& a, long prec, Rnd r) { return apply1(mpfr_cos, a, prec, r); }
BigNum erf(const BigNum& a, long prec, Rnd r) { return apply1(mpfr_erf, a, prec, r); }

BigNum pow_si(const BigNum& a, long k, long prec, Rnd r) {
  BigNum out(prec);
  mpfr_pow_si(out.raw(), a.raw(), k, to_mpfr(r));
  return out;
}

BigNum const_pi(long prec, Rnd r) {
  BigNum out(prec);
  mpfr_const_pi(out.raw(), to_mpfr(r));
  return out;
}

BigNum neg(const BigNum& a) {
  BigNum out(a.precision());
  mpfr_neg(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

BigNum abs(const BigNum& a) {
  BigNum out(a.precision());
  mpfr_abs(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

BigNum ldexp(const BigNum& a, long k) {
  BigNum out(a.precision());
  mpfr_mul_2si(out.raw(), a.raw(), k, MPFR_RNDN);
  return out;
}

BigNum pow2(long k) {
  BigNum out(2L);
  mpfr_set_si_2exp(out.raw(), 1, k, MPFR_RNDN);
  return out;
}

int cmp(const BigNum& a, const BigNum& b) { return mpfr_cmp(a.raw(), b.raw()); }

BigNum min(const BigNum& a, const BigNum& b) { return cmp(a, b) <= 0 ? a : b; }
BigNum max(const BigNum& a, const BigNum& b) { return cmp(a, b) >= 0 ? a : b; }

double log2_abs(const BigNum& a) {
  if (a.is_zero()) return -std::numeric_limits<double>::infinity();
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_abs(t, a.raw(), MPFR_RNDN);
  mpfr_log2(t, t, MPFR_RNDN);
  double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

}  // namespace cfpoly
