#include "cfpoly/rational.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>

namespace cfpoly {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
  mpq_canonicalize(q_);
}

Rational Rational::from_decimal(const std::string& s) {
  std::string digits;
  long frac_len = 0, exp10 = 0;
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  bool any = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    digits += s[i];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      digits += s[i];
      ++frac_len;
      any = true;
    }
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    long sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
      sign = s[i++] == '-' ? -1 : 1;
    if (i >= s.size()) throw std::invalid_argument("bad exponent in " + s);
    long e = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
      e = e * 10 + (s[i] - '0');
    exp10 = sign * e;
  }
  if (!any || i != s.size())
    throw std::invalid_argument("not a decimal literal: " + s);

  Rational r;
  if (digits.empty()) digits = "0";
  mpz_set_str(mpq_numref(r.q_), digits.c_str(), 10);
  long down = frac_len - exp10;  // value = digits / 10^down
  mpz_t p10;
  mpz_init(p10);
  mpz_ui_pow_ui(p10, 10, static_cast<unsigned long>(down < 0 ? -down : down));
  if (down >= 0)
    mpz_set(mpq_denref(r.q_), p10);
  else
    mpz_mul(mpq_numref(r.q_), mpq_numref(r.q_), p10);
  mpz_clear(p10);
  mpq_canonicalize(r.q_);
  if (negative) mpq_neg(r.q_, r.q_);
  return r;
}

Rational Rational::from_hex_float(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  if (s.size() < i + 2 || s[i] != '0' || (s[i + 1] != 'x' && s[i + 1] != 'X'))
    throw std::invalid_argument("not a hex float: " + s);
  i += 2;
  std::string digits;
  long frac_len = 0, exp2 = 0;
  bool any = false;
  auto is_hex = [](char c) {
    return std::isxdigit(static_cast<unsigned char>(c)) != 0;
  };
  for (; i < s.size() && is_hex(s[i]); ++i) {
    digits += s[i];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && is_hex(s[i]); ++i) {
      digits += s[i];
      ++frac_len;
      any = true;
    }
  }
  if (i < s.size() && (s[i] == 'p' || s[i] == 'P')) {
    ++i;
    long sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
      sign = s[i++] == '-' ? -1 : 1;
    if (i >= s.size()) throw std::invalid_argument("bad exponent in " + s);
    long e = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
      e = e * 10 + (s[i] - '0');
    exp2 = sign * e;
  }
  if (!any || i != s.size())
    throw std::invalid_argument("not a hex float literal: " + s);

  Rational r;
  if (digits.empty()) digits = "0";
  mpz_set_str(mpq_numref(r.q_), digits.c_str(), 16);
  long down = 4 * frac_len - exp2;  // value = digits / 2^down
  mpz_t p2;
  mpz_init(p2);
  mpz_ui_pow_ui(p2, 2, static_cast<unsigned long>(down < 0 ? -down : down));
  if (down >= 0)
    mpz_set(mpq_denref(r.q_), p2);
  else
    mpz_mul(mpq_numref(r.q_), mpq_numref(r.q_), p2);
  mpz_clear(p2);
  mpq_canonicalize(r.q_);
  if (negative) mpq_neg(r.q_, r.q_);
  return r;
}

Rational Rational::pow2(long k) {
  Rational r(1, 1);
  mpz_t p2;
  mpz_init(p2);
  mpz_ui_pow_ui(p2, 2, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0)
    mpz_set(mpq_numref(r.q_), p2);
  else
    mpz_set(mpq_denref(r.q_), p2);
  mpz_clear(p2);
  return r;
}

long Rational::to_long() const {
  if (!is_integer() || !mpz_fits_slong_p(mpq_numref(q_)))
    throw std::invalid_argument("rational is not a small integer");
  return mpz_get_si(mpq_numref(q_));
}

Rational Rational::operator-() const {
  Rational r(*this);
  mpq_neg(r.q_, r.q_);
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  Rational r;
  mpq_add(r.q_, q_, o.q_);
  return r;
}

Rational Rational::operator-(const Rational& o) const {
  Rational r;
  mpq_sub(r.q_, q_, o.q_);
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  Rational r;
  mpq_mul(r.q_, q_, o.q_);
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  Rational r;
  mpq_div(r.q_, q_, o.q_);
  return r;
}

Rational Rational::pow(long k) const {
  if (k == 0) return Rational(1, 1);
  Rational base = *this;
  if (k < 0) {
    if (is_zero()) throw std::invalid_argument("0 to a negative power");
    base = Rational(1, 1) / base;
    k = -k;
  }
  Rational acc(1, 1);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

BigNum Rational::to_bignum(long prec, Rnd r) const {
  BigNum out(prec);
  mpfr_set_q(out.raw(), q_, to_mpfr(r));
  return out;
}

IvBox Rational::to_interval(long prec) const {
  return IvBox(to_bignum(prec, Rnd::Down), to_bignum(prec, Rnd::Up));
}

std::string Rational::to_string() const {
  std::unique_ptr<char, void (*)(char*)> s(
      mpq_get_str(nullptr, 10, q_), [](char* p) { std::free(p); });
  return std::string(s.get());
}

}  // namespace cfpoly
