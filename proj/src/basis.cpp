#include "cfpoly/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfpoly {

MonomialBasis::MonomialBasis(std::vector<long> exponents)
    : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("empty monomial basis");
  std::sort(exps_.begin(), exps_.end());
  if (std::adjacent_find(exps_.begin(), exps_.end()) != exps_.end())
    throw std::invalid_argument("duplicate exponent in monomial basis");
  if (exps_.front() < 0)
    throw std::invalid_argument("negative exponent in monomial basis");
}

MonomialBasis MonomialBasis::full(long degree) {
  std::vector<long> e(static_cast<std::size_t>(degree) + 1);
  for (long i = 0; i <= degree; ++i) e[static_cast<std::size_t>(i)] = i;
  return MonomialBasis(std::move(e));
}

bool MonomialBasis::contains(long e) const {
  return std::binary_search(exps_.begin(), exps_.end(), e);
}

std::optional<int> MonomialBasis::common_parity() const {
  int parity = static_cast<int>(exps_.front() % 2);
  for (long e : exps_)
    if (e % 2 != parity) return std::nullopt;
  return parity;
}

Poly::Poly(MonomialBasis basis, std::vector<BigNum> coefficients)
    : basis_(std::move(basis)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != basis_.size())
    throw std::invalid_argument("coefficient count does not match basis size");
}

Poly Poly::constant(const BigNum& c) {
  return Poly(MonomialBasis({0}), {c});
}

BigNum Poly::coeff(long e) const {
  const auto& exps = basis_.exponents();
  auto it = std::lower_bound(exps.begin(), exps.end(), e);
  if (it == exps.end() || *it != e) return BigNum::zero(2);
  return coeffs_[static_cast<std::size_t>(it - exps.begin())];
}

std::vector<BigNum> Poly::dense() const {
  std::vector<BigNum> d(static_cast<std::size_t>(degree()) + 1, BigNum::zero(2));
  const auto& exps = basis_.exponents();
  for (std::size_t k = 0; k < exps.size(); ++k)
    d[static_cast<std::size_t>(exps[k])] = coeffs_[k];
  return d;
}

IvBox Poly::eval(const IvBox& x, long prec) const {
  const auto& exps = basis_.exponents();
  IvBox acc = IvBox::point(coeffs_.back());
  for (std::size_t k = exps.size(); k-- > 1;) {
    long gap = exps[k] - exps[k - 1];
    acc = iv_mul(acc, iv_pow(x, gap, prec), prec);
    acc = iv_add(acc, IvBox::point(coeffs_[k - 1]), prec);
  }
  if (exps.front() > 0) acc = iv_mul(acc, iv_pow(x, exps.front(), prec), prec);
  return acc;
}

BigNum Poly::eval_point(const BigNum& x, long prec) const {
  const auto& exps = basis_.exponents();
  BigNum acc = coeffs_.back();
  for (std::size_t k = exps.size(); k-- > 1;) {
    long gap = exps[k] - exps[k - 1];
    acc = mul(acc, pow_si(x, gap, prec, Rnd::Nearest), prec, Rnd::Nearest);
    acc = add(acc, coeffs_[k - 1], prec, Rnd::Nearest);
  }
  if (exps.front() > 0)
    acc = mul(acc, pow_si(x, exps.front(), prec, Rnd::Nearest), prec,
              Rnd::Nearest);
  return acc;
}

Poly Poly::derivative() const {
  const auto& exps = basis_.exponents();
  std::vector<long> de;
  std::vector<BigNum> dc;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    de.push_back(exps[k] - 1);
    long p = coeffs_[k].precision() + 8;
    dc.push_back(mul(coeffs_[k], BigNum::from_long(exps[k], 16), p, Rnd::Nearest));
  }
  if (de.empty()) return Poly::constant(BigNum::zero(2));
  return Poly(MonomialBasis(std::move(de)), std::move(dc));
}

std::vector<Poly> Poly::taylor_derivatives(int k) const {
  // Exact successive derivatives; the 1/j! scaling happens at evaluation
  // time in interval arithmetic so no rigor is lost here.
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  out.push_back(*this);
  Poly zero = Poly::constant(BigNum::zero(2));
  for (int j = 1; j <= k; ++j) {
    const Poly& prev = out.back();
    if (prev.degree() == 0 && prev.coefficients()[0].is_zero()) {
      out.push_back(zero);
      continue;
    }
    out.push_back(prev.derivative());
  }
  return out;
}

Jet poly_jet(const std::vector<Poly>& derivatives, const IvBox& x, long prec,
             int order) {
  Jet out(order, prec);
  BigNum factorial = BigNum::from_long(1, 160);  // exact through 32!
  for (int j = 0; j <= order; ++j) {
    if (j > 0)
      factorial = mul(factorial, BigNum::from_long(j, 16), 160, Rnd::Nearest);
    if (j < static_cast<int>(derivatives.size()))
      out[j] = iv_div(derivatives[static_cast<std::size_t>(j)].eval(x, prec),
                      IvBox::point(factorial), prec);
  }
  return out;
}

Poly Poly::divide_by_power(long m) const {
  if (m == 0) return *this;
  if (basis_.min_exponent() < m)
    throw std::invalid_argument("divide_by_power: exponent below divisor");
  std::vector<long> e;
  for (long exp : basis_.exponents()) e.push_back(exp - m);
  return Poly(MonomialBasis(std::move(e)), coeffs_);
}

Poly Poly::with_zeroed(const std::vector<long>& exponents) const {
  std::vector<BigNum> c = coeffs_;
  const auto& exps = basis_.exponents();
  for (long e : exponents) {
    auto it = std::lower_bound(exps.begin(), exps.end(), e);
    if (it != exps.end() && *it == e)
      c[static_cast<std::size_t>(it - exps.begin())] = BigNum::zero(2);
  }
  return Poly(basis_, std::move(c));
}

}  // namespace cfpoly
