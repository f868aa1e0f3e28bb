#pragma once

#include <optional>
#include <vector>

#include "cfpoly/bignum.hpp"
#include "cfpoly/interval.hpp"
#include "cfpoly/jet.hpp"

namespace cfpoly {

// A sorted set of distinct non-negative exponents {i_0 < i_1 < ... < i_n}.
class MonomialBasis {
 public:
  explicit MonomialBasis(std::vector<long> exponents);
  static MonomialBasis full(long degree);  // {0, 1, ..., degree}

  const std::vector<long>& exponents() const { return exps_; }
  std::size_t size() const { return exps_.size(); }
  long degree() const { return exps_.back(); }
  long min_exponent() const { return exps_.front(); }
  bool contains(long e) const;
  // 0 if all exponents even, 1 if all odd, nullopt for mixed parity.
  std::optional<int> common_parity() const;
  bool operator==(const MonomialBasis& o) const { return exps_ == o.exps_; }

 private:
  std::vector<long> exps_;
};

// Real-coefficient polynomial over a monomial basis. Exponents not in the
// basis have an implicit zero coefficient; evaluation runs Horner over the
// dense degree range.
class Poly {
 public:
  Poly(MonomialBasis basis, std::vector<BigNum> coefficients);
  static Poly constant(const BigNum& c);

  const MonomialBasis& basis() const { return basis_; }
  const std::vector<BigNum>& coefficients() const { return coeffs_; }
  long degree() const { return basis_.degree(); }
  // Coefficient of x^e (zero when e is outside the basis).
  BigNum coeff(long e) const;
  // Dense coefficient vector c[0..degree] with implicit zeros filled in.
  std::vector<BigNum> dense() const;

  IvBox eval(const IvBox& x, long prec) const;
  BigNum eval_point(const BigNum& x, long prec) const;

  Poly derivative() const;
  // Scaled derivatives p^(j)/j! for j = 0..k (entries past the degree are
  // the zero polynomial).
  std::vector<Poly> taylor_derivatives(int k) const;
  // p / x^m, exact; requires every exponent >= m.
  Poly divide_by_power(long m) const;
  // Replace the coefficients of the given exponents with exact zeros,
  // keeping the basis (used to probe cancellation behavior).
  Poly with_zeroed(const std::vector<long>& exponents) const;

 private:
  MonomialBasis basis_;
  std::vector<BigNum> coeffs_;
};

// Exact jet of a polynomial over a box, from its scaled derivatives.
Jet poly_jet(const std::vector<Poly>& scaled_derivatives, const IvBox& x,
             long prec, int order);

}  // namespace cfpoly
