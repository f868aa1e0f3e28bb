#pragma once

#include <vector>

#include "cfpoly/interval.hpp"

namespace cfpoly {

// Validated Taylor coefficients: a Jet of order K holds interval coefficients
// t[j] enclosing f^(j)(x)/j! for every x in the expansion box, j = 0..K.
// All coefficient recurrences below hold pointwise, so evaluating them in
// interval arithmetic preserves the enclosure property.
class Jet {
 public:
  Jet(int order, long prec)
      : prec_(prec),
        coeffs_(static_cast<std::size_t>(order) + 1,
                IvBox::point(BigNum::zero(prec))) {}

  static Jet variable(const IvBox& x, int order, long prec);
  static Jet constant(const IvBox& v, int order, long prec);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  long prec() const { return prec_; }
  const IvBox& operator[](int j) const {
    return coeffs_[static_cast<std::size_t>(j)];
  }
  IvBox& operator[](int j) { return coeffs_[static_cast<std::size_t>(j)]; }

  // Drop the m lowest coefficients: the jet of f(x)/x^m when those
  // coefficients are exactly zero (f has a zero of multiplicity >= m at the
  // expansion center's hull with 0). The order shrinks by m.
  Jet shifted_down(int m) const;

 private:
  long prec_;
  std::vector<IvBox> coeffs_;
};

Jet jet_add(const Jet& a, const Jet& b);
Jet jet_sub(const Jet& a, const Jet& b);
Jet jet_neg(const Jet& a);
Jet jet_mul(const Jet& a, const Jet& b);
// b[0] must not contain zero.
Jet jet_div(const Jet& a, const Jet& b);
Jet jet_pow_si(const Jet& a, long k);
Jet jet_exp(const Jet& u);
Jet jet_log(const Jet& u);
Jet jet_sin(const Jet& u);
Jet jet_cos(const Jet& u);
Jet jet_sqrt(const Jet& u);
Jet jet_erf(const Jet& u);

// Reciprocal coefficients up to the jet's order (h[0] must exclude zero).
Jet jet_recip(const Jet& h);

// Evaluate the order-k centered form around mid(X):
//   sum_{j<k} point_jet[j] * dm^j  +  box_jet[k] * dm^k,   dm = X - mid.
// point_jet must have order >= k-1 at the midpoint, box_jet order >= k on X.
IvBox jet_centered_form(const Jet& point_jet, const Jet& box_jet, int k,
                        const IvBox& X, long prec);

}  // namespace cfpoly
