#pragma once

#include <utility>

#include "cfpoly/basis.hpp"
#include "cfpoly/function.hpp"

namespace cfpoly {

struct NormResult {
  BigNum lower_witness;  // |g| provably attained at argmax
  BigNum upper_bound;    // rigorous only when certified is set
  BigNum argmax;
  bool certified = false;
};

// Certified inf/sup of g over I by adaptive bisection: boxes are split until
// the hull of sub-enclosures is within tol (relative) of the best point
// evaluations. Enclosures use the centered form g(mid) + g'(X)(X - mid)
// whenever a derivative is available. Throws NumericalError past 2^20 boxes.
std::pair<BigNum, BigNum> range_bounds(const FunctionHandle& g, const IvBox& I,
                                       const BigNum& tol, long prec);

// Uncertified estimate of sup |g| over I: evaluates a Chebyshev-distributed
// grid, refines each local maximum by golden-section search to relative
// x-tolerance 2^-(prec/2). upper_bound = lower_witness * (1 + 2^-20).
NormResult infnorm_fast(const FunctionHandle& g, const IvBox& I, long samples,
                        long prec);

// Certified sup |g| over I with branch-and-prune; on return
// upper_bound - lower_witness <= tol * upper_bound.
NormResult infnorm_certified(const FunctionHandle& g, const IvBox& I,
                             const BigNum& tol, long prec);

// ---- error-function handles used by the Remez iteration and the driver ----

// p(x) - f(x), with symbolic derivative p' - f'.
FunctionHandle absolute_error_handle(const Poly& p, const FunctionHandle& f);

// p(x)/f(x) - 1. zero_multiplicity m in {0,1,2} states the multiplicity of
// f's zero at x = 0; on boxes reaching 0, f(x)/x^m is enclosed through the
// mean-value form (f'/1 for m=1, f''/2 for m=2) so the limit value at 0 is
// evaluated per (p^(m)(0)/m!)/(f^(m)(0)/m!) - 1. Requires the lowest
// exponent of p to be >= m.
FunctionHandle relative_error_handle(const Poly& p, const FunctionHandle& f,
                                     int zero_multiplicity);

// p(x)*w(x) - f(x).
FunctionHandle weighted_error_handle(const Poly& p, const FunctionHandle& f,
                                     const FunctionHandle& w);

// Multiplicity of f's zero at x = 0: 0 when f(0) is provably nonzero, else 1
// or 2 by inspecting f'(0), f''(0) enclosures. Multiplicity above 2 (or an
// undecidable case) throws DomainError, matching the two-derivative contract.
int detect_zero_multiplicity(const FunctionHandle& f, long prec);

// Negation wrapper preserving derivative availability.
FunctionHandle negate_handle(const FunctionHandle& g);

}  // namespace cfpoly
