#pragma once

#include <functional>
#include <memory>
#include <string>

#include "cfpoly/basis.hpp"
#include "cfpoly/expr.hpp"
#include "cfpoly/interval.hpp"

namespace cfpoly {

// Uniform black-box function interface: an evaluator returning enclosures of
// the exact image at any interval and precision, plus access to the first two
// derivatives. Parsed expressions, Newton-built inverses, external plugins
// and ad-hoc lambdas all hide behind this type, so the rest of the system
// treats them identically.
class FunctionHandle {
 public:
  using Eval = std::function<IvBox(const IvBox&, long)>;
  using DerivativeFactory = std::function<FunctionHandle()>;
  using JetEval = std::function<Jet(const IvBox&, long, int)>;

  FunctionHandle() = default;
  bool valid() const { return impl_ != nullptr; }

  IvBox eval(const IvBox& x, long prec) const;
  // Derivative of this handle; available for orders 1 and 2 only, a third
  // request throws DomainError. Falls back to central finite differences
  // (step 2^(-prec/3), result widened 4x) when no analytic derivative was
  // provided. The result is memoized.
  FunctionHandle derivative() const;
  bool derivative_available() const;
  // How many times this handle has already been derived (0, 1 or 2).
  int order() const;
  const std::string& label() const;

  // Internal tightening capability: validated Taylor coefficients over a
  // box, when the backing implementation can produce them (expressions,
  // polynomials, Newton inverses). 0 when unavailable. This is not part of
  // the two-derivative black-box contract; callers must handle 0.
  int max_jet_order() const;
  Jet jets(const IvBox& x, long prec, int order) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  friend FunctionHandle make_handle(std::string, FunctionHandle::Eval,
                                    FunctionHandle::DerivativeFactory, int,
                                    FunctionHandle::JetEval, int);
};

// Builds a handle from raw parts. derivative_factory may be empty (finite
// differences are used then). order is the derivative order of this handle
// itself relative to the underlying function.
FunctionHandle make_handle(std::string label, FunctionHandle::Eval eval,
                           FunctionHandle::DerivativeFactory derivative_factory = nullptr,
                           int order = 0,
                           FunctionHandle::JetEval jet_eval = nullptr,
                           int max_jet_order = 0);

// Handle evaluating a parsed expression by interval arithmetic; derivatives
// come from symbolic differentiation.
FunctionHandle to_handle(const Expr::Ptr& e);

// Handle evaluating a polynomial (dense interval Horner).
FunctionHandle poly_handle(const Poly& p, const std::string& label = "poly");

// Functional inverse by Newton iteration. f must be strictly monotonic on
// codomain_seed with a nonvanishing first derivative there; domain is the
// input range of the returned handle g (so f(g(y)) = y for y in domain), and
// codomain_seed must enclose g(domain). Derivatives of g follow the
// inverse-function rule: g' = 1/f'(g), g'' = -f''(g)/f'(g)^3.
FunctionHandle newton_inverse(const FunctionHandle& f, const IvBox& domain,
                              const IvBox& codomain_seed);

// Handle backed by an external executable speaking the textual enclosure
// protocol: it is invoked as
//     <path> <order> <lo> <hi> <prec>
// with lo/hi outward-rounded decimal strings, and must print two decimal
// strings bracketing the image of f^(order) over [lo, hi], or the single
// token "unsupported" for derivative orders it cannot evaluate (those fall
// back to finite differences).
FunctionHandle plugin_handle(const std::string& path);

}  // namespace cfpoly
