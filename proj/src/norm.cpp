#include "cfpoly/norm.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "cfpoly/errors.hpp"

namespace cfpoly {

namespace {

constexpr long kBoxLimit = 1L << 20;

IvBox entire_line(long prec) {
  BigNum lo(prec), hi(prec);
  mpfr_set_inf(lo.raw(), -1);
  mpfr_set_inf(hi.raw(), +1);
  return IvBox(lo, hi);
}

constexpr int kFormOrder = 8;

// Tightest available enclosure of g over X: the naive interval evaluation,
// intersected with an order-k centered form from validated Taylor
// coefficients (point coefficients at the midpoint, interval remainder
// coefficient over the box) when the handle has jets, or with the
// first-order centered form when only a derivative is available. Returns
// nullopt when every route fails on this box (the caller subdivides).
std::optional<IvBox> enclose(const FunctionHandle& g, const IvBox& X,
                             long prec) {
  std::optional<IvBox> best;
  try {
    best = g.eval(X, prec);
  } catch (const DomainError&) {
  } catch (const NumericalError&) {
  }
  if (X.is_point()) return best;

  auto meet_into = [&](const IvBox& v) {
    if (!best) {
      best = v;
      return;
    }
    try {
      best = iv_meet(*best, v);
    } catch (const NumericalError&) {
      // Disjoint enclosures cannot happen for sound forms; keep the first.
    }
  };

  int k = std::min(g.max_jet_order(), kFormOrder);
  if (k >= 1) {
    try {
      Jet at_box = g.jets(X, prec, k);
      Jet at_mid = g.jets(IvBox::point(X.mid(prec)), prec, k - 1);
      meet_into(jet_centered_form(at_mid, at_box, k, X, prec));
      return best;
    } catch (const DomainError&) {
    } catch (const NumericalError&) {
    } catch (const std::logic_error&) {
    }
  }
  if (g.derivative_available()) {
    try {
      IvBox m = IvBox::point(X.mid(prec));
      IvBox gm = g.eval(m, prec);
      IvBox gp = g.derivative().eval(X, prec);
      meet_into(iv_add(gm, iv_mul(gp, iv_sub(X, m, prec), prec), prec));
    } catch (const DomainError&) {
    } catch (const NumericalError&) {
    }
  }
  return best;
}

struct Box {
  IvBox x;
  IvBox enc;  // enclosure of g (or |g|) over x; infinite when unevaluable
};

struct SupOrder {
  // Largest enclosure hi first; deterministic tie-break on the box position.
  bool operator()(const Box& a, const Box& b) const {
    int c = cmp(a.enc.hi(), b.enc.hi());
    if (c != 0) return c < 0;
    c = cmp(a.x.lo(), b.x.lo());
    if (c != 0) return c > 0;
    return cmp(a.x.hi(), b.x.hi()) > 0;
  }
};

struct SupResult {
  BigNum bound;    // rigorous upper bound for the supremum
  BigNum witness;  // provably attained value (lower bound)
  BigNum argmax;
  bool tight;  // bound - witness <= tol * scale was reached
};

// Branch-and-prune certified supremum of g (of |g| when use_abs).
SupResult certified_sup(const FunctionHandle& g, const IvBox& I,
                        const BigNum& tol, long prec, bool use_abs) {
  auto boxed = [&](const IvBox& X) -> Box {
    auto e = enclose(g, X, prec);
    if (!e) return Box{X, entire_line(prec)};
    return Box{X, use_abs ? iv_abs(*e) : *e};
  };

  std::priority_queue<Box, std::vector<Box>, SupOrder> heap;
  long splits = 0;
  BigNum witness(prec);
  BigNum argmax = I.mid(prec);
  bool have_witness = false;
  BigNum frozen(prec);  // bound contribution of width-limited boxes
  bool have_frozen = false;

  auto offer_witness = [&](const BigNum& x) {
    try {
      IvBox e = g.eval(IvBox::point(x), prec);
      if (use_abs) e = iv_abs(e);
      if (!have_witness || e.lo() > witness) {
        witness = e.lo();
        argmax = x;
        have_witness = true;
      }
    } catch (const DomainError&) {
    } catch (const NumericalError&) {
    }
  };

  offer_witness(I.lo());
  offer_witness(I.hi());
  offer_witness(I.mid(prec));
  heap.push(boxed(I));

  auto scale_of = [&](const BigNum& bound) {
    BigNum s = abs(bound);
    if (have_witness) s = max(s, abs(witness));
    return max(s, pow2(-4 * prec));
  };

  while (!heap.empty()) {
    Box top = heap.top();
    bool top_unresolved = !top.enc.hi().is_finite();
    if (!top_unresolved && have_witness) {
      if (top.enc.hi() <= witness) break;  // everything remaining is dominated
      BigNum slack = sub(top.enc.hi(), witness, prec, Rnd::Up);
      if (slack <= mul(tol, scale_of(top.enc.hi()), prec, Rnd::Down)) break;
    }
    heap.pop();
    if (++splits > kBoxLimit)
      throw NumericalError(
          "range bounds: subdivision limit exceeded "
          "(possible unhandled singularity)");
    BigNum m = top.x.mid(prec);
    if (m <= top.x.lo() || m >= top.x.hi()) {
      if (top_unresolved)
        throw NumericalError(
            "range bounds: function not evaluable on a point-sized box");
      frozen = have_frozen ? max(frozen, top.enc.hi()) : top.enc.hi();
      have_frozen = true;
      continue;
    }
    offer_witness(m);
    heap.push(boxed(IvBox(top.x.lo(), m)));
    heap.push(boxed(IvBox(m, top.x.hi())));
  }

  BigNum bound = have_witness ? witness : BigNum::zero(prec);
  if (have_frozen) bound = max(bound, frozen);
  if (!heap.empty()) bound = max(bound, heap.top().enc.hi());
  if (!have_witness) witness = bound;
  bool tight = sub(bound, witness, prec, Rnd::Up) <=
               mul(tol, scale_of(bound), prec, Rnd::Up);
  return SupResult{bound, witness, argmax, tight};
}

}  // namespace

FunctionHandle negate_handle(const FunctionHandle& g) {
  FunctionHandle::DerivativeFactory df = nullptr;
  if (g.derivative_available())
    df = [g]() { return negate_handle(g.derivative()); };
  FunctionHandle::JetEval je = nullptr;
  if (g.max_jet_order() >= 1)
    je = [g](const IvBox& x, long prec, int k) {
      return jet_neg(g.jets(x, prec, k));
    };
  return make_handle(
      "-(" + g.label() + ")",
      [g](const IvBox& x, long prec) { return iv_neg(g.eval(x, prec)); }, df,
      g.order(), je, g.max_jet_order());
}

std::pair<BigNum, BigNum> range_bounds(const FunctionHandle& g, const IvBox& I,
                                       const BigNum& tol, long prec) {
  SupResult hi = certified_sup(g, I, tol, prec, /*use_abs=*/false);
  SupResult lo = certified_sup(negate_handle(g), I, tol, prec, false);
  return {neg(lo.bound), hi.bound};
}

NormResult infnorm_certified(const FunctionHandle& g, const IvBox& I,
                             const BigNum& tol, long prec) {
  SupResult s = certified_sup(g, I, tol, prec, /*use_abs=*/true);
  if (!s.tight)
    throw NumericalError("infnorm_certified: could not reach tolerance "
                         "(singular behavior near the boundary?)");
  NormResult r;
  r.lower_witness = s.witness;
  r.upper_bound = s.bound;
  r.argmax = s.argmax;
  r.certified = true;
  return r;
}

NormResult infnorm_fast(const FunctionHandle& g, const IvBox& I, long samples,
                        long prec) {
  if (samples < 17) samples = 17;
  BigNum mid = I.mid(prec);
  BigNum half = ldexp(I.width(prec), -1);
  BigNum pi = const_pi(prec, Rnd::Nearest);

  auto value_at = [&](const BigNum& x) -> BigNum {
    try {
      return iv_abs(g.eval(IvBox::point(x), prec)).lo();
    } catch (const DomainError&) {
    } catch (const NumericalError&) {
    }
    BigNum bad(prec);
    mpfr_set_inf(bad.raw(), -1);
    return bad;  // -inf: never selected as a maximum
  };

  // Chebyshev-distributed grid, endpoints included, ascending.
  std::vector<BigNum> xs, vs;
  xs.reserve(static_cast<std::size_t>(samples));
  for (long j = 0; j < samples; ++j) {
    BigNum angle = div(mul(BigNum::from_long(j, prec), pi, prec, Rnd::Nearest),
                       BigNum::from_long(samples - 1, prec), prec,
                       Rnd::Nearest);
    BigNum x = sub(mid, mul(half, cos(angle, prec, Rnd::Nearest), prec,
                            Rnd::Nearest), prec, Rnd::Nearest);
    if (x < I.lo()) x = I.lo();
    if (x > I.hi()) x = I.hi();
    xs.push_back(x);
    vs.push_back(value_at(x));
  }

  BigNum best = vs[0];
  BigNum best_x = xs[0];
  auto consider = [&](const BigNum& v, const BigNum& x) {
    if (v > best) {
      best = v;
      best_x = x;
    }
  };
  for (std::size_t j = 1; j < xs.size(); ++j) consider(vs[j], xs[j]);

  // Refine every local maximum of the grid by golden-section search.
  BigNum inv_phi = div(sub(sqrt(BigNum::from_long(5, prec), prec, Rnd::Nearest),
                           BigNum::from_long(1, prec), prec, Rnd::Nearest),
                       BigNum::from_long(2, prec), prec, Rnd::Nearest);
  // shrink 0.618^k below 2^-(prec/2): k ~ 0.72 * prec
  long gss_iters = static_cast<long>(0.72 * static_cast<double>(prec)) + 4;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    bool local_max = (j == 0 || vs[j] >= vs[j - 1]) &&
                     (j + 1 == xs.size() || vs[j] >= vs[j + 1]);
    if (!local_max) continue;
    BigNum a = j == 0 ? xs[0] : xs[j - 1];
    BigNum b = j + 1 == xs.size() ? xs.back() : xs[j + 1];
    BigNum w = sub(b, a, prec, Rnd::Nearest);
    BigNum x1 = sub(b, mul(inv_phi, w, prec, Rnd::Nearest), prec, Rnd::Nearest);
    BigNum x2 = add(a, mul(inv_phi, w, prec, Rnd::Nearest), prec, Rnd::Nearest);
    BigNum f1 = value_at(x1), f2 = value_at(x2);
    for (long it = 0; it < gss_iters; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        w = sub(b, a, prec, Rnd::Nearest);
        x2 = add(a, mul(inv_phi, w, prec, Rnd::Nearest), prec, Rnd::Nearest);
        f2 = value_at(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        w = sub(b, a, prec, Rnd::Nearest);
        x1 = sub(b, mul(inv_phi, w, prec, Rnd::Nearest), prec, Rnd::Nearest);
        f1 = value_at(x1);
      }
      consider(f1, x1);
      consider(f2, x2);
    }
  }

  NormResult r;
  r.lower_witness = best;
  r.argmax = best_x;
  r.upper_bound = mul(best, add(BigNum::from_long(1, prec), pow2(-20), prec,
                                Rnd::Up), prec, Rnd::Up);
  r.certified = false;
  return r;
}

// ------------------------------------------------------- error functions --

FunctionHandle absolute_error_handle(const Poly& p, const FunctionHandle& f) {
  auto mk = [](auto self, const Poly& pp, const FunctionHandle& ff,
               int ord) -> FunctionHandle {
    FunctionHandle::DerivativeFactory df = nullptr;
    if (ord < 2 && ff.derivative_available())
      df = [self, pp, ff, ord]() {
        return self(self, pp.derivative(), ff.derivative(), ord + 1);
      };
    FunctionHandle::JetEval je = nullptr;
    int jet_order = ff.max_jet_order();
    if (jet_order >= 1) {
      auto scaled = std::make_shared<std::vector<Poly>>(
          pp.taylor_derivatives(jet_order));
      je = [scaled, ff](const IvBox& x, long prec, int k) {
        return jet_sub(poly_jet(*scaled, x, prec, k), ff.jets(x, prec, k));
      };
    }
    return make_handle(
        "p-f",
        [pp, ff](const IvBox& x, long prec) {
          return iv_sub(pp.eval(x, prec), ff.eval(x, prec), prec);
        },
        df, ord, je, jet_order);
  };
  return mk(mk, p, f, 0);
}

FunctionHandle weighted_error_handle(const Poly& p, const FunctionHandle& f,
                                     const FunctionHandle& w) {
  FunctionHandle::DerivativeFactory df = nullptr;
  if (f.derivative_available() && w.derivative_available()) {
    df = [p, f, w]() {
      // (p*w - f)' = p'w + pw' - f'
      Poly dp = p.derivative();
      FunctionHandle fd = f.derivative();
      FunctionHandle wd = w.derivative();
      return make_handle(
          "(p*w-f)'",
          [p, dp, fd, wd, w](const IvBox& x, long prec) {
            IvBox t = iv_add(iv_mul(dp.eval(x, prec), w.eval(x, prec), prec),
                             iv_mul(p.eval(x, prec), wd.eval(x, prec), prec),
                             prec);
            return iv_sub(t, fd.eval(x, prec), prec);
          },
          nullptr, 1);
    };
  }
  FunctionHandle::JetEval je = nullptr;
  int jet_order = std::min(f.max_jet_order(), w.max_jet_order());
  if (jet_order >= 1) {
    auto scaled =
        std::make_shared<std::vector<Poly>>(p.taylor_derivatives(jet_order));
    je = [scaled, f, w](const IvBox& x, long prec, int k) {
      return jet_sub(jet_mul(poly_jet(*scaled, x, prec, k), w.jets(x, prec, k)),
                     f.jets(x, prec, k));
    };
  }
  return make_handle(
      "p*w-f",
      [p, f, w](const IvBox& x, long prec) {
        return iv_sub(iv_mul(p.eval(x, prec), w.eval(x, prec), prec),
                      f.eval(x, prec), prec);
      },
      df, 0, je, jet_order);
}

namespace {

// Enclosure of f(x)/x^m over a box X that reaches x = 0, via the mean-value
// form: f(x)/x = f'(xi), f(x)/x^2 = f''(xi)/2 with xi in hull(X, 0).
IvBox f_over_xm_near_zero(const FunctionHandle& f, int m, const IvBox& X,
                          long prec) {
  IvBox X0 = iv_hull(X, IvBox::point(BigNum::zero(2)));
  if (m == 1) return f.derivative().eval(X0, prec);
  IvBox f2 = f.derivative().derivative().eval(X0, prec);
  return IvBox(ldexp(f2.lo(), -1), ldexp(f2.hi(), -1));
}

struct RelErr {
  Poly p;
  FunctionHandle f;
  int m;
  std::vector<Poly> p_derivs;          // of p
  std::vector<Poly> p_shifted_derivs;  // of p/x^m

  // Jet of p/f - 1 over X. On boxes reaching zero (m >= 1) the quotient is
  // computed as (p/x^m)/(f/x^m); the jet of f/x^m over X is exactly the jet
  // of f over hull(X, 0) with its lowest m coefficients dropped.
  Jet jets(const IvBox& X, long prec, int k) const {
    Jet one = Jet::constant(IvBox::point(BigNum::from_long(1, 8)), k, prec);
    if (m == 0 || !X.contains_zero()) {
      try {
        Jet fj = f.jets(X, prec, k);
        return jet_sub(jet_div(poly_jet(p_derivs, X, prec, k), fj), one);
      } catch (const DomainError&) {
        if (m == 0) throw;
        // fall through to the transformed quotient
      }
    }
    IvBox X0 = iv_hull(X, IvBox::point(BigNum::zero(2)));
    Jet fj = f.jets(X0, prec, k + m);
    Jet F = fj.shifted_down(m);
    return jet_sub(jet_div(poly_jet(p_shifted_derivs, X, prec, k), F), one);
  }

  IvBox eval(const IvBox& X, long prec) const {
    IvBox one = IvBox::point(BigNum::from_long(1, prec));
    if (m == 0 || !X.contains_zero()) {
      IvBox fx = f.eval(X, prec);
      if (fx.contains_zero()) {
        // Overwide or genuinely singular: if the box straddles 0 with m > 0,
        // fall through to the transformed form; otherwise let the caller
        // bisect.
        if (m == 0 || !X.contains_zero())
          throw DomainError("relative error: f enclosure contains zero");
      } else {
        return iv_sub(iv_div(p.eval(X, prec), fx, prec), one, prec);
      }
    }
    // Box reaches zero: p(x)/f(x) = (p(x)/x^m) / (f(x)/x^m).
    Poly pm = p.divide_by_power(m);
    IvBox F = f_over_xm_near_zero(f, m, X, prec);
    if (F.contains_zero())
      throw DomainError("relative error: transformed denominator near zero");
    return iv_sub(iv_div(pm.eval(X, prec), F, prec), one, prec);
  }

  // Derivative e' = (p'f - pf')/f^2 away from zero; through the transformed
  // quotient on boxes reaching zero (m = 1 only; m = 2 would need f''').
  IvBox eval_derivative(const IvBox& X, long prec) const {
    FunctionHandle fd = f.derivative();
    if (m == 0 || !X.contains_zero()) {
      IvBox fx = f.eval(X, prec);
      if (!fx.contains_zero()) {
        IvBox num = iv_sub(
            iv_mul(p.derivative().eval(X, prec), fx, prec),
            iv_mul(p.eval(X, prec), fd.eval(X, prec), prec), prec);
        return iv_div(num, iv_mul(fx, fx, prec), prec);
      }
      if (m == 0 || !X.contains_zero())
        throw DomainError("relative error derivative: f encloses zero");
    }
    if (m != 1)
      throw DomainError(
          "relative error derivative near zero needs multiplicity 1");
    // P = p/x, F(x) = f(x)/x: e' = (P'F - PF')/F^2 with
    // F' = (x f'(x) - f(x))/x^2 in f''(X0) - f''(X0)/2 (mean-value forms).
    Poly P = p.divide_by_power(1);
    IvBox X0 = iv_hull(X, IvBox::point(BigNum::zero(2)));
    IvBox F = fd.eval(X0, prec);
    if (F.contains_zero())
      throw DomainError("relative error derivative: F near zero");
    IvBox f2 = f.derivative().derivative().eval(X0, prec);
    IvBox Fp = iv_sub(f2, IvBox(ldexp(f2.lo(), -1), ldexp(f2.hi(), -1)), prec);
    IvBox num = iv_sub(iv_mul(P.derivative().eval(X, prec), F, prec),
                       iv_mul(P.eval(X, prec), Fp, prec), prec);
    return iv_div(num, iv_mul(F, F, prec), prec);
  }
};

}  // namespace

FunctionHandle relative_error_handle(const Poly& p, const FunctionHandle& f,
                                     int zero_multiplicity) {
  if (zero_multiplicity < 0 || zero_multiplicity > 2)
    throw DomainError("zero multiplicity above 2 is not supported");
  if (zero_multiplicity > 0 && p.basis().min_exponent() < zero_multiplicity)
    throw DomainError(
        "relative error: polynomial's lowest exponent is below the zero "
        "multiplicity of f");
  auto core = std::make_shared<RelErr>(RelErr{p, f, zero_multiplicity, {}, {}});
  FunctionHandle::JetEval je = nullptr;
  int jet_order = std::max(0, f.max_jet_order() - zero_multiplicity);
  if (jet_order >= 1) {
    core->p_derivs = p.taylor_derivatives(jet_order);
    core->p_shifted_derivs =
        p.divide_by_power(zero_multiplicity).taylor_derivatives(jet_order);
    je = [core](const IvBox& x, long prec, int k) {
      return core->jets(x, prec, k);
    };
  }
  return make_handle(
      "p/f-1",
      [core](const IvBox& x, long prec) { return core->eval(x, prec); },
      [core]() {
        return make_handle(
            "(p/f-1)'",
            [core](const IvBox& x, long prec) {
              return core->eval_derivative(x, prec);
            },
            nullptr, 1);
      },
      0, je, jet_order);
}

int detect_zero_multiplicity(const FunctionHandle& f, long prec) {
  IvBox zero = IvBox::point(BigNum::zero(2));
  if (!f.eval(zero, prec).contains_zero()) return 0;
  if (!f.derivative().eval(zero, prec).contains_zero()) return 1;
  if (!f.derivative().derivative().eval(zero, prec).contains_zero()) return 2;
  throw DomainError(
      "zero of multiplicity above 2 at x = 0 (only two derivatives are "
      "available)");
}

}  // namespace cfpoly
