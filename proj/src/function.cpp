#include "cfpoly/function.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <utility>

#include "cfpoly/errors.hpp"

namespace cfpoly {

struct FunctionHandle::Impl {
  std::string label;
  int order = 0;
  Eval eval;
  DerivativeFactory make_derivative;
  JetEval jet_eval;
  int max_jet_order = 0;

  std::mutex memo_mutex;
  FunctionHandle derivative_memo;
};

FunctionHandle make_handle(std::string label, FunctionHandle::Eval eval,
                           FunctionHandle::DerivativeFactory derivative_factory,
                           int order, FunctionHandle::JetEval jet_eval,
                           int max_jet_order) {
  FunctionHandle h;
  auto impl = std::make_shared<FunctionHandle::Impl>();
  impl->label = std::move(label);
  impl->order = order;
  impl->eval = std::move(eval);
  impl->make_derivative = std::move(derivative_factory);
  impl->jet_eval = std::move(jet_eval);
  impl->max_jet_order = impl->jet_eval ? max_jet_order : 0;
  h.impl_ = std::move(impl);
  return h;
}

int FunctionHandle::max_jet_order() const {
  return impl_ ? impl_->max_jet_order : 0;
}

Jet FunctionHandle::jets(const IvBox& x, long prec, int order) const {
  if (!impl_ || !impl_->jet_eval || order > impl_->max_jet_order)
    throw std::logic_error("jets unavailable at requested order");
  return impl_->jet_eval(x, prec, order);
}

IvBox FunctionHandle::eval(const IvBox& x, long prec) const {
  if (!impl_) throw std::logic_error("empty FunctionHandle");
  return impl_->eval(x, prec);
}

int FunctionHandle::order() const {
  if (!impl_) throw std::logic_error("empty FunctionHandle");
  return impl_->order;
}

const std::string& FunctionHandle::label() const {
  if (!impl_) throw std::logic_error("empty FunctionHandle");
  return impl_->label;
}

bool FunctionHandle::derivative_available() const {
  return impl_ && impl_->order < 2;
}

namespace {

// Central finite differences over intervals: not rigorous in the analytic
// sense, so the width is inflated by a Lipschitz-style factor of 4.
IvBox finite_difference(const FunctionHandle& f, int target_order,
                        const IvBox& x, long prec) {
  long p = prec + 16;
  BigNum h = ldexp(max(x.mag(), BigNum::from_long(1, 8)), -(prec / 3));
  IvBox H = IvBox::point(h);
  IvBox xp = iv_add(x, H, p);
  IvBox xm = iv_sub(x, H, p);
  IvBox out;
  if (target_order == 1) {
    out = iv_div(iv_sub(f.eval(xp, p), f.eval(xm, p), p),
                 iv_add(H, H, p), p);
  } else {
    IvBox num = iv_add(f.eval(xp, p), f.eval(xm, p), p);
    num = iv_sub(num, iv_mul(IvBox::point(BigNum::from_long(2, 8)),
                             f.eval(x, p), p), p);
    out = iv_div(num, iv_mul(H, H, p), p);
  }
  // Lipschitz-style inflation: cover the h^2-order truncation term with a
  // factor-4 margin on top of the interval evaluation width.
  BigNum m = out.mid(p);
  BigNum trunc = mul(mul(h, h, p, Rnd::Up),
                     max(out.mag(), BigNum::from_long(1, 8)), p, Rnd::Up);
  BigNum r = add(out.width(p),
                 mul(trunc, BigNum::from_long(4, 8), p, Rnd::Up), p, Rnd::Up);
  return IvBox(sub(m, r, prec, Rnd::Down), add(m, r, prec, Rnd::Up));
}

}  // namespace

FunctionHandle FunctionHandle::derivative() const {
  if (!impl_) throw std::logic_error("empty FunctionHandle");
  if (impl_->order >= 2)
    throw DomainError("only the first two derivatives are available (asked "
                      "for a derivative of " + impl_->label + ")");
  std::lock_guard<std::mutex> lock(impl_->memo_mutex);
  if (impl_->derivative_memo.valid()) return impl_->derivative_memo;
  FunctionHandle d;
  if (impl_->make_derivative) {
    d = impl_->make_derivative();
  } else {
    FunctionHandle base = *this;
    int target = impl_->order + 1;
    // Finite differences are always taken of the underlying order-0 handle
    // when possible; here the base is this handle itself.
    d = make_handle(
        impl_->label + "'",
        [base, target](const IvBox& x, long prec) {
          return finite_difference(base, 1, x, prec);
        },
        nullptr, target);
  }
  d.impl_->order = impl_->order + 1;
  impl_->derivative_memo = d;
  return d;
}

constexpr int kExprJetOrder = 12;

FunctionHandle to_handle(const Expr::Ptr& e) {
  return make_handle(
      e->to_string(),
      [e](const IvBox& x, long prec) { return e->eval(x, prec); },
      [e]() { return to_handle(differentiate(e)); }, 0,
      [e](const IvBox& x, long prec, int k) { return e->jet_eval(x, prec, k); },
      kExprJetOrder);
}

FunctionHandle poly_handle(const Poly& p, const std::string& label) {
  auto scaled = std::make_shared<std::vector<Poly>>(p.taylor_derivatives(32));
  return make_handle(
      label, [p](const IvBox& x, long prec) { return p.eval(x, prec); },
      [p, label]() { return poly_handle(p.derivative(), label + "'"); }, 0,
      [scaled](const IvBox& x, long prec, int k) {
        return poly_jet(*scaled, x, prec, k);
      },
      32);
}

// ------------------------------------------------------------------ inverse

namespace {

struct InverseCore {
  FunctionHandle f, fprime;
  IvBox domain;         // inputs of g (the y axis)
  IvBox codomain_seed;  // where the roots live (the x axis)
  bool increasing;

  // Certified enclosure of the x with f(x) = y.
  IvBox solve_point(const BigNum& y, long prec) const {
    long pw = prec + 16;
    // Float Newton at growing precision.
    BigNum x = codomain_seed.mid(64);
    BigNum scale = max(codomain_seed.mag(), BigNum::from_long(1, 8));
    long cur = 64;
    BigNum last_step = scale;
    bool settled = false;
    for (int it = 0; it < 200 && !settled; ++it) {
      BigNum fx = f.eval(IvBox::point(x), cur).mid(cur);
      BigNum dfx = fprime.eval(IvBox::point(x), cur).mid(cur);
      if (dfx.is_zero())
        throw NumericalError("newton_inverse: derivative vanished");
      BigNum ynow(cur);
      mpfr_set(ynow.raw(), y.raw(), MPFR_RNDN);
      BigNum step = div(sub(fx, ynow, cur, Rnd::Nearest), dfx, cur,
                        Rnd::Nearest);
      x = sub(x, step, cur, Rnd::Nearest);
      if (x < codomain_seed.lo()) x = codomain_seed.lo();
      if (x > codomain_seed.hi()) x = codomain_seed.hi();
      last_step = abs(step);
      if (last_step <= ldexp(scale, -(pw + 8))) {
        if (cur >= pw + 32)
          settled = true;
        else
          cur = std::min(cur * 2, pw + 32);
      } else if (last_step <= ldexp(scale, -(cur / 2))) {
        cur = std::min(cur * 2, pw + 32);
      }
    }
    if (!settled)
      throw NumericalError("newton_inverse: no convergence for y = " +
                           y.to_decimal(20));

    // Certification by the interval Newton operator.
    long pc = pw + 32;
    BigNum r = max(mul(last_step, BigNum::from_long(16, 8), pc, Rnd::Up),
                   ldexp(scale, -(pw + 4)));
    for (int attempt = 0; attempt < 10; ++attempt) {
      IvBox X(max(sub(x, r, pc, Rnd::Down), codomain_seed.lo()),
              min(add(x, r, pc, Rnd::Up), codomain_seed.hi()));
      IvBox m = IvBox::point(X.mid(pc));
      IvBox fm = f.eval(m, pc);
      IvBox dfX = fprime.eval(X, pc);
      if (dfX.contains_zero()) {
        r = ldexp(r, -2);  // tighten; derivative enclosure too wide
        if (attempt > 4) break;
        continue;
      }
      IvBox N = iv_sub(m, iv_div(iv_sub(fm, IvBox::point(y), pc), dfX, pc), pc);
      if (N.subset_of(X)) {
        // Contract twice more for a tight final enclosure.
        IvBox Z = N;
        for (int k = 0; k < 2; ++k) {
          IvBox mm = IvBox::point(Z.mid(pc));
          IvBox fmm = f.eval(mm, pc);
          IvBox dZ = fprime.eval(Z, pc);
          if (dZ.contains_zero()) break;
          IvBox N2 =
              iv_sub(mm, iv_div(iv_sub(fmm, IvBox::point(y), pc), dZ, pc), pc);
          try {
            Z = iv_meet(N2, Z);
          } catch (const NumericalError&) {
            break;
          }
        }
        return Z;
      }
      r = ldexp(r, 3);
    }
    throw NumericalError("newton_inverse: certification failed for y = " +
                         y.to_decimal(20));
  }

  IvBox eval(const IvBox& y, long prec) const {
    if (!y.subset_of(iv_widen(domain, domain.lo().precision(), 2)))
      throw DomainError("newton_inverse: input outside declared domain");
    if (y.is_point()) return solve_point(y.lo(), prec);
    IvBox a = solve_point(y.lo(), prec);
    IvBox b = solve_point(y.hi(), prec);
    return iv_hull(a, b);
  }
};

}  // namespace

namespace {

// Jet of g = f^-1 over Y through the derivative tower h_i := f^(i) o g:
// h_i' = h_{i+1} * g' and g' = 1/h_1, so all Taylor coefficients of g follow
// from products and one reciprocal, filled order by order.
Jet inverse_jets(const std::shared_ptr<InverseCore>& core,
                 const FunctionHandle& f, const IvBox& Y, long prec, int K) {
  IvBox G = core->eval(Y, prec);
  Jet A = f.jets(G, prec, K);
  // h_i constant terms: f^(i)(G) = a_i * i!
  std::vector<std::vector<IvBox>> H(static_cast<std::size_t>(K) + 1);
  BigNum factorial = BigNum::from_long(1, 160);
  for (int i = 1; i <= K; ++i) {
    factorial = mul(factorial, BigNum::from_long(i, 16), 160, Rnd::Nearest);
    H[static_cast<std::size_t>(i)].push_back(
        iv_mul(A[i], IvBox::point(factorial), prec));
  }
  std::vector<IvBox> gp;  // jet coefficients of g'
  Jet out(K, prec);
  out[0] = G;
  auto& h1 = H[1];
  if (h1[0].contains_zero())
    throw DomainError("inverse jets: f' encloses zero on the range");
  for (int n = 0; n <= K - 1; ++n) {
    IvBox c;
    if (n == 0) {
      c = iv_div(IvBox::point(BigNum::from_long(1, 8)), h1[0], prec);
    } else {
      IvBox acc = IvBox::point(BigNum::zero(prec));
      for (int j = 1; j <= n; ++j)
        acc = iv_add(acc, iv_mul(h1[static_cast<std::size_t>(j)],
                                 gp[static_cast<std::size_t>(n - j)], prec),
                     prec);
      c = iv_neg(iv_div(acc, h1[0], prec));
    }
    gp.push_back(c);
    out[n + 1] = iv_div(gp[static_cast<std::size_t>(n)],
                        IvBox::point(BigNum::from_long(n + 1, 16)), prec);
    for (int i = 1; n + 1 <= K - i; ++i) {
      IvBox acc = IvBox::point(BigNum::zero(prec));
      auto& hi1 = H[static_cast<std::size_t>(i) + 1];
      for (int j = 0; j <= n; ++j)
        acc = iv_add(acc, iv_mul(hi1[static_cast<std::size_t>(j)],
                                 gp[static_cast<std::size_t>(n - j)], prec),
                     prec);
      H[static_cast<std::size_t>(i)].push_back(
          iv_div(acc, IvBox::point(BigNum::from_long(n + 1, 16)), prec));
    }
  }
  return out;
}

}  // namespace

FunctionHandle newton_inverse(const FunctionHandle& f, const IvBox& domain,
                              const IvBox& codomain_seed) {
  auto core = std::make_shared<InverseCore>();
  core->f = f;
  core->fprime = f.derivative();
  core->domain = domain;
  core->codomain_seed = codomain_seed;
  long p = 80;
  IvBox fa = f.eval(IvBox::point(codomain_seed.lo()), p);
  IvBox fb = f.eval(IvBox::point(codomain_seed.hi()), p);
  if (fa.hi() < fb.lo())
    core->increasing = true;
  else if (fb.hi() < fa.lo())
    core->increasing = false;
  else
    throw DomainError("newton_inverse: f not clearly monotonic on seed");

  std::string label = f.label() + "^-1";
  FunctionHandle::JetEval jet_eval = nullptr;
  int jet_order = std::min(f.max_jet_order(), 10);
  if (jet_order >= 1) {
    jet_eval = [core, f](const IvBox& y, long prec, int k) {
      return inverse_jets(core, f, y, prec, k);
    };
  }
  FunctionHandle g = make_handle(
      label,
      [core](const IvBox& y, long prec) { return core->eval(y, prec); },
      [core, f, label]() {
        // g' = 1 / f'(g)
        FunctionHandle fp = f.derivative();
        FunctionHandle fpp = fp.derivative();
        auto gprime_eval = [core, fp](const IvBox& y, long prec) {
          IvBox G = core->eval(y, prec + 8);
          return iv_div(IvBox::point(BigNum::from_long(1, 8)),
                        fp.eval(G, prec + 8), prec);
        };
        auto make_second = [core, fp, fpp, label]() {
          // g'' = -f''(g) / f'(g)^3
          return make_handle(
              label + "''",
              [core, fp, fpp](const IvBox& y, long prec) {
                long p2 = prec + 8;
                IvBox G = core->eval(y, p2);
                IvBox d = fp.eval(G, p2);
                IvBox dd = fpp.eval(G, p2);
                return iv_neg(iv_div(dd, iv_pow(d, 3, p2), prec));
              },
              nullptr, 2);
        };
        return make_handle(label + "'", gprime_eval, make_second, 1);
      },
      0, jet_eval, jet_order);
  return g;
}

// ------------------------------------------------------------------ plugin

namespace {

std::string decimal_directed(const BigNum& v, long prec, Rnd r) {
  int digits = static_cast<int>(prec * 0.3011 + 6);
  char* s = nullptr;
  const char* fmt = (r == Rnd::Down) ? "%.*RDe" : "%.*RUe";
  if (mpfr_asprintf(&s, fmt, digits, v.raw()) < 0) throw std::bad_alloc();
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

IvBox plugin_call(const std::string& path, int order, const IvBox& x,
                  long prec) {
  std::ostringstream cmd;
  cmd << path << ' ' << order << ' ' << decimal_directed(x.lo(), prec, Rnd::Down)
      << ' ' << decimal_directed(x.hi(), prec, Rnd::Up) << ' ' << prec
      << " 2>/dev/null";
  FILE* pipe = popen(cmd.str().c_str(), "r");
  if (!pipe) throw NumericalError("plugin: failed to start " + path);
  std::string output;
  char buf[512];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
    output.append(buf, n);
  int status = pclose(pipe);
  if (status != 0)
    throw NumericalError("plugin: " + path + " exited with status " +
                         std::to_string(status));
  std::istringstream in(output);
  std::string a, b;
  in >> a;
  if (a == "unsupported")
    throw DomainError("plugin: derivative order unsupported");
  in >> b;
  if (a.empty() || b.empty())
    throw NumericalError("plugin: bad response from " + path);
  BigNum lo = BigNum::from_string(a, prec + 8, Rnd::Down);
  BigNum hi = BigNum::from_string(b, prec + 8, Rnd::Up);
  return iv_widen(IvBox(lo, hi), prec + 8, 1);
}

FunctionHandle plugin_order(const std::string& path, int order) {
  FunctionHandle::DerivativeFactory next = nullptr;
  if (order < 2)
    next = [path, order]() { return plugin_order(path, order + 1); };
  return make_handle(
      "plugin:" + path + "#" + std::to_string(order),
      [path, order](const IvBox& x, long prec) -> IvBox {
        try {
          return plugin_call(path, order, x, prec);
        } catch (const DomainError&) {
          if (order == 0) throw;
          // Plugin lacks this derivative order: finite differences of the
          // next lower order.
          return finite_difference(plugin_order(path, order - 1), 1, x, prec);
        }
      },
      next, order);
}

}  // namespace

FunctionHandle plugin_handle(const std::string& path) {
  return plugin_order(path, 0);
}

}  // namespace cfpoly
