#include "cfpoly/jet.hpp"

#include <stdexcept>

#include "cfpoly/errors.hpp"

namespace cfpoly {

namespace {

IvBox iv_muli(const IvBox& a, long k, long prec) {
  return iv_mul(a, IvBox::point(BigNum::from_long(k, 16)), prec);
}

IvBox iv_divi(const IvBox& a, long k, long prec) {
  return iv_div(a, IvBox::point(BigNum::from_long(k, 16)), prec);
}

}  // namespace

Jet Jet::variable(const IvBox& x, int order, long prec) {
  Jet j(order, prec);
  j[0] = x;
  if (order >= 1) j[1] = IvBox::point(BigNum::from_long(1, 8));
  return j;
}

Jet Jet::constant(const IvBox& v, int order, long prec) {
  Jet j(order, prec);
  j[0] = v;
  return j;
}

Jet Jet::shifted_down(int m) const {
  if (m == 0) return *this;
  if (order() < m)
    throw std::invalid_argument("jet order too small for shift");
  Jet out(order() - m, prec_);
  for (int j = 0; j + m <= order(); ++j) out[j] = (*this)[j + m];
  return out;
}

Jet jet_add(const Jet& a, const Jet& b) {
  Jet out(std::min(a.order(), b.order()), a.prec());
  for (int j = 0; j <= out.order(); ++j)
    out[j] = iv_add(a[j], b[j], out.prec());
  return out;
}

Jet jet_sub(const Jet& a, const Jet& b) {
  Jet out(std::min(a.order(), b.order()), a.prec());
  for (int j = 0; j <= out.order(); ++j)
    out[j] = iv_sub(a[j], b[j], out.prec());
  return out;
}

Jet jet_neg(const Jet& a) {
  Jet out(a.order(), a.prec());
  for (int j = 0; j <= out.order(); ++j) out[j] = iv_neg(a[j]);
  return out;
}

Jet jet_mul(const Jet& a, const Jet& b) {
  int k = std::min(a.order(), b.order());
  long p = a.prec();
  Jet out(k, p);
  for (int n = 0; n <= k; ++n) {
    IvBox acc = IvBox::point(BigNum::zero(p));
    for (int j = 0; j <= n; ++j)
      acc = iv_add(acc, iv_mul(a[j], b[n - j], p), p);
    out[n] = acc;
  }
  return out;
}

Jet jet_recip(const Jet& h) {
  long p = h.prec();
  if (h[0].contains_zero())
    throw DomainError("jet reciprocal: constant term encloses zero");
  Jet r(h.order(), p);
  r[0] = iv_div(IvBox::point(BigNum::from_long(1, 8)), h[0], p);
  for (int n = 1; n <= h.order(); ++n) {
    IvBox acc = IvBox::point(BigNum::zero(p));
    for (int j = 1; j <= n; ++j)
      acc = iv_add(acc, iv_mul(h[j], r[n - j], p), p);
    r[n] = iv_neg(iv_div(acc, h[0], p));
  }
  return r;
}

Jet jet_div(const Jet& a, const Jet& b) {
  long p = a.prec();
  if (b[0].contains_zero())
    throw DomainError("jet division: denominator constant term encloses zero");
  int k = std::min(a.order(), b.order());
  Jet d(k, p);
  for (int n = 0; n <= k; ++n) {
    IvBox acc = a[n];
    for (int j = 0; j < n; ++j)
      acc = iv_sub(acc, iv_mul(d[j], b[n - j], p), p);
    d[n] = iv_div(acc, b[0], p);
  }
  return d;
}

Jet jet_pow_si(const Jet& a, long k) {
  long p = a.prec();
  if (k == 0) {
    return Jet::constant(IvBox::point(BigNum::from_long(1, 8)), a.order(), p);
  }
  bool invert = k < 0;
  unsigned long e = static_cast<unsigned long>(invert ? -k : k);
  Jet acc = Jet::constant(IvBox::point(BigNum::from_long(1, 8)), a.order(), p);
  Jet base = a;
  while (e > 0) {
    if (e & 1) acc = jet_mul(acc, base);
    base = jet_mul(base, base);
    e >>= 1;
  }
  if (invert) return jet_recip(acc);
  return acc;
}

// exp(u): e' = e u'  =>  e_n = (1/n) sum_{j=1..n} j u_j e_{n-j}
Jet jet_exp(const Jet& u) {
  long p = u.prec();
  Jet e(u.order(), p);
  e[0] = iv_elem(IvFn::Exp, u[0], p);
  for (int n = 1; n <= u.order(); ++n) {
    IvBox acc = IvBox::point(BigNum::zero(p));
    for (int j = 1; j <= n; ++j)
      acc = iv_add(acc, iv_muli(iv_mul(u[j], e[n - j], p), j, p), p);
    e[n] = iv_divi(acc, n, p);
  }
  return e;
}

// log(u): l' = u'/u  =>  l_n = (u_n - (1/n) sum_{j=1..n-1} j l_j u_{n-j}) / u_0
Jet jet_log(const Jet& u) {
  long p = u.prec();
  if (u[0].lo().sgn() <= 0) throw DomainError("jet log of non-positive value");
  Jet l(u.order(), p);
  l[0] = iv_elem(IvFn::Log, u[0], p);
  for (int n = 1; n <= u.order(); ++n) {
    IvBox acc = IvBox::point(BigNum::zero(p));
    for (int j = 1; j < n; ++j)
      acc = iv_add(acc, iv_muli(iv_mul(l[j], u[n - j], p), j, p), p);
    IvBox num = iv_sub(u[n], iv_divi(acc, n, p), p);
    l[n] = iv_div(num, u[0], p);
  }
  return l;
}

namespace {
// sin and cos share the coupled recurrence
//   s_n = (1/n) sum j u_j c_{n-j},   c_n = -(1/n) sum j u_j s_{n-j}.
std::pair<Jet, Jet> jet_sincos(const Jet& u) {
  long p = u.prec();
  Jet s(u.order(), p), c(u.order(), p);
  s[0] = iv_elem(IvFn::Sin, u[0], p);
  c[0] = iv_elem(IvFn::Cos, u[0], p);
  for (int n = 1; n <= u.order(); ++n) {
    IvBox as = IvBox::point(BigNum::zero(p));
    IvBox ac = IvBox::point(BigNum::zero(p));
    for (int j = 1; j <= n; ++j) {
      as = iv_add(as, iv_muli(iv_mul(u[j], c[n - j], p), j, p), p);
      ac = iv_add(ac, iv_muli(iv_mul(u[j], s[n - j], p), j, p), p);
    }
    s[n] = iv_divi(as, n, p);
    c[n] = iv_neg(iv_divi(ac, n, p));
  }
  return {s, c};
}
}  // namespace

Jet jet_sin(const Jet& u) { return jet_sincos(u).first; }
Jet jet_cos(const Jet& u) { return jet_sincos(u).second; }

// sqrt(u): s^2 = u  =>  s_n = (u_n - sum_{j=1..n-1} s_j s_{n-j}) / (2 s_0)
Jet jet_sqrt(const Jet& u) {
  long p = u.prec();
  if (u[0].lo().sgn() < 0) throw DomainError("jet sqrt of negative value");
  if (u[0].contains_zero())
    throw DomainError("jet sqrt: constant term encloses zero");
  Jet s(u.order(), p);
  s[0] = iv_elem(IvFn::Sqrt, u[0], p);
  IvBox two_s0 = iv_muli(s[0], 2, p);
  for (int n = 1; n <= u.order(); ++n) {
    IvBox acc = IvBox::point(BigNum::zero(p));
    for (int j = 1; j < n; ++j)
      acc = iv_add(acc, iv_mul(s[j], s[n - j], p), p);
    s[n] = iv_div(iv_sub(u[n], acc, p), two_s0, p);
  }
  return s;
}

// erf(u): v' = (2/sqrt(pi)) exp(-u^2) u'
Jet jet_erf(const Jet& u) {
  long p = u.prec();
  Jet v(u.order(), p);
  v[0] = iv_elem(IvFn::Erf, u[0], p);
  if (u.order() == 0) return v;
  Jet gauss = jet_exp(jet_neg(jet_mul(u, u)));
  IvBox pi = iv_pi(p);
  IvBox sqrt_pi(sqrt(pi.lo(), p, Rnd::Down), sqrt(pi.hi(), p, Rnd::Up));
  IvBox factor = iv_div(IvBox::point(BigNum::from_long(2, 8)), sqrt_pi, p);
  // w = gauss * u': [v]_n = factor * [w]_{n-1} / n
  for (int n = 1; n <= u.order(); ++n) {
    IvBox acc = IvBox::point(BigNum::zero(p));
    for (int j = 1; j <= n; ++j)
      acc = iv_add(acc, iv_muli(iv_mul(u[j], gauss[n - j], p), j, p), p);
    v[n] = iv_div(iv_mul(factor, acc, p), IvBox::point(BigNum::from_long(n, 16)),
                  p);
  }
  return v;
}

IvBox jet_centered_form(const Jet& point_jet, const Jet& box_jet, int k,
                        const IvBox& X, long prec) {
  if (k < 1 || point_jet.order() < k - 1 || box_jet.order() < k)
    throw std::invalid_argument("jet_centered_form: orders too small");
  IvBox dm = iv_sub(X, IvBox::point(X.mid(prec)), prec);
  IvBox acc = box_jet[k];
  for (int j = k - 1; j >= 0; --j)
    acc = iv_add(point_jet[j], iv_mul(dm, acc, prec), prec);
  return acc;
}

}  // namespace cfpoly
