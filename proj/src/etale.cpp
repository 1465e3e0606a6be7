#include "wpc/etale.hpp"
#include "wpc/factorq.hpp"
#include "wpc/errors.hpp"

namespace wpc {

/* monic gcd d of (a, b) together with s, t such that s a + t b = d */
static void rat_xgcd(const rat_poly& a, const rat_poly& b, rat_poly& s, rat_poly& t,
                     rat_poly& d) {
  rat_poly r0 = a, r1 = b;
  rat_poly s0{{Rat(1)}}, s1;
  rat_poly t0, t1{{Rat(1)}};
  while (!r1.is_zero()) {
    rat_poly q, r;
    divmod(r0, r1, q, r);
    rat_poly s2 = sub(s0, mul(q, s1));
    rat_poly t2 = sub(t0, mul(q, t1));
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  check(!r0.is_zero(), "xgcd of two zero polynomials");
  Rat inv = Rat(1) / r0.lc();
  s = scale(s0, inv);
  t = scale(t0, inv);
  d = scale(r0, inv);
}

static alg_elt coords_from_poly(int n, const rat_poly& f) {
  check(f.deg() < n, "coordinate vector overflow");
  alg_elt v(n, Rat(0));
  for (int i = 0; i <= f.deg(); i++) v[i] = f.c[i];
  return v;
}

rat_poly el_poly(const alg_elt& x) {
  return rat_poly(std::vector<Rat>(x.begin(), x.end()));
}

alg_elt el_from_poly(const etale_alg& a, const rat_poly& f) {
  rat_poly q, r;
  divmod(f, to_rat(a.g), q, r);
  return coords_from_poly(a.n, r);
}

alg_elt el_from_poly(const etale_alg& a, const int_poly& f) {
  return el_from_poly(a, to_rat(f));
}

alg_elt el_zero(const etale_alg& a) { return alg_elt(a.n, Rat(0)); }

alg_elt el_one(const etale_alg& a) {
  alg_elt v = el_zero(a);
  v[0] = 1;
  return v;
}

alg_elt el_gen(const etale_alg& a) {
  check(a.n >= 2, "generator needs degree >= 2");
  alg_elt v = el_zero(a);
  v[1] = 1;
  return v;
}

alg_elt el_scalar(const etale_alg& a, const Rat& c) {
  alg_elt v = el_zero(a);
  v[0] = c;
  return v;
}

bool el_is_zero(const alg_elt& x) {
  for (auto& c : x)
    if (c != 0) return false;
  return true;
}

alg_elt el_add(const alg_elt& x, const alg_elt& y) {
  check(x.size() == y.size(), "element size mismatch");
  alg_elt v = x;
  for (size_t i = 0; i < v.size(); i++) v[i] += y[i];
  return v;
}

alg_elt el_sub(const alg_elt& x, const alg_elt& y) {
  check(x.size() == y.size(), "element size mismatch");
  alg_elt v = x;
  for (size_t i = 0; i < v.size(); i++) v[i] -= y[i];
  return v;
}

alg_elt el_neg(const alg_elt& x) {
  alg_elt v = x;
  for (auto& c : v) c = -c;
  return v;
}

alg_elt el_scale(const alg_elt& x, const Rat& c) {
  alg_elt v = x;
  for (auto& e : v) e *= c;
  return v;
}

alg_elt el_mul(const etale_alg& a, const alg_elt& x, const alg_elt& y) {
  return el_from_poly(a, mul(el_poly(x), el_poly(y)));
}

bool el_is_unit(const etale_alg& a, const alg_elt& x) {
  rat_poly s, t, d;
  rat_xgcd(el_poly(x), to_rat(a.g), s, t, d);
  return d.deg() == 0;
}

alg_elt el_inv(const etale_alg& a, const alg_elt& x) {
  rat_poly s, t, d;
  rat_xgcd(el_poly(x), to_rat(a.g), s, t, d);
  if (d.deg() != 0) fail(errkind::bad_input, "inverse of a zero divisor");
  return el_from_poly(a, s);
}

alg_elt el_pow(const etale_alg& a, const alg_elt& x, long e) {
  if (e < 0) return el_pow(a, el_inv(a, x), -e);
  alg_elt acc = el_one(a), base = x;
  while (e > 0) {
    if (e & 1) acc = el_mul(a, acc, base);
    base = el_mul(a, base, base);
    e >>= 1;
  }
  return acc;
}

alg_elt el_conj(const etale_alg& a, const alg_elt& x) {
  check(a.qc != 0, "algebra carries no involution");
  alg_elt y = el_scale(a.xinv, Rat(a.qc)); /* conj(x) */
  alg_elt acc = el_scalar(a, x[a.n - 1]);
  for (int k = a.n - 2; k >= 0; k--) {
    acc = el_mul(a, acc, y);
    acc[0] += x[k];
  }
  return acc;
}

Rat el_trace(const etale_alg& a, const alg_elt& x) {
  Rat s(0);
  for (int k = 0; k < a.n; k++) s += x[k] * Rat(a.trpow[k]);
  return s;
}

rat_mat mult_matrix(const etale_alg& a, const alg_elt& u) {
  rat_mat m(a.n, a.n);
  alg_elt row = u;
  for (int i = 0; i < a.n; i++) {
    for (int j = 0; j < a.n; j++) m(i, j) = row[j];
    if (i + 1 < a.n) {
      rat_poly shifted = mul(el_poly(row), rat_poly{{Rat(0), Rat(1)}});
      row = el_from_poly(a, shifted);
    }
  }
  return m;
}

Rat el_norm(const etale_alg& a, const alg_elt& x) { return det(mult_matrix(a, x)); }

int_mat trace_form(const etale_alg& a) {
  int_mat t(a.n, a.n);
  for (int i = 0; i < a.n; i++)
    for (int j = 0; j < a.n; j++) t(i, j) = a.trpow[i + j];
  return t;
}

rat_poly el_project(const etale_alg& a, int i, const alg_elt& x) {
  check(i >= 0 && i < (int)a.comps.size(), "component index out of range");
  rat_poly q, r;
  divmod(el_poly(x), to_rat(a.comps[i]), q, r);
  return r;
}

alg_elt el_lift_component(const etale_alg& a, int i, const rat_poly& f) {
  check(i >= 0 && i < (int)a.comps.size(), "component index out of range");
  return el_mul(a, el_from_poly(a, f), a.idem[i]);
}

etale_alg etale_make(const int_poly& g) {
  etale_alg a;
  if (g.deg() < 1) fail(errkind::bad_input, "defining polynomial must be nonconstant");
  if (g.lc() != 1) fail(errkind::bad_input, "defining polynomial must be monic");
  if (!is_squarefree(g)) fail(errkind::bad_input, "defining polynomial must be squarefree");
  a.g = g;
  a.n = g.deg();

  /* Newton power sums p_k = Tr(x^k) */
  a.trpow.assign(2 * a.n - 1, Int(0));
  a.trpow[0] = a.n;
  for (int k = 1; k <= 2 * a.n - 2; k++) {
    Int s = 0;
    if (k <= a.n) s -= Int(k) * g.coeff(a.n - k);
    for (int i = 1; i < k && i <= a.n; i++) s -= g.coeff(a.n - i) * a.trpow[k - i];
    a.trpow[k] = s;
  }

  if (g.coeff(0) != 0) {
    a.xinv.assign(a.n, Rat(0));
    for (int j = 1; j <= a.n; j++) {
      Rat c(-g.coeff(j), g.coeff(0));
      c.canonicalize();
      a.xinv[j - 1] = c;
    }
  }

  auto fac = factor_over_q(g);
  for (auto& pf : fac.factors) {
    check(pf.mult == 1 && pf.f.lc() == 1, "unexpected factor shape");
    a.comps.push_back(pf.f);
  }
  if (a.comps.size() == 1) {
    a.idem.push_back(el_one(a));
  } else {
    for (auto& gi : a.comps) {
      rat_poly q, rem;
      divmod(to_rat(g), to_rat(gi), q, rem);
      check(rem.is_zero(), "component does not divide");
      rat_poly hi = q; /* g / g_i */
      rat_poly hmod, s, t, d;
      divmod(hi, to_rat(gi), q, hmod);
      rat_xgcd(hmod, to_rat(gi), s, t, d);
      check(d.deg() == 0, "components are not coprime");
      a.idem.push_back(el_from_poly(a, mul(s, hi)));
    }
    alg_elt sum = el_zero(a);
    for (size_t i = 0; i < a.idem.size(); i++) {
      sum = el_add(sum, a.idem[i]);
      for (size_t j = 0; j < a.idem.size(); j++) {
        alg_elt p = el_mul(a, a.idem[i], a.idem[j]);
        check(p == (i == j ? a.idem[i] : el_zero(a)), "idempotent table broken");
      }
    }
    check(sum == el_one(a), "idempotents do not sum to one");
  }
  return a;
}

etale_alg etale_make_weil(const int_poly& g, const Int& q) {
  if (q <= 0) fail(errkind::bad_input, "q must be positive");
  if (g.coeff(0) == 0) fail(errkind::bad_input, "zero is a root");
  int n = g.deg();
  for (int k = 0; k <= n; k++) {
    Int pw = 1;
    for (int i = 0; i < n - k; i++) pw *= q;
    if (g.coeff(n - k) * pw != g.coeff(0) * g.coeff(k))
      fail(errkind::bad_input, "x -> q/x does not permute the roots");
  }
  etale_alg a = etale_make(g);
  a.qc = q;
  alg_elt x = el_from_poly(a, int_poly({0, 1}));
  check(el_mul(a, a.xinv, x) == el_one(a), "inverse of x is wrong");
  return a;
}

}
