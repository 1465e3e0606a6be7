#include "wpc/cmtype.hpp"

#include <algorithm>

#include "wpc/arith.hpp"
#include "wpc/errors.hpp"
#include "wpc/padic.hpp"

namespace wpc {

ivl iv_add(const ivl& x, const ivl& y) { return ivl(x.lo + y.lo, x.hi + y.hi); }
ivl iv_sub(const ivl& x, const ivl& y) { return ivl(x.lo - y.hi, x.hi - y.lo); }
ivl iv_neg(const ivl& x) { return ivl(-x.hi, -x.lo); }

ivl iv_mul(const ivl& x, const ivl& y) {
  Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
  return ivl(std::min(std::min(a, b), std::min(c, d)),
             std::max(std::max(a, b), std::max(c, d)));
}

ivl iv_scale(const Rat& c, const ivl& x) {
  return c >= 0 ? ivl(c * x.lo, c * x.hi) : ivl(c * x.hi, c * x.lo);
}

cbox cb_from_ball(const root_ball& b) {
  return cbox{ivl(b.re - b.rad, b.re + b.rad), ivl(b.im - b.rad, b.im + b.rad)};
}

cbox cb_scalar(const Rat& c) { return cbox{ivl(c), ivl(Rat(0))}; }
cbox cb_add(const cbox& x, const cbox& y) {
  return cbox{iv_add(x.re, y.re), iv_add(x.im, y.im)};
}
cbox cb_sub(const cbox& x, const cbox& y) {
  return cbox{iv_sub(x.re, y.re), iv_sub(x.im, y.im)};
}
cbox cb_neg(const cbox& x) { return cbox{iv_neg(x.re), iv_neg(x.im)}; }

cbox cb_mul(const cbox& x, const cbox& y) {
  return cbox{iv_sub(iv_mul(x.re, y.re), iv_mul(x.im, y.im)),
              iv_add(iv_mul(x.re, y.im), iv_mul(x.im, y.re))};
}

cbox cb_conj(const cbox& x) { return cbox{x.re, iv_neg(x.im)}; }
cbox cb_mul_i(const cbox& x) { return cbox{iv_neg(x.im), x.re}; }
cbox cb_scale(const Rat& c, const cbox& x) {
  return cbox{iv_scale(c, x.re), iv_scale(c, x.im)};
}

cm_type cm_type_padic(const etale_alg& a, bool conjugated, long prec) {
  if (a.qc == 0) fail(errkind::bad_input, "algebra carries no involution");
  cm_type t;
  t.q = a.qc;
  if (t.q < 2) fail(errkind::bad_input, "q must be a prime power");
  auto fs = factor_int(t.q);
  if (fs.size() != 1) fail(errkind::bad_input, "q must be a prime power");
  t.p = fs[0].first;
  t.conjugated = conjugated;
  t.prec = prec;
  /* positive valuation singles out half the roots only in the ordinary
   * case, and the split is then half-and-half within every component */
  np_result np = newton_polygon(a.g, t.p);
  bool ordinary = false;
  for (const auto& [val, cnt] : np.valuations)
    if (val == 0) ordinary = cnt == a.n / 2;
  if (!ordinary) fail(errkind::not_supported, "defining polynomial is not ordinary");
  for (int i = 0; i < (int)a.comps.size(); i++) {
    const int_poly& gi = a.comps[i];
    if (count_real_roots(gi) > 0)
      fail(errkind::not_supported,
           "component " + std::to_string(i) + " has a real embedding");
    if (gi.deg() != 2)
      fail(errkind::not_supported,
           "component " + std::to_string(i) +
               " has degree > 2; identifying its positive-valuation roots "
               "is not supported");
    std::vector<root_ball> balls = complex_roots(gi, prec);
    check(balls.size() == 2 && balls[0].conj == 1, "quadratic root pairing broken");
    int pick = conjugated ? 1 : 0;
    t.phi.push_back(cm_embedding{i, balls[pick], balls[1 - pick]});
  }
  return t;
}

void cm_refine(const etale_alg& a, cm_type& t, long prec) {
  if (prec <= t.prec) return;
  cm_type fresh = cm_type_padic(a, t.conjugated, prec);
  t.prec = prec;
  t.phi = std::move(fresh.phi);
}

cbox embed(const etale_alg& a, const cm_embedding& phi, const alg_elt& x) {
  rat_poly f = el_project(a, phi.comp, x);
  cbox z = cb_from_ball(phi.z);
  cbox acc = cb_scalar(Rat(0));
  for (int k = f.deg(); k >= 0; k--)
    acc = cb_add(cb_mul(acc, z), cb_scalar(f.coeff(k)));
  return acc;
}

}
