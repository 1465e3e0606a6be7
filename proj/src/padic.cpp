#include "wpc/padic.hpp"
#include "wpc/modpoly.hpp"
#include <algorithm>

namespace wpc {

long int_valuation(const Int& x, const Int& p) {
  check(x != 0, "valuation of zero");
  check(p > 1, "valuation base");
  Int y = x < 0 ? Int(-x) : x;
  long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    y = q;
    v++;
  }
}

np_result newton_polygon(const int_poly& f, const Int& p) {
  if (f.is_zero()) fail(errkind::bad_input, "newton polygon of zero polynomial");
  if (f.c[0] == 0) fail(errkind::bad_input, "newton polygon needs nonzero constant term");
  int n = f.deg();
  std::vector<std::pair<int, Int>> pts;
  for (int i = 0; i <= n; i++)
    if (f.c[i] != 0) pts.push_back({i, Int(int_valuation(f.c[i], p))});
  /* lower convex hull, left to right */
  std::vector<std::pair<int, Int>> hull;
  for (auto& pt : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      /* keep b only if it lies strictly below segment a-pt */
      Int cross = (b.second - a.second) * (pt.first - a.first) -
                  (pt.second - a.second) * (b.first - a.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  np_result res;
  res.vertices = hull;
  for (size_t k = 1; k < hull.size(); k++) {
    np_segment s;
    s.length = hull[k].first - hull[k - 1].first;
    s.slope = Rat(hull[k].second - hull[k - 1].second) / s.length;
    res.segments.push_back(s);
  }
  for (size_t k = res.segments.size(); k-- > 0;) {
    Rat val = -res.segments[k].slope;
    res.valuations.push_back({val, res.segments[k].length});
  }
  return res;
}

static int_poly mod_reduce(const int_poly& f, const Int& m) {
  std::vector<Int> c = f.c;
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return int_poly(std::move(c));
}

static int_poly from_fp(const fp_poly& f) {
  std::vector<Int> c(f.c.size());
  for (size_t i = 0; i < c.size(); i++) c[i] = (long)f.c[i];
  return int_poly(std::move(c));
}

static int_poly rem_mod_monic(int_poly a, const int_poly& b, const Int& m) {
  a = mod_reduce(a, m);
  int db = b.deg();
  while (a.deg() >= db) {
    Int f = a.lc();
    int k = a.deg() - db;
    for (int i = 0; i <= db; i++) a.c[k + i] -= f * b.c[i];
    a.normalize();
    a = mod_reduce(a, m);
  }
  return a;
}

static void fp_xgcd(const fp_poly& a, const fp_poly& b, fp_poly& s, fp_poly& t) {
  fp_poly r0 = a, r1 = b;
  fp_poly s0 = fp_make(a.p, {1}), s1 = fp_make(a.p, {});
  fp_poly t0 = fp_make(a.p, {}), t1 = fp_make(a.p, {1});
  while (!r1.is_zero()) {
    fp_poly q, r;
    fp_divmod(r0, r1, q, r);
    fp_poly s2 = fp_sub(s0, fp_mul(q, s1));
    fp_poly t2 = fp_sub(t0, fp_mul(q, t1));
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  check(r0.deg() == 0, "fp_xgcd of non coprime pair");
  unsigned long inv = fp_inv(r0.c[0], a.p);
  for (auto& x : s0.c) x = (unsigned long)((unsigned __int128)x * inv % a.p);
  for (auto& x : t0.c) x = (unsigned long)((unsigned __int128)x * inv % a.p);
  s = s0;
  t = t0;
}

hensel_split_result hensel_split(const int_poly& f, const Int& p, int n) {
  if (f.is_zero() || f.lc() != 1) fail(errkind::bad_input, "hensel_split needs a monic polynomial");
  if (p <= 1 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    fail(errkind::bad_input, "hensel_split modulus base not prime");
  if (n < 1) fail(errkind::bad_input, "hensel_split precision must be positive");
  if (!p.fits_ulong_p()) fail(errkind::not_supported, "hensel_split prime too large");
  unsigned long pl = p.get_ui();
  Int pn = 1;
  for (int i = 0; i < n; i++) pn *= p;

  int deg = f.deg();
  int e = 0;
  while (e <= deg && f.c[e] % p == 0) e++;
  check(e <= deg, "monic polynomial vanished mod p");
  hensel_split_result res;
  if (e == 0) {
    res.unit_part = mod_reduce(f, pn);
    res.positive_part = int_poly{std::vector<Int>{Int(1)}};
    return res;
  }
  if (e == deg) {
    res.unit_part = int_poly{std::vector<Int>{Int(1)}};
    res.positive_part = mod_reduce(f, pn);
    return res;
  }
  /* split f = c(x) x^e mod p with c(0) a unit; lift the pair */
  fp_poly fp_f = fp_reduce(f, pl);
  std::vector<unsigned long> xe(e + 1, 0);
  xe[e] = 1;
  fp_poly b0 = fp_make(pl, xe);
  fp_poly q, r;
  fp_divmod(fp_f, b0, q, r);
  check(r.is_zero(), "trailing part not divisible by x^e");
  check(q.c[0] != 0, "unit part not a unit at zero");

  int_poly a = from_fp(q), b = from_fp(b0);
  fp_poly s_fp, t_fp;
  fp_xgcd(q, b0, s_fp, t_fp);
  int_poly s = from_fp(s_fp), t = from_fp(t_fp);
  Int pj = p;
  for (int j = 1; j < n; j++) {
    Int pj1 = pj * p;
    int_poly err = sub(mod_reduce(f, pj1), mod_reduce(mul(a, b), pj1));
    std::vector<Int> ec(err.c.size());
    for (size_t i = 0; i < err.c.size(); i++) {
      check(err.c[i] % pj == 0, "hensel defect not divisible");
      Int qq;
      mpz_divexact(qq.get_mpz_t(), err.c[i].get_mpz_t(), pj.get_mpz_t());
      ec[i] = qq;
    }
    int_poly edown(std::move(ec));
    int_poly u = rem_mod_monic(mul(edown, s), b, p);
    int_poly v = rem_mod_monic(mul(edown, t), a, p);
    a = mod_reduce(add(a, mul(v, int_poly(std::vector<Int>{pj}))), pj1);
    b = mod_reduce(add(b, mul(u, int_poly(std::vector<Int>{pj}))), pj1);
    pj = pj1;
  }
  check(mod_reduce(sub(mul(a, b), f), pn).is_zero(), "hensel split product mismatch");
  res.unit_part = a;
  res.positive_part = b;
  return res;
}

}
