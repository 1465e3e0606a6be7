#include "wpc/roots.hpp"
#include "wpc/errors.hpp"
#include <algorithm>
#include <cstdlib>

namespace wpc {

long precision_cap() {
  const char* s = std::getenv("WPC_PRECISION_CAP");
  if (!s) return 8192;
  long v = std::atol(s);
  return v >= 128 ? v : 8192;
}

/* sqrt(n/d) = sqrt(n*d)/d; with s = isqrt(n*d*4^bits),
 * s/(2^bits*d) <= sqrt(n/d) < (s+1)/(2^bits*d) and the gap is < 2^-bits */
static Int scaled_isqrt(const Rat& x, long bits, Int& dd) {
  Int m = x.get_num() * x.get_den();
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), 2 * (unsigned long)bits);
  Int s;
  mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
  dd = x.get_den();
  mpz_mul_2exp(dd.get_mpz_t(), dd.get_mpz_t(), (unsigned long)bits);
  return s;
}

Rat sqrt_upper(const Rat& x, long bits) {
  check(sgn(x) >= 0, "sqrt_upper of negative value");
  if (sgn(x) == 0) return Rat(0);
  Int dd;
  Int s = scaled_isqrt(x, bits, dd);
  Rat r(s + 1, dd);
  r.canonicalize();
  return r;
}

Rat sqrt_lower(const Rat& x, long bits) {
  check(sgn(x) >= 0, "sqrt_lower of negative value");
  if (sgn(x) == 0) return Rat(0);
  Int dd;
  Int s = scaled_isqrt(x, bits, dd);
  Rat r(s, dd);
  r.canonicalize();
  return r;
}

/* ---------- Sturm sequences for real roots ---------- */

static std::vector<rat_poly> sturm_chain(const int_poly& f) {
  std::vector<rat_poly> ch;
  ch.push_back(to_rat(f));
  ch.push_back(to_rat(derivative(f)));
  while (!ch.back().is_zero() && ch.back().deg() > 0) {
    rat_poly q, r;
    divmod(ch[ch.size() - 2], ch.back(), q, r);
    if (r.is_zero()) break;
    ch.push_back(scale(r, Rat(-1)));
  }
  return ch;
}

static int sturm_var_at(const std::vector<rat_poly>& ch, const Rat& x) {
  int var = 0, prev = 0;
  for (auto& p : ch) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) var++;
    prev = s;
  }
  return var;
}

static int sturm_var_inf(const std::vector<rat_poly>& ch, int dir) {
  int var = 0, prev = 0;
  for (auto& p : ch) {
    if (p.is_zero()) continue;
    int s = sgn(p.lc());
    if (dir < 0 && p.deg() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) var++;
    prev = s;
  }
  return var;
}

int count_real_roots(const int_poly& f) {
  if (f.is_zero()) fail(errkind::bad_input, "count_real_roots of zero polynomial");
  if (f.deg() == 0) return 0;
  if (!is_squarefree(f)) fail(errkind::bad_input, "count_real_roots needs squarefree input");
  auto ch = sturm_chain(f);
  return sturm_var_inf(ch, -1) - sturm_var_inf(ch, +1);
}

/* all roots satisfy |z| < 1 + max|c_i|/|c_n| */
static Rat cauchy_bound(const int_poly& f) {
  Rat m(0);
  Int lc = abs(f.lc());
  for (int i = 0; i < f.deg(); i++) {
    Rat t(abs(f.c[i]), lc);
    t.canonicalize();
    if (t > m) m = t;
  }
  return m + 1;
}

/* isolating intervals (lo, hi) with f(lo), f(hi) != 0 and exactly one root
 * inside; an exact rational root is stored as lo == hi */
static void isolate_rec(const std::vector<rat_poly>& ch, const int_poly& f,
                        const Rat& a, const Rat& b, int va, int vb,
                        std::vector<std::pair<Rat, Rat>>& out) {
  int cnt = va - vb;
  if (cnt == 0) return;
  if (cnt == 1) {
    out.push_back({a, b});
    return;
  }
  Rat m = (a + b) / 2;
  if (sgn(eval(f, m)) != 0) {
    int vm = sturm_var_at(ch, m);
    isolate_rec(ch, f, a, m, va, vm, out);
    isolate_rec(ch, f, m, b, vm, vb, out);
    return;
  }
  /* midpoint is a root: shrink a punctured neighbourhood around it until it
   * contains no other root, record the exact root, recurse on both sides */
  Rat d = (b - a) / 4;
  for (;;) {
    Rat lo = m - d, hi = m + d;
    if (sgn(eval(f, lo)) != 0 && sgn(eval(f, hi)) != 0 &&
        sturm_var_at(ch, lo) - sturm_var_at(ch, hi) == 1) {
      out.push_back({m, m});
      isolate_rec(ch, f, a, lo, va, sturm_var_at(ch, lo), out);
      isolate_rec(ch, f, hi, b, sturm_var_at(ch, hi), vb, out);
      return;
    }
    d /= 2;
  }
}

static std::vector<std::pair<Rat, Rat>> isolate_real_roots(const int_poly& f,
                                                           const std::vector<rat_poly>& ch) {
  Rat m = cauchy_bound(f);
  std::vector<std::pair<Rat, Rat>> out;
  isolate_rec(ch, f, -m, m, sturm_var_at(ch, -m), sturm_var_at(ch, m), out);
  std::sort(out.begin(), out.end(),
            [](const std::pair<Rat, Rat>& x, const std::pair<Rat, Rat>& y) {
              return x.first < y.first;
            });
  return out;
}

/* bisect an isolating interval until hi - lo <= w; the single enclosed root
 * is simple so the endpoint signs differ */
static void refine_interval(const int_poly& f, Rat& lo, Rat& hi, const Rat& w) {
  if (lo == hi) return;
  int slo = sgn(eval(f, lo));
  while (hi - lo > w) {
    Rat m = (lo + hi) / 2;
    int sm = sgn(eval(f, m));
    if (sm == 0) {
      lo = hi = m;
      return;
    }
    if (sm == slo) lo = m; else hi = m;
  }
}

/* ---------- exact complex rational arithmetic ---------- */

struct qc {
  Rat re, im;
};

static qc qc_sub(const qc& a, const qc& b) { return {a.re - b.re, a.im - b.im}; }
static qc qc_mul(const qc& a, const qc& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
static Rat qc_abs2(const qc& a) { return a.re * a.re + a.im * a.im; }

static qc qc_eval(const int_poly& f, const qc& z) {
  qc acc{Rat(0), Rat(0)};
  for (int k = f.deg(); k >= 0; k--) {
    acc = qc_mul(acc, z);
    acc.re += Rat(f.c[k]);
  }
  return acc;
}

/* ---------- fixed point complex arithmetic, scale 2^-w ---------- */

struct fxc {
  Int re, im;
};

static Int pow2(long w) {
  Int t(1);
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), (unsigned long)w);
  return t;
}

static Int div_round(const Int& n, const Int& d) {
  Int num = 2 * n + d, den = 2 * d, q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

static Int fx_rnd(const Int& x, long w) {
  Int y = x + pow2(w - 1);
  mpz_fdiv_q_2exp(y.get_mpz_t(), y.get_mpz_t(), (unsigned long)w);
  return y;
}

static Int rat_to_fx(const Rat& x, long w) {
  Int n = x.get_num();
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), (unsigned long)w);
  return div_round(n, x.get_den());
}

static Rat fx_to_rat(const Int& x, long w) {
  Rat r(x, pow2(w));
  r.canonicalize();
  return r;
}

static fxc fx_sub(const fxc& a, const fxc& b) { return {a.re - b.re, a.im - b.im}; }
static fxc fx_mul(const fxc& a, const fxc& b, long w) {
  return {fx_rnd(a.re * b.re - a.im * b.im, w), fx_rnd(a.re * b.im + a.im * b.re, w)};
}

static bool fx_div(const fxc& a, const fxc& b, long w, fxc& out) {
  Int den = b.re * b.re + b.im * b.im;
  if (den == 0) return false;
  Int nr = a.re * b.re + a.im * b.im;
  Int ni = a.im * b.re - a.re * b.im;
  mpz_mul_2exp(nr.get_mpz_t(), nr.get_mpz_t(), (unsigned long)w);
  mpz_mul_2exp(ni.get_mpz_t(), ni.get_mpz_t(), (unsigned long)w);
  out = {div_round(nr, den), div_round(ni, den)};
  return true;
}

static fxc fx_eval(const int_poly& f, const fxc& z, long w) {
  fxc acc{Int(0), Int(0)};
  for (int k = f.deg(); k >= 0; k--) {
    acc = fx_mul(acc, z, w);
    Int c = f.c[k];
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), (unsigned long)w);
    acc.re += c;
  }
  return acc;
}

/* ---------- certification ----------
 * For distinct points z_1..z_n and w_i = f(z_i)/(lc * prod_{j!=i}(z_i-z_j)),
 * the matrix diag(z_i) - (w_i)(1..1) has characteristic polynomial f/lc, and
 * its i-th Gershgorin disc lies inside D(z_i, n|w_i|).  If those discs are
 * pairwise disjoint each one contains exactly one root of f. */

struct cert_attempt {
  std::vector<qc> centers;
  std::vector<bool> real_flag;
};

static bool certify(const int_poly& f, const cert_attempt& at, long prec_bits,
                    std::vector<root_ball>& out) {
  int n = f.deg();
  long cb = prec_bits + 32;
  std::vector<Rat> rad(n);
  Rat lc2(f.lc() * f.lc());
  Rat target(1, pow2(prec_bits));
  target.canonicalize();
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (at.centers[i].re == at.centers[j].re && at.centers[i].im == at.centers[j].im)
        return false;
  for (int i = 0; i < n; i++) {
    qc fv = qc_eval(f, at.centers[i]);
    Rat p2(1);
    for (int j = 0; j < n; j++) {
      if (j == i) continue;
      p2 *= qc_abs2(qc_sub(at.centers[i], at.centers[j]));
    }
    Rat w2 = qc_abs2(fv) / (lc2 * p2);
    rad[i] = Rat(n) * sqrt_upper(w2, cb);
    if (rad[i] > target) return false;
    if (!at.real_flag[i] && !(abs(at.centers[i].im) > rad[i])) return false;
  }
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      Rat d2 = qc_abs2(qc_sub(at.centers[i], at.centers[j]));
      Rat s = rad[i] + rad[j];
      if (!(d2 > s * s)) return false;
    }
  out.clear();
  for (int i = 0; i < n; i++) {
    root_ball b;
    b.re = at.centers[i].re;
    b.im = at.centers[i].im;
    b.rad = rad[i];
    b.is_real = at.real_flag[i];
    out.push_back(b);
  }
  std::sort(out.begin(), out.end(), [](const root_ball& a, const root_ball& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  for (int i = 0; i < n; i++) {
    if (out[i].is_real) {
      out[i].conj = i;
      continue;
    }
    for (int j = 0; j < n; j++)
      if (out[j].re == out[i].re && out[j].im == -out[i].im) {
        out[i].conj = j;
        break;
      }
    check(out[i].conj >= 0, "conjugate partner missing");
  }
  return true;
}

/* ---------- main driver ---------- */

std::vector<root_ball> complex_roots(const int_poly& f, long prec_bits) {
  if (f.is_zero()) fail(errkind::bad_input, "complex_roots of zero polynomial");
  if (prec_bits < 8) prec_bits = 8;
  int n = f.deg();
  std::vector<root_ball> out;
  if (n == 0) return out;
  if (!is_squarefree(f)) fail(errkind::bad_input, "complex_roots needs squarefree input");
  if (n == 1) {
    root_ball b;
    b.re = Rat(-f.c[0], f.c[1]);
    b.re.canonicalize();
    b.im = 0;
    b.rad = 0;
    b.is_real = true;
    b.conj = 0;
    out.push_back(b);
    return out;
  }

  auto ch = sturm_chain(f);
  auto ivs = isolate_real_roots(f, ch);
  int nr = (int)ivs.size();
  check(nr == sturm_var_inf(ch, -1) - sturm_var_inf(ch, +1), "real root isolation miscount");
  check((n - nr) % 2 == 0, "odd number of nonreal roots");
  int npair = (n - nr) / 2;

  Rat bound = cauchy_bound(f);
  long cap = precision_cap();
  long w0 = 128;
  while (w0 < prec_bits + 32 && w0 < cap) w0 *= 2;

  std::vector<fxc> pairs; /* upper half plane representatives */
  long wprev = 0;

  for (long w = w0; w <= cap; w *= 2) {
    /* refine real enclosures and place them at fixed precision */
    Rat width = fx_to_rat(Int(1), std::min(w / 2, prec_bits + 32));
    for (auto& iv : ivs) refine_interval(f, iv.first, iv.second, width);

    if (pairs.empty()) {
      /* start nonreal approximations at distinct off-axis points on the
       * circle |z| = root bound; (3+4i)/5 has infinite multiplicative order
       * so its powers never collide or become real */
      qc u{Rat(3, 5), Rat(4, 5)}, p{Rat(1), Rat(0)};
      for (int k = 0; k < npair; k++) {
        p = qc_mul(p, u);
        qc pt{p.re * bound, p.im * bound};
        if (sgn(pt.im) < 0) pt.im = -pt.im;
        pairs.push_back({rat_to_fx(pt.re, w), rat_to_fx(pt.im, w)});
      }
    } else {
      for (auto& z : pairs) {
        mpz_mul_2exp(z.re.get_mpz_t(), z.re.get_mpz_t(), (unsigned long)(w - wprev));
        mpz_mul_2exp(z.im.get_mpz_t(), z.im.get_mpz_t(), (unsigned long)(w - wprev));
      }
    }
    wprev = w;

    /* full point list: pinned real roots then conjugate pairs */
    auto assemble = [&](std::vector<fxc>& z) {
      z.clear();
      for (auto& iv : ivs) {
        Rat m = iv.first == iv.second ? iv.first : (iv.first + iv.second) / 2;
        z.push_back({rat_to_fx(m, w), Int(0)});
      }
      for (auto& p : pairs) {
        z.push_back(p);
        z.push_back({p.re, -p.im});
      }
    };
    std::vector<fxc> z;
    assemble(z);

    int_poly fd = derivative(f);
    long conv_bits = std::min(w - 24, prec_bits + 24);
    Int thr = pow2(w - conv_bits);
    Int nudge = pow2(w - w / 4);
    fxc one{pow2(w), Int(0)};

    int maxsweep = npair == 0 ? 0 : 400;
    bool converged = npair == 0;
    for (int sweep = 0; sweep < maxsweep; sweep++) {
      Int maxdelta(0);
      for (int p = 0; p < npair; p++) {
        int i = nr + 2 * p;
        fxc zi = z[i];
        fxc fv = fx_eval(f, zi, w);
        fxc fdv = fx_eval(fd, zi, w);
        fxc t, corr;
        bool ok = fx_div(fv, fdv, w, t);
        if (ok) {
          fxc s{Int(0), Int(0)};
          bool sum_ok = true;
          for (int j = 0; j < n && sum_ok; j++) {
            if (j == i) continue;
            fxc inv;
            sum_ok = fx_div(one, fx_sub(zi, z[j]), w, inv);
            if (sum_ok) {
              s.re += inv.re;
              s.im += inv.im;
            }
          }
          if (sum_ok) {
            fxc den = fx_sub(one, fx_mul(t, s, w));
            ok = fx_div(t, den, w, corr);
          } else {
            ok = false;
          }
        }
        if (!ok) {
          /* coincident points or vanishing derivative approximation */
          zi.re += nudge;
          zi.im += nudge;
          maxdelta = thr + 1;
        } else {
          zi = fx_sub(zi, corr);
          Int d1 = abs(corr.re), d2 = abs(corr.im);
          if (d1 > maxdelta) maxdelta = d1;
          if (d2 > maxdelta) maxdelta = d2;
        }
        if (sgn(zi.im) < 0) zi.im = -zi.im;
        z[i] = zi;
        z[i + 1] = {zi.re, -zi.im};
        pairs[p] = zi;
      }
      if (maxdelta <= thr) {
        converged = true;
        break;
      }
    }

    cert_attempt at;
    for (int i = 0; i < nr; i++) {
      auto& iv = ivs[i];
      Rat m = iv.first == iv.second ? iv.first : (iv.first + iv.second) / 2;
      at.centers.push_back({m, Rat(0)});
      at.real_flag.push_back(true);
    }
    for (auto& p : pairs) {
      at.centers.push_back({fx_to_rat(p.re, w), fx_to_rat(p.im, w)});
      at.centers.push_back({fx_to_rat(p.re, w), -fx_to_rat(p.im, w)});
      at.real_flag.push_back(false);
      at.real_flag.push_back(false);
    }
    if (converged && certify(f, at, prec_bits, out)) return out;
  }
  fail(errkind::indeterminate, "root certification did not succeed within the precision cap");
}

}
