#include "wpc/modpoly.hpp"
#include <algorithm>

namespace wpc {

typedef unsigned long ul;
typedef unsigned __int128 u128;

static ul addm(ul a, ul b, ul p) { ul s = a + b; return s >= p ? s - p : s; }
static ul subm(ul a, ul b, ul p) { return a >= b ? a - b : a + p - b; }
static ul mulm(ul a, ul b, ul p) { return (ul)((u128)a * b % p); }

ul fp_inv(ul a, ul p) {
  long t = 0, nt = 1;
  long r = (long)p, nr = (long)(a % p);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  check(r == 1, "fp_inv of non-unit");
  if (t < 0) t += (long)p;
  return (ul)t;
}

fp_poly fp_make(ul p, std::vector<ul> c) {
  fp_poly f;
  f.p = p;
  f.c = std::move(c);
  for (auto& x : f.c) x %= p;
  f.normalize();
  return f;
}

fp_poly fp_reduce(const int_poly& f, ul p) {
  fp_poly g;
  g.p = p;
  g.c.resize(f.c.size());
  Int t;
  for (size_t i = 0; i < f.c.size(); i++) {
    t = f.c[i] % (long)p;
    if (t < 0) t += (long)p;
    g.c[i] = t.get_ui();
  }
  g.normalize();
  return g;
}

fp_poly fp_add(const fp_poly& a, const fp_poly& b) {
  fp_poly c;
  c.p = a.p;
  c.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.c.size(); i++) {
    ul v = i < a.c.size() ? a.c[i] : 0;
    ul w = i < b.c.size() ? b.c[i] : 0;
    c.c[i] = addm(v, w, a.p);
  }
  c.normalize();
  return c;
}

fp_poly fp_sub(const fp_poly& a, const fp_poly& b) {
  fp_poly c;
  c.p = a.p ? a.p : b.p;
  c.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.c.size(); i++) {
    ul v = i < a.c.size() ? a.c[i] : 0;
    ul w = i < b.c.size() ? b.c[i] : 0;
    c.c[i] = subm(v, w, c.p);
  }
  c.normalize();
  return c;
}

fp_poly fp_mul(const fp_poly& a, const fp_poly& b) {
  fp_poly c;
  c.p = a.p;
  if (a.is_zero() || b.is_zero()) return c;
  c.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); i++) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); j++)
      c.c[i + j] = addm(c.c[i + j], mulm(a.c[i], b.c[j], a.p), a.p);
  }
  c.normalize();
  return c;
}

fp_poly fp_monic(const fp_poly& a) {
  if (a.is_zero() || a.c.back() == 1) return a;
  fp_poly b = a;
  ul inv = fp_inv(a.c.back(), a.p);
  for (auto& x : b.c) x = mulm(x, inv, a.p);
  return b;
}

void fp_divmod(const fp_poly& a, const fp_poly& b, fp_poly& q, fp_poly& r) {
  check(!b.is_zero(), "fp_divmod by zero");
  ul p = b.p;
  r = a;
  r.p = p;
  q.p = p;
  q.c.clear();
  int db = b.deg();
  if (a.deg() < db) return;
  q.c.assign(a.deg() - db + 1, 0);
  ul inv = fp_inv(b.c.back(), p);
  while (!r.is_zero() && r.deg() >= db) {
    int k = r.deg() - db;
    ul f = mulm(r.c.back(), inv, p);
    q.c[k] = f;
    for (int i = 0; i <= db; i++)
      r.c[k + i] = subm(r.c[k + i], mulm(f, b.c[i], p), p);
    r.normalize();
  }
  q.normalize();
}

fp_poly fp_mod(const fp_poly& a, const fp_poly& m) {
  fp_poly q, r;
  fp_divmod(a, m, q, r);
  return r;
}

fp_poly fp_gcd(fp_poly a, fp_poly b) {
  if (a.p == 0) a.p = b.p;
  if (b.p == 0) b.p = a.p;
  while (!b.is_zero()) {
    fp_poly r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

fp_poly fp_powmod(const fp_poly& base, const Int& e, const fp_poly& m) {
  fp_poly r;
  r.p = m.p;
  r.c = {1};
  fp_poly b = fp_mod(base, m);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = fp_mod(fp_mul(r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(fp_mul(r, b), m);
  }
  return r;
}

fp_poly fp_derivative(const fp_poly& f) {
  fp_poly d;
  d.p = f.p;
  if (f.deg() < 1) return d;
  d.c.resize(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); i++) d.c[i - 1] = mulm(f.c[i], i % f.p, f.p);
  d.normalize();
  return d;
}

bool fp_is_squarefree(const fp_poly& f) {
  if (f.deg() <= 0) return !f.is_zero();
  return fp_gcd(f, fp_derivative(f)).deg() == 0;
}

/* kernel of (frobenius - id) on F_p[x]/f as row vectors */
static std::vector<std::vector<ul>> berlekamp_kernel(const fp_poly& f) {
  int n = f.deg();
  ul p = f.p;
  /* rows of Q: x^(i p) mod f */
  std::vector<std::vector<ul>> m(n, std::vector<ul>(n, 0));
  fp_poly xp = fp_powmod(fp_make(p, {0, 1}), Int((long)p), f);
  fp_poly cur;
  cur.p = p;
  cur.c = {1};
  for (int i = 0; i < n; i++) {
    for (int j = 0; j <= cur.deg(); j++) m[i][j] = cur.c[j];
    m[i][i] = subm(m[i][i], 1, p); /* Q - I */
    cur = fp_mod(fp_mul(cur, xp), f);
  }
  /* left kernel by gaussian elimination on columns ... operate on the
   * transpose: find all v with v (Q - I) = 0 */
  std::vector<std::vector<ul>> a(n, std::vector<ul>(2 * n, 0));
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  int pr = 0;
  for (int col = 0; col < n && pr < n; col++) {
    int piv = -1;
    for (int i = pr; i < n; i++)
      if (a[i][col]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[pr]);
    ul inv = fp_inv(a[pr][col], p);
    for (auto& x : a[pr]) x = mulm(x, inv, p);
    for (int i = 0; i < n; i++) {
      if (i == pr || !a[i][col]) continue;
      ul fsc = a[i][col];
      for (int j = 0; j < 2 * n; j++)
        a[i][j] = subm(a[i][j], mulm(fsc, a[pr][j], p), p);
    }
    pr++;
  }
  std::vector<std::vector<ul>> ker;
  for (int i = pr; i < n; i++)
    ker.emplace_back(a[i].begin() + n, a[i].end());
  return ker;
}

static bool poly_less(const fp_poly& a, const fp_poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; i--)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

std::vector<fp_poly> fp_factor_squarefree(const fp_poly& fin) {
  fp_poly f = fp_monic(fin);
  ul p = f.p;
  check(f.deg() >= 1, "fp_factor_squarefree constant input");
  check(fp_is_squarefree(f), "fp_factor_squarefree needs squarefree input");
  std::vector<std::vector<ul>> ker = berlekamp_kernel(f);
  size_t nfact = ker.size();
  std::vector<fp_poly> factors{f};
  if (nfact == 1) return factors;
  unsigned long long seed = 0x9e3779b97f4a7c15ULL;
  auto rnd = [&]() { seed ^= seed << 13; seed ^= seed >> 7; seed ^= seed << 17; return seed; };
  auto try_split_with = [&](const fp_poly& v) {
    std::vector<fp_poly> next;
    for (auto& h : factors) {
      if (h.deg() == 1) { next.push_back(h); continue; }
      bool split = false;
      if (p <= 257) {
        for (ul s = 0; s < p && !split; s++) {
          fp_poly vs = v;
          if (vs.c.empty()) vs.c = {0};
          vs.c[0] = subm(vs.c[0], s, p);
          vs.normalize();
          fp_poly g = fp_gcd(h, vs);
          if (g.deg() > 0 && g.deg() < h.deg()) {
            fp_poly q, r;
            fp_divmod(h, g, q, r);
            check(r.is_zero(), "berlekamp split remainder");
            next.push_back(g);
            next.push_back(fp_monic(q));
            split = true;
          }
        }
      } else {
        fp_poly w = fp_powmod(v, Int((long)((p - 1) / 2)), h);
        if (!w.c.empty()) w.c[0] = subm(w.c[0], 1, p);
        w.normalize();
        fp_poly g = fp_gcd(h, w);
        if (g.deg() > 0 && g.deg() < h.deg()) {
          fp_poly q, r;
          fp_divmod(h, g, q, r);
          next.push_back(g);
          next.push_back(fp_monic(q));
          split = true;
        }
      }
      if (!split) next.push_back(h);
    }
    factors = std::move(next);
  };
  /* kernel vectors first, then pseudo random combinations */
  size_t kidx = 0;
  int guard = 0;
  while (factors.size() < nfact) {
    fp_poly v;
    v.p = p;
    if (kidx < ker.size()) {
      v.c = ker[kidx++];
    } else {
      v.c.assign(f.deg(), 0);
      for (auto& kv : ker) {
        ul cf = rnd() % p;
        for (size_t j = 0; j < kv.size(); j++) v.c[j] = addm(v.c[j], mulm(cf, kv[j], p), p);
      }
    }
    v.normalize();
    if (v.deg() < 1) {
      if (++guard > 10000) fail(errkind::internal, "berlekamp failed to split");
      continue;
    }
    try_split_with(v);
    if (++guard > 10000) fail(errkind::internal, "berlekamp failed to split");
  }
  for (auto& h : factors) h = fp_monic(h);
  std::sort(factors.begin(), factors.end(), poly_less);
  return factors;
}

bool fp_is_irreducible(const fp_poly& fin) {
  fp_poly f = fp_monic(fin);
  if (f.deg() < 1) return false;
  if (f.deg() == 1) return true;
  if (!fp_is_squarefree(f)) return false;
  return berlekamp_kernel(f).size() == 1;
}

}
