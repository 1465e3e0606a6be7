#include "wpc/shortvec.hpp"
#include <algorithm>
#include <cmath>

namespace wpc {

Rat eval_form(const rat_mat& g, const std::vector<Int>& x) {
  int k = g.nr;
  Rat s = 0;
  for (int i = 0; i < k; i++) {
    if (x[i] == 0) continue;
    for (int j = 0; j < k; j++) {
      if (x[j] == 0) continue;
      s += g(i, j) * Rat(x[i] * x[j]);
    }
  }
  return s;
}

/* G = L D L^T with L unit lower triangular; returns false if some D_i <= 0 */
static bool ldl(const rat_mat& g, rat_mat& l, std::vector<Rat>& d) {
  int k = g.nr;
  l = rat_mat::identity(k);
  d.assign(k, Rat(0));
  for (int i = 0; i < k; i++) {
    for (int j = 0; j < i; j++) {
      Rat s = g(i, j);
      for (int m = 0; m < j; m++) s -= l(i, m) * l(j, m) * d[m];
      l(i, j) = s / d[j];
    }
    Rat s = g(i, i);
    for (int m = 0; m < i; m++) s -= l(i, m) * l(i, m) * d[m];
    if (s <= 0) return false;
    d[i] = s;
  }
  return true;
}

bool is_positive_definite(const rat_mat& g) {
  if (g.nr != g.nc) return false;
  for (int i = 0; i < g.nr; i++)
    for (int j = 0; j < i; j++)
      if (g(i, j) != g(j, i)) return false;
  rat_mat l;
  std::vector<Rat> d;
  return ldl(g, l, d);
}

gram_form::gram_form(rat_mat m) : g(std::move(m)) {
  if (!is_positive_definite(g)) fail(errkind::bad_input, "gram matrix not symmetric positive definite");
}

/* Gram-Schmidt data from a gram matrix: bnorm[i] = |b_i*|^2, mu(i,j) */
static void gso(const rat_mat& g, rat_mat& mu, std::vector<Rat>& bnorm) {
  int k = g.nr;
  mu = rat_mat::identity(k);
  bnorm.assign(k, Rat(0));
  for (int i = 0; i < k; i++) {
    for (int j = 0; j < i; j++) {
      Rat s = g(i, j);
      for (int m = 0; m < j; m++) s -= mu(i, m) * mu(j, m) * bnorm[m];
      check(bnorm[j] != 0, "gso degenerate");
      mu(i, j) = s / bnorm[j];
    }
    Rat s = g(i, i);
    for (int m = 0; m < i; m++) s -= mu(i, m) * mu(i, m) * bnorm[m];
    bnorm[i] = s;
  }
}

static Int round_nearest(const Rat& x) {
  /* round half toward even is not needed; half-up is deterministic */
  Rat y = x + Rat(1, 2);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return q;
}

lll_result lll_reduce(const rat_mat& gin) {
  if (!is_positive_definite(gin)) fail(errkind::bad_input, "lll_reduce needs positive definite gram");
  int k = gin.nr;
  lll_result res;
  res.t = int_mat::identity(k);
  res.g_red = gin;
  if (k <= 1) return res;
  rat_mat& g = res.g_red;
  int_mat& t = res.t;

  auto row_submul = [&](int dst, int src, const Int& q) {
    /* basis_dst -= q * basis_src, updating gram on both sides */
    if (q == 0) return;
    Rat qq(q);
    for (int c = 0; c < k; c++) g(dst, c) -= qq * g(src, c);
    for (int r = 0; r < k; r++) g(r, dst) -= qq * g(r, src);
    Int tmp;
    for (int c = 0; c < k; c++) { tmp = q * t(src, c); t(dst, c) -= tmp; }
  };
  auto row_swap = [&](int a, int b) {
    for (int c = 0; c < k; c++) swap(g(a, c), g(b, c));
    for (int r = 0; r < k; r++) swap(g(r, a), g(r, b));
    for (int c = 0; c < k; c++) swap(t(a, c), t(b, c));
  };

  rat_mat mu;
  std::vector<Rat> bnorm;
  gso(g, mu, bnorm);
  Rat delta(3, 4);
  int kk = 1;
  while (kk < k) {
    /* size-reduce row kk */
    for (int j = kk - 1; j >= 0; j--) {
      Rat m2 = mu(kk, j) * 2;
      if (m2 > 1 || m2 < -1) {
        Int q = round_nearest(mu(kk, j));
        row_submul(kk, j, q);
        gso(g, mu, bnorm);
      }
    }
    Rat lhs = bnorm[kk];
    Rat rhs = (delta - mu(kk, kk - 1) * mu(kk, kk - 1)) * bnorm[kk - 1];
    if (lhs >= rhs) {
      kk++;
    } else {
      row_swap(kk, kk - 1);
      gso(g, mu, bnorm);
      kk = std::max(1, kk - 1);
    }
  }
  return res;
}

/* max integer t with t <= c + sqrt(r), r >= 0 */
static Int floor_plus_sqrt(const Rat& c, const Rat& r) {
  auto pred = [&](const Int& t) {
    Rat d = Rat(t) - c;
    if (d <= 0) return true;
    return d * d <= r;
  };
  Int fc;
  mpz_fdiv_q(fc.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  Int fr;
  mpz_fdiv_q(fr.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Int sr;
  mpz_sqrt(sr.get_mpz_t(), fr.get_mpz_t());
  Int t = fc + sr;
  while (pred(t + 1)) t += 1;
  while (!pred(t)) t -= 1;
  return t;
}

/* min integer t with t >= c - sqrt(r), r >= 0 */
static Int ceil_minus_sqrt(const Rat& c, const Rat& r) {
  auto pred = [&](const Int& t) {
    Rat d = c - Rat(t);
    if (d <= 0) return true;
    return d * d <= r;
  };
  Int fc;
  mpz_cdiv_q(fc.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  Int fr;
  mpz_fdiv_q(fr.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Int sr;
  mpz_sqrt(sr.get_mpz_t(), fr.get_mpz_t());
  Int t = fc - sr;
  while (pred(t - 1)) t -= 1;
  while (!pred(t)) t += 1;
  return t;
}

static void enum_rec(const rat_mat& l, const std::vector<Rat>& d, int i,
                     std::vector<Int>& x, bool all_above_zero, const Rat& rem,
                     std::vector<std::vector<Int>>& out) {
  int k = (int)d.size();
  if (i < 0) {
    if (!all_above_zero) out.push_back(x);
    return;
  }
  Rat c = 0;
  for (int j = i + 1; j < k; j++)
    if (x[j] != 0) c += Rat(x[j]) * l(j, i);
  Rat room = rem / d[i];
  Int lo = ceil_minus_sqrt(-c, room);
  Int hi = floor_plus_sqrt(-c, room);
  if (all_above_zero && lo < 0) lo = 0; /* sign symmetry: topmost nonzero kept positive */
  for (Int v = lo; v <= hi; v += 1) {
    x[i] = v;
    Rat y = Rat(v) + c;
    Rat used = d[i] * y * y;
    if (used > rem) continue; /* guard against any bound-hunt slack */
    enum_rec(l, d, i - 1, x, all_above_zero && v == 0, rem - used, out);
  }
  x[i] = 0;
}

static bool enum_rec_cb(const rat_mat& l, const std::vector<Rat>& d, int i,
                        std::vector<Int>& x, bool all_above_zero, const Rat& rem,
                        const std::function<bool(const std::vector<Int>&)>& f) {
  int k = (int)d.size();
  if (i < 0) {
    if (!all_above_zero) return f(x);
    return true;
  }
  Rat c = 0;
  for (int j = i + 1; j < k; j++)
    if (x[j] != 0) c += Rat(x[j]) * l(j, i);
  Rat room = rem / d[i];
  Int lo = ceil_minus_sqrt(-c, room);
  Int hi = floor_plus_sqrt(-c, room);
  if (all_above_zero && lo < 0) lo = 0; /* sign symmetry: topmost nonzero kept positive */
  for (Int v = lo; v <= hi; v += 1) {
    x[i] = v;
    Rat y = Rat(v) + c;
    Rat used = d[i] * y * y;
    if (used > rem) continue; /* guard against any bound-hunt slack */
    if (!enum_rec_cb(l, d, i - 1, x, all_above_zero && v == 0, rem - used, f)) {
      x[i] = 0;
      return false;
    }
  }
  x[i] = 0;
  return true;
}

/* double tree for the streaming case: the bound is relaxed first, so the
 * outward-nudged float pruning never drops a point inside the requested
 * bound; a few points slightly beyond it reach the callback instead */
static bool enum_rec_fast(const std::vector<double>& l, const std::vector<double>& d,
                          int k, int i, std::vector<long>& x, bool top, double rem,
                          const std::function<bool(const std::vector<long>&)>& f) {
  if (i < 0) {
    if (!top) return f(x);
    return true;
  }
  double c = 0;
  for (int j = i + 1; j < k; j++)
    if (x[j] != 0) c += (double)x[j] * l[j * k + i];
  double room = rem / d[i];
  if (room < 0) room = 0;
  double r = std::sqrt(room) * (1 + 1e-9) + 1e-12;
  double lod = -c - r, hid = -c + r;
  long lo = (long)std::ceil(lod - 1e-9 * (std::fabs(lod) + 1));
  long hi = (long)std::floor(hid + 1e-9 * (std::fabs(hid) + 1));
  if (top && lo < 0) lo = 0; /* sign symmetry: topmost nonzero kept positive */
  for (long v = lo; v <= hi; v++) {
    double y = (double)v + c;
    double used = d[i] * y * y;
    if (used > rem) continue;
    x[i] = v;
    if (!enum_rec_fast(l, d, k, i - 1, x, top && v == 0, rem - used, f)) {
      x[i] = 0;
      return false;
    }
  }
  x[i] = 0;
  return true;
}

void enumerate_short_stream(const rat_mat& gin, const Rat& bound,
                            const std::function<bool(const short_vec&)>& f) {
  if (gin.nr == 0) return;
  if (!is_positive_definite(gin)) fail(errkind::bad_input, "enumerate_short needs positive definite gram");
  if (bound < 0) return;
  int k = gin.nr;
  lll_result red = lll_reduce(gin);
  rat_mat l;
  std::vector<Rat> d;
  check(ldl(red.g_red, l, d), "reduced gram not positive definite");

  auto deliver = [&](const std::vector<Int>& v) {
    std::vector<Int> y(k, Int(0));
    for (int i = 0; i < k; i++) {
      if (v[i] == 0) continue;
      for (int j = 0; j < k; j++) y[j] += v[i] * red.t(i, j);
    }
    int fnz = -1;
    for (int j = 0; j < k; j++)
      if (y[j] != 0) { fnz = j; break; }
    check(fnz >= 0, "enumerate_short zero vector");
    if (y[fnz] < 0)
      for (auto& c : y) c = -c;
    short_vec sv;
    sv.x = std::move(y);
    return f(sv);
  };

  Rat dmin = d[0];
  for (const Rat& e : d) dmin = std::min(dmin, e);
  bool fits = dmin > 0 && bound / dmin < Rat(Int(1) << 52);
  for (const Rat& e : l.e) fits = fits && abs(e) < Rat(Int(1) << 48);
  fits = fits && bound < Rat(Int(1) << 52);
  if (!fits) {
    /* magnitudes beyond what the float margins cover: exact tree */
    std::vector<Int> x(k, Int(0));
    enum_rec_cb(l, d, k - 1, x, true, bound, deliver);
    return;
  }

  std::vector<double> lf(k * k, 0.0), df(k);
  for (int i = 0; i < k; i++)
    for (int j = 0; j < k; j++) lf[i * k + j] = l(i, j).get_d();
  for (int i = 0; i < k; i++) df[i] = d[i].get_d() * (1 - 1e-9);
  Rat brel = bound + bound / 1048576;
  double bf = brel.get_d() * (1 + 1e-12) + 1e-300;
  std::vector<long> x(k, 0);
  std::vector<Int> xi(k, Int(0));
  enum_rec_fast(lf, df, k, k - 1, x, true, bf, [&](const std::vector<long>& v) {
    for (int i = 0; i < k; i++) xi[i] = v[i];
    return deliver(xi);
  });
}

std::vector<short_vec> enumerate_short(const rat_mat& gin, const Rat& bound) {
  if (gin.nr == 0) return {};
  if (!is_positive_definite(gin)) fail(errkind::bad_input, "enumerate_short needs positive definite gram");
  if (bound < 0) return {};
  int k = gin.nr;
  lll_result red = lll_reduce(gin);
  rat_mat l;
  std::vector<Rat> d;
  check(ldl(red.g_red, l, d), "reduced gram not positive definite");
  std::vector<std::vector<Int>> found;
  std::vector<Int> x(k, Int(0));
  enum_rec(l, d, k - 1, x, true, bound, found);
  std::vector<short_vec> out;
  out.reserve(found.size());
  for (auto& v : found) {
    /* map back to input coordinates */
    std::vector<Int> y(k, Int(0));
    for (int i = 0; i < k; i++) {
      if (v[i] == 0) continue;
      for (int j = 0; j < k; j++) y[j] += v[i] * red.t(i, j);
    }
    int fnz = -1;
    for (int j = 0; j < k; j++)
      if (y[j] != 0) { fnz = j; break; }
    check(fnz >= 0, "enumerate_short zero vector");
    if (y[fnz] < 0)
      for (auto& c : y) c = -c;
    short_vec sv;
    sv.q = eval_form(gin, y);
    check(sv.q <= bound, "enumerate_short value over bound");
    sv.x = std::move(y);
    out.push_back(std::move(sv));
  }
  std::sort(out.begin(), out.end(), [](const short_vec& a, const short_vec& b) {
    if (a.q != b.q) return a.q < b.q;
    for (size_t i = 0; i < a.x.size(); i++)
      if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
    return false;
  });
  return out;
}

}
