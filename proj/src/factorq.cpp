#include "wpc/factorq.hpp"
#include "wpc/modpoly.hpp"
#include <algorithm>

namespace wpc {

/* exact quotient of integer polynomials, checks zero remainder */
static int_poly div_exact(const int_poly& a, const int_poly& b) {
  rat_poly q, r;
  divmod(to_rat(a), to_rat(b), q, r);
  check(r.is_zero(), "div_exact with nonzero remainder");
  return to_int(q);
}

/* squarefree decomposition of a primitive polynomial (Yun) */
static std::vector<std::pair<int_poly, int>> squarefree_parts(const int_poly& f) {
  std::vector<std::pair<int_poly, int>> out;
  if (f.deg() < 1) return out;
  int_poly df = derivative(f);
  int_poly g = gcd_z(f, df);
  if (g.deg() == 0) {
    out.push_back({f, 1});
    return out;
  }
  int_poly c = div_exact(f, g);
  int_poly d = sub(div_exact(df, g), derivative(c));
  int mult = 1;
  while (c.deg() > 0) {
    int_poly a = gcd_z(c, d);
    if (a.deg() > 0) out.push_back({a, mult});
    c = div_exact(c, a);
    d = sub(div_exact(d, a), derivative(c));
    mult++;
  }
  return out;
}

/* coefficients reduced into [0, m) */
static int_poly mod_reduce(const int_poly& f, const Int& m) {
  std::vector<Int> c = f.c;
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  return int_poly(std::move(c));
}

/* coefficients reduced into (-m/2, m/2] */
static int_poly mod_reduce_sym(const int_poly& f, const Int& m) {
  std::vector<Int> c = f.c;
  Int half = m / 2;
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  return int_poly(std::move(c));
}

static int_poly mul_mod(const int_poly& a, const int_poly& b, const Int& m) {
  return mod_reduce(mul(a, b), m);
}

static int_poly from_fp(const fp_poly& f) {
  std::vector<Int> c(f.c.size());
  for (size_t i = 0; i < c.size(); i++) c[i] = (long)f.c[i];
  return int_poly(std::move(c));
}

/* remainder of a by monic b with coefficients mod m */
static int_poly rem_mod_monic(int_poly a, const int_poly& b, const Int& m) {
  a = mod_reduce(a, m);
  int db = b.deg();
  check(db >= 0 && b.lc() == 1, "rem_mod_monic needs monic divisor");
  while (a.deg() >= db) {
    Int f = a.lc();
    int k = a.deg() - db;
    for (int i = 0; i <= db; i++) {
      a.c[k + i] -= f * b.c[i];
    }
    a.normalize();
    a = mod_reduce(a, m);
  }
  return a;
}

/* extended euclid over F_p: s a + t b = 1, for coprime a, b */
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

/* linear Hensel lift of a factorization F = a b mod p up to mod p^k;
 * F, a, b monic, a b coprime mod p */
static void hensel_pair(const int_poly& bigf, int_poly& a, int_poly& b,
                        unsigned long p, int k) {
  fp_poly s_fp, t_fp;
  fp_xgcd(fp_reduce(a, p), fp_reduce(b, p), s_fp, t_fp);
  int_poly s = from_fp(s_fp), t = from_fp(t_fp);
  Int pj((long)p);
  Int pz((long)p);
  for (int j = 1; j < k; j++) {
    Int pj1 = pj * pz;
    /* e = (F - a b) / p^j mod p */
    int_poly e = sub(mod_reduce(bigf, pj1), mul_mod(a, b, pj1));
    std::vector<Int> ec(e.c.size());
    for (size_t i = 0; i < e.c.size(); i++) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), e.c[i].get_mpz_t(), pj.get_mpz_t());
      check(e.c[i] % pj == 0, "hensel defect not divisible");
      ec[i] = q;
    }
    int_poly edown(std::move(ec));
    int_poly u = rem_mod_monic(mul(edown, s), b, pz);
    int_poly v = rem_mod_monic(mul(edown, t), a, pz);
    /* a += p^j v, b += p^j u */
    int_poly av = mul(v, int_poly(std::vector<Int>{pj}));
    int_poly bu = mul(u, int_poly(std::vector<Int>{pj}));
    a = mod_reduce(add(a, av), pj1);
    b = mod_reduce(add(b, bu), pj1);
    pj = pj1;
  }
}

/* lift the full list of mod p factors of monic F to mod p^k (factor tree) */
static std::vector<int_poly> hensel_tree(const int_poly& bigf,
                                         const std::vector<fp_poly>& fac,
                                         unsigned long p, int k) {
  if (fac.size() == 1) {
    Int pk = 1;
    for (int i = 0; i < k; i++) pk *= (long)p;
    return {mod_reduce(bigf, pk)};
  }
  size_t half = fac.size() / 2;
  fp_poly a_fp = fp_make(p, {1}), b_fp = fp_make(p, {1});
  std::vector<fp_poly> la(fac.begin(), fac.begin() + half);
  std::vector<fp_poly> lb(fac.begin() + half, fac.end());
  for (auto& g : la) a_fp = fp_mul(a_fp, g);
  for (auto& g : lb) b_fp = fp_mul(b_fp, g);
  int_poly a = from_fp(a_fp), b = from_fp(b_fp);
  hensel_pair(bigf, a, b, p, k);
  std::vector<int_poly> out = hensel_tree(a, la, p, k);
  std::vector<int_poly> rest = hensel_tree(b, lb, p, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

/* 2-norm upper bound, rounded up to an integer */
static Int norm2_ceil(const int_poly& f) {
  Int s = 0;
  for (auto& x : f.c) s += x * x;
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

static bool poly_less(const int_poly& a, const int_poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; i--)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

/* factor a primitive squarefree polynomial with positive leading coeff */
static std::vector<int_poly> factor_squarefree_q(const int_poly& h) {
  if (h.deg() == 1) return {h};
  int n = h.deg();
  /* monicize: bigh(x) = l^(n-1) h(x/l) */
  Int l = h.lc();
  std::vector<Int> hc(n + 1);
  hc[n] = 1;
  Int pw = 1;
  for (int i = n - 1; i >= 0; i--) {
    hc[i] = h.c[i] * pw;
    pw *= l;
  }
  int_poly bigh(std::move(hc));
  check(bigh.lc() == 1, "monicization failed");

  Int disc = discriminant(bigh);
  check(disc != 0, "squarefree input expected");
  unsigned long p = 0;
  for (unsigned long cand = 3;; cand += 2) {
    bool prime = true;
    for (unsigned long d = 3; d * d <= cand; d += 2)
      if (cand % d == 0) { prime = false; break; }
    if (!prime) continue;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), cand)) continue;
    p = cand;
    break;
  }
  fp_poly hp = fp_reduce(bigh, p);
  std::vector<fp_poly> fac = fp_factor_squarefree(hp);
  if (fac.size() == 1) return {h};

  /* lift beyond twice the Mignotte bound */
  Int bound = norm2_ceil(bigh);
  Int two_n = 1;
  two_n <<= (n + 1);
  Int target = 2 * two_n * bound + 1;
  int k = 1;
  Int pk((long)p);
  while (pk < target) { pk *= (long)p; k++; }
  std::vector<int_poly> lifted = hensel_tree(mod_reduce(bigh, pk), fac, p, k);

  /* recombination over subsets */
  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < alive.size(); i++) alive[i] = (int)i;
  int_poly rem_poly = bigh;
  std::vector<int_poly> monic_factors;
  bool progress = true;
  while (progress && alive.size() > 0) {
    progress = false;
    for (size_t card = 1; card <= alive.size() / 2 && !progress; card++) {
      /* iterate subsets of the alive list of size card */
      std::vector<size_t> idx(card);
      for (size_t i = 0; i < card; i++) idx[i] = i;
      for (;;) {
        int_poly prod{std::vector<Int>{Int(1)}};
        for (size_t i = 0; i < card; i++) prod = mul_mod(prod, lifted[alive[idx[i]]], pk);
        prod = mod_reduce_sym(prod, pk);
        /* trial division over Z */
        rat_poly q, r;
        divmod(to_rat(rem_poly), to_rat(prod), q, r);
        if (r.is_zero()) {
          bool intq = true;
          for (auto& x : q.c)
            if (x.get_den() != 1) { intq = false; break; }
          if (intq) {
            monic_factors.push_back(prod);
            rem_poly = to_int(q);
            std::vector<int> na;
            for (size_t i = 0, j = 0; i < alive.size(); i++) {
              if (j < card && idx[j] == i) { j++; continue; }
              na.push_back(alive[i]);
            }
            alive = std::move(na);
            progress = true;
            break;
          }
        }
        /* next subset */
        size_t i = card;
        bool advanced = false;
        while (i-- > 0) {
          if (idx[i] != i + alive.size() - card) {
            idx[i]++;
            for (size_t j = i + 1; j < card; j++) idx[j] = idx[j - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
  }
  if (rem_poly.deg() > 0) monic_factors.push_back(rem_poly);

  /* undo the monicization: g_i = primitive part of G_i(l x) */
  std::vector<int_poly> out;
  for (auto& gmon : monic_factors) {
    std::vector<Int> c(gmon.c.size());
    Int lp = 1;
    for (size_t i = 0; i < gmon.c.size(); i++) {
      c[i] = gmon.c[i] * lp;
      lp *= l;
    }
    out.push_back(primitive_part(int_poly(std::move(c))));
  }
  /* consistency: factors multiply back to h */
  int_poly chk{std::vector<Int>{Int(1)}};
  for (auto& g : out) chk = mul(chk, g);
  check(chk == h, "recombination product mismatch");
  return out;
}

poly_factorization factor_over_q(const int_poly& f) {
  if (f.is_zero()) fail(errkind::bad_input, "factor_over_q of zero polynomial");
  poly_factorization res;
  Int cont = content(f);
  if (f.lc() < 0) cont = -cont;
  res.unit = cont;
  if (f.deg() == 0) return res;
  int_poly pp = primitive_part(f);
  for (auto& [part, mult] : squarefree_parts(pp)) {
    for (auto& irr : factor_squarefree_q(part)) {
      res.factors.push_back({irr, mult});
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const poly_factor& a, const poly_factor& b) { return poly_less(a.f, b.f); });
  return res;
}

}
