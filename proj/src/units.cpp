#include "wpc/picard.hpp"
#include "wpc/roots.hpp"
#include "wpc/rfun.hpp"
#include "wpc/shortvec.hpp"
#include "wpc/errors.hpp"
#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace wpc {

rat_mat t2_gram(const etale_alg& a, const zlattice& l) {
  check(a.qc != 0, "the T2 form needs the involution");
  auto bs = lattice_elements(l);
  int n = l.n;
  rat_mat g(n, n);
  for (int i = 0; i < n; i++) {
    alg_elt ci = el_conj(a, bs[i]);
    for (int j = 0; j <= i; j++) {
      Rat t = el_trace(a, el_mul(a, bs[j], ci));
      g(i, j) = t;
      g(j, i) = t;
    }
  }
  return g;
}

/* one archimedean place per conjugate pair of roots, per component */
struct aplace {
  int comp;
  root_ball z;
};

static std::vector<aplace> archimedean_places(const etale_alg& a, long prec) {
  std::vector<aplace> out;
  for (size_t i = 0; i < a.comps.size(); i++) {
    auto balls = complex_roots(a.comps[i], prec);
    for (size_t j = 0; j < balls.size(); j++) {
      check(!balls[j].is_real, "totally imaginary algebra expected");
      if ((int)j < balls[j].conj) out.push_back({(int)i, balls[j]});
    }
  }
  return out;
}

/* log |phi(x)| per place; nullopt when the enclosures still straddle zero */
static std::optional<std::vector<ivl>> log_vector(const etale_alg& a,
                                                  const std::vector<aplace>& places,
                                                  const alg_elt& x, long bits) {
  std::vector<ivl> out;
  for (const aplace& pl : places) {
    cm_embedding e{pl.comp, pl.z, pl.z};
    cbox b = embed(a, e, x);
    ivl nsq = iv_add(iv_mul(b.re, b.re), iv_mul(b.im, b.im));
    if (!(nsq.lo > 0)) return std::nullopt;
    out.push_back(iv_scale(Rat(1, 2), rlog_iv(nsq, bits)));
  }
  return out;
}

/* interval determinant by cofactor expansion */
static ivl iv_det(const std::vector<std::vector<ivl>>& m) {
  size_t k = m.size();
  if (k == 1) return m[0][0];
  ivl acc(Rat(0));
  for (size_t i = 0; i < k; i++) {
    std::vector<std::vector<ivl>> minor;
    for (size_t r = 0; r < k; r++) {
      if (r == i) continue;
      std::vector<ivl> row(m[r].begin() + 1, m[r].end());
      minor.push_back(row);
    }
    ivl t = iv_mul(m[i][0], iv_det(minor));
    acc = i % 2 == 0 ? iv_add(acc, t) : iv_sub(acc, t);
  }
  return acc;
}

/* certify that the log vectors of cand are linearly independent: some
 * maximal minor's interval determinant excludes zero */
static bool independent_certified(const etale_alg& a, const std::vector<alg_elt>& cand) {
  size_t k = cand.size();
  for (long prec = 128; prec <= 2048; prec *= 2) {
    auto places = archimedean_places(a, prec);
    std::vector<std::vector<ivl>> logs;
    bool ok = true;
    for (const alg_elt& u : cand) {
      auto lv = log_vector(a, places, u, prec);
      if (!lv) { ok = false; break; }
      logs.push_back(*lv);
    }
    if (!ok) continue;
    size_t m = places.size();
    std::vector<size_t> pick(k);
    for (size_t i = 0; i < k; i++) pick[i] = i;
    while (true) {
      std::vector<std::vector<ivl>> sq(k, std::vector<ivl>(k));
      for (size_t r = 0; r < k; r++)
        for (size_t c = 0; c < k; c++) sq[r][c] = logs[c][pick[r]];
      ivl d = iv_det(sq);
      if (d.lo > 0 || d.hi < 0) return true;
      size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) i--;
      if (i == 0) break;
      pick[i - 1]++;
      for (size_t j = i; j < k; j++) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

static bool is_torsion(const etale_alg& a, const alg_elt& x) {
  alg_elt one = el_one(a);
  alg_elt y = x;
  long cap = 2 * (long)a.n * a.n + 2;
  for (long k = 1; k <= cap; k++) {
    if (y == one) return true;
    y = el_mul(a, y, x);
  }
  return false;
}

/* swap the free generators for a log-LLL reduced basis of the same
 * subgroup; later search bounds depend on the largest log entry */
static void reduce_fund(const etale_alg& a, unit_group& u) {
  int m = (int)u.fund.size();
  if (m <= 1) return;
  rat_mat g;
  rat_mat lm;
  bool have = false;
  for (long prec = 128; prec <= 1024 && !have; prec *= 2) {
    auto places = archimedean_places(a, prec);
    lm = rat_mat(m, (int)places.size());
    bool ok = true;
    for (int i = 0; i < m && ok; i++) {
      auto lv = log_vector(a, places, u.fund[i], prec);
      if (!lv) { ok = false; break; }
      for (size_t p = 0; p < lv->size(); p++)
        lm(i, (int)p) = ((*lv)[p].lo + (*lv)[p].hi) / 2;
    }
    if (ok) { g = mul(lm, transpose(lm)); have = det(g) > 0; }
  }
  if (!have) return;
  lll_result red = lll_reduce(g);
  std::vector<alg_elt> nf;
  for (int i = 0; i < m; i++) {
    alg_elt w = el_one(a);
    for (int j = 0; j < m; j++) {
      long e = red.t(i, j).get_si();
      if (e != 0) w = el_mul(a, w, el_pow(a, u.fund[j], e));
    }
    nf.push_back(w);
  }
  u.fund = nf;
}

/* per-place covering radius of the box spanned by the unit logs */
static void fill_rho(const etale_alg& a, unit_group& u) {
  auto places = archimedean_places(a, 192);
  u.rho.assign(places.size(), Rat(0));
  if (u.fund.empty()) return;
  std::optional<std::vector<std::vector<ivl>>> logs;
  for (long prec = 192; prec <= precision_cap(); prec *= 2) {
    auto pl = archimedean_places(a, prec);
    std::vector<std::vector<ivl>> ls;
    bool ok = true;
    for (const alg_elt& x : u.fund) {
      auto lv = log_vector(a, pl, x, prec);
      if (!lv) { ok = false; break; }
      ls.push_back(*lv);
    }
    if (ok) { logs = ls; break; }
  }
  check(logs.has_value(), "unit log enclosures unavailable");
  for (const auto& lv : *logs)
    for (size_t p = 0; p < u.rho.size(); p++)
      u.rho[p] += std::max(abs(lv[p].lo), abs(lv[p].hi));
  for (Rat& r : u.rho) r /= 2;
}

static alg_elt combine(const std::vector<alg_elt>& bs, const std::vector<Int>& co) {
  alg_elt x(bs[0].size(), Rat(0));
  for (size_t i = 0; i < bs.size(); i++)
    for (size_t j = 0; j < x.size(); j++) x[j] += Rat(co[i]) * bs[i][j];
  return x;
}

unit_group find_units(const etale_alg& a, const ring_order& s, int effort) {
  check(effort >= 1, "effort must be at least 1");
  if (a.qc == 0) fail(errkind::not_supported, "unit search needs the involution");
  int m = 0;
  for (const int_poly& c : a.comps) {
    if (count_real_roots(c) > 0)
      fail(errkind::not_supported, "unit search needs a totally imaginary algebra");
    m += c.deg() / 2;
  }
  unit_group u;
  u.s = s;
  u.rank = m - (int)a.comps.size();

  int n = a.n;
  auto bs = lattice_elements(s.l);
  rat_mat g = t2_gram(a, s.l);
  for (const short_vec& v : enumerate_short(g, Rat(n))) {
    if (v.q != n) continue;
    alg_elt x = combine(bs, v.x);
    if (is_torsion(a, x)) {
      u.torsion.push_back(x);
      u.torsion.push_back(el_neg(x));
    }
  }
  check(!u.torsion.empty(), "torsion units missing");
  if (u.rank == 0) {
    u.certified = true;
    fill_rho(a, u);
    return u;
  }

  /* restrict the search to the fixed subalgebra of the involution, where
   * the free part already has full rank */
  rat_mat dif(n, n);
  for (int i = 0; i < n; i++) {
    alg_elt ci = el_conj(a, bs[i]);
    for (int j = 0; j < n; j++) dif(i, j) = ci[j] - bs[i][j];
  }
  Int den = 1;
  for (const Rat& e : dif.e) den = lcm(den, e.get_den());
  int_mat difi(n, n);
  for (size_t i = 0; i < dif.e.size(); i++) {
    Rat t = dif.e[i] * den;
    t.canonicalize();
    difi.e[i] = t.get_num();
  }
  int_mat ker = left_kernel(difi);
  check(ker.nr == m, "fixed subalgebra has the wrong rank");
  std::vector<alg_elt> fb;
  for (int i = 0; i < m; i++) {
    std::vector<Int> co(ker.e.begin() + (size_t)i * n, ker.e.begin() + (size_t)(i + 1) * n);
    fb.push_back(combine(bs, co));
  }
  rat_mat gf(m, m);
  for (int i = 0; i < m; i++)
    for (int j = 0; j <= i; j++) {
      Rat t = el_trace(a, el_mul(a, fb[i], fb[j]));
      gf(i, j) = t;
      gf(j, i) = t;
    }

  Rat detf = det(gf);
  Rat cap = Rat(4000000) * effort;
  Rat bound = Rat(4 * n), prev = 0;
  /* grow the bound until the free rank is reached or the region blows up */
  for (;;) {
    Rat bpow = 1;
    for (int i = 0; i < m; i++) bpow *= bound;
    Rat est = 6 * sqrt_upper(bpow / detf, 16);
    if (est > cap) fail(errkind::effort_exceeded, "unit rank not reached within the search budget");
    for (const short_vec& v : enumerate_short(gf, bound)) {
      if (v.q <= prev) continue;
      alg_elt x = combine(fb, v.x);
      Rat nr = el_norm(a, x);
      if (nr != 1 && nr != -1) continue;
      if (is_torsion(a, x)) continue;
      std::vector<alg_elt> cand = u.fund;
      cand.push_back(x);
      if (independent_certified(a, cand)) u.fund = cand;
      if ((int)u.fund.size() == u.rank) break;
    }
    if ((int)u.fund.size() == u.rank) break;
    prev = bound;
    bound *= 2;
  }
  reduce_fund(a, u);
  fill_rho(a, u);
  u.certified = true;
  u.possibly_nonmaximal = true;
  return u;
}

/* covolume of the projection of l into component i */
static Rat proj_covol(const etale_alg& a, const zlattice& l, int i) {
  int ni = a.comps[i].deg();
  rat_mat rows(l.n, ni);
  for (int r = 0; r < l.n; r++) {
    rat_poly p = el_project(a, i, lattice_element(l, r));
    for (int j = 0; j < ni; j++) rows(r, j) = p.coeff(j);
  }
  Int den = 1;
  for (const Rat& e : rows.e) den = lcm(den, e.get_den());
  int_mat ri(l.n, ni);
  for (size_t t = 0; t < rows.e.size(); t++) {
    Rat v = rows.e[t] * den;
    v.canonicalize();
    ri.e[t] = v.get_num();
  }
  int_mat h = hnf(ri);
  check(h.nr == ni, "component projection is not full rank");
  Rat covol = 1;
  for (int j = 0, c = 0; j < ni; j++) {
    while (h(j, c) == 0) c++;
    covol *= h(j, c);
  }
  for (int j = 0; j < ni; j++) covol /= den;
  covol.canonicalize();
  return covol;
}

/* per-component upper bounds on the T2 share of some solution of
 * x j == i, reduced by the known units of the multiplicator ring of j;
 * the covering radii of the unit logs come precomputed with the group */
static std::vector<Rat> search_bounds(const etale_alg& a, const unit_group& u,
                                      const std::vector<Rat>& comp_norms) {
  auto places = archimedean_places(a, 192);
  check(u.rho.size() == places.size(), "unit group misses its log radii");
  std::vector<Rat> out(a.comps.size(), Rat(0));
  for (size_t p = 0; p < places.size(); p++) {
    int c = places[p].comp;
    int ni = a.comps[c].deg();
    out[c] += 2 * rexp_upper(2 * u.rho[p], 24) * root_upper(comp_norms[c], ni / 2);
  }
  return out;
}

/* gram of the T2 form restricted to component c */
static rat_mat t2_gram_comp(const etale_alg& a, const std::vector<alg_elt>& bs, int c) {
  int n = (int)bs.size();
  rat_mat g(n, n);
  for (int i = 0; i < n; i++) {
    alg_elt ci = el_mul(a, el_conj(a, bs[i]), a.idem[c]);
    for (int j = 0; j <= i; j++) {
      Rat t = el_trace(a, el_mul(a, bs[j], ci));
      g(i, j) = t;
      g(j, i) = t;
    }
  }
  return g;
}

std::optional<alg_elt> ideal_quotient_gen(const etale_alg& a, const unit_group& u,
                                          const zlattice& i, const zlattice& j,
                                          int effort) {
  check(effort >= 1, "effort must be at least 1");
  zlattice l = ideal_colon(a, i, j);
  Rat w = lattice_index(j, i);
  std::vector<Rat> cn;
  Rat prod = 1;
  for (size_t c = 0; c < a.comps.size(); c++) {
    Rat nc = proj_covol(a, i, (int)c) / proj_covol(a, j, (int)c);
    nc.canonicalize();
    cn.push_back(nc);
    prod *= nc;
  }
  prod.canonicalize();
  if (prod != w) return std::nullopt;

  auto bs = lattice_elements(l);
  /* a solution has component norm exactly cn[c], so its T2 share in each
   * component is bounded separately: enumerate the ellipsoid
   * sum_c T2_c/b_c <= ncomp, which stays balanced when the component
   * norms are not */
  std::vector<Rat> bv = search_bounds(a, u, cn);
  int nc = (int)a.comps.size();
  rat_mat g(a.n, a.n);
  for (int c = 0; c < nc; c++) {
    rat_mat gc = t2_gram_comp(a, bs, c);
    for (size_t t = 0; t < g.e.size(); t++) g.e[t] += gc.e[t] / bv[c];
  }
  Rat bound(nc);
  Rat bpow = 1;
  for (int t = 0; t < a.n; t++) bpow *= bound;
  Rat est = 6 * sqrt_upper(bpow / det(g), 16);
  if (est > Rat(4000000) * effort)
    fail(errkind::effort_exceeded, "principality search region too large");
  /* norm enclosures from the conjugate balls cut the exact norm checks
   * down to near hits; plain doubles with generous outward error margins
   * keep every rejection sound */
  auto places = archimedean_places(a, 64);
  size_t np = places.size();
  size_t nb = bs.size();
  std::vector<double> mre(nb * np), mim(nb * np), ure(nb * np), uim(nb * np);
  bool flat = true;
  for (size_t t = 0; t < nb; t++) {
    std::vector<double> cm(a.n), ce(a.n);
    for (int j = 0; j < a.n; j++) {
      cm[j] = bs[t][j].get_d();
      ce[j] = std::fabs(cm[j]) * 1e-12 + 1e-300;
      flat = flat && std::isfinite(cm[j]) && std::fabs(cm[j]) < 1e100;
    }
    for (size_t p = 0; p < np; p++) {
      double zr = places[p].z.re.get_d(), zi = places[p].z.im.get_d();
      double zd = places[p].z.rad.get_d() * 1.001 +
                  (std::fabs(zr) + std::fabs(zi)) * 1e-12 + 1e-300;
      /* horner in complex interval form: (vr, vi) with coordinate error
       * bounds (er, ei) */
      double vr = 0, vi = 0, er = 0, ei = 0;
      for (int j = a.n - 1; j >= 0; j--) {
        double nr = vr * zr - vi * zi;
        double ni = vr * zi + vi * zr;
        double sz = std::fabs(zr) + std::fabs(zi) + zd;
        double ner = (er + ei) * sz + (std::fabs(vr) + std::fabs(vi)) * zd;
        vr = nr + cm[j];
        vi = ni;
        er = (ner + ce[j]) * 1.0001 + 1e-300;
        ei = er;
      }
      mre[t * np + p] = vr;
      ure[t * np + p] = er;
      mim[t * np + p] = vi;
      uim[t * np + p] = ei;
      flat = flat && std::isfinite(vr) && std::isfinite(vi) && std::isfinite(er) &&
             std::fabs(vr) < 1e120 && std::fabs(vi) < 1e120;
    }
  }
  std::vector<std::vector<size_t>> byc(nc);
  for (size_t p = 0; p < np; p++) byc[places[p].comp].push_back(p);
  std::vector<double> wd(nc);
  for (int c = 0; c < nc; c++) wd[c] = cn[c].get_d();
  std::optional<alg_elt> hit;
  enumerate_short_stream(g, bound, [&](const short_vec& v) {
    long cx[64];
    bool small = flat && nb <= 64;
    for (size_t t = 0; t < nb && small; t++)
      small = mpz_fits_slong_p(v.x[t].get_mpz_t()) &&
              std::labs(mpz_get_si(v.x[t].get_mpz_t())) < (1L << 40);
    if (small) {
      for (size_t t = 0; t < nb; t++) cx[t] = mpz_get_si(v.x[t].get_mpz_t());
      for (int c = 0; c < nc; c++) {
        double lo = 1, hi = 1;
        for (size_t p : byc[c]) {
          double vr = 0, vi = 0, er = 0, ei = 0;
          for (size_t t = 0; t < nb; t++) {
            if (cx[t] == 0) continue;
            double cd = (double)cx[t], ca = std::fabs(cd);
            vr += cd * mre[t * np + p];
            vi += cd * mim[t * np + p];
            er += ca * ure[t * np + p];
            ei += ca * uim[t * np + p];
          }
          er *= 1.0001;
          ei *= 1.0001;
          double m2 = vr * vr + vi * vi;
          double dd = 2 * (std::fabs(vr) * er + std::fabs(vi) * ei) + er * er + ei * ei;
          double l2 = m2 - dd * 1.0001;
          if (l2 < 0) l2 = 0;
          double h2 = (m2 + dd) * 1.0001 + 1e-300;
          lo = lo * l2 * (1 - 1e-13);
          hi = hi * h2 * (1 + 1e-13);
        }
        if (wd[c] * (1 + 1e-8) < lo || wd[c] * (1 - 1e-8) > hi) return true;
      }
    }
    alg_elt x = combine(bs, v.x);
    Rat nx = el_norm(a, x);
    if (abs(nx) != w) return true;
    hit = x;
    return false;
  });
  if (hit) return hit;
  if (u.certified) return std::nullopt;
  fail(errkind::effort_exceeded, "principality negative is not certified without full unit rank");
}

std::optional<alg_elt> is_principal(const etale_alg& a, const zlattice& i, int effort) {
  ring_order s = multiplicator_ring(a, i);
  unit_group u = find_units(a, s, effort);
  return ideal_quotient_gen(a, u, i, s.l, effort);
}

std::optional<alg_elt> is_isomorphic_ideals(const etale_alg& a, const zlattice& i,
                                            const zlattice& j, int effort) {
  ring_order si = multiplicator_ring(a, i);
  ring_order sj = multiplicator_ring(a, j);
  if (!(si.l == sj.l)) return std::nullopt;
  unit_group u = find_units(a, sj, effort);
  return ideal_quotient_gen(a, u, i, j, effort);
}

static zlattice primitive_scale(const zlattice& l) {
  Int g = 0;
  for (const Int& e : l.b.e) g = gcd(g, e);
  Rat c(l.den, g);
  c.canonicalize();
  return lattice_scale(l, c);
}

zlattice class_representative(const etale_alg& a, const zlattice& i) {
  zlattice j = primitive_scale(i);
  rat_mat g = t2_gram(a, j);
  rat_mat gr = lll_reduce(g).g_red;
  Rat mind = gr(0, 0);
  for (int t = 1; t < j.n; t++) mind = std::min(mind, gr(t, t));
  auto sv = enumerate_short(g, mind);
  check(!sv.empty(), "no short vectors in an ideal");
  Rat mu = sv[0].q;
  auto bs = lattice_elements(j);
  std::vector<zlattice> cands;
  for (const short_vec& v : sv) {
    if (v.q != mu) break;
    alg_elt y = combine(bs, v.x);
    if (!el_is_unit(a, y)) continue;
    alg_elt yi = el_inv(a, y);
    rat_mat rows(j.n, j.n);
    for (int r = 0; r < j.n; r++) {
      alg_elt z = el_mul(a, bs[r], yi);
      for (int c = 0; c < j.n; c++) rows(r, c) = z[c];
    }
    cands.push_back(primitive_scale(lattice_make(rows)));
  }
  if (cands.empty()) return j;
  zlattice best = cands[0];
  for (size_t t = 1; t < cands.size(); t++)
    if (lattice_less(cands[t], best)) best = cands[t];
  return best;
}

std::string ideal_class_token(const etale_alg& a, const zlattice& i) {
  zlattice r = class_representative(a, i);
  std::string s = r.den.get_str() + ":";
  for (size_t t = 0; t < r.b.e.size(); t++) {
    if (t) s += ",";
    s += r.b.e[t].get_str();
  }
  return s;
}

}
